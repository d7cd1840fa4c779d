#include "fdalg/report.hpp"

#include <cmath>
#include <utility>

#include <nlohmann/json.hpp>

namespace fdalg {
namespace {

void render_text_into(const Report& r, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(2 * depth), ' ');
  out += r.name;
  if (!r.verdict.empty()) {
    out += ": ";
    out += r.verdict;
  }
  if (r.ms > 0.0) {
    out += " [" + std::to_string(std::lround(r.ms)) + " ms]";
  }
  out += "\n";
  if (!r.detail.empty()) {
    out.append(static_cast<std::size_t>(2 * depth + 2), ' ');
    out += r.detail;
    out += "\n";
  }
  for (const auto& c : r.children) render_text_into(c, depth + 1, out);
}

nlohmann::json json_of(const Report& r, bool with_timings) {
  nlohmann::json j;
  j["name"] = r.name;
  j["verdict"] = r.verdict;
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (with_timings) j["ms"] = std::lround(r.ms);
  if (!r.children.empty()) {
    nlohmann::json kids = nlohmann::json::array();
    for (const auto& c : r.children) kids.push_back(json_of(c, with_timings));
    j["children"] = std::move(kids);
  }
  return j;
}

}  // namespace

Report& Report::child(std::string child_name) {
  children.push_back(Report{std::move(child_name), "", "", 0.0, {}});
  return children.back();
}

std::string render_text(const Report& r) {
  std::string out;
  render_text_into(r, 0, out);
  return out;
}

std::string render_json(const Report& r, bool with_timings) { return json_of(r, with_timings).dump(2) + "\n"; }

}  // namespace fdalg
