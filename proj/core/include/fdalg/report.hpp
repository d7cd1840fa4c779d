#pragma once
// Result trees for analyses: each node carries a name, a verdict, free-form
// detail, and a wall-clock time, and renders as an indented text listing or
// as JSON.  Verdicts and details are deterministic for fixed inputs, seed,
// and trial budget; only the timings vary, so the JSON rendering omits them
// unless asked.

#include <chrono>
#include <string>
#include <vector>

namespace fdalg {

struct Report {
  std::string name;
  std::string verdict;  // "yes" / "no" / a number / free-form
  std::string detail;   // witness, certificate, or bound description
  double ms = 0.0;
  std::vector<Report> children;

  // Appends a child and returns a reference valid until the next append.
  Report& child(std::string child_name);
};

std::string render_text(const Report& r);
std::string render_json(const Report& r, bool with_timings = false);

// Milliseconds since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fdalg
