#include "fdalg/serialize.hpp"

#include <cstddef>
#include <stdexcept>
#include <tuple>
#include <utility>

#include <nlohmann/json.hpp>

namespace fdalg {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("algebra file: " + what); }

void fail_check(const std::string& where, const CheckReport& rep) {
  std::string msg = where + " checks failed";
  std::size_t shown = 0;
  for (const auto& v : rep.violations) {
    if (shown++ == 3) {
      msg += "; ...";
      break;
    }
    msg += "; " + v;
  }
  fail(msg);
}

json strings_of(const Vec& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

// Sparse matrix as [row, col, value] triples in row-major order.
json triples_of(const Mat& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero()) out.push_back(json::array({r, c, m.at(r, c).str()}));
  return out;
}

int int_at(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string string_at(const json& j, const char* what) {
  if (!j.is_string()) fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

Scalar scalar_of(const Field& f, const json& j, const char* what) {
  const std::string text = string_at(j, what);
  try {
    return f.from_string(text);
  } catch (const std::exception&) {
    fail(std::string(what) + ": unreadable scalar \"" + text + "\"");
  }
}

Vec vec_of_json(const Field& f, int dim, const json& j, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(std::string(what) + " must be an array of " + std::to_string(dim) + " scalars");
  Vec v;
  v.reserve(static_cast<std::size_t>(dim));
  for (const auto& entry : j) v.push_back(scalar_of(f, entry, what));
  return v;
}

Mat mat_of_triples(const Field& f, int rows, int cols, const json& j, const char* what) {
  if (!j.is_array()) fail(std::string(what) + " must be an array of [row, col, value] triples");
  Mat m(f, rows, cols);
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 3) fail(std::string(what) + ": each entry must be [row, col, value]");
    const int r = int_at(entry[0], what);
    const int c = int_at(entry[1], what);
    if (r < 0 || r >= rows || c < 0 || c >= cols) fail(std::string(what) + ": index out of range");
    m.at(r, c) = m.at(r, c) + scalar_of(f, entry[2], what);
  }
  return m;
}

FDAlgebra algebra_of_json(const json& j) {
  const Field f = field_from_name(string_at(member(j, "field"), "field"));
  const int dim = int_at(member(j, "dim"), "dim");
  if (dim < 0) fail("dim must be nonnegative");

  const json& basis = member(j, "basis");
  if (!basis.is_array() || static_cast<int>(basis.size()) != dim) fail("basis must list one name per dimension");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(dim));
  for (const auto& entry : basis) names.push_back(string_at(entry, "basis name"));

  Vec unit = vec_of_json(f, dim, member(j, "unit"), "unit");

  const json& mult = member(j, "mult");
  if (!mult.is_array()) fail("mult must be an array of [i, j, k, value] entries");
  std::vector<std::tuple<int, int, int, Scalar>> triples;
  triples.reserve(mult.size());
  for (const auto& entry : mult) {
    if (!entry.is_array() || entry.size() != 4) fail("mult: each entry must be [i, j, k, value]");
    const int i = int_at(entry[0], "mult");
    const int jj = int_at(entry[1], "mult");
    const int k = int_at(entry[2], "mult");
    if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim) fail("mult: index out of range");
    triples.emplace_back(i, jj, k, scalar_of(f, entry[3], "mult"));
  }

  FDAlgebra A = make_algebra(f, std::move(names), std::move(unit), triples);
  const CheckReport rep = check_algebra(A);
  if (!rep.ok()) fail_check("algebra", rep);
  return A;
}

GradedAlgebra grading_of_json(const FDAlgebra& A, const json& j) {
  if (!j.is_object()) fail("grading must be an object");
  const json& group = member(j, "group");
  if (!group.is_array() || group.empty()) fail("grading.group must be a nonempty array of cyclic orders");
  std::vector<int> orders;
  for (const auto& entry : group) {
    const int n = int_at(entry, "grading.group");
    if (n < 1) fail("grading.group orders must be positive");
    orders.push_back(n);
  }
  AbelianGroupSpec spec{orders};

  const json& comps = member(j, "components");
  if (!comps.is_array() || static_cast<int>(comps.size()) != spec.size())
    fail("grading.components must list one component per group element");
  std::vector<LinearSubspace> components;
  for (const auto& comp : comps) {
    if (!comp.is_array()) fail("grading.components: each component must be an array of basis rows");
    std::vector<Vec> rows;
    for (const auto& row : comp) rows.push_back(vec_of_json(A.field, A.dim, row, "grading.components"));
    components.push_back(LinearSubspace::span(A.field, A.dim, rows));
  }

  GradedAlgebra G{A, std::move(spec), std::move(components)};
  const CheckReport rep = check_graded(G);
  if (!rep.ok()) fail_check("grading", rep);
  return G;
}

HopfData hopf_of_json(const FDAlgebra& A, const json& j) {
  if (!j.is_object()) fail("hopf must be an object");
  Vec counit = vec_of_json(A.field, A.dim, member(j, "counit"), "hopf.counit");
  Mat comul = mat_of_triples(A.field, A.dim * A.dim, A.dim, member(j, "comul"), "hopf.comul");
  Mat anti = mat_of_triples(A.field, A.dim, A.dim, member(j, "antipode"), "hopf.antipode");
  HopfData H{A, std::move(counit), std::move(comul), AlgMap{std::move(anti), true}};
  const CheckReport rep = check_hopf(H);
  if (!rep.ok()) fail_check("hopf", rep);
  return H;
}

}  // namespace

AlgebraFile wrap(const FDAlgebra& a) { return AlgebraFile{a, std::nullopt, std::nullopt}; }

AlgebraFile wrap(const GradedAlgebra& g) { return AlgebraFile{g.algebra, g, std::nullopt}; }

AlgebraFile wrap(const HopfData& h) { return AlgebraFile{h.algebra, std::nullopt, h}; }

Field field_from_name(const std::string& name) {
  if (name == "Q") return Field::rationals();
  if (name.size() >= 2 && name[0] == 'F') {
    long p = 0;
    try {
      std::size_t used = 0;
      p = std::stol(name.substr(1), &used);
      if (used + 1 != name.size()) p = 0;
    } catch (const std::exception&) {
      p = 0;
    }
    if (p >= 2) return Field::prime(p);
  }
  throw std::invalid_argument("algebra file: unknown field \"" + name + "\" (expected \"Q\" or \"F<p>\")");
}

std::string to_json(const AlgebraFile& file) {
  const FDAlgebra& A = file.algebra;
  json j;
  j["field"] = A.field.name();
  j["dim"] = A.dim;
  j["basis"] = A.basis_names;
  j["unit"] = strings_of(A.unit);

  json mult = json::array();
  for (int i = 0; i < A.dim; ++i)
    for (int jj = 0; jj < A.dim; ++jj) {
      const Vec& prod = A.product_of_basis(i, jj);
      for (int k = 0; k < A.dim; ++k)
        if (!prod[static_cast<std::size_t>(k)].is_zero())
          mult.push_back(json::array({i, jj, k, prod[static_cast<std::size_t>(k)].str()}));
    }
  j["mult"] = std::move(mult);

  if (file.grading) {
    const GradedAlgebra& G = *file.grading;
    json grading;
    grading["group"] = G.group.orders;
    json comps = json::array();
    for (const auto& comp : G.components) {
      json rows = json::array();
      for (int r = 0; r < comp.dim(); ++r) rows.push_back(strings_of(comp.basis_row(r)));
      comps.push_back(std::move(rows));
    }
    grading["components"] = std::move(comps);
    j["grading"] = std::move(grading);
  }

  if (file.hopf) {
    const HopfData& H = *file.hopf;
    json hopf;
    hopf["counit"] = strings_of(H.counit);
    hopf["comul"] = triples_of(H.comul);
    hopf["antipode"] = triples_of(H.antipode.matrix);
    j["hopf"] = std::move(hopf);
  }

  return j.dump(2) + "\n";
}

AlgebraFile from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(std::string("not valid JSON (") + e.what() + ")");
  }
  if (!j.is_object()) fail("top level must be an object");

  AlgebraFile file = wrap(algebra_of_json(j));
  if (auto it = j.find("grading"); it != j.end()) file.grading = grading_of_json(file.algebra, *it);
  if (auto it = j.find("hopf"); it != j.end()) file.hopf = hopf_of_json(file.algebra, *it);
  return file;
}

}  // namespace fdalg
