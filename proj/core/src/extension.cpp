#include "fdalg/extension.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fdalg {

namespace {

[[noreturn]] void fail_invalid(const std::string& what, const CheckReport& r) {
  std::ostringstream os;
  os << what;
  for (std::size_t i = 0; i < r.violations.size() && i < 3; ++i) os << "; " << r.violations[i];
  throw std::invalid_argument(os.str());
}

std::string dual_name(const FDAlgebra& A, int i) { return A.basis_names[i] + "*"; }

Pairing finish_pairing(const FDAlgebra& A, TensorBimodule square, Mat on_quotient) {
  if (on_quotient.rows() != A.dim || on_quotient.cols() != square.mod.dim)
    throw std::invalid_argument("pairing matrix shape does not match the tensor quotient");
  if (!is_bimodule_map(square.mod, regular(A), on_quotient, HomKind::bimodule))
    throw std::invalid_argument("pairing is not a bimodule map to the algebra");
  return Pairing{A, std::move(square), BimoduleMap{std::move(on_quotient)}};
}

}  // namespace

Mat Pairing::full() const { return map.matrix * square.carrier.projection(); }

Vec Pairing::bracket(int i, int j) const {
  int n = algebra.dim;
  return map.matrix.apply(square.carrier.project(unit_vec(algebra.field, n * n, i * n + j)));
}

Vec Pairing::bracket_of(const Vec& f, const Vec& g) const {
  int n = algebra.dim;
  Vec ambient = zero_vec(algebra.field, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      ambient[static_cast<std::size_t>(i) * n + j] =
          f[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
  return map.matrix.apply(square.carrier.project(ambient));
}

Pairing make_pairing(const FDAlgebra& A, const Mat& on_quotient) {
  Bimodule d = dual(regular(A));
  return finish_pairing(A, tensor_over(d, d), on_quotient);
}

Pairing make_pairing_from_full(const FDAlgebra& A, const Mat& full) {
  int n = A.dim;
  if (full.rows() != n || full.cols() != n * n)
    throw std::invalid_argument("full pairing map must be dim x dim^2");
  Bimodule d = dual(regular(A));
  TensorBimodule square = tensor_over(d, d);
  const LinearSubspace& rel = square.carrier.relations();
  for (int k = 0; k < rel.dim(); ++k)
    if (!is_zero_vec(full.apply(rel.basis_row(k))))
      throw std::invalid_argument("full pairing map does not kill the middle-linearity relations");
  Mat descended = full * square.carrier.section();
  return finish_pairing(A, std::move(square), std::move(descended));
}

Pairing zero_pairing(const FDAlgebra& A) {
  Bimodule d = dual(regular(A));
  TensorBimodule square = tensor_over(d, d);
  Mat zero(A.field, A.dim, square.mod.dim);
  return finish_pairing(A, std::move(square), std::move(zero));
}

Pairing pairing_from_central(const FDAlgebra& A, const SymmetricWitness& w, const Vec& z) {
  if (!center(A).contains(z)) throw std::invalid_argument("pairing scalar must be central");
  auto theta_inv = w.pairing.inverse();
  if (!theta_inv) throw std::invalid_argument("symmetric witness has a singular pairing");
  int n = A.dim;
  Mat full(A.field, n, n * n);
  for (int i = 0; i < n; ++i) {
    Vec a = theta_inv->col(i);
    for (int j = 0; j < n; ++j) {
      Vec value = A.multiply(z, A.multiply(a, theta_inv->col(j)));
      for (int r = 0; r < n; ++r) full.at(r, i * n + j) = value[static_cast<std::size_t>(r)];
    }
  }
  return make_pairing_from_full(A, full);
}

CheckReport is_associative_pairing(const Pairing& psi) {
  const FDAlgebra& A = psi.algebra;
  int n = A.dim;
  Bimodule d = dual(regular(A));
  Mat full = psi.full();
  // Right action of each bracket, indexed by its (first, second) dual factor.
  std::vector<Mat> racts;
  racts.reserve(static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) racts.push_back(d.right_action_of(full.col(j * n + k)));
  CheckReport report;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat lact = d.left_action_of(full.col(i * n + j));
      for (int k = 0; k < n; ++k) {
        if (lact.col(k) != racts[static_cast<std::size_t>(j) * n + k].col(i))
          report.violations.push_back("([" + dual_name(A, i) + ", " + dual_name(A, j) + "], " +
                                      dual_name(A, k) + ")");
      }
    }
  return report;
}

CheckReport pairing_identity_2(const Pairing& psi) {
  const FDAlgebra& A = psi.algebra;
  int n = A.dim;
  Mat full = psi.full();
  CheckReport report;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (full.at(k, i * n + j) != full.at(i, j * n + k))
          report.violations.push_back("(" + dual_name(A, i) + ", " + dual_name(A, j) + ", " +
                                      dual_name(A, k) + ")");
  return report;
}

CheckReport check_graded(const GradedAlgebra& G) {
  CheckReport report;
  const FDAlgebra& A = G.algebra;
  int m = G.group.size();
  if (static_cast<int>(G.components.size()) != m) {
    report.violations.push_back("one component per group element expected");
    return report;
  }
  int total = 0;
  EchelonBasis all(A.field, A.dim);
  for (const LinearSubspace& c : G.components) {
    if (c.ambient() != A.dim) {
      report.violations.push_back("component lives in the wrong ambient space");
      return report;
    }
    total += c.dim();
    for (int k = 0; k < c.dim(); ++k) all.insert(c.basis_row(k));
  }
  if (total != A.dim || all.rank() != A.dim)
    report.violations.push_back("components do not decompose the algebra as a direct sum");
  int e = G.group.index_of(G.group.identity());
  if (!G.components[static_cast<std::size_t>(e)].contains(A.unit))
    report.violations.push_back("unit is not in the identity component");
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      int gh = G.group.index_of(G.group.add(G.group.tuple_of(g), G.group.tuple_of(h)));
      const LinearSubspace& target = G.components[static_cast<std::size_t>(gh)];
      const LinearSubspace& cg = G.components[static_cast<std::size_t>(g)];
      const LinearSubspace& ch = G.components[static_cast<std::size_t>(h)];
      for (int a = 0; a < cg.dim(); ++a)
        for (int b = 0; b < ch.dim(); ++b)
          if (!target.contains(A.multiply(cg.basis_row(a), ch.basis_row(b))))
            report.violations.push_back("product of degrees " + G.group.name_of(g) + " and " +
                                        G.group.name_of(h) + " leaves its component");
    }
  return report;
}

GradedAlgebra semitrivial_extension(const FDAlgebra& A, const Pairing& psi) {
  if (!psi.algebra.same_shape(A))
    throw std::invalid_argument("pairing was built over a different algebra");
  CheckReport assoc = is_associative_pairing(psi);
  if (!assoc.ok()) fail_invalid("pairing is not associative", assoc);

  int n = A.dim;
  const Field& f = A.field;
  Bimodule d = dual(regular(A));
  Mat full = psi.full();

  std::vector<std::string> names = A.basis_names;
  for (int i = 0; i < n; ++i) names.push_back(A.basis_names[static_cast<std::size_t>(i)] + "*");
  Vec unit = zero_vec(f, 2 * n);
  for (int i = 0; i < n; ++i) unit[static_cast<std::size_t>(i)] = A.unit[static_cast<std::size_t>(i)];

  auto block_product = [&](int i, int j) {
    Vec out = zero_vec(f, 2 * n);
    if (i < n && j < n) {
      Vec p = A.product_of_basis(i, j);
      for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] = p[static_cast<std::size_t>(r)];
    } else if (i < n) {
      Vec p = d.left_act[static_cast<std::size_t>(i)].col(j - n);
      for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(n + r)] = p[static_cast<std::size_t>(r)];
    } else if (j < n) {
      Vec p = d.right_act[static_cast<std::size_t>(j)].col(i - n);
      for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(n + r)] = p[static_cast<std::size_t>(r)];
    } else {
      Vec p = full.col((i - n) * n + (j - n));
      for (int r = 0; r < n; ++r) out[static_cast<std::size_t>(r)] = p[static_cast<std::size_t>(r)];
    }
    return out;
  };

  std::vector<std::tuple<int, int, int, Scalar>> triples;
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      Vec p = block_product(i, j);
      for (int k = 0; k < 2 * n; ++k)
        if (!p[static_cast<std::size_t>(k)].is_zero()) triples.emplace_back(i, j, k, p[static_cast<std::size_t>(k)]);
    }

  GradedAlgebra result{make_algebra(f, names, unit, triples), AbelianGroupSpec{{2}}, {}};
  std::vector<Vec> first, second;
  for (int i = 0; i < n; ++i) {
    first.push_back(unit_vec(f, 2 * n, i));
    second.push_back(unit_vec(f, 2 * n, n + i));
  }
  result.components.push_back(LinearSubspace::span(f, 2 * n, first));
  result.components.push_back(LinearSubspace::span(f, 2 * n, second));

  CheckReport alg = check_algebra(result.algebra);
  if (!alg.ok())
    throw std::logic_error("semitrivial extension failed associativity: " + alg.violations[0]);
  CheckReport graded = check_graded(result);
  if (!graded.ok())
    throw std::logic_error("semitrivial extension failed its grading: " + graded.violations[0]);
  return result;
}

bool StrongGradingReport::strongly_graded() const {
  for (const auto& row : pair_full)
    for (bool ok : row)
      if (!ok) return false;
  return !pair_full.empty();
}

StrongGradingReport is_strongly_graded(const GradedAlgebra& G) {
  CheckReport valid = check_graded(G);
  if (!valid.ok()) fail_invalid("not a graded algebra", valid);
  const FDAlgebra& A = G.algebra;
  int m = G.group.size();
  StrongGradingReport report;
  report.pair_full.assign(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h) {
      int gh = G.group.index_of(G.group.add(G.group.tuple_of(g), G.group.tuple_of(h)));
      std::vector<Vec> products;
      const LinearSubspace& cg = G.components[static_cast<std::size_t>(g)];
      const LinearSubspace& ch = G.components[static_cast<std::size_t>(h)];
      for (int a = 0; a < cg.dim(); ++a)
        for (int b = 0; b < ch.dim(); ++b)
          products.push_back(A.multiply(cg.basis_row(a), ch.basis_row(b)));
      LinearSubspace span = LinearSubspace::span(A.field, A.dim, products);
      report.pair_full[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)] =
          span == G.components[static_cast<std::size_t>(gh)];
    }
  return report;
}

BimoduleMap symmetrizing_form(const GradedAlgebra& ext) {
  const FDAlgebra& A = ext.algebra;
  if (A.dim % 2 != 0 || ext.components.size() != 2)
    throw std::invalid_argument("expected a two-component extension of even dimension");
  int n = A.dim / 2;
  for (int i = 0; i < n; ++i)
    if (!ext.components[0].contains(unit_vec(A.field, A.dim, i)) ||
        !ext.components[1].contains(unit_vec(A.field, A.dim, n + i)))
      throw std::invalid_argument("components are not the two coordinate blocks");
  Mat phi(A.field, A.dim, A.dim);
  for (int i = 0; i < n; ++i) {
    phi.at(i, n + i) = A.field.one();
    phi.at(n + i, i) = A.field.one();
  }
  if (!is_bimodule_map(regular(A), dual(regular(A)), phi, HomKind::bimodule))
    throw std::logic_error("block swap failed to intertwine the extension with its dual");
  return BimoduleMap{std::move(phi)};
}

FDAlgebra component_subalgebra(const GradedAlgebra& G, int g) {
  if (g < 0 || g >= static_cast<int>(G.components.size()))
    throw std::invalid_argument("no such component");
  const FDAlgebra& A = G.algebra;
  const LinearSubspace& comp = G.components[static_cast<std::size_t>(g)];
  if (!comp.contains(A.unit))
    throw std::invalid_argument("component does not contain the unit");
  int m = comp.dim();
  std::vector<std::string> names;
  for (int k = 0; k < m; ++k) {
    Vec row = comp.basis_row(k);
    int hits = 0, where = -1;
    for (int c = 0; c < A.dim; ++c)
      if (!row[static_cast<std::size_t>(c)].is_zero()) {
        ++hits;
        where = c;
      }
    if (hits == 1 && row[static_cast<std::size_t>(where)] == A.field.one())
      names.push_back(A.basis_names[static_cast<std::size_t>(where)]);
    else
      names.push_back("b" + std::to_string(k));
  }
  auto unit_coords = comp.coords_of(A.unit);
  std::vector<std::tuple<int, int, int, Scalar>> triples;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      auto coords = comp.coords_of(A.multiply(comp.basis_row(i), comp.basis_row(j)));
      if (!coords) throw std::invalid_argument("component is not closed under multiplication");
      for (int k = 0; k < m; ++k)
        if (!(*coords)[static_cast<std::size_t>(k)].is_zero())
          triples.emplace_back(i, j, k, (*coords)[static_cast<std::size_t>(k)]);
    }
  return make_algebra(A.field, names, *unit_coords, triples);
}

IsoFamilyReport all_isos_associative(const FDAlgebra& A, Rng& rng, int trials) {
  Bimodule d = dual(regular(A));
  TensorBimodule square = tensor_over(d, d);
  LinearSubspace homs = hom_space(square.mod, regular(A), HomKind::bimodule);
  IsoFamilyReport report;
  report.hom_dim = homs.dim();
  if (square.mod.dim != A.dim) return report;  // nothing in the family can be invertible

  std::optional<Mat> first_iso;
  auto consider = [&](const Mat& candidate) {
    ++report.tested;
    if (!candidate.inverse().has_value()) return;
    ++report.invertible;
    Pairing psi{A, square, BimoduleMap{candidate}};
    if (is_associative_pairing(psi).ok()) ++report.associative;
    if (!first_iso) first_iso = candidate;
  };

  for (int k = 0; k < homs.dim(); ++k)
    consider(map_from_coords(square.mod, regular(A), homs.basis_row(k)));
  for (int t = 0; t < trials && homs.dim() > 0; ++t) {
    Vec coeffs;
    for (int k = 0; k < homs.dim(); ++k) coeffs.push_back(rng.sample(A.field));
    consider(map_from_coords(square.mod, regular(A), homs.from_coords(coeffs)));
  }
  if (first_iso) {
    LinearSubspace z = center(A);
    for (int t = 0; t < trials; ++t) {
      Vec zu = random_vector(z, rng);
      if (!invert_element(A, zu)) continue;
      consider(A.left_mult(zu) * *first_iso);
    }
  }
  return report;
}

}  // namespace fdalg
