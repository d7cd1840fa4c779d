#include "fdalg/algebra.hpp"

#include <stdexcept>

namespace fdalg {

Vec FDAlgebra::multiply(const Vec& a, const Vec& b) const {
  if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
    throw std::logic_error("element size mismatch");
  Vec out = zero_vec(field, dim);
  for (int i = 0; i < dim; ++i) {
    if (a[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[static_cast<std::size_t>(j)].is_zero()) continue;
      add_scaled(out, a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)], product_of_basis(i, j));
    }
  }
  return out;
}

Mat FDAlgebra::left_mult(const Vec& a) const {
  Mat m(field, dim, dim);
  for (int j = 0; j < dim; ++j) {
    Vec col = zero_vec(field, dim);
    for (int i = 0; i < dim; ++i)
      if (!a[static_cast<std::size_t>(i)].is_zero())
        add_scaled(col, a[static_cast<std::size_t>(i)], product_of_basis(i, j));
    for (int k = 0; k < dim; ++k) m.at(k, j) = col[static_cast<std::size_t>(k)];
  }
  return m;
}

Mat FDAlgebra::right_mult(const Vec& a) const {
  Mat m(field, dim, dim);
  for (int i = 0; i < dim; ++i) {
    Vec col = zero_vec(field, dim);
    for (int j = 0; j < dim; ++j)
      if (!a[static_cast<std::size_t>(j)].is_zero())
        add_scaled(col, a[static_cast<std::size_t>(j)], product_of_basis(i, j));
    for (int k = 0; k < dim; ++k) m.at(k, i) = col[static_cast<std::size_t>(k)];
  }
  return m;
}

bool FDAlgebra::same_shape(const FDAlgebra& o) const {
  if (field != o.field || dim != o.dim || unit != o.unit) return false;
  for (std::size_t k = 0; k < mult.size(); ++k)
    if (mult[k] != o.mult[k]) return false;
  return true;
}

FDAlgebra make_algebra(const Field& f, std::vector<std::string> names, Vec unit,
                       const std::vector<std::tuple<int, int, int, Scalar>>& triples) {
  FDAlgebra A;
  A.field = f;
  A.dim = static_cast<int>(names.size());
  A.basis_names = std::move(names);
  A.unit = std::move(unit);
  if (static_cast<int>(A.unit.size()) != A.dim) throw std::invalid_argument("unit size mismatch");
  A.mult.assign(static_cast<std::size_t>(A.dim) * static_cast<std::size_t>(A.dim), zero_vec(f, A.dim));
  for (const auto& [i, j, k, c] : triples) {
    if (i < 0 || i >= A.dim || j < 0 || j >= A.dim || k < 0 || k >= A.dim)
      throw std::invalid_argument("structure-constant index out of range");
    A.mult[static_cast<std::size_t>(i) * static_cast<std::size_t>(A.dim) + static_cast<std::size_t>(j)]
        [static_cast<std::size_t>(k)] += c;
  }
  return A;
}

CheckReport check_algebra(const FDAlgebra& A) {
  CheckReport report;
  auto name = [&](int i) {
    return i < static_cast<int>(A.basis_names.size()) ? A.basis_names[static_cast<std::size_t>(i)]
                                                      : "e" + std::to_string(i);
  };
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      const Vec& ij = A.product_of_basis(i, j);
      for (int k = 0; k < A.dim; ++k) {
        Vec lhs = A.multiply(ij, A.basis_vec(k));
        Vec rhs = A.multiply(A.basis_vec(i), A.product_of_basis(j, k));
        if (lhs != rhs)
          report.violations.push_back("assoc(" + name(i) + ", " + name(j) + ", " + name(k) + ")");
      }
    }
  for (int i = 0; i < A.dim; ++i) {
    if (A.multiply(A.unit, A.basis_vec(i)) != A.basis_vec(i))
      report.violations.push_back("unit*" + name(i));
    if (A.multiply(A.basis_vec(i), A.unit) != A.basis_vec(i))
      report.violations.push_back(name(i) + "*unit");
  }
  return report;
}

AlgMap identity_map(const FDAlgebra& A) { return AlgMap{Mat::identity(A.field, A.dim), false}; }

bool is_algebra_map(const FDAlgebra& source, const FDAlgebra& target, const AlgMap& f) {
  if (f.matrix.rows() != target.dim || f.matrix.cols() != source.dim) return false;
  if (f.apply(source.unit) != target.unit) return false;
  for (int i = 0; i < source.dim; ++i)
    for (int j = 0; j < source.dim; ++j) {
      Vec lhs = f.apply(source.product_of_basis(i, j));
      Vec fi = f.apply(source.basis_vec(i));
      Vec fj = f.apply(source.basis_vec(j));
      Vec rhs = f.anti ? target.multiply(fj, fi) : target.multiply(fi, fj);
      if (lhs != rhs) return false;
    }
  return true;
}

bool is_automorphism(const FDAlgebra& A, const AlgMap& f) {
  return is_algebra_map(A, A, f) && f.matrix.inverse().has_value();
}

AlgMap compose(const AlgMap& f, const AlgMap& g) {
  return AlgMap{f.matrix * g.matrix, f.anti != g.anti};
}

std::optional<AlgMap> map_inverse(const AlgMap& f) {
  auto inv = f.matrix.inverse();
  if (!inv) return std::nullopt;
  return AlgMap{*inv, f.anti};
}

AlgMap map_power(const FDAlgebra& A, const AlgMap& f, int k) {
  if (k < 0) throw std::invalid_argument("negative map power");
  AlgMap out = identity_map(A);
  for (int t = 0; t < k; ++t) out = compose(out, f);
  return out;
}

std::optional<Vec> invert_element(const FDAlgebra& A, const Vec& a) {
  auto x = A.left_mult(a).solve(A.unit);
  if (!x) return std::nullopt;
  if (A.multiply(a, *x) != A.unit || A.multiply(*x, a) != A.unit) return std::nullopt;
  return x;
}

LinearSubspace center(const FDAlgebra& A) {
  // x is central iff (L_{e_i} - R_{e_i}) x = 0 for every basis element.
  EchelonBasis constraints(A.field, A.dim);
  for (int i = 0; i < A.dim; ++i) {
    Mat diff = A.left_mult(A.basis_vec(i)) - A.right_mult(A.basis_vec(i));
    for (int r = 0; r < A.dim; ++r) constraints.insert(diff.row(r));
  }
  Mat ker = constraints.kernel();
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(ker.rows()));
  for (int r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  return LinearSubspace::span(A.field, A.dim, rows);
}

InvertibleSearch find_invertible_in_subspace(const FDAlgebra& A, const LinearSubspace& S,
                                             Rng& rng, int trials) {
  std::vector<Mat> gens;
  gens.reserve(static_cast<std::size_t>(S.dim()));
  for (int k = 0; k < S.dim(); ++k) gens.push_back(A.left_mult(S.basis_row(k)));
  PencilSearch search = find_nonsingular(A.field, gens, rng, trials);
  InvertibleSearch out;
  out.evidence = search.evidence;
  if (search.coeffs) {
    Vec candidate = S.from_coords(*search.coeffs);
    auto inv = invert_element(A, candidate);
    if (!inv) throw std::logic_error("nonsingular pencil member failed inversion");
    out.element = std::move(candidate);
    out.inverse = std::move(*inv);
  }
  return out;
}

InnerResult is_inner(const FDAlgebra& A, const AlgMap& alpha, Rng& rng, int trials) {
  if (alpha.anti) throw std::invalid_argument("inner-ness is defined for plain automorphisms");
  // Solution space of u*alpha(r) = r*u for all basis r; an invertible member u
  // gives alpha(r) = u^-1 r u.
  EchelonBasis constraints(A.field, A.dim);
  for (int i = 0; i < A.dim; ++i) {
    Mat diff = A.right_mult(alpha.apply(A.basis_vec(i))) - A.left_mult(A.basis_vec(i));
    for (int r = 0; r < A.dim; ++r) constraints.insert(diff.row(r));
  }
  Mat ker = constraints.kernel();
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(ker.rows()));
  for (int r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  LinearSubspace space = LinearSubspace::span(A.field, A.dim, rows);

  InnerResult result;
  result.solution_dim = space.dim();
  InvertibleSearch search = find_invertible_in_subspace(A, space, rng, trials);
  result.evidence = search.evidence;
  if (search.found()) {
    for (int i = 0; i < A.dim; ++i) {
      Vec conj = A.multiply(*search.inverse, A.multiply(A.basis_vec(i), *search.element));
      if (conj != alpha.apply(A.basis_vec(i)))
        throw std::logic_error("inner witness failed the conjugation identity");
    }
    result.witness = InnerWitness{*search.element, *search.inverse};
  }
  return result;
}

OutOrderResult out_order(const FDAlgebra& A, const AlgMap& alpha, int max, Rng& rng, int trials) {
  OutOrderResult result;
  AlgMap power = identity_map(A);
  for (int k = 1; k <= max; ++k) {
    power = compose(power, alpha);
    InnerResult step = is_inner(A, power, rng, trials);
    bool inner = step.inner();
    result.steps.push_back(std::move(step));
    if (inner) {
      result.order = k;
      break;
    }
  }
  return result;
}

FDAlgebra tensor_algebra(const FDAlgebra& A, const FDAlgebra& B) {
  if (A.field != B.field) throw std::invalid_argument("tensor factors over different fields");
  FDAlgebra T;
  T.field = A.field;
  T.dim = A.dim * B.dim;
  T.basis_names.reserve(static_cast<std::size_t>(T.dim));
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j)
      T.basis_names.push_back(A.basis_names[static_cast<std::size_t>(i)] + "(x)" +
                              B.basis_names[static_cast<std::size_t>(j)]);
  T.unit = zero_vec(T.field, T.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j) {
      Scalar c = A.unit[static_cast<std::size_t>(i)] * B.unit[static_cast<std::size_t>(j)];
      T.unit[static_cast<std::size_t>(i * B.dim + j)] = c;
    }
  T.mult.assign(static_cast<std::size_t>(T.dim) * static_cast<std::size_t>(T.dim), zero_vec(T.field, T.dim));
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < B.dim; ++j)
      for (int k = 0; k < A.dim; ++k)
        for (int l = 0; l < B.dim; ++l) {
          const Vec& pa = A.product_of_basis(i, k);
          const Vec& pb = B.product_of_basis(j, l);
          Vec& out = T.mult[static_cast<std::size_t>(i * B.dim + j) * static_cast<std::size_t>(T.dim) +
                            static_cast<std::size_t>(k * B.dim + l)];
          for (int r = 0; r < A.dim; ++r) {
            if (pa[static_cast<std::size_t>(r)].is_zero()) continue;
            for (int s = 0; s < B.dim; ++s) {
              if (pb[static_cast<std::size_t>(s)].is_zero()) continue;
              out[static_cast<std::size_t>(r * B.dim + s)] +=
                  pa[static_cast<std::size_t>(r)] * pb[static_cast<std::size_t>(s)];
            }
          }
        }
  return T;
}

}  // namespace fdalg
