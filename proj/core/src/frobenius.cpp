#include "fdalg/frobenius.hpp"

#include <stdexcept>

namespace fdalg {

namespace {

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s = a.empty() ? Scalar() : a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Mat pairing_matrix(const FDAlgebra& A, const Vec& lambda) {
  Mat b(A.field, A.dim, A.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) b.at(i, j) = dot(lambda, A.product_of_basis(i, j));
  return b;
}

FrobeniusSearch find_frobenius_form(const FDAlgebra& A, Rng& rng, int trials) {
  std::vector<Mat> gens;
  gens.reserve(static_cast<std::size_t>(A.dim));
  for (int k = 0; k < A.dim; ++k)
    gens.push_back(pairing_matrix(A, unit_vec(A.field, A.dim, k)));
  PencilSearch search = find_nonsingular(A.field, gens, rng, trials);
  FrobeniusSearch result;
  result.evidence = search.evidence;
  if (search.coeffs) {
    Vec lambda = *search.coeffs;
    result.witness = FrobeniusWitness{lambda, pairing_matrix(A, lambda), nakayama(A, lambda)};
  }
  return result;
}

AlgMap nakayama(const FDAlgebra& A, const Vec& lambda) {
  Mat b = pairing_matrix(A, lambda);
  auto binv = b.inverse();
  if (!binv) throw std::invalid_argument("nakayama needs a nonsingular pairing");
  // theta(a) = a->lambda has matrix B, a -> lambda<-a has matrix B^T;
  // nu = theta^-1 (lambda <- .) makes nu(a)->lambda = lambda<-a.
  AlgMap nu{*binv * b.transpose(), false};
  if (!is_automorphism(A, nu)) throw std::logic_error("Nakayama map is not an automorphism");
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      // lambda(a r) = lambda(r nu(a)) on all basis pairs.
      Scalar lhs = dot(lambda, A.product_of_basis(i, j));
      Scalar rhs = dot(lambda, A.multiply(A.basis_vec(j), nu.apply(A.basis_vec(i))));
      if (lhs != rhs) throw std::logic_error("Nakayama identity failed");
    }
  return nu;
}

LinearSubspace trace_like_functionals(const FDAlgebra& A) {
  EchelonBasis constraints(A.field, A.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int j = i + 1; j < A.dim; ++j)
      constraints.insert(sub(A.product_of_basis(i, j), A.product_of_basis(j, i)));
  Mat ker = constraints.kernel();
  std::vector<Vec> rows;
  for (int r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  return LinearSubspace::span(A.field, A.dim, rows);
}

SymmetricSearch is_symmetric(const FDAlgebra& A, Rng& rng, int trials) {
  LinearSubspace trace_like = trace_like_functionals(A);
  SymmetricSearch result;
  result.trace_like_dim = trace_like.dim();
  std::vector<Mat> gens;
  gens.reserve(static_cast<std::size_t>(trace_like.dim()));
  for (int k = 0; k < trace_like.dim(); ++k)
    gens.push_back(pairing_matrix(A, trace_like.basis_row(k)));
  PencilSearch search = find_nonsingular(A.field, gens, rng, trials);
  result.evidence = search.evidence;
  if (search.coeffs) {
    Vec lambda = trace_like.from_coords(*search.coeffs);
    Mat b = pairing_matrix(A, lambda);
    Bimodule reg = regular(A);
    if (!is_bimodule_map(reg, dual(reg), b, HomKind::bimodule))
      throw std::logic_error("trace-like pairing is not a bimodule map");
    if (!b.inverse()) throw std::logic_error("nonsingular pencil member is singular");
    result.witness = SymmetricWitness{std::move(lambda), b, BimoduleMap{b}};
  }
  return result;
}

QuasiFrobeniusReport is_quasi_frobenius(const FDAlgebra& A) {
  return QuasiFrobeniusReport{is_invertible_bimodule(dual(regular(A)))};
}

PicProbeResult pic_order_probe(const FDAlgebra& A, int max, Rng& rng, int trials) {
  PicProbeResult result;
  Bimodule reg = regular(A);
  Bimodule r_star = dual(reg);
  Bimodule power = r_star;
  for (int k = 1; k <= max; ++k) {
    result.power_dims.push_back(power.dim);
    if (power.dim != A.dim) {
      result.diagnostic = "power " + std::to_string(k) + " has dimension " +
                          std::to_string(power.dim) + " != " + std::to_string(A.dim) +
                          "; input is not an invertible class";
      return result;
    }
    IsoResult step = is_isomorphic(power, reg, HomKind::bimodule, rng, trials);
    bool hit = step.isomorphic();
    result.certificates.push_back(std::move(step));
    if (hit) {
      result.order = k;
      break;
    }
    if (k < max) power = tensor_over(power, r_star).mod;
  }

  FrobeniusSearch fs = find_frobenius_form(A, rng, trials);
  if (fs.frobenius()) {
    OutOrderResult oo = out_order(A, fs.witness->nakayama, max, rng, trials);
    result.nakayama_out_order = oo.order;
    if (oo.order != result.order)
      throw std::logic_error("tensor-power order disagrees with the Nakayama outer order");
  }
  return result;
}

InnerResult out_class_equal(const FDAlgebra& A, const AlgMap& f, const AlgMap& g, Rng& rng,
                            int trials) {
  auto ginv = map_inverse(g);
  if (!ginv) throw std::invalid_argument("comparing a non-invertible map");
  return is_inner(A, compose(f, *ginv), rng, trials);
}

PairingMapResult frobenius_pairing_map(const FDAlgebra& A, const FrobeniusWitness& w, Rng& rng,
                                       int trials) {
  const Field& f = A.field;
  const AlgMap& nu = w.nakayama;
  AlgMap nu2 = compose(nu, nu);

  // nu-fixed u with u nu^2(r) = r u for all r, u invertible.
  EchelonBasis constraints(f, A.dim);
  for (int i = 0; i < A.dim; ++i) {
    Mat diff = A.right_mult(nu2.apply(A.basis_vec(i))) - A.left_mult(A.basis_vec(i));
    for (int r = 0; r < A.dim; ++r) constraints.insert(diff.row(r));
  }
  Mat fixed = nu.matrix - Mat::identity(f, A.dim);
  for (int r = 0; r < A.dim; ++r) constraints.insert(fixed.row(r));
  Mat ker = constraints.kernel();
  std::vector<Vec> rows;
  for (int r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  InvertibleSearch found =
      find_invertible_in_subspace(A, LinearSubspace::span(f, A.dim, rows), rng, trials);
  if (!found.found())
    throw std::runtime_error("no nu-fixed inner witness for nu^2 within the trial budget (" +
                             found.evidence.describe() + ")");
  Vec u = *found.element, u_inv = *found.inverse;
  for (int i = 0; i < A.dim; ++i)
    if (A.multiply(u_inv, A.multiply(A.basis_vec(i), u)) != nu2.apply(A.basis_vec(i)))
      throw std::logic_error("inner witness failed nu^2 conjugation");
  if (nu.apply(u) != u) throw std::logic_error("inner witness is not nu-fixed");

  Bimodule r_star = dual(regular(A));
  TensorBimodule square = tensor_over(r_star, r_star);

  // e_i* = theta(r_i) with r_i = B^-1 e_i; psi(theta(r) (x) theta(s)) = r nu(s) u^-1.
  Mat binv = *w.pairing.inverse();
  Mat full(f, A.dim, A.dim * A.dim);
  for (int i = 0; i < A.dim; ++i) {
    Vec r_i = binv.col(i);
    for (int j = 0; j < A.dim; ++j) {
      Vec value = A.multiply(A.multiply(r_i, nu.apply(binv.col(j))), u_inv);
      for (int t = 0; t < A.dim; ++t) full.at(t, i * A.dim + j) = value[static_cast<std::size_t>(t)];
    }
  }
  for (int k = 0; k < square.carrier.relations().dim(); ++k)
    if (!is_zero_vec(full.apply(square.carrier.relations().basis_row(k))))
      throw std::logic_error("pairing map does not kill middle-linearity relations");
  Mat descended = full * square.carrier.section();
  if (!is_bimodule_map(square.mod, regular(A), descended, HomKind::bimodule))
    throw std::logic_error("pairing map is not a bimodule map");
  if (!descended.inverse()) throw std::logic_error("pairing map is not invertible");
  return PairingMapResult{std::move(square), BimoduleMap{std::move(descended)}, std::move(full),
                          std::move(u), std::move(u_inv)};
}

}  // namespace fdalg
