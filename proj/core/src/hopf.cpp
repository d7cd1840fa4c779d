#include "fdalg/hopf.hpp"

#include <numeric>
#include <stdexcept>

namespace fdalg {

namespace {

Scalar dot(const Vec& a, const Vec& b) {
  Scalar s = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

CheckReport check_hopf(const HopfData& H) {
  CheckReport report;
  const FDAlgebra& A = H.algebra;
  const Field& f = A.field;
  int n = A.dim;
  if (static_cast<int>(H.counit.size()) != n || H.comul.rows() != n * n || H.comul.cols() != n ||
      H.antipode.matrix.rows() != n) {
    report.violations.push_back("shape mismatch");
    return report;
  }
  if (!H.antipode.anti) report.violations.push_back("antipode must carry the anti flag");

  if (dot(H.counit, A.unit) != f.one()) report.violations.push_back("counit(1)");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (dot(H.counit, A.product_of_basis(i, j)) != H.counit[static_cast<std::size_t>(i)] * H.counit[static_cast<std::size_t>(j)])
        report.violations.push_back("counit multiplicative (" + std::to_string(i) + "," + std::to_string(j) + ")");

  FDAlgebra square = tensor_algebra(A, A);
  if (H.comul.apply(A.unit) != square.unit) report.violations.push_back("comul(1)");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (square.multiply(H.comul.col(i), H.comul.col(j)) != H.comul.apply(A.product_of_basis(i, j)))
        report.violations.push_back("comul multiplicative (" + std::to_string(i) + "," + std::to_string(j) + ")");

  Mat id = Mat::identity(f, n);
  if (H.comul.kronecker(id) * H.comul != id.kronecker(H.comul) * H.comul)
    report.violations.push_back("coassociativity");

  Mat eps_left(f, n, n * n), eps_right(f, n, n * n);  // (eps (x) id), (id (x) eps)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      eps_left.at(b, a * n + b) = H.counit[static_cast<std::size_t>(a)];
      eps_right.at(a, a * n + b) = H.counit[static_cast<std::size_t>(b)];
    }
  if (!(eps_left * H.comul).is_identity()) report.violations.push_back("left counit axiom");
  if (!(eps_right * H.comul).is_identity()) report.violations.push_back("right counit axiom");

  if (!is_algebra_map(A, A, H.antipode)) report.violations.push_back("antipode anti-multiplicativity");
  Mat mul(f, n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec& p = A.product_of_basis(i, j);
      for (int k = 0; k < n; ++k) mul.at(k, i * n + j) = p[static_cast<std::size_t>(k)];
    }
  Mat unit_eps(f, n, n);  // h -> eps(h) 1
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      unit_eps.at(k, j) = H.counit[static_cast<std::size_t>(j)] * A.unit[static_cast<std::size_t>(k)];
  if (mul * H.antipode.matrix.kronecker(id) * H.comul != unit_eps)
    report.violations.push_back("left antipode axiom");
  if (mul * id.kronecker(H.antipode.matrix) * H.comul != unit_eps)
    report.violations.push_back("right antipode axiom");
  return report;
}

Vec convolve_functionals(const HopfData& H, const Vec& f, const Vec& g) {
  int n = H.algebra.dim;
  Vec out = zero_vec(H.algebra.field, n);
  for (int k = 0; k < n; ++k) {
    Scalar acc = H.algebra.field.zero();
    for (int a = 0; a < n; ++a) {
      if (f[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; b < n; ++b) {
        const Scalar& d = H.comul.at(a * n + b, k);
        if (!d.is_zero() && !g[static_cast<std::size_t>(b)].is_zero())
          acc += f[static_cast<std::size_t>(a)] * g[static_cast<std::size_t>(b)] * d;
      }
    }
    out[static_cast<std::size_t>(k)] = acc;
  }
  return out;
}

bool is_character(const FDAlgebra& A, const Vec& f) {
  if (dot(f, A.unit) != A.field.one()) return false;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      if (dot(f, A.product_of_basis(i, j)) != f[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)])
        return false;
  return true;
}

Vec left_integral_in(const HopfData& H) {
  const FDAlgebra& A = H.algebra;
  EchelonBasis constraints(A.field, A.dim);
  for (int i = 0; i < A.dim; ++i) {
    Mat diff = A.left_mult(A.basis_vec(i)) -
               Mat::identity(A.field, A.dim).scaled(H.counit[static_cast<std::size_t>(i)]);
    for (int r = 0; r < A.dim; ++r) constraints.insert(diff.row(r));
  }
  Mat ker = constraints.kernel();
  if (ker.rows() != 1)
    throw std::runtime_error("left-integral space has dimension " + std::to_string(ker.rows()) +
                             ", expected 1");
  Vec t = ker.row(0);
  for (int i = 0; i < A.dim; ++i)
    if (A.multiply(A.basis_vec(i), t) != scale(H.counit[static_cast<std::size_t>(i)], t))
      throw std::logic_error("integral candidate fails h t = eps(h) t");
  return t;
}

Vec modular_element(const HopfData& H, const Vec& t) {
  const FDAlgebra& A = H.algebra;
  int lead = -1;
  for (int i = 0; i < A.dim; ++i)
    if (!t[static_cast<std::size_t>(i)].is_zero()) { lead = i; break; }
  if (lead < 0) throw std::invalid_argument("zero integral");
  Scalar lead_inv = t[static_cast<std::size_t>(lead)].inv();
  Vec g = zero_vec(A.field, A.dim);
  for (int j = 0; j < A.dim; ++j) {
    Vec th = A.multiply(t, A.basis_vec(j));
    Scalar gj = th[static_cast<std::size_t>(lead)] * lead_inv;
    if (th != scale(gj, t)) throw std::runtime_error("t h is not a scalar multiple of t");
    g[static_cast<std::size_t>(j)] = gj;
  }
  if (!is_character(A, g)) throw std::runtime_error("modular element is not a character");
  return g;
}

std::optional<int> convolution_order(const HopfData& H, const Vec& f, int max) {
  Vec power = f;
  for (int k = 1; k <= max; ++k) {
    if (power == H.counit) return k;
    power = convolve_functionals(H, power, f);
  }
  return std::nullopt;
}

TheoremAReport theorem_A_check(const HopfData& H, int max, Rng& rng, int trials) {
  AlgMap s2 = compose(H.antipode, H.antipode);
  OutOrderResult a = out_order(H.algebra, s2, max, rng, trials);
  if (!a.order) throw std::runtime_error("S^2 outer order exceeds " + std::to_string(max));
  Vec g = modular_element(H, left_integral_in(H));
  std::optional<int> b = convolution_order(H, g, max);
  if (!b) throw std::runtime_error("modular element order exceeds " + std::to_string(max));
  PicProbeResult c = pic_order_probe(H.algebra, max, rng, trials);
  if (!c.order) throw std::runtime_error("Picard probe exceeds " + std::to_string(max));
  TheoremAReport report;
  report.antipode_sq_out_order = *a.order;
  report.modular_order = *b;
  report.pic_order = *c.order;
  report.lcm_consistent = *c.order == std::lcm(*a.order, *b);
  return report;
}

bool nakayama_radford_identity(const HopfData& H, const Vec& lambda) {
  const FDAlgebra& A = H.algebra;
  Mat b = pairing_matrix(A, lambda);
  if (!b.inverse()) throw std::invalid_argument("lambda is not a Frobenius form");
  // lambda must be a left integral on the dual: f * lambda = f(1) lambda.
  for (int i = 0; i < A.dim; ++i) {
    Vec f = unit_vec(A.field, A.dim, i);
    if (convolve_functionals(H, f, lambda) != scale(A.unit[static_cast<std::size_t>(i)], lambda))
      return false;
  }
  AlgMap nu = nakayama(A, lambda);
  Vec g = modular_element(H, left_integral_in(H));
  Mat ell(A.field, A.dim, A.dim);  // h -> (id (x) G)(Delta h)
  for (int k = 0; k < A.dim; ++k)
    for (int a = 0; a < A.dim; ++a) {
      Scalar acc = A.field.zero();
      for (int bb = 0; bb < A.dim; ++bb) {
        const Scalar& d = H.comul.at(a * A.dim + bb, k);
        if (!d.is_zero()) acc += d * g[static_cast<std::size_t>(bb)];
      }
      ell.at(a, k) = acc;
    }
  AlgMap s2 = compose(H.antipode, H.antipode);
  return nu.matrix == s2.matrix * ell;
}

}  // namespace fdalg
