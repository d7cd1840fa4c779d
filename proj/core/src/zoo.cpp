#include "fdalg/zoo.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace fdalg {

namespace {

[[noreturn]] void fail_logic(const std::string& what, const CheckReport& rep) {
  std::string msg = what;
  for (std::size_t i = 0; i < rep.violations.size() && i < 3; ++i) msg += "; " + rep.violations[i];
  throw std::logic_error(msg);
}

Scalar pow_scalar(const Field& f, const Scalar& base, int k) {
  Scalar acc = f.one();
  Scalar b = k < 0 ? base.inv() : base;
  int m = k < 0 ? -k : k;
  for (int i = 0; i < m; ++i) acc *= b;
  return acc;
}

int scalar_order(const Field& f, const Scalar& z, int cap) {
  // least t in [1, cap] with z^t = 1, or 0 when none
  Scalar acc = f.one();
  for (int t = 1; t <= cap; ++t) {
    acc *= z;
    if (acc.is_one()) return t;
  }
  return 0;
}

}  // namespace

int AbelianGroupSpec::size() const {
  int s = 1;
  for (int d : orders) {
    if (d < 1) throw std::invalid_argument("cyclic factor order must be >= 1");
    s *= d;
  }
  return s;
}

int AbelianGroupSpec::index_of(const std::vector<int>& a) const {
  if (a.size() != orders.size()) throw std::invalid_argument("group tuple has wrong length");
  int idx = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    int r = ((a[i] % orders[i]) + orders[i]) % orders[i];
    idx = idx * orders[i] + r;
  }
  return idx;
}

std::vector<int> AbelianGroupSpec::tuple_of(int idx) const {
  std::vector<int> a(orders.size(), 0);
  for (std::size_t i = orders.size(); i-- > 0;) {
    a[i] = idx % orders[i];
    idx /= orders[i];
  }
  return a;
}

std::vector<int> AbelianGroupSpec::add(const std::vector<int>& a, const std::vector<int>& b) const {
  if (a.size() != orders.size() || b.size() != orders.size())
    throw std::invalid_argument("group tuple has wrong length");
  std::vector<int> c(orders.size(), 0);
  for (std::size_t i = 0; i < orders.size(); ++i) c[i] = (a[i] + b[i]) % orders[i];
  return c;
}

std::vector<int> AbelianGroupSpec::neg(const std::vector<int>& a) const {
  if (a.size() != orders.size()) throw std::invalid_argument("group tuple has wrong length");
  std::vector<int> c(orders.size(), 0);
  for (std::size_t i = 0; i < orders.size(); ++i) c[i] = (orders[i] - a[i] % orders[i]) % orders[i];
  return c;
}

std::vector<int> AbelianGroupSpec::identity() const { return std::vector<int>(orders.size(), 0); }

std::vector<int> AbelianGroupSpec::power(const std::vector<int>& a, int k) const {
  if (a.size() != orders.size()) throw std::invalid_argument("group tuple has wrong length");
  std::vector<int> c(orders.size(), 0);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    long long v = static_cast<long long>(a[i]) * k % orders[i];
    c[i] = static_cast<int>((v + orders[i]) % orders[i]);
  }
  return c;
}

int AbelianGroupSpec::element_order(const std::vector<int>& a) const {
  if (a.size() != orders.size()) throw std::invalid_argument("group tuple has wrong length");
  long long ord = 1;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    int r = ((a[i] % orders[i]) + orders[i]) % orders[i];
    ord = std::lcm(ord, static_cast<long long>(orders[i] / std::gcd(orders[i], r == 0 ? orders[i] : r)));
  }
  return static_cast<int>(ord);
}

std::string AbelianGroupSpec::name_of(int idx) const {
  std::vector<int> a = tuple_of(idx);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << ' ';
    first = false;
    if (orders.size() == 1)
      os << 'g';
    else
      os << 'g' << (i + 1);
    if (a[i] != 1) os << '^' << a[i];
  }
  if (first) return "1";
  return os.str();
}

Scalar CharacterSpec::value_at(const AbelianGroupSpec& C, const std::vector<int>& a) const {
  if (values.size() != C.orders.size() || a.size() != C.orders.size())
    throw std::invalid_argument("character or tuple length mismatch");
  if (values.empty()) throw std::invalid_argument("character needs at least one cyclic factor");
  Scalar acc = values[0] * values[0].inv();  // one, in the field of the values
  for (std::size_t i = 0; i < values.size(); ++i) {
    int e = ((a[i] % C.orders[i]) + C.orders[i]) % C.orders[i];
    for (int t = 0; t < e; ++t) acc *= values[i];
  }
  return acc;
}

bool CharacterSpec::power_is_trivial(const AbelianGroupSpec& C, int k) const {
  if (values.size() != C.orders.size())
    throw std::invalid_argument("character length mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    int e = ((k % C.orders[i]) + C.orders[i]) % C.orders[i];
    Scalar acc = values[i] * values[i].inv();  // one in the right field
    for (int t = 0; t < e; ++t) acc *= values[i];
    if (!acc.is_one()) return false;
  }
  return true;
}

int CharacterSpec::order(const AbelianGroupSpec& C) const {
  if (values.size() != C.orders.size())
    throw std::invalid_argument("character length mismatch");
  long long ord = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    Scalar acc = values[i] * values[i].inv();
    int t = 0;
    do {
      acc *= values[i];
      ++t;
    } while (!acc.is_one() && t <= C.orders[i]);
    if (!acc.is_one()) throw std::invalid_argument("character value is not a root of unity of its factor order");
    ord = std::lcm(ord, static_cast<long long>(t));
  }
  return static_cast<int>(ord);
}

void validate_character(const AbelianGroupSpec& C, const Field& f, const CharacterSpec& cstar) {
  if (cstar.values.size() != C.orders.size())
    throw std::invalid_argument("character needs one value per cyclic factor");
  for (std::size_t i = 0; i < cstar.values.size(); ++i) {
    const Scalar& z = cstar.values[i];
    if (z.modulus() != f.characteristic())
      throw std::invalid_argument("character value lies in the wrong field");
    if (z.is_zero()) throw std::invalid_argument("character value must be nonzero");
    if (!pow_scalar(f, z, C.orders[i]).is_one())
      throw std::invalid_argument("character value is not a root of unity of its factor order");
  }
}

FDAlgebra nakayama_R(const Field& f) {
  std::vector<std::string> names = {"E", "X1", "X2", "Y1", "Y2", "F11", "F12", "F21", "F22"};
  const Scalar one = f.one();
  std::vector<std::tuple<int, int, int, Scalar>> t;
  t.emplace_back(kRE, kRE, kRE, one);
  for (int i = 1; i <= 2; ++i) {
    t.emplace_back(kRE, kRX(i), kRX(i), one);
    t.emplace_back(kRY(i), kRE, kRY(i), one);
    for (int j = 1; j <= 2; ++j) {
      t.emplace_back(kRX(i), kRF(i, j), kRX(j), one);
      t.emplace_back(kRF(i, j), kRY(j), kRY(i), one);
      for (int r = 1; r <= 2; ++r) t.emplace_back(kRF(i, j), kRF(j, r), kRF(i, r), one);
    }
  }
  Vec unit = zero_vec(f, 9);
  unit[kRE] = one;
  unit[kRF(1, 1)] = one;
  unit[kRF(2, 2)] = one;
  FDAlgebra A = make_algebra(f, std::move(names), std::move(unit), t);
  CheckReport rep = check_algebra(A);
  if (!rep.ok()) fail_logic("nakayama_R relations fail the algebra axioms", rep);
  return A;
}

namespace {

// Block view of a length-9 coordinate vector in the order
// [a, x1, x2, y1, y2, f11, f12, f21, f22].
struct RBlocks {
  Scalar a;
  Vec x;  // row 2-vector
  Vec y;  // column 2-vector
  Mat f;  // 2x2
};

RBlocks split_blocks(const Field& fld, const Vec& v) {
  RBlocks b{v[kRE], {v[kRX(1)], v[kRX(2)]}, {v[kRY(1)], v[kRY(2)]}, Mat(fld, 2, 2)};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) b.f.at(i - 1, j - 1) = v[kRF(i, j)];
  return b;
}

Vec pack_blocks(const Field& fld, const RBlocks& b) {
  Vec v = zero_vec(fld, 9);
  v[kRE] = b.a;
  for (int i = 1; i <= 2; ++i) {
    v[kRX(i)] = b.x[i - 1];
    v[kRY(i)] = b.y[i - 1];
    for (int j = 1; j <= 2; ++j) v[kRF(i, j)] = b.f.at(i - 1, j - 1);
  }
  return v;
}

Vec row_times(const Vec& x, const Mat& m) {
  Vec out = zero_vec(m.field(), m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i) out[j] += x[i] * m.at(i, j);
  return out;
}

Vec block_mul(const Field& fld, const Vec& u, const Vec& v) {
  RBlocks a = split_blocks(fld, u);
  RBlocks b = split_blocks(fld, v);
  RBlocks c{a.a * b.a, zero_vec(fld, 2), zero_vec(fld, 2), a.f * b.f};
  c.x = add(scale(a.a, b.x), row_times(a.x, b.f));
  c.y = add(scale(b.a, a.y), a.f.apply(b.y));
  return pack_blocks(fld, c);
}

}  // namespace

MoritaPresentation morita_R(const Field& f) {
  FDAlgebra nak = nakayama_R(f);
  FDAlgebra A;
  A.field = f;
  A.dim = 9;
  A.basis_names = nak.basis_names;
  A.unit = nak.unit;
  A.mult.reserve(81);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) A.mult.push_back(block_mul(f, A.basis_vec(i), A.basis_vec(j)));
  CheckReport rep = check_algebra(A);
  if (!rep.ok()) fail_logic("Morita-ring block multiplication fails the algebra axioms", rep);
  AlgMap iso = identity_map(A);
  if (!is_algebra_map(A, nak, iso))
    throw std::logic_error("Morita-ring structure constants disagree with nakayama_R");
  return MoritaPresentation{std::move(A), std::move(iso)};
}

namespace {

Mat morita_aut_matrix(const FDAlgebra& R, const MoritaAutParams& p, const Mat& p_inv) {
  const Field& f = R.field;
  Mat out(f, 9, 9);
  for (int r = 0; r < 9; ++r) {
    RBlocks b = split_blocks(f, R.basis_vec(r));
    Mat pf = p.P * b.f * p_inv;
    RBlocks img{b.a, zero_vec(f, 2), zero_vec(f, 2), pf};
    img.x = add(add(scale(b.a, p.x1), scale(p.lambda, row_times(b.x, p_inv))),
                scale(-f.one(), row_times(p.x1, pf)));
    img.y = add(add(scale(b.a, p.y1), p.P.apply(b.y)), scale(-f.one(), pf.apply(p.y1)));
    Vec col = pack_blocks(f, img);
    for (int i = 0; i < 9; ++i) out.at(i, r) = col[i];
  }
  return out;
}

void validate_morita_params(const MoritaAutParams& p) {
  if (p.x1.size() != 2 || p.y1.size() != 2 || p.P.rows() != 2 || p.P.cols() != 2)
    throw std::invalid_argument("Morita automorphism parameters must be 2-dimensional");
  if (p.lambda.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  if (p.P.det().is_zero()) throw std::invalid_argument("P must be invertible");
}

}  // namespace

AlgMap morita_aut(const FDAlgebra& R, const MoritaAutParams& p) {
  validate_morita_params(p);
  Mat p_inv = *p.P.inverse();
  AlgMap phi{morita_aut_matrix(R, p, p_inv), false};
  if (!is_automorphism(R, phi))
    throw std::logic_error("Morita automorphism formula failed verification");
  return phi;
}

MoritaAutParams morita_aut_compose(const MoritaAutParams& outer, const MoritaAutParams& inner) {
  validate_morita_params(outer);
  validate_morita_params(inner);
  Mat p_inv = *outer.P.inverse();
  MoritaAutParams c{add(outer.x1, scale(outer.lambda, row_times(inner.x1, p_inv))),
                    add(outer.y1, outer.P.apply(inner.y1)), outer.lambda * inner.lambda,
                    outer.P * inner.P};
  return c;
}

Vec morita_inner_witness(const FDAlgebra& R, const MoritaAutParams& p) {
  validate_morita_params(p);
  if (!p.lambda.is_one())
    throw std::invalid_argument("inner witness exists only for lambda = 1");
  const Field& f = R.field;
  Mat p_inv = *p.P.inverse();
  RBlocks b{f.one(), p.x1, scale(-f.one(), p_inv.apply(p.y1)), p_inv};
  return pack_blocks(f, b);
}

VarphiPairing varphi_pairing(const Field& f) {
  FDAlgebra R = nakayama_R(f);
  Bimodule rd = dual(regular(R));
  TensorBimodule sq = tensor_over(rd, rd);
  if (sq.mod.dim != 9)
    throw std::logic_error("tensor square of the dual has unexpected dimension");
  Mat full(f, 9, 81);
  auto ent = [&](int out_idx, int i, int j) { full.at(out_idx, i * 9 + j) = f.one(); };
  for (int i = 1; i <= 2; ++i) {
    ent(kRE, kRY(i), kRX(i));
    ent(kRX(i), kRE, kRY(i));
    ent(kRY(i), kRX(i), kRE);
    for (int j = 1; j <= 2; ++j) {
      ent(kRF(i, j), kRX(i), kRY(j));
      ent(kRX(j), kRY(i), kRF(j, i));
      ent(kRY(j), kRF(i, j), kRX(i));
    }
  }
  const LinearSubspace& rel = sq.carrier.relations();
  for (int k = 0; k < rel.dim(); ++k)
    if (!is_zero_vec(full.apply(rel.basis_row(k))))
      throw std::logic_error("pairing table does not kill a middle-linearity relation");
  Mat descended = full * sq.carrier.section();
  if (!is_bimodule_map(sq.mod, regular(R), descended, HomKind::bimodule))
    throw std::logic_error("descended pairing is not a bimodule map");
  if (!descended.inverse().has_value())
    throw std::logic_error("descended pairing is not invertible");
  return VarphiPairing{std::move(R), std::move(sq), std::move(full), BimoduleMap{std::move(descended)}};
}

FDAlgebra quantum_plane_quotient(const Field& f, const Scalar& q) {
  if (q.is_zero()) throw std::invalid_argument("q must be nonzero");
  if (q.modulus() != f.characteristic())
    throw std::invalid_argument("q lies in the wrong field");
  auto idx = [](int a, int b) { return a + 2 * b; };
  std::vector<std::string> names = {"1", "x", "y", "xy"};
  std::vector<std::tuple<int, int, int, Scalar>> t;
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c)
        for (int d = 0; d <= 1; ++d) {
          if (a + c > 1 || b + d > 1) continue;
          Scalar coeff = (b == 1 && c == 1) ? q : f.one();  // y x = q x y
          t.emplace_back(idx(a, b), idx(c, d), idx(a + c, b + d), coeff);
        }
  FDAlgebra A = make_algebra(f, std::move(names), unit_vec(f, 4, 0), t);
  CheckReport rep = check_algebra(A);
  if (!rep.ok()) fail_logic("quantum plane quotient fails the algebra axioms", rep);
  return A;
}

NakayamaNesbitt nakayama_nesbitt(const Field& f, const Scalar& u, const Scalar& v) {
  if (u.is_zero() || v.is_zero()) throw std::invalid_argument("u and v must be nonzero");
  if (u.modulus() != f.characteristic() || v.modulus() != f.characteristic())
    throw std::invalid_argument("u or v lies in the wrong field");
  std::vector<std::string> names = {"1", "x", "y", "z"};
  std::vector<std::tuple<int, int, int, Scalar>> t;
  for (int j = 0; j < 4; ++j) {
    t.emplace_back(0, j, j, f.one());
    if (j != 0) t.emplace_back(j, 0, j, f.one());
  }
  t.emplace_back(1, 2, 3, u);  // x y = u z
  t.emplace_back(2, 1, 3, v);  // y x = v z
  FDAlgebra A = make_algebra(f, std::move(names), unit_vec(f, 4, 0), t);
  CheckReport rep = check_algebra(A);
  if (!rep.ok()) fail_logic("nakayama_nesbitt relations fail the algebra axioms", rep);
  FDAlgebra Rq = quantum_plane_quotient(f, u.inv() * v);
  Mat m = Mat::identity(f, 4);
  m.at(3, 3) = u.inv();  // z -> u^-1 x y
  AlgMap iso{std::move(m), false};
  if (!is_algebra_map(A, Rq, iso))
    throw std::logic_error("nakayama_nesbitt iso to the quantum plane quotient failed verification");
  return NakayamaNesbitt{std::move(A), std::move(Rq), std::move(iso)};
}

namespace {

std::string quantum_line_name(const AbelianGroupSpec& C, int gi, int j) {
  std::string base = C.name_of(gi);
  std::string xpart;
  if (j == 1)
    xpart = "x";
  else if (j > 1)
    xpart = "x^" + std::to_string(j);
  if (xpart.empty()) return base;
  if (base == "1") return xpart;
  return base + " " + xpart;
}

}  // namespace

QuantumLine quantum_line(QuantumLineKind kind, const AbelianGroupSpec& C, int n,
                         const std::vector<int>& c, const CharacterSpec& cstar, const Field& f) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  validate_character(C, f, cstar);
  const Scalar xi = cstar.value_at(C, c);
  if (scalar_order(f, xi, n) != n)
    throw std::invalid_argument("cstar(c) must have multiplicative order exactly n");
  if (kind == QuantumLineKind::H1) {
    if (C.index_of(C.power(c, n)) == C.index_of(C.identity()))
      throw std::invalid_argument("H1 requires c^n != 1 in the group");
    if (!cstar.power_is_trivial(C, n))
      throw std::invalid_argument("H1 requires cstar^n = 1");
  }
  const int gsize = C.size();
  const int dim = gsize * n;
  auto bidx = [&](int gi, int j) { return gi * n + j; };

  std::vector<std::string> names;
  names.reserve(dim);
  for (int gi = 0; gi < gsize; ++gi)
    for (int j = 0; j < n; ++j) names.push_back(quantum_line_name(C, gi, j));

  const int cn_idx = C.index_of(C.power(c, n));
  std::vector<std::tuple<int, int, int, Scalar>> t;
  for (int gi = 0; gi < gsize; ++gi) {
    std::vector<int> g = C.tuple_of(gi);
    for (int hi = 0; hi < gsize; ++hi) {
      std::vector<int> h = C.tuple_of(hi);
      const int ghi = C.index_of(C.add(g, h));
      const Scalar ch = cstar.value_at(C, h);
      Scalar coeff = f.one();
      for (int j = 0; j < n; ++j) {
        // coeff = cstar(h)^j; (g x^j)(h x^l) = cstar(h)^j gh x^{j+l}
        for (int l = 0; l < n; ++l) {
          int jl = j + l;
          if (jl < n) {
            t.emplace_back(bidx(gi, j), bidx(hi, l), bidx(ghi, jl), coeff);
          } else if (kind == QuantumLineKind::H1) {
            // x^n = c^n - 1, and c^n commutes with x
            int over = jl - n;
            int ghcn = C.index_of(C.add(C.tuple_of(ghi), C.tuple_of(cn_idx)));
            t.emplace_back(bidx(gi, j), bidx(hi, l), bidx(ghcn, over), coeff);
            t.emplace_back(bidx(gi, j), bidx(hi, l), bidx(ghi, over), -coeff);
          }
        }
        coeff *= ch;
      }
    }
  }
  FDAlgebra A = make_algebra(f, std::move(names), unit_vec(f, dim, bidx(0, 0)), t);
  CheckReport rep = check_algebra(A);
  if (!rep.ok()) fail_logic("quantum line relations fail the algebra axioms", rep);

  Vec counit = zero_vec(f, dim);
  for (int gi = 0; gi < gsize; ++gi) counit[bidx(gi, 0)] = f.one();

  // Delta(g x^j) = (g (x) g) * (c (x) x + x (x) 1)^j inside A (x) A.
  FDAlgebra T = tensor_algebra(A, A);
  const int c_idx = bidx(C.index_of(c), 0);
  const int x_idx = bidx(0, 1);
  Vec dx = zero_vec(f, dim * dim);
  dx[c_idx * dim + x_idx] = f.one();
  dx[x_idx * dim + bidx(0, 0)] = f.one();
  std::vector<Vec> dx_pow;
  dx_pow.push_back(T.unit);
  for (int j = 1; j < n; ++j) dx_pow.push_back(T.multiply(dx_pow.back(), dx));
  Mat comul(f, dim * dim, dim);
  for (int gi = 0; gi < gsize; ++gi) {
    Vec gg = zero_vec(f, dim * dim);
    gg[bidx(gi, 0) * dim + bidx(gi, 0)] = f.one();
    for (int j = 0; j < n; ++j) {
      Vec col = T.multiply(gg, dx_pow[j]);
      for (int r = 0; r < dim * dim; ++r) comul.at(r, bidx(gi, j)) = col[r];
    }
  }

  // S(g x^j) = (-c^-1 x)^j g^-1.
  Vec sx = zero_vec(f, dim);
  sx[bidx(C.index_of(C.neg(c)), 1)] = -f.one();
  std::vector<Vec> sx_pow;
  sx_pow.push_back(A.unit);
  for (int j = 1; j < n; ++j) sx_pow.push_back(A.multiply(sx_pow.back(), sx));
  Mat anti(f, dim, dim);
  for (int gi = 0; gi < gsize; ++gi) {
    Vec ginv = A.basis_vec(bidx(C.index_of(C.neg(C.tuple_of(gi))), 0));
    for (int j = 0; j < n; ++j) {
      Vec col = A.multiply(sx_pow[j], ginv);
      for (int r = 0; r < dim; ++r) anti.at(r, bidx(gi, j)) = col[r];
    }
  }

  HopfData H{std::move(A), std::move(counit), std::move(comul), AlgMap{std::move(anti), true}};
  CheckReport hrep = check_hopf(H);
  if (!hrep.ok()) fail_logic("quantum line fails a Hopf axiom", hrep);

  Vec lambda = zero_vec(f, dim);
  lambda[bidx(C.index_of(C.power(c, 1 - n)), n - 1)] = f.one();
  if (!pairing_matrix(H.algebra, lambda).inverse().has_value())
    throw std::logic_error("quantum line integral is not a Frobenius form");
  return QuantumLine{std::move(H), std::move(lambda), C, n};
}

int quantum_line_nu_order(int m, int n) {
  if (n < 2 || m < n || m % n != 0)
    throw std::invalid_argument("order of cstar must be a multiple of n >= 2");
  return m / std::gcd(m / n, n - 1);
}

HopfData group_algebra(const AbelianGroupSpec& C, const Field& f) {
  const int dim = C.size();
  std::vector<std::string> names;
  names.reserve(dim);
  for (int i = 0; i < dim; ++i) names.push_back(C.name_of(i));
  std::vector<std::tuple<int, int, int, Scalar>> t;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      t.emplace_back(i, j, C.index_of(C.add(C.tuple_of(i), C.tuple_of(j))), f.one());
  FDAlgebra A = make_algebra(f, std::move(names), unit_vec(f, dim, 0), t);
  CheckReport rep = check_algebra(A);
  if (!rep.ok()) fail_logic("group algebra fails the algebra axioms", rep);

  Vec counit = zero_vec(f, dim);
  for (int i = 0; i < dim; ++i) counit[i] = f.one();
  Mat comul(f, dim * dim, dim);
  for (int i = 0; i < dim; ++i) comul.at(i * dim + i, i) = f.one();
  Mat anti(f, dim, dim);
  for (int i = 0; i < dim; ++i) anti.at(C.index_of(C.neg(C.tuple_of(i))), i) = f.one();
  HopfData H{std::move(A), std::move(counit), std::move(comul), AlgMap{std::move(anti), true}};
  CheckReport hrep = check_hopf(H);
  if (!hrep.ok()) fail_logic("group algebra fails a Hopf axiom", hrep);
  return H;
}

}  // namespace fdalg
