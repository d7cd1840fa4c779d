#include "fdalg/linalg.hpp"

#include <cassert>
#include <stdexcept>

namespace fdalg {

Vec zero_vec(const Field& f, int n) { return Vec(static_cast<std::size_t>(n), f.zero()); }

Vec unit_vec(const Field& f, int n, int i) {
  Vec v = zero_vec(f, n);
  v[static_cast<std::size_t>(i)] = f.one();
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const Scalar& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("vector size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::logic_error("vector size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scale(const Scalar& c, const Vec& v) {
  Vec r(v);
  for (Scalar& x : r) x *= c;
  return r;
}

void add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  assert(acc.size() == v.size());
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i)
    if (!v[i].is_zero()) acc[i] += c * v[i];
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Rng::Rng(std::uint64_t seed, std::int64_t bound) : gen_(seed), bound_(bound) {
  if (bound < 1) throw std::invalid_argument("sample bound must be positive");
}

std::uint64_t Rng::next_u64() { return gen_(); }

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  assert(lo <= hi);
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next_u64());  // full 64-bit range
  // Rejection keeps the draw unbiased, which the PIT bound relies on.
  std::uint64_t limit = (UINT64_MAX / span) * span;
  std::uint64_t u;
  do {
    u = next_u64();
  } while (u >= limit);
  return lo + static_cast<std::int64_t>(u % span);
}

Scalar Rng::sample(const Field& f) {
  if (f.kind() == FieldKind::prime)
    return f.from_int(uniform(0, static_cast<std::int64_t>(f.characteristic()) - 1));
  return f.from_int(uniform(-bound_, bound_));
}

mpz_class Rng::sample_set_size(const Field& f) const {
  if (f.kind() == FieldKind::prime) return mpz_class(static_cast<unsigned long>(f.characteristic()));
  mpz_class b(static_cast<unsigned long>(bound_));
  return 2 * b + 1;
}

Mat::Mat(const Field& f, int rows, int cols)
    : f_(f), r_(rows), c_(cols),
      e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), f.zero()) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
}

Mat Mat::identity(const Field& f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Mat Mat::from_rows(const Field& f, int cols, const std::vector<Vec>& rows) {
  Mat m(f, static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) m.set_row(i, rows[static_cast<std::size_t>(i)]);
  return m;
}

Vec Mat::row(int r) const {
  Vec v;
  v.reserve(static_cast<std::size_t>(c_));
  for (int j = 0; j < c_; ++j) v.push_back(at(r, j));
  return v;
}

Vec Mat::col(int c) const {
  Vec v;
  v.reserve(static_cast<std::size_t>(r_));
  for (int i = 0; i < r_; ++i) v.push_back(at(i, c));
  return v;
}

void Mat::set_row(int r, const Vec& v) {
  if (static_cast<int>(v.size()) != c_) throw std::logic_error("row width mismatch");
  for (int j = 0; j < c_; ++j) at(r, j) = v[static_cast<std::size_t>(j)];
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::logic_error("matrix product shape mismatch");
  Mat out(f_, r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.c_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) out.at(i, j) += a * b;
      }
    }
  return out;
}

Mat Mat::operator+(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::logic_error("matrix sum shape mismatch");
  Mat out(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_) throw std::logic_error("matrix difference shape mismatch");
  Mat out(*this);
  for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

bool Mat::operator==(const Mat& o) const {
  if (r_ != o.r_ || c_ != o.c_ || f_ != o.f_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != c_) throw std::logic_error("matrix apply shape mismatch");
  Vec out = zero_vec(f_, r_);
  for (int j = 0; j < c_; ++j) {
    const Scalar& x = v[static_cast<std::size_t>(j)];
    if (x.is_zero()) continue;
    for (int i = 0; i < r_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) out[static_cast<std::size_t>(i)] += a * x;
    }
  }
  return out;
}

Mat Mat::transpose() const {
  Mat out(f_, c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Mat Mat::kronecker(const Mat& o) const {
  Mat out(f_, r_ * o.r_, c_ * o.c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      const Scalar& a = at(i, j);
      if (a.is_zero()) continue;
      for (int k = 0; k < o.r_; ++k)
        for (int l = 0; l < o.c_; ++l) {
          const Scalar& b = o.at(k, l);
          if (!b.is_zero()) out.at(i * o.r_ + k, j * o.c_ + l) = a * b;
        }
    }
  return out;
}

Mat Mat::scaled(const Scalar& c) const {
  Mat out(*this);
  for (Scalar& x : out.e_) x *= c;
  return out;
}

bool Mat::is_zero() const {
  for (const Scalar& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const {
  if (r_ != c_) return false;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) {
      if (i == j && !at(i, j).is_one()) return false;
      if (i != j && !at(i, j).is_zero()) return false;
    }
  return true;
}

Mat Mat::rref(std::vector<int>* pivots) const {
  Mat m(*this);
  if (pivots) pivots->clear();
  int lead = 0;
  for (int c = 0; c < c_ && lead < r_; ++c) {
    int p = -1;
    for (int r = lead; r < r_; ++r)
      if (!m.at(r, c).is_zero()) { p = r; break; }
    if (p < 0) continue;
    if (p != lead)
      for (int j = 0; j < c_; ++j) std::swap(m.at(p, j), m.at(lead, j));
    Scalar inv = m.at(lead, c).inv();
    for (int j = c; j < c_; ++j) m.at(lead, j) *= inv;
    for (int r = 0; r < r_; ++r) {
      if (r == lead) continue;
      Scalar factor = m.at(r, c);
      if (factor.is_zero()) continue;
      for (int j = c; j < c_; ++j) m.at(r, j) -= factor * m.at(lead, j);
    }
    if (pivots) pivots->push_back(c);
    ++lead;
  }
  return m;
}

int Mat::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

Scalar Mat::det() const {
  if (r_ != c_) throw std::logic_error("determinant of a non-square matrix");
  Mat m(*this);
  Scalar d = f_.one();
  for (int c = 0; c < c_; ++c) {
    int p = -1;
    for (int r = c; r < r_; ++r)
      if (!m.at(r, c).is_zero()) { p = r; break; }
    if (p < 0) return f_.zero();
    if (p != c) {
      for (int j = 0; j < c_; ++j) std::swap(m.at(p, j), m.at(c, j));
      d = -d;
    }
    d *= m.at(c, c);
    Scalar inv = m.at(c, c).inv();
    for (int r = c + 1; r < r_; ++r) {
      Scalar factor = m.at(r, c) * inv;
      if (factor.is_zero()) continue;
      for (int j = c; j < c_; ++j) m.at(r, j) -= factor * m.at(c, j);
    }
  }
  return d;
}

std::optional<Mat> Mat::inverse() const {
  if (r_ != c_) throw std::logic_error("inverse of a non-square matrix");
  Mat aug(f_, r_, 2 * c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = f_.one();
  }
  std::vector<int> piv;
  Mat red = aug.rref(&piv);
  if (static_cast<int>(piv.size()) != r_ || (r_ > 0 && piv.back() >= c_)) return std::nullopt;
  Mat inv(f_, r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv.at(i, j) = red.at(i, c_ + j);
  return inv;
}

std::optional<Vec> Mat::solve(const Vec& b) const {
  if (static_cast<int>(b.size()) != r_) throw std::logic_error("solve shape mismatch");
  Mat aug(f_, r_, c_ + 1);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> piv;
  Mat red = aug.rref(&piv);
  if (!piv.empty() && piv.back() == c_) return std::nullopt;  // pivot in the rhs column
  Vec x = zero_vec(f_, c_);
  for (std::size_t k = 0; k < piv.size(); ++k)
    x[static_cast<std::size_t>(piv[k])] = red.at(static_cast<int>(k), c_);
  return x;
}

Mat Mat::kernel() const {
  std::vector<int> piv;
  Mat red = rref(&piv);
  std::vector<bool> is_pivot(static_cast<std::size_t>(c_), false);
  for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  EchelonBasis eb(f_, c_);
  for (int c = 0; c < c_; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    Vec v = zero_vec(f_, c_);
    v[static_cast<std::size_t>(c)] = f_.one();
    for (std::size_t k = 0; k < piv.size(); ++k)
      v[static_cast<std::size_t>(piv[k])] = -red.at(static_cast<int>(k), c);
    eb.insert(std::move(v));
  }
  return eb.to_rref();
}

std::string Mat::str() const {
  std::string s;
  for (int i = 0; i < r_; ++i) {
    s += vec_str(row(i));
    s += "\n";
  }
  return s;
}

EchelonBasis::EchelonBasis(const Field& f, int width)
    : f_(f), width_(width), row_of_pivot_(static_cast<std::size_t>(width), -1) {}

bool EchelonBasis::insert(Vec v) {
  if (static_cast<int>(v.size()) != width_) throw std::logic_error("echelon width mismatch");
  // Reduce against every existing pivot, then the leading residue column
  // becomes a fresh pivot.
  for (int c = 0; c < width_; ++c) {
    if (v[static_cast<std::size_t>(c)].is_zero()) continue;
    int r = row_of_pivot_[static_cast<std::size_t>(c)];
    if (r < 0) continue;
    Scalar factor = v[static_cast<std::size_t>(c)];
    const Vec& rv = rows_[static_cast<std::size_t>(r)];
    for (int j = c; j < width_; ++j)
      if (!rv[static_cast<std::size_t>(j)].is_zero())
        v[static_cast<std::size_t>(j)] -= factor * rv[static_cast<std::size_t>(j)];
  }
  int lead = -1;
  for (int c = 0; c < width_; ++c)
    if (!v[static_cast<std::size_t>(c)].is_zero()) { lead = c; break; }
  if (lead < 0) return false;
  Scalar inv = v[static_cast<std::size_t>(lead)].inv();
  for (int j = lead; j < width_; ++j) v[static_cast<std::size_t>(j)] *= inv;
  // Back-substitute the new pivot column out of the stored rows.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar factor = rows_[k][static_cast<std::size_t>(lead)];
    if (factor.is_zero()) continue;
    for (int j = lead; j < width_; ++j)
      if (!v[static_cast<std::size_t>(j)].is_zero())
        rows_[k][static_cast<std::size_t>(j)] -= factor * v[static_cast<std::size_t>(j)];
  }
  row_of_pivot_[static_cast<std::size_t>(lead)] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

Vec EchelonBasis::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != width_) throw std::logic_error("echelon width mismatch");
  for (int c = 0; c < width_; ++c) {
    if (v[static_cast<std::size_t>(c)].is_zero()) continue;
    int r = row_of_pivot_[static_cast<std::size_t>(c)];
    if (r < 0) continue;
    Scalar factor = v[static_cast<std::size_t>(c)];
    const Vec& rv = rows_[static_cast<std::size_t>(r)];
    for (int j = c; j < width_; ++j)
      if (!rv[static_cast<std::size_t>(j)].is_zero())
        v[static_cast<std::size_t>(j)] -= factor * rv[static_cast<std::size_t>(j)];
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

Mat EchelonBasis::to_rref() const {
  std::vector<int> order;
  for (int c = 0; c < width_; ++c)
    if (row_of_pivot_[static_cast<std::size_t>(c)] >= 0)
      order.push_back(row_of_pivot_[static_cast<std::size_t>(c)]);
  Mat m(f_, static_cast<int>(order.size()), width_);
  for (std::size_t k = 0; k < order.size(); ++k)
    m.set_row(static_cast<int>(k), rows_[static_cast<std::size_t>(order[k])]);
  return m;
}

Mat EchelonBasis::kernel() const { return to_rref().kernel(); }

LinearSubspace LinearSubspace::span(const Field& f, int ambient, const std::vector<Vec>& gens) {
  EchelonBasis eb(f, ambient);
  for (const Vec& g : gens) eb.insert(g);
  return LinearSubspace(eb.to_rref());
}

LinearSubspace LinearSubspace::from_echelon(EchelonBasis& eb) {
  return LinearSubspace(eb.to_rref());
}

LinearSubspace LinearSubspace::zero(const Field& f, int ambient) {
  return LinearSubspace(Mat(f, 0, ambient));
}

LinearSubspace LinearSubspace::full(const Field& f, int ambient) {
  return LinearSubspace(Mat::identity(f, ambient));
}

bool LinearSubspace::contains(const Vec& v) const {
  // The basis is RREF, so subtracting the pivot components decides membership.
  Vec r(v);
  for (int k = 0; k < dim(); ++k) {
    int piv = -1;
    for (int c = 0; c < ambient(); ++c)
      if (!basis_.at(k, c).is_zero()) { piv = c; break; }
    Scalar factor = r[static_cast<std::size_t>(piv)];
    if (factor.is_zero()) continue;
    for (int c = piv; c < ambient(); ++c)
      r[static_cast<std::size_t>(c)] -= factor * basis_.at(k, c);
  }
  return is_zero_vec(r);
}

Vec LinearSubspace::from_coords(const Vec& coeffs) const {
  if (static_cast<int>(coeffs.size()) != dim()) throw std::logic_error("coordinate size mismatch");
  Vec v = zero_vec(field(), ambient());
  for (int k = 0; k < dim(); ++k) add_scaled(v, coeffs[static_cast<std::size_t>(k)], basis_.row(k));
  return v;
}

std::optional<Vec> LinearSubspace::coords_of(const Vec& v) const {
  Vec coords;
  coords.reserve(static_cast<std::size_t>(dim()));
  for (int k = 0; k < dim(); ++k) {
    int piv = -1;
    for (int c = 0; c < ambient(); ++c)
      if (!basis_.at(k, c).is_zero()) { piv = c; break; }
    coords.push_back(v[static_cast<std::size_t>(piv)]);
  }
  if (from_coords(coords) != v) return std::nullopt;
  return coords;
}

QuotientSpace::QuotientSpace(const Field& f, int ambient, LinearSubspace relations)
    : relations_(std::move(relations)),
      projection_(f, 0, 0),
      section_(f, 0, 0) {
  if (relations_.ambient() != ambient) throw std::logic_error("relation ambient mismatch");
  std::vector<int> pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient), false);
  for (int k = 0; k < relations_.dim(); ++k) {
    int piv = -1;
    for (int c = 0; c < ambient; ++c)
      if (!relations_.basis().at(k, c).is_zero()) { piv = c; break; }
    pivots.push_back(piv);
    is_pivot[static_cast<std::size_t>(piv)] = true;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < ambient; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  int q = static_cast<int>(free_cols.size());

  // v - sum_k v[p_k] * w_k is supported on the free columns; reading those
  // coordinates gives the projection, and the unit vectors on free columns
  // give a section.
  projection_ = Mat(f, q, ambient);
  section_ = Mat(f, ambient, q);
  for (int t = 0; t < q; ++t) {
    int fcol = free_cols[static_cast<std::size_t>(t)];
    projection_.at(t, fcol) = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k)
      projection_.at(t, pivots[k]) = -relations_.basis().at(static_cast<int>(k), fcol);
    section_.at(fcol, t) = f.one();
  }
  if (!(projection_ * section_).is_identity())
    throw std::logic_error("quotient construction broke projection*section = id");
  for (int k = 0; k < relations_.dim(); ++k)
    if (!is_zero_vec(projection_.apply(relations_.basis_row(k))))
      throw std::logic_error("quotient projection fails to annihilate relations");
}

Vec random_vector(const LinearSubspace& space, Rng& rng) {
  if (space.dim() == 0) throw std::invalid_argument("random_vector on a zero-dimensional space");
  while (true) {
    Vec coeffs;
    coeffs.reserve(static_cast<std::size_t>(space.dim()));
    for (int k = 0; k < space.dim(); ++k) coeffs.push_back(rng.sample(space.field()));
    Vec v = space.from_coords(coeffs);
    if (!is_zero_vec(v)) return v;
  }
}

}  // namespace fdalg
