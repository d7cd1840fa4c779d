#pragma once
// Dense exact linear algebra: matrices, elimination, canonical subspaces,
// quotients with projection/section, and seeded sampling for witness searches.

#include "fdalg/field.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace fdalg {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, int n);
Vec unit_vec(const Field& f, int n, int i);
bool is_zero_vec(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& v);
void add_scaled(Vec& acc, const Scalar& c, const Vec& v);  // acc += c*v
std::string vec_str(const Vec& v);

// Deterministic sampling.  Rational coordinates are uniform on {-bound..bound}
// (sample set of size 2*bound+1); prime-field coordinates are uniform residues.
class Rng {
public:
  // 2^59 makes the rational sample set larger than 2^60, the size the PIT
  // failure bounds are quoted against.
  static constexpr std::int64_t default_bound = std::int64_t{1} << 59;

  explicit Rng(std::uint64_t seed, std::int64_t bound = default_bound);
  std::int64_t bound() const { return bound_; }
  std::uint64_t next_u64();
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive, unbiased
  Scalar sample(const Field& f);
  mpz_class sample_set_size(const Field& f) const;

private:
  std::mt19937_64 gen_;
  std::int64_t bound_;
};

class Mat {
public:
  Mat(const Field& f, int rows, int cols);  // zero-filled
  static Mat identity(const Field& f, int n);
  static Mat from_rows(const Field& f, int cols, const std::vector<Vec>& rows);

  const Field& field() const { return f_; }
  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * c_ + c]; }
  const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * c_ + c]; }
  Vec row(int r) const;
  Vec col(int c) const;
  void set_row(int r, const Vec& v);

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  Vec apply(const Vec& v) const;  // M v
  Mat transpose() const;
  Mat kronecker(const Mat& o) const;  // index (i,j) -> i*o.rows + j
  Mat scaled(const Scalar& c) const;
  bool is_zero() const;
  bool is_identity() const;

  Mat rref(std::vector<int>* pivots = nullptr) const;
  int rank() const;
  Scalar det() const;                       // square only
  std::optional<Mat> inverse() const;       // square only
  std::optional<Vec> solve(const Vec& b) const;  // one particular solution
  Mat kernel() const;  // rows form the canonical RREF basis of the null space

  std::string str() const;

private:
  Field f_;
  int r_, c_;
  std::vector<Scalar> e_;
};

// Growing reduced row-echelon span.  Rows stay pivot-monic and fully reduced,
// so the row set is always the canonical RREF basis of the span so far.
class EchelonBasis {
public:
  EchelonBasis(const Field& f, int width);
  bool insert(Vec v);            // true iff v enlarged the span
  Vec reduce(Vec v) const;       // residual of v modulo the span
  bool contains(const Vec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int width() const { return width_; }
  Mat to_rref() const;           // rows sorted by pivot column
  Mat kernel() const;            // null space of the span-as-row-matrix

private:
  Field f_;
  int width_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;        // pivots_[k] = pivot column of rows_[k]
  std::vector<int> row_of_pivot_;  // column -> row index, -1 when free
};

// Row span in canonical RREF; equality of subspaces is equality of bases.
class LinearSubspace {
public:
  static LinearSubspace span(const Field& f, int ambient, const std::vector<Vec>& gens);
  static LinearSubspace from_echelon(EchelonBasis& eb);
  static LinearSubspace zero(const Field& f, int ambient);
  static LinearSubspace full(const Field& f, int ambient);

  int dim() const { return basis_.rows(); }
  int ambient() const { return basis_.cols(); }
  const Field& field() const { return basis_.field(); }
  const Mat& basis() const { return basis_; }
  Vec basis_row(int k) const { return basis_.row(k); }
  bool contains(const Vec& v) const;
  bool operator==(const LinearSubspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const LinearSubspace& o) const { return !(*this == o); }
  Vec from_coords(const Vec& coeffs) const;           // coeffs over the basis rows
  std::optional<Vec> coords_of(const Vec& v) const;   // none when v is outside

private:
  explicit LinearSubspace(Mat basis) : basis_(std::move(basis)) {}
  Mat basis_;  // RREF, one row per basis vector
};

// Ambient/relations with explicit projection (ambient -> quotient coordinates)
// and section (quotient -> ambient); projection*section = identity and the
// kernel of the projection is exactly the relations subspace.
class QuotientSpace {
public:
  QuotientSpace(const Field& f, int ambient, LinearSubspace relations);

  int dim() const { return projection_.rows(); }
  int ambient() const { return projection_.cols(); }
  const LinearSubspace& relations() const { return relations_; }
  const Mat& projection() const { return projection_; }
  const Mat& section() const { return section_; }
  Vec project(const Vec& v) const { return projection_.apply(v); }
  Vec lift(const Vec& q) const { return section_.apply(q); }

private:
  LinearSubspace relations_;
  Mat projection_;
  Mat section_;
};

// Random member of the subspace, coefficients sampled in the echelon basis;
// resampled until nonzero.  Throws on a zero-dimensional space.
Vec random_vector(const LinearSubspace& space, Rng& rng);

}  // namespace fdalg
