#pragma once
// Exact scalars over Q (GMP rationals) and prime fields F_p with p < 2^31.
// Every scalar carries its modulus (0 for Q); mixing moduli is a logic error.

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fdalg {

enum class FieldKind { rationals, prime };

class Scalar {
public:
  Scalar() : p_(0) {}  // rational zero

  static Scalar rational(mpq_class v);
  static Scalar residue(std::int64_t v, std::uint32_t p);  // reduced into [0,p)

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  std::uint32_t modulus() const { return p_; }
  const mpq_class& value() const { return q_; }
  std::int64_t res() const;       // residue value; prime scalars only
  std::string str() const;        // "-7", "3/2"; residues as decimal integers

  Scalar operator-() const;
  Scalar inv() const;             // throws std::domain_error on zero

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
  mpq_class q_;        // canonical fraction (p_ == 0) or integer residue in [0,p_)
  std::uint32_t p_;

  static std::uint32_t join(const Scalar& a, const Scalar& b);
};

// Field descriptor; the only sanctioned way to build scalars from raw input.
class Field {
public:
  Field() : kind_(FieldKind::rationals), p_(0) {}  // defaults to Q
  static Field rationals();
  static Field prime(std::uint32_t p);  // p prime, p < 2^31; throws otherwise

  FieldKind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }  // 0 for Q
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_fraction(std::int64_t num, std::int64_t den) const;
  // Accepts "-12" or "3/2"; over F_p the fraction is resolved by modular division.
  Scalar from_string(const std::string& s) const;
  std::string name() const;  // "Q", "F13"

private:
  Field(FieldKind k, std::uint32_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint32_t p_;
};

}  // namespace fdalg
