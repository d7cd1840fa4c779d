#include "fdalg/field.hpp"

#include <cstdlib>
#include <stdexcept>

namespace fdalg {

namespace {

// x with a*x == 1 mod p, via extended Euclid.
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r0 = p, r1 = a % p, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("element has no modular inverse");
  return ((s0 % p) + p) % p;
}

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Scalar Scalar::rational(mpq_class v) {
  v.canonicalize();
  Scalar s;
  s.q_ = std::move(v);
  s.p_ = 0;
  return s;
}

Scalar Scalar::residue(std::int64_t v, std::uint32_t p) {
  Scalar s;
  std::int64_t m = static_cast<std::int64_t>(p);
  s.q_ = static_cast<long>(((v % m) + m) % m);
  s.p_ = p;
  return s;
}

std::int64_t Scalar::res() const {
  if (p_ == 0) throw std::logic_error("res() on a rational scalar");
  return mpz_get_si(q_.get_num().get_mpz_t());
}

std::string Scalar::str() const { return q_.get_str(); }

std::uint32_t Scalar::join(const Scalar& a, const Scalar& b) {
  if (a.p_ != b.p_) throw std::logic_error("scalar field mismatch");
  return a.p_;
}

Scalar Scalar::operator-() const {
  if (p_) return residue(-res(), p_);
  return rational(mpq_class(-q_));
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_) return residue(mod_inverse(res(), p_), p_);
  return rational(mpq_class(1) / q_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::join(a, b);
  if (p) return Scalar::residue(a.res() + b.res(), p);
  return Scalar::rational(mpq_class(a.q_ + b.q_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::join(a, b);
  if (p) return Scalar::residue(a.res() - b.res(), p);
  return Scalar::rational(mpq_class(a.q_ - b.q_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::join(a, b);
  if (p) return Scalar::residue(a.res() * b.res() % static_cast<std::int64_t>(p), p);
  return Scalar::rational(mpq_class(a.q_ * b.q_));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar& Scalar::operator+=(const Scalar& o) { *this = *this + o; return *this; }
Scalar& Scalar::operator-=(const Scalar& o) { *this = *this - o; return *this; }
Scalar& Scalar::operator*=(const Scalar& o) { *this = *this * o; return *this; }

bool operator==(const Scalar& a, const Scalar& b) {
  Scalar::join(a, b);
  return a.q_ == b.q_;
}

Field Field::rationals() { return Field(FieldKind::rationals, 0); }

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31)) throw std::invalid_argument("modulus must be < 2^31");
  if (!is_prime_u32(p)) throw std::invalid_argument("modulus is not prime");
  return Field(FieldKind::prime, p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (p_) return Scalar::residue(v, p_);
  return Scalar::rational(mpq_class(static_cast<long>(v)));
}

Scalar Field::from_fraction(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (p_) return from_int(num) / from_int(den);
  return Scalar::rational(mpq_class(static_cast<long>(num), static_cast<long>(den)));
}

Scalar Field::from_string(const std::string& s) const {
  if (s.empty()) throw std::invalid_argument("empty scalar string");
  auto parse_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("bad scalar string");
    std::size_t start = (t[0] == '-') ? 1 : 0;
    if (start == t.size()) throw std::invalid_argument("bad scalar string");
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad scalar string: " + t);
    return mpz_class(t);
  };
  std::size_t slash = s.find('/');
  mpz_class num = parse_int(slash == std::string::npos ? s : s.substr(0, slash));
  mpz_class den = slash == std::string::npos ? mpz_class(1) : parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in scalar string");
  if (p_) {
    mpz_class m(static_cast<unsigned long>(p_));
    mpz_class rn = ((num % m) + m) % m;
    mpz_class rd = ((den % m) + m) % m;
    return Scalar::residue(mpz_get_si(rn.get_mpz_t()), p_) /
           Scalar::residue(mpz_get_si(rd.get_mpz_t()), p_);
  }
  return Scalar::rational(mpq_class(num) / mpq_class(den));
}

std::string Field::name() const {
  if (kind_ == FieldKind::rationals) return "Q";
  return "F" + std::to_string(p_);
}

}  // namespace fdalg
