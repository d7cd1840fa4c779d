#pragma once
// Shared witness engine: find a nonsingular member of a matrix pencil
// sum_i c_i G_i.  Negative answers carry either an exhaustive certificate
// (small prime fields) or a polynomial-identity-testing failure bound.

#include "fdalg/linalg.hpp"

namespace fdalg {

// Largest p^d enumerated exhaustively over F_p; beyond it we fall back to
// random evaluation like over Q.
inline constexpr long long kExhaustiveLimit = 1'000'000;

struct PitEvidence {
  bool exhaustive = false;   // true: "none" is an exact certificate
  int trials = 0;            // random points tested
  long long candidates = 0;  // tuples enumerated in the exhaustive case
  mpq_class failure_bound;   // P(missed witness) <= bound; 0 when exhaustive
  std::string describe() const;
};

struct PencilSearch {
  std::optional<Vec> coeffs;  // coefficients of a verified nonsingular member
  PitEvidence evidence;
  bool found() const { return coeffs.has_value(); }
};

// gens must be square matrices of one shape; the determinant of the pencil has
// degree <= that shape, which is the degree the failure bound uses.
PencilSearch find_nonsingular(const Field& f, const std::vector<Mat>& gens, Rng& rng, int trials);

}  // namespace fdalg
