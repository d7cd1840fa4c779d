#include "fdalg/pencil.hpp"

#include <stdexcept>

namespace fdalg {

namespace {

Mat combine(const Field& f, const std::vector<Mat>& gens, const Vec& coeffs) {
  Mat m(f, gens[0].rows(), gens[0].cols());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    m = m + gens[k].scaled(coeffs[k]);
  }
  return m;
}

}  // namespace

std::string PitEvidence::describe() const {
  if (exhaustive)
    return "exhaustive over " + std::to_string(candidates) + " candidates";
  return "sampled " + std::to_string(trials) +
         " points, failure probability <= " + failure_bound.get_str();
}

PencilSearch find_nonsingular(const Field& f, const std::vector<Mat>& gens, Rng& rng, int trials) {
  PencilSearch result;
  int d = static_cast<int>(gens.size());
  if (d == 0) {
    result.evidence.exhaustive = true;  // empty pencil: nothing to miss
    return result;
  }
  int n = gens[0].rows();
  for (const Mat& g : gens)
    if (g.rows() != n || g.cols() != n) throw std::invalid_argument("pencil members must be square of one size");
  if (n == 0) {  // det of the empty matrix is 1
    result.coeffs = zero_vec(f, 0);
    return result;
  }

  for (int t = 0; t < trials; ++t) {
    Vec coeffs;
    coeffs.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) coeffs.push_back(rng.sample(f));
    result.evidence.trials = t + 1;
    if (!combine(f, gens, coeffs).det().is_zero()) {
      result.coeffs = std::move(coeffs);
      return result;
    }
  }

  if (f.kind() == FieldKind::prime) {
    long long p = f.characteristic();
    long long total = 1;
    bool fits = true;
    for (int k = 0; k < d && fits; ++k) {
      total *= p;
      if (total > kExhaustiveLimit) fits = false;
    }
    if (fits) {
      // Odometer over all coefficient tuples; an exact yes/no certificate.
      Vec coeffs = zero_vec(f, d);
      std::vector<std::int64_t> digits(static_cast<std::size_t>(d), 0);
      for (long long count = 0; count < total; ++count) {
        result.evidence.candidates = count + 1;
        bool all_zero = true;
        for (std::int64_t x : digits)
          if (x != 0) { all_zero = false; break; }
        if (!all_zero) {
          for (int k = 0; k < d; ++k) coeffs[static_cast<std::size_t>(k)] = f.from_int(digits[static_cast<std::size_t>(k)]);
          if (!combine(f, gens, coeffs).det().is_zero()) {
            result.coeffs = coeffs;
            result.evidence.exhaustive = true;
            return result;
          }
        }
        for (int k = 0; k < d; ++k) {
          if (++digits[static_cast<std::size_t>(k)] < p) break;
          digits[static_cast<std::size_t>(k)] = 0;
        }
      }
      result.evidence.exhaustive = true;
      return result;
    }
  }

  // Schwartz-Zippel on det of the pencil: degree <= n, per-trial miss
  // probability <= n/|sample set|.
  mpq_class per_trial(static_cast<long>(n));
  per_trial /= mpq_class(rng.sample_set_size(f));
  if (per_trial > 1) per_trial = 1;
  mpq_class bound(1);
  for (int t = 0; t < trials; ++t) bound *= per_trial;
  result.evidence.failure_bound = bound;
  return result;
}

}  // namespace fdalg
