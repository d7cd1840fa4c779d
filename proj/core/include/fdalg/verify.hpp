#pragma once
// The bundled end-to-end checks: structure and Picard order of the
// nine-dimensional Nakayama algebra R, its dual tensor-square pairing and the
// semitrivial extensions it builds, the quantum-plane and quantum-line
// families, and the Hopf-side order identities.  Each check returns a report
// tree of named sub-verdicts with exact certificates or stated failure
// bounds.  Shared by the command line tool and the acceptance runner.

#include <cstdint>
#include <string>
#include <vector>

#include "fdalg/report.hpp"

namespace fdalg {

struct VerifyOptions {
  std::uint64_t seed = 0;
  int trials = 8;
  int max_order = 8;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double ms = 0.0;        // measured
  double target_ms = 0.0; // advisory target, printed but never enforced
  Report report;          // sub-verdicts, witnesses, and bounds
};

int criterion_count();

// id in [1, criterion_count()]; throws std::out_of_range otherwise.  Never
// throws for in-range ids: unexpected exceptions fail the criterion instead.
CriterionResult run_criterion(int id, const VerifyOptions& opt);

std::vector<CriterionResult> run_all(const VerifyOptions& opt);

}  // namespace fdalg
