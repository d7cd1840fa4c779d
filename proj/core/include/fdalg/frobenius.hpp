#pragma once
// Frobenius forms and their pairings, Nakayama automorphisms, symmetric and
// quasi-Frobenius decisions, Picard-order probing of the dual class, and the
// pairing map psi: A* (x)_A A* -> A.

#include "fdalg/bimodule.hpp"

namespace fdalg {

// B(lambda)_{ij} = lambda(e_i e_j); linear in lambda.
Mat pairing_matrix(const FDAlgebra& A, const Vec& lambda);

struct FrobeniusWitness {
  Vec lambda;     // functional with nonsingular pairing
  Mat pairing;
  AlgMap nakayama;
};

struct FrobeniusSearch {
  std::optional<FrobeniusWitness> witness;
  PitEvidence evidence;
  bool frobenius() const { return witness.has_value(); }
};

FrobeniusSearch find_frobenius_form(const FDAlgebra& A, Rng& rng, int trials);

// Unique nu with nu(a)->lambda = lambda<-a; throws on a singular pairing.
AlgMap nakayama(const FDAlgebra& A, const Vec& lambda);

// {lambda : lambda(ab) = lambda(ba)} inside A*.
LinearSubspace trace_like_functionals(const FDAlgebra& A);

struct SymmetricWitness {
  Vec lambda;       // trace-like with nonsingular pairing
  Mat pairing;
  BimoduleMap iso;  // theta: regular(A) -> dual(regular(A)), b -> (b -> lambda)
};

struct SymmetricSearch {
  std::optional<SymmetricWitness> witness;
  PitEvidence evidence;
  int trace_like_dim = 0;
  bool symmetric() const { return witness.has_value(); }
};

SymmetricSearch is_symmetric(const FDAlgebra& A, Rng& rng, int trials);

struct QuasiFrobeniusReport {
  InvertibleBimoduleReport dual_module;  // report on dual(regular(A))
  bool quasi_frobenius() const { return dual_module.invertible(); }
};

QuasiFrobeniusReport is_quasi_frobenius(const FDAlgebra& A);

struct PicProbeResult {
  std::optional<int> order;            // least k <= max with (A*)^{(x) k} = A
  std::vector<int> power_dims;         // carrier dims actually probed
  std::vector<IsoResult> certificates; // per-power iso evidence
  std::optional<int> nakayama_out_order;  // cross-check when A is Frobenius
  std::string diagnostic;              // nonempty on dimension-drift abort
};

// Requires A quasi-Frobenius; any power of dim != dim A aborts with a diagnostic.
PicProbeResult pic_order_probe(const FDAlgebra& A, int max, Rng& rng, int trials);

// Whether f and g agree modulo inner automorphisms.
InnerResult out_class_equal(const FDAlgebra& A, const AlgMap& f, const AlgMap& g, Rng& rng,
                            int trials);

struct PairingMapResult {
  TensorBimodule square;  // A* (x)_A A*
  BimoduleMap iso;        // quotient -> regular(A)
  Mat full_map;           // on the full tensor square, e_i* (x) e_j* -> r_i nu(r_j) u^-1
  Vec u;                  // nu^2 = conj by u, with nu(u) = u
  Vec u_inv;
};

// Throws std::runtime_error when no nu-fixed inner witness for nu^2 is found.
PairingMapResult frobenius_pairing_map(const FDAlgebra& A, const FrobeniusWitness& w, Rng& rng,
                                       int trials);

}  // namespace fdalg
