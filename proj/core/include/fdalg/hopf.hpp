#pragma once
// Minimal Hopf layer: counit, comultiplication and antipode as explicit
// linear data, integrals, the modular element, convolution orders, and the
// lcm identity for the Picard order of the dual class.

#include "fdalg/frobenius.hpp"

namespace fdalg {

struct HopfData {
  FDAlgebra algebra;
  Vec counit;   // algebra map H -> K
  Mat comul;    // n^2 x n, tensor index (a,b) -> a*n+b
  AlgMap antipode;  // anti = true
};

// Every Hopf axiom as an exact matrix identity, reported by name.
CheckReport check_hopf(const HopfData& H);

// Convolution (f*g)(h) = (f (x) g)(Delta h) of functionals.
Vec convolve_functionals(const HopfData& H, const Vec& f, const Vec& g);

// Algebra map H -> K: multiplicative on basis products and unital.
bool is_character(const FDAlgebra& A, const Vec& f);

// t with h t = eps(h) t; throws std::runtime_error unless the solution space
// is exactly one-dimensional.
Vec left_integral_in(const HopfData& H);

// G with t h = G(h) t, read off the rank-one system and verified to be a
// character; throws std::runtime_error when the system is inconsistent.
Vec modular_element(const HopfData& H, const Vec& t);

// Least k <= max with f^{*k} = counit.
std::optional<int> convolution_order(const HopfData& H, const Vec& f, int max);

struct TheoremAReport {
  int antipode_sq_out_order = 0;  // order of S^2 in Out(H)
  int modular_order = 0;          // convolution order of the modular element
  int pic_order = 0;              // tensor-power order of [H*]
  bool lcm_consistent = false;    // pic order == lcm of the other two
};

// Throws std::runtime_error when any sub-probe exceeds max.
TheoremAReport theorem_A_check(const HopfData& H, int max, Rng& rng, int trials);

// Whether nu computed from lambda equals S^2 composed with (id (x) G)Delta,
// with lambda also verified to be a left integral on the dual; throws
// std::invalid_argument when lambda is not a Frobenius form.
bool nakayama_radford_identity(const HopfData& H, const Vec& lambda);

}  // namespace fdalg
