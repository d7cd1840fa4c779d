#pragma once
// Pairings A* (x)_A A* -> A, the associativity identities they may satisfy,
// semitrivial extensions A x A* graded by the order-two group, strong-grading
// tests, and the block-swap symmetry certificate of the extension.

#include "fdalg/frobenius.hpp"
#include "fdalg/zoo.hpp"

namespace fdalg {

// Bimodule map psi from the tensor square of the dual onto the algebra; the
// bracket [e_i*, e_j*] is read through the quotient projection, so closed
// monomial tables can be checked verbatim.
struct Pairing {
  FDAlgebra algebra;
  TensorBimodule square;  // dual(regular(A)) (x)_A dual(regular(A))
  BimoduleMap map;        // square.mod -> regular(A)

  Mat full() const;                                  // dim x dim^2, col (i,j) -> i*dim+j
  Vec bracket(int i, int j) const;                   // [e_i*, e_j*]
  Vec bracket_of(const Vec& f, const Vec& g) const;  // bilinear extension
};

// Wraps a matrix on the quotient carrier; throws std::invalid_argument unless
// it is a bimodule map to the regular bimodule.
Pairing make_pairing(const FDAlgebra& A, const Mat& on_quotient);

// Descends a full map on the dim^2 tensor ambient: must kill the
// middle-linearity relations and descend to a bimodule map.
Pairing make_pairing_from_full(const FDAlgebra& A, const Mat& full);

Pairing zero_pairing(const FDAlgebra& A);

// On an algebra with a symmetric form, theta: b -> (b -> lambda) identifies
// the algebra with its dual, and (f, g) -> z theta^-1(f) theta^-1(g) is a
// bimodule pairing for each central z; this builds it.  Throws
// std::invalid_argument when z is not central.
Pairing pairing_from_central(const FDAlgebra& A, const SymmetricWitness& w, const Vec& z);

// [r*, s*] acting on t* from the left equals r* acted on by [s*, t*] from the
// right, over all dual-basis triples; violations are listed by name.
CheckReport is_associative_pairing(const Pairing& psi);

// t*([r*, s*]) = r*([s*, t*]) over all dual-basis triples.
CheckReport pairing_identity_2(const Pairing& psi);

// Algebra graded by a finite abelian group: one subspace per group element,
// jointly a direct sum, with A_g A_h inside A_{gh} and the unit in degree e.
struct GradedAlgebra {
  FDAlgebra algebra;
  AbelianGroupSpec group;
  std::vector<LinearSubspace> components;
};

CheckReport check_graded(const GradedAlgebra& G);

// A x A* with (r, f)(s, g) = (rs + [f, g], r:g + f:s) where : are the dual
// actions; basis [algebra basis, then starred duals], graded by the order-two
// group with components A x 0 and 0 x A*.  Throws std::invalid_argument when
// the pairing is not associative (the product would fail associativity).
GradedAlgebra semitrivial_extension(const FDAlgebra& A, const Pairing& psi);

// span(A_g A_h) == A_{gh}, recorded per pair of group elements.
struct StrongGradingReport {
  std::vector<std::vector<bool>> pair_full;
  bool strongly_graded() const;
};

StrongGradingReport is_strongly_graded(const GradedAlgebra& G);

// For an extension with components A x 0 and 0 x A*: the block swap
// Phi(r, f) = (s, g) -> f(s) + g(r), with matrix [[0, I], [I, 0]], verified
// to be a bimodule isomorphism onto the dual of the extension.
BimoduleMap symmetrizing_form(const GradedAlgebra& ext);

// The degree-g component as an algebra in its own right; requires the unit to
// lie in it and the component to be closed under multiplication.
FDAlgebra component_subalgebra(const GradedAlgebra& G, int g);

// Surveys the intertwiner space hom(A* (x) A*, A): each basis member, random
// combinations, and central-unit rescalings of the first isomorphism found;
// every invertible member is tested against the associativity identity.
struct IsoFamilyReport {
  int hom_dim = 0;
  int tested = 0;
  int invertible = 0;
  int associative = 0;
  bool found_iso() const { return invertible > 0; }
  bool all_associative() const { return invertible > 0 && associative == invertible; }
};

IsoFamilyReport all_isos_associative(const FDAlgebra& A, Rng& rng, int trials);

}  // namespace fdalg
