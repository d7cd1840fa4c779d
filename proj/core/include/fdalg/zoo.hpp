#pragma once
// Named example algebras and maps: the 9-dimensional Nakayama algebra R with
// its Morita-ring presentation, automorphism family and closed-form bimodule
// pairing on R* (x)_R R*; quantum-plane quotients and Nakayama-Nesbitt
// algebras; quantum-line Hopf algebras and abelian group algebras.

#include "fdalg/hopf.hpp"

namespace fdalg {

// Finite abelian group as a product of cyclic factors; elements are integer
// tuples a with 0 <= a[i] < orders[i].
struct AbelianGroupSpec {
  std::vector<int> orders;  // each >= 1

  int size() const;
  int index_of(const std::vector<int>& a) const;  // mixed radix, first factor slowest
  std::vector<int> tuple_of(int idx) const;
  std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> neg(const std::vector<int>& a) const;
  std::vector<int> identity() const;
  std::vector<int> power(const std::vector<int>& a, int k) const;  // any integer k
  int element_order(const std::vector<int>& a) const;
  std::string name_of(int idx) const;  // "1", "g^2", "g1 g2^3", ...
};

// Character of an AbelianGroupSpec: one field scalar per cyclic factor with
// zeta_i^{d_i} = 1 (validate_character throws std::invalid_argument on
// mismatched length, wrong field, or a value that is not such a root).
struct CharacterSpec {
  std::vector<Scalar> values;

  Scalar value_at(const AbelianGroupSpec& C, const std::vector<int>& a) const;
  bool power_is_trivial(const AbelianGroupSpec& C, int k) const;  // all zeta_i^k = 1
  int order(const AbelianGroupSpec& C) const;  // in the character group; divides exponent
};

void validate_character(const AbelianGroupSpec& C, const Field& f, const CharacterSpec& cstar);

// ---- the 9-dimensional Nakayama algebra R -------------------------------

// Basis order [E, X1, X2, Y1, Y2, F11, F12, F21, F22]; unit E + F11 + F22.
// Nonzero basis products: E E = E, F_ij F_jr = F_ir, E X_i = X_i,
// X_i F_ir = X_r, F_ij Y_j = Y_i, Y_i E = Y_i.
FDAlgebra nakayama_R(const Field& f);

// Basis indices into nakayama_R (i, j in {1, 2}).
inline constexpr int kRE = 0;
inline int kRX(int i) { return i; }
inline int kRY(int i) { return 2 + i; }
inline int kRF(int i, int j) { return 2 + 2 * i + j; }

// The same algebra presented as the Morita ring [[K, X], [Y, M2(K)]] with
// both connecting maps zero: block multiplication
// [[a, x], [y, f]] [[a', x'], [y', f']] = [[a a', a x' + x f'], [a' y + f y', f f']]
// over basis "matrix units" in the order above.  iso_to_nakayama is a
// verified algebra isomorphism onto nakayama_R.
struct MoritaPresentation {
  FDAlgebra algebra;
  AlgMap iso_to_nakayama;
};

MoritaPresentation morita_R(const Field& f);

struct MoritaAutParams {
  Vec x1;         // row 2-vector
  Vec y1;         // column 2-vector
  Scalar lambda;  // nonzero
  Mat P;          // invertible 2x2
};

// phi_{x1,y1,lambda,P}: [[a, x], [y, f]] |->
// [[a, a x1 + lambda x P^-1 - x1 P f P^-1], [a y1 + P y - P f P^-1 y1, P f P^-1]],
// a verified automorphism; throws std::invalid_argument on lambda = 0 or
// singular P.
AlgMap morita_aut(const FDAlgebra& R, const MoritaAutParams& p);

// Parameters of phi_outer composed after phi_inner:
// (x1' + lambda' x1 P'^-1, y1' + P' y1, lambda' lambda, P' P).
MoritaAutParams morita_aut_compose(const MoritaAutParams& outer, const MoritaAutParams& inner);

// For lambda = 1, phi is conjugation r |-> u^-1 r u by
// u = [[1, x1], [-P^-1 y1, P^-1]]; throws std::invalid_argument otherwise.
Vec morita_inner_witness(const FDAlgebra& R, const MoritaAutParams& p);

// The pairing R* (x)_R R* -> R given by the closed monomial table
// (Y_i* (x) X_i* -> E, X_i* (x) Y_j* -> F_ij, E* (x) Y_i* -> X_i,
//  Y_i* (x) F_ji* -> X_j, X_i* (x) E* -> Y_i, F_ij* (x) X_i* -> Y_j,
//  all other basis monomials -> 0), verified to kill the middle-linearity
// relations, descend to the 9-dimensional quotient, and give a bimodule iso.
struct VarphiPairing {
  FDAlgebra R;
  TensorBimodule square;  // dual(regular(R)) (x)_R dual(regular(R))
  Mat full_map;           // 9 x 81, column (i, j) -> i*9 + j for e_i* (x) e_j*
  BimoduleMap iso;        // descended map square.mod -> regular(R)
};

VarphiPairing varphi_pairing(const Field& f);

// ---- four-dimensional local algebras ------------------------------------

// K_q[X, Y]/(X^2, Y^2): basis [1, x, y, xy], x^2 = y^2 = 0, y x = q x y;
// throws std::invalid_argument on q = 0.
FDAlgebra quantum_plane_quotient(const Field& f, const Scalar& q);

// Basis [1, x, y, z]: x^2 = y^2 = 0, x y = u z, y x = v z; iso is the
// verified isomorphism onto quantum_plane_quotient(u^-1 v) sending
// z -> u^-1 x y.  Throws std::invalid_argument when u or v is zero.
struct NakayamaNesbitt {
  FDAlgebra algebra;
  FDAlgebra quantum_plane;  // quantum_plane_quotient(u^-1 v)
  AlgMap iso;               // algebra -> quantum_plane
};

NakayamaNesbitt nakayama_nesbitt(const Field& f, const Scalar& u, const Scalar& v);

// ---- quantum-line Hopf algebras -----------------------------------------

enum class QuantumLineKind {
  H1,  // x^n = c^n - 1; requires c^n != 1 in C and cstar^n trivial
  H2,  // x^n = 0
};

// Basis {g x^j : g in C, 0 <= j < n}, index(g, j) = index_of(g)*n + j.
// Relations x g = cstar(g) g x and the x^n rule of the kind; Delta(g) = g (x) g,
// Delta(x) = c (x) x + x (x) 1, S(g) = g^-1, S(x) = -c^-1 x.  lambda is the
// functional dual to c^{1-n} x^{n-1}, a left integral on the algebra and a
// verified Frobenius form.  Preconditions (std::invalid_argument): cstar(c)
// has multiplicative order exactly n, plus the H1 conditions above.
struct QuantumLine {
  HopfData hopf;
  Vec lambda;
  AbelianGroupSpec group;
  int n = 0;
};

QuantumLine quantum_line(QuantumLineKind kind, const AbelianGroupSpec& C, int n,
                         const std::vector<int>& c, const CharacterSpec& cstar, const Field& f);

// Order of the Nakayama automorphism attached to the quantum-line integral
// form: m / gcd(m/n, n-1), where m is the order of cstar (a multiple of n).
int quantum_line_nu_order(int m, int n);

// Group algebra KC: Delta(g) = g (x) g, S(g) = g^-1; basis in tuple order.
HopfData group_algebra(const AbelianGroupSpec& C, const Field& f);

}  // namespace fdalg
