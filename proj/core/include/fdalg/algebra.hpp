#pragma once
// Finite-dimensional associative algebras by structure constants; algebra
// maps (optionally anti), element inversion, centers, inner-automorphism
// certificates, and the invertible-element-in-subspace search.

#include "fdalg/pencil.hpp"

namespace fdalg {

struct FDAlgebra {
  Field field;
  int dim = 0;
  std::vector<std::string> basis_names;
  // mult[i*dim + j] = coordinates of e_i * e_j.
  std::vector<Vec> mult;
  Vec unit;

  const Vec& product_of_basis(int i, int j) const {
    return mult[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) + static_cast<std::size_t>(j)];
  }
  Vec basis_vec(int i) const { return unit_vec(field, dim, i); }
  Vec multiply(const Vec& a, const Vec& b) const;
  Mat left_mult(const Vec& a) const;   // L_a with L_a v = a*v
  Mat right_mult(const Vec& a) const;  // R_a with R_a v = v*a
  bool same_shape(const FDAlgebra& o) const;  // ignores basis names
};

FDAlgebra make_algebra(const Field& f, std::vector<std::string> names, Vec unit,
                       const std::vector<std::tuple<int, int, int, Scalar>>& triples);

struct CheckReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Lists every violated associativity triple and unit law.
CheckReport check_algebra(const FDAlgebra& A);

// Linear map between algebras in basis coordinates; anti flags reversal of
// products (antipodes).  Maps within one algebra pass the same algebra twice.
struct AlgMap {
  Mat matrix;
  bool anti = false;
  Vec apply(const Vec& v) const { return matrix.apply(v); }
};

AlgMap identity_map(const FDAlgebra& A);
bool is_algebra_map(const FDAlgebra& source, const FDAlgebra& target, const AlgMap& f);
bool is_automorphism(const FDAlgebra& A, const AlgMap& f);
AlgMap compose(const AlgMap& f, const AlgMap& g);        // f after g
std::optional<AlgMap> map_inverse(const AlgMap& f);
AlgMap map_power(const FDAlgebra& A, const AlgMap& f, int k);  // k >= 0

std::optional<Vec> invert_element(const FDAlgebra& A, const Vec& a);

// {z : z e_i = e_i z for all i}.
LinearSubspace center(const FDAlgebra& A);

struct InvertibleSearch {
  std::optional<Vec> element;   // verified invertible member of the subspace
  std::optional<Vec> inverse;
  PitEvidence evidence;
  bool found() const { return element.has_value(); }
};

InvertibleSearch find_invertible_in_subspace(const FDAlgebra& A, const LinearSubspace& S,
                                             Rng& rng, int trials);

struct InnerWitness {
  Vec u;
  Vec u_inv;
};

struct InnerResult {
  std::optional<InnerWitness> witness;  // alpha(r) = u^-1 r u, verified on all basis r
  PitEvidence evidence;
  int solution_dim = 0;  // dimension of the conjugation subspace that was searched
  bool inner() const { return witness.has_value(); }
};

InnerResult is_inner(const FDAlgebra& A, const AlgMap& alpha, Rng& rng, int trials);

struct OutOrderResult {
  std::optional<int> order;        // least k <= max with alpha^k inner
  std::vector<InnerResult> steps;  // evidence for k = 1, 2, ...
};

OutOrderResult out_order(const FDAlgebra& A, const AlgMap& alpha, int max, Rng& rng, int trials);

// (a (x) b)(a' (x) b') = aa' (x) bb'; basis index (i,j) -> i*dim(B)+j.
FDAlgebra tensor_algebra(const FDAlgebra& A, const FDAlgebra& B);

}  // namespace fdalg
