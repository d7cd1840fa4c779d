#pragma once
// Bimodules over an FDAlgebra: regular, dual, twisted; tensor products over
// the algebra; intertwiner spaces; isomorphism, projectivity, generator and
// invertibility certificates.  One-sided modules get a parallel small API.

#include "fdalg/algebra.hpp"

namespace fdalg {

enum class HomKind { left, right, bimodule };

struct Bimodule {
  FDAlgebra algebra;
  int dim = 0;
  std::vector<std::string> basis_names;
  std::vector<Mat> left_act;   // one m x m matrix per algebra basis element
  std::vector<Mat> right_act;  // (v*r) = right_act(r) v; anti-representation

  Vec basis_vec(int i) const { return unit_vec(algebra.field, dim, i); }
  Mat left_action_of(const Vec& r) const;   // sum r_i * left_act[i]
  Mat right_action_of(const Vec& r) const;
  Vec left_apply(const Vec& r, const Vec& v) const { return left_action_of(r).apply(v); }
  Vec right_apply(const Vec& v, const Vec& r) const { return right_action_of(r).apply(v); }
};

// Unital representation / anti-representation / commuting-action axioms,
// reported per violated basis pair.
CheckReport check_bimodule(const Bimodule& V);

struct BimoduleMap {
  Mat matrix;  // target coords = matrix * source coords
};

bool is_bimodule_map(const Bimodule& V, const Bimodule& W, const Mat& m, HomKind kind);

Bimodule regular(const FDAlgebra& A);
Bimodule dual(const Bimodule& V);
Bimodule twist(const Bimodule& V, const AlgMap& alpha, const AlgMap& beta);
bool same_actions(const Bimodule& V, const Bimodule& W);  // entrywise equality

struct TensorBimodule {
  Bimodule mod;           // the quotient bimodule
  QuotientSpace carrier;  // ambient dim(V)*dim(W), index (a,b) -> a*dim(W)+b
};

// V (x)_A W: full tensor square modulo middle-linearity {(v*r)(x)w - v(x)(r*w)}.
TensorBimodule tensor_over(const Bimodule& V, const Bimodule& W);

// Vectorized maps f: V -> W, ambient W.dim * V.dim, vec(M)[r*V.dim+c] = M(r,c).
LinearSubspace hom_space(const Bimodule& V, const Bimodule& W, HomKind kind);
Mat map_from_coords(const Bimodule& V, const Bimodule& W, const Vec& coords);
Vec coords_of_map(const Mat& m);

struct IsoResult {
  std::optional<BimoduleMap> iso;  // verified invertible intertwiner
  PitEvidence evidence;
  int hom_dim = 0;
  bool isomorphic() const { return iso.has_value(); }
};

IsoResult is_isomorphic(const Bimodule& V, const Bimodule& W, HomKind kind, Rng& rng, int trials);

// Section witness s: V -> A^m (m = dim V) for the free cover pi(e_i (x) r) = r*v_i;
// stacked matrix of m left-module maps V -> A, rows grouped by copy.
std::optional<Mat> is_projective_left(const Bimodule& V);

struct GeneratorResult {
  bool generator = false;
  int trace_ideal_dim = 0;  // dim of sum of images of all left-module maps V -> A
};

GeneratorResult is_generator_left(const Bimodule& V);

struct InvertibleBimoduleReport {
  std::optional<Mat> projective_section;
  GeneratorResult generator;
  bool omega_ring_iso = false;  // omega(r) = right action of r, an iso onto End(_A P)
  int end_dim = 0;              // dim of hom_space(P, P, left)
  bool invertible() const {
    return projective_section.has_value() && generator.generator && omega_ring_iso;
  }
};

InvertibleBimoduleReport is_invertible_bimodule(const Bimodule& P);

// One-sided modules (left or right), used for indecomposable summands.
struct OneSidedModule {
  FDAlgebra algebra;
  int dim = 0;
  bool left = true;
  std::vector<std::string> basis_names;
  std::vector<Mat> act;  // representation when left, anti-representation when right

  Mat action_of(const Vec& r) const;
};

CheckReport check_one_sided(const OneSidedModule& M);

// Module structure on the span of generator coordinates inside A itself;
// throws when the span is not closed under the one-sided multiplication.
OneSidedModule submodule_of_regular(const FDAlgebra& A, const std::vector<Vec>& gens, bool left);

OneSidedModule dual_one_sided(const OneSidedModule& M);  // switches side
OneSidedModule restrict_side(const Bimodule& V, bool left);

LinearSubspace hom_space_one_sided(const OneSidedModule& M, const OneSidedModule& N);
IsoResult is_isomorphic_one_sided(const OneSidedModule& M, const OneSidedModule& N, Rng& rng,
                                  int trials);

// (right module) (x)_A (left module): carrier only, no residual actions.
QuotientSpace tensor_over_one_sided(const OneSidedModule& U, const OneSidedModule& V);

}  // namespace fdalg
