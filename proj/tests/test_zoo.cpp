#include "fdalg/zoo.hpp"

#include "doctest.h"
#include "fdalg/frobenius.hpp"
#include "helpers.hpp"

using namespace fdalg;
using namespace fdalg::testing;

namespace {

MoritaAutParams params_of(const Field& f, std::initializer_list<const char*> x1,
                          std::initializer_list<const char*> y1, const char* lambda,
                          std::initializer_list<std::initializer_list<const char*>> P) {
  return MoritaAutParams{vec_of(f, x1), vec_of(f, y1), f.from_string(lambda), mat_of(f, P)};
}

}  // namespace

TEST_CASE("abelian group arithmetic in mixed radix") {
  AbelianGroupSpec c4{{4}};
  CHECK(c4.size() == 4);
  CHECK(c4.index_of({5}) == 1);
  CHECK(c4.index_of({-1}) == 3);
  CHECK(c4.tuple_of(3) == std::vector<int>{3});
  CHECK(c4.add({3}, {2}) == std::vector<int>{1});
  CHECK(c4.neg({1}) == std::vector<int>{3});
  CHECK(c4.power({1}, -1) == std::vector<int>{3});
  CHECK(c4.power({1}, 6) == std::vector<int>{2});
  CHECK(c4.element_order({0}) == 1);
  CHECK(c4.element_order({1}) == 4);
  CHECK(c4.element_order({2}) == 2);
  CHECK(c4.name_of(0) == "1");
  CHECK(c4.name_of(1) == "g");
  CHECK(c4.name_of(2) == "g^2");

  AbelianGroupSpec c23{{2, 3}};
  CHECK(c23.size() == 6);
  CHECK(c23.index_of({1, 2}) == 5);
  CHECK(c23.name_of(5) == "g1 g2^2");
  CHECK(c23.name_of(3) == "g1");
  CHECK(c23.name_of(1) == "g2");
  CHECK(c23.element_order({1, 1}) == 6);
  CHECK(c23.identity() == std::vector<int>({0, 0}));
}

TEST_CASE("characters evaluate multiplicatively and are validated") {
  Field f5 = Field::prime(5);
  AbelianGroupSpec c4{{4}};
  CharacterSpec chi{{f5.from_int(2)}};
  validate_character(c4, f5, chi);
  CHECK(chi.value_at(c4, {3}) == f5.from_int(3));  // 2^3 = 8 = 3 mod 5
  CHECK(chi.value_at(c4, {0}) == f5.one());
  CHECK(chi.power_is_trivial(c4, 4));
  CHECK_FALSE(chi.power_is_trivial(c4, 2));
  CHECK(chi.order(c4) == 4);

  CharacterSpec chi2{{f5.from_int(4)}};
  CHECK(chi2.order(c4) == 2);

  AbelianGroupSpec c2{{2}};
  // 2 is not a square root of unity mod 5.
  CHECK_THROWS_AS(validate_character(c2, f5, CharacterSpec{{f5.from_int(2)}}),
                  std::invalid_argument);
  // Wrong number of values.
  CHECK_THROWS_AS(validate_character(c4, f5, CharacterSpec{{f5.one(), f5.one()}}),
                  std::invalid_argument);
  // Zero value.
  CHECK_THROWS_AS(validate_character(c4, f5, CharacterSpec{{f5.zero()}}), std::invalid_argument);
  // Value from the wrong field.
  CHECK_THROWS_AS(validate_character(c4, f5, CharacterSpec{{Field::rationals().one()}}),
                  std::invalid_argument);
}

TEST_CASE("nine-dimensional self-injective algebra: published products and derived zeros") {
  Field f = Field::rationals();
  FDAlgebra R = nakayama_R(f);
  CHECK(R.dim == 9);
  CHECK(R.basis_names ==
        std::vector<std::string>({"E", "X1", "X2", "Y1", "Y2", "F11", "F12", "F21", "F22"}));
  CHECK(R.unit == vec_of(f, {"1", "0", "0", "0", "0", "1", "0", "0", "1"}));
  CHECK(check_algebra(R).ok());

  auto prod = [&](int i, int j) { return R.product_of_basis(i, j); };
  // Printed multiplication rules.
  CHECK(prod(kRF(1, 2), kRF(2, 1)) == R.basis_vec(kRF(1, 1)));
  CHECK(prod(kRF(1, 1), kRY(1)) == R.basis_vec(kRY(1)));
  CHECK(prod(kRE, kRX(1)) == R.basis_vec(kRX(1)));
  CHECK(prod(kRX(1), kRF(1, 2)) == R.basis_vec(kRX(2)));
  CHECK(prod(kRY(1), kRE) == R.basis_vec(kRY(1)));
  CHECK(prod(kRF(2, 2), kRF(2, 2)) == R.basis_vec(kRF(2, 2)));
  // Products that vanish because no rule matches.
  CHECK(is_zero_vec(prod(kRX(1), kRX(2))));
  CHECK(is_zero_vec(prod(kRY(1), kRX(1))));
  CHECK(is_zero_vec(prod(kRX(1), kRY(1))));
  CHECK(is_zero_vec(prod(kRF(1, 1), kRX(1))));
  CHECK(is_zero_vec(prod(kRX(1), kRE)));
  CHECK(is_zero_vec(prod(kRE, kRY(1))));
  CHECK(is_zero_vec(prod(kRX(1), kRF(2, 1))));
  CHECK(is_zero_vec(prod(kRE, kRF(1, 1))));
  CHECK(is_zero_vec(prod(kRF(1, 1), kRE)));
  // The unit really is E + F11 + F22.
  for (int i = 0; i < 9; ++i) {
    CHECK(R.multiply(R.unit, R.basis_vec(i)) == R.basis_vec(i));
    CHECK(R.multiply(R.basis_vec(i), R.unit) == R.basis_vec(i));
  }
}

TEST_CASE("generalized-matrix presentation multiplies blockwise to the same algebra") {
  Field f = Field::rationals();
  FDAlgebra R = nakayama_R(f);
  MoritaPresentation mp = morita_R(f);
  CHECK(mp.algebra.dim == 9);
  CHECK(mp.iso_to_nakayama.matrix.is_identity());
  CHECK_FALSE(mp.iso_to_nakayama.anti);
  CHECK(is_algebra_map(mp.algebra, R, mp.iso_to_nakayama));
  // Both connecting maps are zero: X Y = Y X = 0.
  CHECK(is_zero_vec(mp.algebra.product_of_basis(kRX(1), kRY(1))));
  CHECK(is_zero_vec(mp.algebra.product_of_basis(kRY(1), kRX(1))));
  CHECK(is_zero_vec(mp.algebra.product_of_basis(kRX(2), kRY(2))));
}

TEST_CASE("automorphism family: identity element and composition law") {
  Field f = Field::rationals();
  FDAlgebra R = nakayama_R(f);

  MoritaAutParams id_p = params_of(f, {"0", "0"}, {"0", "0"}, "1", {{"1", "0"}, {"0", "1"}});
  CHECK(morita_aut(R, id_p).matrix.is_identity());

  MoritaAutParams p = params_of(f, {"1", "2"}, {"3", "-1"}, "5", {{"1", "2"}, {"3", "7"}});
  MoritaAutParams q = params_of(f, {"0", "1"}, {"1", "1"}, "2", {{"2", "0"}, {"1", "1"}});
  AlgMap phi_p = morita_aut(R, p);
  AlgMap phi_q = morita_aut(R, q);
  CHECK(is_automorphism(R, phi_p));
  // Composite parameters reproduce the composite matrix, both ways round.
  CHECK(compose(phi_p, phi_q).matrix == morita_aut(R, morita_aut_compose(p, q)).matrix);
  CHECK(compose(phi_q, phi_p).matrix == morita_aut(R, morita_aut_compose(q, p)).matrix);

  Field f5 = Field::prime(5);
  FDAlgebra R5 = nakayama_R(f5);
  MoritaAutParams a = params_of(f5, {"2", "0"}, {"0", "4"}, "3", {{"1", "2"}, {"3", "2"}});
  MoritaAutParams b = params_of(f5, {"1", "1"}, {"2", "3"}, "2", {{"0", "1"}, {"4", "0"}});
  CHECK(compose(morita_aut(R5, a), morita_aut(R5, b)).matrix ==
        morita_aut(R5, morita_aut_compose(a, b)).matrix);

  // Parameter validation.
  CHECK_THROWS_AS(morita_aut(R, params_of(f, {"0", "0"}, {"0", "0"}, "0", {{"1", "0"}, {"0", "1"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(morita_aut(R, params_of(f, {"0", "0"}, {"0", "0"}, "1", {{"1", "2"}, {"2", "4"}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(morita_aut(R, MoritaAutParams{vec_of(f, {"1"}), vec_of(f, {"0", "0"}), f.one(),
                                                Mat::identity(f, 2)}),
                  std::invalid_argument);
}

TEST_CASE("automorphism family: inner exactly when the scaling parameter is one") {
  Field f = Field::rationals();
  FDAlgebra R = nakayama_R(f);
  Rng rng(7);

  // lambda = 1: the closed-form unit conjugates exactly like the automorphism.
  MoritaAutParams p = params_of(f, {"1", "-2"}, {"3", "4"}, "1", {{"1", "1"}, {"0", "1"}});
  AlgMap phi = morita_aut(R, p);
  Vec u = morita_inner_witness(R, p);
  auto u_inv = invert_element(R, u);
  REQUIRE(u_inv.has_value());
  for (int i = 0; i < 9; ++i)
    CHECK(R.multiply(*u_inv, R.multiply(R.basis_vec(i), u)) == phi.apply(R.basis_vec(i)));
  InnerResult found = is_inner(R, phi, rng, 8);
  CHECK(found.inner());

  // lambda != 1 rejects the witness request.
  MoritaAutParams p2 = params_of(f, {"0", "0"}, {"0", "0"}, "2", {{"1", "0"}, {"0", "1"}});
  CHECK_THROWS_AS(morita_inner_witness(R, p2), std::invalid_argument);

  // Over F5 the non-inner verdict is exhaustive, and the outer order of the
  // pure scaling automorphism is the multiplicative order of lambda.
  Field f5 = Field::prime(5);
  FDAlgebra R5 = nakayama_R(f5);
  MoritaAutParams s = params_of(f5, {"0", "0"}, {"0", "0"}, "2", {{"1", "0"}, {"0", "1"}});
  AlgMap sigma = morita_aut(R5, s);
  InnerResult no = is_inner(R5, sigma, rng, 8);
  CHECK_FALSE(no.inner());
  CHECK(no.evidence.exhaustive);
  OutOrderResult ord = out_order(R5, sigma, 6, rng, 8);
  REQUIRE(ord.order.has_value());
  CHECK(*ord.order == 4);  // 2 has order 4 mod 5
  // Intermediate negatives are exact; the last step carries a verified witness.
  for (std::size_t k = 0; k + 1 < ord.steps.size(); ++k)
    CHECK(ord.steps[k].evidence.exhaustive);
  CHECK(ord.steps.back().inner());

  // Over Q, lambda = 2 never becomes inner: all powers stay outer.
  OutOrderResult never = out_order(R, morita_aut(R, p2), 5, rng, 8);
  CHECK_FALSE(never.order.has_value());
  for (const InnerResult& step : never.steps) CHECK_FALSE(step.inner());
}

TEST_CASE("closed-form pairing on the tensor square of the dual") {
  Field f = Field::rationals();
  VarphiPairing vp = varphi_pairing(f);
  const FDAlgebra& R = vp.R;
  CHECK(vp.square.mod.dim == 9);
  CHECK(vp.full_map.rows() == 9);
  CHECK(vp.full_map.cols() == 81);

  auto col = [&](int i, int j) { return vp.full_map.col(i * 9 + j); };
  // Printed monomial values.
  CHECK(col(kRY(1), kRX(1)) == R.basis_vec(kRE));
  CHECK(col(kRY(2), kRX(2)) == R.basis_vec(kRE));
  CHECK(col(kRX(1), kRY(2)) == R.basis_vec(kRF(1, 2)));
  CHECK(col(kRE, kRY(1)) == R.basis_vec(kRX(1)));
  CHECK(col(kRY(1), kRF(2, 1)) == R.basis_vec(kRX(2)));
  CHECK(col(kRX(1), kRE) == R.basis_vec(kRY(1)));
  CHECK(col(kRF(1, 2), kRX(1)) == R.basis_vec(kRY(2)));
  // A few monomials that vanish.
  CHECK(is_zero_vec(col(kRE, kRX(1))));
  CHECK(is_zero_vec(col(kRX(1), kRX(1))));
  CHECK(is_zero_vec(col(kRE, kRE)));
  CHECK(is_zero_vec(col(kRF(1, 1), kRF(1, 1))));
  // Exactly 18 of the 81 monomials survive.
  int nonzero = 0;
  for (int c = 0; c < 81; ++c)
    if (!is_zero_vec(vp.full_map.col(c))) ++nonzero;
  CHECK(nonzero == 18);

  // The descended map is a verified bimodule isomorphism onto the algebra.
  CHECK(is_bimodule_map(vp.square.mod, regular(R), vp.iso.matrix, HomKind::bimodule));
  CHECK(vp.iso.matrix.inverse().has_value());

  // Classes in the quotient behave like the algebra elements they map to.
  const QuotientSpace& qs = vp.square.carrier;
  Vec e_cls = qs.project(unit_vec(f, 81, kRY(1) * 9 + kRX(1)));
  CHECK(vp.iso.matrix.apply(e_cls) == R.basis_vec(kRE));
  CHECK(qs.project(unit_vec(f, 81, kRY(2) * 9 + kRX(2))) == e_cls);
  CHECK(vp.square.mod.left_apply(R.basis_vec(kRE), e_cls) == e_cls);
  Vec y1_cls = qs.project(unit_vec(f, 81, kRX(1) * 9 + kRE));
  CHECK(vp.square.mod.left_apply(R.basis_vec(kRY(1)), e_cls) == y1_cls);
  CHECK(qs.project(unit_vec(f, 81, kRF(1, 1) * 9 + kRX(1))) == y1_cls);
  Vec x1_cls = qs.project(unit_vec(f, 81, kRE * 9 + kRY(1)));
  CHECK(vp.square.mod.right_apply(e_cls, R.basis_vec(kRX(1))) == x1_cls);
}

TEST_CASE("indecomposable summands, their duals, and one-dimensional tensor pairings") {
  Field f = Field::rationals();
  FDAlgebra R = nakayama_R(f);
  Rng rng(11);

  OneSidedModule V1 = submodule_of_regular(R, {R.basis_vec(kRF(1, 1))}, true);
  OneSidedModule V2 = submodule_of_regular(R, {R.basis_vec(kRE)}, true);
  OneSidedModule U1 = submodule_of_regular(R, {R.basis_vec(kRE)}, false);
  OneSidedModule U2 = submodule_of_regular(R, {R.basis_vec(kRF(1, 1))}, false);
  CHECK(V1.basis_names == std::vector<std::string>({"X1", "F11", "F21"}));
  CHECK(V2.basis_names == std::vector<std::string>({"E", "Y1", "Y2"}));
  CHECK(U1.basis_names == std::vector<std::string>({"E", "X1", "X2"}));
  CHECK(U2.basis_names == std::vector<std::string>({"Y1", "F11", "F12"}));
  CHECK(check_one_sided(V1).ok());
  CHECK(check_one_sided(U2).ok());

  // In the bases above, v |-> v is an isomorphism onto the dual of the
  // opposite-side summand: the actions agree entry by entry.
  OneSidedModule U1d = dual_one_sided(U1);
  OneSidedModule U2d = dual_one_sided(U2);
  CHECK(U1d.left);
  for (int r = 0; r < 9; ++r) {
    CHECK(V1.act[r] == U1d.act[r]);
    CHECK(V2.act[r] == U2d.act[r]);
  }
  CHECK(is_isomorphic_one_sided(V1, U1d, rng, 8).isomorphic());
  CHECK(is_isomorphic_one_sided(V2, U2d, rng, 8).isomorphic());

  // The two projective indecomposables are not isomorphic: every map between
  // them is singular, and here the intertwiner space is one-dimensional, so
  // that is an exact certificate.
  LinearSubspace h12 = hom_space_one_sided(V1, V2);
  REQUIRE(h12.dim() == 1);
  Mat m12(f, 3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m12.at(r, c) = h12.basis_row(0)[r * 3 + c];
  CHECK_FALSE(m12.inverse().has_value());
  CHECK_FALSE(is_isomorphic_one_sided(V1, V2, rng, 8).isomorphic());

  // All four pairings of a right summand with a left summand are lines.
  CHECK(tensor_over_one_sided(U1, V1).dim() == 1);
  CHECK(tensor_over_one_sided(U1, V2).dim() == 1);
  CHECK(tensor_over_one_sided(U2, V1).dim() == 1);
  CHECK(tensor_over_one_sided(U2, V2).dim() == 1);
}

TEST_CASE("trace-like functionals and the dual bimodule of the nine-dimensional algebra") {
  Field f = Field::rationals();
  FDAlgebra R = nakayama_R(f);
  // Hand count: the span of commutators has dimension 7, so two functionals
  // survive: E* and F11* + F22*.
  LinearSubspace tl = trace_like_functionals(R);
  CHECK(tl.dim() == 2);
  CHECK(tl.contains(unit_vec(f, 9, kRE)));
  Vec diag(9, f.zero());
  diag[kRF(1, 1)] = f.one();
  diag[kRF(2, 2)] = f.one();
  CHECK(tl.contains(diag));

  // Intertwiners between the dual bimodule and the algebra form a plane, but
  // none of them is invertible; over F5 that verdict is exhaustive.
  CHECK(hom_space(dual(regular(R)), regular(R), HomKind::bimodule).dim() == 2);
  Field f5 = Field::prime(5);
  FDAlgebra R5 = nakayama_R(f5);
  Rng rng(13);
  IsoResult res = is_isomorphic(dual(regular(R5)), regular(R5), HomKind::bimodule, rng, 8);
  CHECK_FALSE(res.isomorphic());
  CHECK(res.hom_dim == 2);
  CHECK(res.evidence.exhaustive);
  CHECK(res.evidence.candidates == 25);
}

TEST_CASE("deformed polynomial quotient in two nilpotent variables") {
  Field f13 = Field::prime(13);
  Scalar q = f13.from_int(3);
  FDAlgebra A = quantum_plane_quotient(f13, q);
  CHECK(A.dim == 4);
  CHECK(A.basis_names == std::vector<std::string>({"1", "x", "y", "xy"}));
  CHECK(A.product_of_basis(2, 1) == scale(q, A.basis_vec(3)));  // y x = q xy
  CHECK(A.product_of_basis(1, 2) == A.basis_vec(3));
  CHECK(is_zero_vec(A.product_of_basis(1, 1)));
  CHECK(is_zero_vec(A.product_of_basis(1, 3)));
  CHECK(is_zero_vec(A.product_of_basis(3, 3)));
  CHECK_THROWS_AS(quantum_plane_quotient(f13, f13.zero()), std::invalid_argument);

  // The functional dual to the top monomial is a Frobenius form whose
  // Nakayama map rescales x and y by q^-1 and q.
  AlgMap nu = nakayama(A, unit_vec(f13, 4, 3));
  Mat expect = Mat::identity(f13, 4);
  expect.at(1, 1) = q.inv();
  expect.at(2, 2) = q;
  CHECK(nu.matrix == expect);
  Rng rng(17);
  OutOrderResult ord = out_order(A, nu, 6, rng, 8);
  REQUIRE(ord.order.has_value());
  CHECK(*ord.order == 3);  // 3 has order 3 mod 13
}

TEST_CASE("two-parameter local algebras reduce to the deformed quotient") {
  Field f = Field::rationals();
  Rng rng(19);

  NakayamaNesbitt sym = nakayama_nesbitt(f, f.one(), f.one());
  CHECK(is_symmetric(sym.algebra, rng, 8).symmetric());

  NakayamaNesbitt a22 = nakayama_nesbitt(f, f.from_int(2), f.from_int(2));
  CHECK(is_symmetric(a22.algebra, rng, 8).symmetric());

  NakayamaNesbitt skew = nakayama_nesbitt(f, f.one(), -f.one());
  CHECK(skew.quantum_plane.same_shape(quantum_plane_quotient(f, -f.one())));
  CHECK(skew.iso.matrix.at(3, 3) == f.one());  // u = 1, so z maps straight to xy
  CHECK(is_algebra_map(skew.algebra, skew.quantum_plane, skew.iso));

  NakayamaNesbitt half = nakayama_nesbitt(f, f.from_int(2), f.one());
  CHECK(half.iso.matrix.at(3, 3) == f.from_fraction(1, 2));

  CHECK_THROWS_AS(nakayama_nesbitt(f, f.zero(), f.one()), std::invalid_argument);
  CHECK_THROWS_AS(nakayama_nesbitt(f, f.one(), f.zero()), std::invalid_argument);

  // u != v is never symmetric; over F5 the search is exhaustive.
  Field f5 = Field::prime(5);
  NakayamaNesbitt n23 = nakayama_nesbitt(f5, f5.from_int(2), f5.from_int(3));
  SymmetricSearch s = is_symmetric(n23.algebra, rng, 8);
  CHECK_FALSE(s.symmetric());
  CHECK(s.evidence.exhaustive);
}

TEST_CASE("quantum line, nilpotent kind: the four-dimensional case over Q") {
  Field f = Field::rationals();
  AbelianGroupSpec c2{{2}};
  QuantumLine ql = quantum_line(QuantumLineKind::H2, c2, 2, {1}, CharacterSpec{{-f.one()}}, f);
  const FDAlgebra& A = ql.hopf.algebra;
  CHECK(A.dim == 4);
  CHECK(A.basis_names == std::vector<std::string>({"1", "x", "g", "g x"}));
  // x g = -g x.
  CHECK(A.product_of_basis(1, 2) == scale(-f.one(), A.basis_vec(3)));
  CHECK(A.product_of_basis(2, 1) == A.basis_vec(3));
  CHECK(is_zero_vec(A.product_of_basis(1, 1)));  // x^2 = 0
  CHECK(check_hopf(ql.hopf).ok());

  Vec t = left_integral_in(ql.hopf);
  CHECK(t == vec_of(f, {"0", "1", "0", "1"}));  // x + g x

  CHECK(ql.lambda == unit_vec(f, 4, 3));  // dual to c^{1-n} x^{n-1} = g x
  CHECK(nakayama_radford_identity(ql.hopf, ql.lambda));

  AlgMap nu = nakayama(A, ql.lambda);
  Mat expect = Mat::identity(f, 4);
  expect.at(1, 1) = -f.one();
  expect.at(2, 2) = -f.one();
  CHECK(nu.matrix == expect);
  Rng rng(23);
  OutOrderResult ord = out_order(A, nu, 4, rng, 8);
  CHECK(ord.order == 2);
  CHECK(quantum_line_nu_order(2, 2) == 2);

  TheoremAReport rep = theorem_A_check(ql.hopf, 4, rng, 8);
  CHECK(rep.antipode_sq_out_order == 1);
  CHECK(rep.modular_order == 2);
  CHECK(rep.pic_order == 2);
  CHECK(rep.lcm_consistent);
}

TEST_CASE("quantum line, grouplike kind: dimension eight over Q") {
  Field f = Field::rationals();
  AbelianGroupSpec c4{{4}};
  CharacterSpec chi{{-f.one()}};
  QuantumLine ql = quantum_line(QuantumLineKind::H1, c4, 2, {1}, chi, f);
  const FDAlgebra& A = ql.hopf.algebra;
  CHECK(A.dim == 8);
  CHECK(chi.order(c4) == 2);
  auto bidx = [&](int g, int j) { return g * 2 + j; };
  // x^2 = c^2 - 1 = g^2 - 1.
  Vec xsq = A.basis_vec(bidx(2, 0));
  add_scaled(xsq, -f.one(), A.basis_vec(bidx(0, 0)));
  CHECK(A.product_of_basis(bidx(0, 1), bidx(0, 1)) == xsq);
  CHECK(A.basis_names[bidx(3, 1)] == "g^3 x");
  CHECK(ql.lambda == unit_vec(f, 8, bidx(3, 1)));  // dual to g^-1 x

  AlgMap nu = nakayama(A, ql.lambda);
  // nu(g) = chi(g)^{-1} g = -g, nu(x) = chi(c) x = -x.
  CHECK(nu.apply(A.basis_vec(bidx(1, 0))) == scale(-f.one(), A.basis_vec(bidx(1, 0))));
  CHECK(nu.apply(A.basis_vec(bidx(0, 1))) == scale(-f.one(), A.basis_vec(bidx(0, 1))));
  Rng rng(29);
  OutOrderResult ord = out_order(A, nu, 4, rng, 8);
  CHECK(ord.order == 2);
  CHECK(quantum_line_nu_order(2, 2) == 2);
}

TEST_CASE("quantum line over F5: character of order four forces an order-four class") {
  Field f5 = Field::prime(5);
  AbelianGroupSpec c4{{4}};
  CharacterSpec chi{{f5.from_int(2)}};
  // c = a^2 so chi(c) = 4 has order exactly 2 = n, while chi itself has order 4.
  QuantumLine ql = quantum_line(QuantumLineKind::H2, c4, 2, {2}, chi, f5);
  CHECK(ql.hopf.algebra.dim == 8);
  CHECK(chi.order(c4) == 4);

  AlgMap nu = nakayama(ql.hopf.algebra, ql.lambda);
  auto bidx = [&](int g, int j) { return g * 2 + j; };
  // nu(a) = chi(a)^{-1} a = 3 a.
  CHECK(nu.apply(ql.hopf.algebra.basis_vec(bidx(1, 0))) ==
        scale(f5.from_int(3), ql.hopf.algebra.basis_vec(bidx(1, 0))));
  Rng rng(37);
  OutOrderResult ord = out_order(ql.hopf.algebra, nu, 6, rng, 8);
  REQUIRE(ord.order.has_value());
  CHECK(*ord.order == 4);
  CHECK(quantum_line_nu_order(4, 2) == 4);
  for (std::size_t k = 0; k + 1 < ord.steps.size(); ++k)
    CHECK(ord.steps[k].evidence.exhaustive);
  CHECK(ord.steps.back().inner());
}

TEST_CASE("quantum line constructor rejects inconsistent data") {
  Field f = Field::rationals();
  Field f5 = Field::prime(5);
  AbelianGroupSpec c2{{2}};
  AbelianGroupSpec c4{{4}};

  // chi(c) has order 4, not n = 2.
  CHECK_THROWS_AS(quantum_line(QuantumLineKind::H2, c4, 2, {1}, CharacterSpec{{f5.from_int(2)}}, f5),
                  std::invalid_argument);
  // Grouplike kind needs c^n != 1.
  CHECK_THROWS_AS(quantum_line(QuantumLineKind::H1, c2, 2, {1}, CharacterSpec{{-f.one()}}, f),
                  std::invalid_argument);
  // Grouplike kind needs chi^n trivial; the second factor breaks it.
  AbelianGroupSpec c44{{4, 4}};
  CHECK_THROWS_AS(quantum_line(QuantumLineKind::H1, c44, 2, {1, 0},
                               CharacterSpec{{f5.from_int(4), f5.from_int(2)}}, f5),
                  std::invalid_argument);
  // F2 has no scalar of multiplicative order 2.
  Field f2 = Field::prime(2);
  CHECK_THROWS_AS(quantum_line(QuantumLineKind::H2, c2, 2, {1}, CharacterSpec{{f2.one()}}, f2),
                  std::invalid_argument);
  CHECK_THROWS_AS(quantum_line(QuantumLineKind::H2, c2, 1, {1}, CharacterSpec{{-f.one()}}, f),
                  std::invalid_argument);
}

TEST_CASE("quantum line of dimension nine over F7") {
  Field f7 = Field::prime(7);
  AbelianGroupSpec c3{{3}};
  CharacterSpec chi{{f7.from_int(2)}};  // 2^3 = 1 mod 7
  QuantumLine ql = quantum_line(QuantumLineKind::H2, c3, 3, {1}, chi, f7);
  const FDAlgebra& A = ql.hopf.algebra;
  CHECK(A.dim == 9);
  CHECK(chi.order(c3) == 3);
  auto bidx = [&](int g, int j) { return g * 3 + j; };
  // x g = chi(g) g x = 2 g x.
  CHECK(A.product_of_basis(bidx(0, 1), bidx(1, 0)) ==
        scale(f7.from_int(2), A.basis_vec(bidx(1, 1))));
  CHECK(is_zero_vec(A.product_of_basis(bidx(0, 2), bidx(0, 1))));  // x^3 = 0

  Rng rng(41);
  OutOrderResult ord = out_order(A, nakayama(A, ql.lambda), 5, rng, 8);
  CHECK(ord.order == 3);
  CHECK(quantum_line_nu_order(3, 3) == 3);
}

TEST_CASE("closed formula for the outer order of the integral form") {
  CHECK(quantum_line_nu_order(2, 2) == 2);
  CHECK(quantum_line_nu_order(4, 2) == 4);
  CHECK(quantum_line_nu_order(3, 3) == 3);
  CHECK(quantum_line_nu_order(6, 3) == 3);
  CHECK(quantum_line_nu_order(12, 4) == 4);
  CHECK(quantum_line_nu_order(8, 2) == 8);
  CHECK_THROWS_AS(quantum_line_nu_order(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(quantum_line_nu_order(6, 4), std::invalid_argument);
  CHECK_THROWS_AS(quantum_line_nu_order(2, 4), std::invalid_argument);
}

TEST_CASE("abelian group algebras as Hopf algebras") {
  Field f = Field::rationals();
  HopfData h = group_algebra(AbelianGroupSpec{{2}}, f);
  CHECK(h.algebra.dim == 2);
  CHECK(check_hopf(h).ok());
  // Same structure constants as the hand-built fixture.
  CHECK(is_algebra_map(h.algebra, group_algebra_c2(f), AlgMap{Mat::identity(f, 2), false}));
  CHECK(left_integral_in(h) == vec_of(f, {"1", "1"}));
  CHECK(modular_element(h, left_integral_in(h)) == h.counit);
  Rng rng(43);
  CHECK(is_symmetric(h.algebra, rng, 8).symmetric());
  TheoremAReport rep = theorem_A_check(h, 4, rng, 8);
  CHECK(rep.antipode_sq_out_order == 1);
  CHECK(rep.modular_order == 1);
  CHECK(rep.pic_order == 1);
  CHECK(rep.lcm_consistent);

  HopfData h6 = group_algebra(AbelianGroupSpec{{2, 3}}, f);
  CHECK(h6.algebra.dim == 6);
  CHECK(h6.algebra.basis_names[5] == "g1 g2^2");
  // g1 g2 has order 6: its powers cycle through all six basis elements.
  AbelianGroupSpec c23{{2, 3}};
  CHECK(h6.algebra.multiply(h6.algebra.basis_vec(4), h6.algebra.basis_vec(4)) ==
        h6.algebra.basis_vec(c23.index_of({0, 2})));
}
