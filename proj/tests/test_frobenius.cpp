#include "fdalg/frobenius.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace fdalg;
using namespace fdalg::testing;

namespace {

// K_q[X,Y]/(X^2,Y^2), basis [1,x,y,xy]; local fixture.
FDAlgebra quantum_plane(const Field& f, const Scalar& q) {
  Scalar one = f.one();
  return make_algebra(f, {"1", "x", "y", "xy"}, vec_of(f, {"1", "0", "0", "0"}),
                      {{0, 0, 0, one}, {0, 1, 1, one}, {0, 2, 2, one}, {0, 3, 3, one},
                       {1, 0, 1, one}, {2, 0, 2, one}, {3, 0, 3, one},
                       {1, 2, 3, one}, {2, 1, 3, q}});
}

}  // namespace

TEST_CASE("pairing matrices: linearity and hand values on the quantum plane") {
  Field f = Field::rationals();
  FDAlgebra rq = quantum_plane(f, f.from_int(-1));
  Vec lambda = unit_vec(f, 4, 3);  // (xy)*
  Mat b = pairing_matrix(rq, lambda);
  // B_{ij} = lambda(e_i e_j): 1*xy, x*y, y*x = -xy, xy*1 contribute.
  Mat expect(f, 4, 4);
  expect.at(0, 3) = f.one();
  expect.at(1, 2) = f.one();
  expect.at(2, 1) = -f.one();
  expect.at(3, 0) = f.one();
  CHECK(b == expect);
  // Linear in lambda.
  Vec two_lambda = scale(f.from_int(2), lambda);
  CHECK(pairing_matrix(rq, two_lambda) == b + b);
}

TEST_CASE("the triangular algebra has identically singular pairings") {
  // Every functional pairing on upper_triangular_2 is singular, so the search
  // reports an exhaustive negative over a small prime field and a probability
  // bound over the rationals.
  Field f5 = Field::prime(5);
  Rng rng5(1);
  FrobeniusSearch s5 = find_frobenius_form(upper_triangular_2(f5), rng5, 8);
  CHECK_FALSE(s5.frobenius());
  CHECK(s5.evidence.exhaustive);
  CHECK(s5.evidence.candidates == 125);

  Field fq = Field::rationals();
  Rng rngq(1);
  FrobeniusSearch sq = find_frobenius_form(upper_triangular_2(fq), rngq, 8);
  CHECK_FALSE(sq.frobenius());
  CHECK_FALSE(sq.evidence.exhaustive);
  CHECK(sq.evidence.trials == 8);
  CHECK(sq.evidence.failure_bound > 0);
}

TEST_CASE("matrix and group algebras are Frobenius with verified witnesses") {
  Field f = Field::rationals();
  Rng rng(2);
  for (const FDAlgebra& a : {matrix_algebra_2(f), group_algebra_c2(f)}) {
    FrobeniusSearch s = find_frobenius_form(a, rng, 8);
    REQUIRE(s.frobenius());
    CHECK(s.witness->pairing.inverse().has_value());
    CHECK(is_automorphism(a, s.witness->nakayama));
    // Both algebras are symmetric, so any Nakayama automorphism is inner.
    Rng rng2(3);
    CHECK(is_inner(a, s.witness->nakayama, rng2, 8).inner());
  }
}

TEST_CASE("quantum plane: published form, dual actions, and Nakayama formula") {
  Field f = Field::rationals();
  Scalar q = f.from_int(2);
  FDAlgebra rq = quantum_plane(f, q);
  Vec lambda = unit_vec(f, 4, 3);  // (xy)*
  Bimodule d = dual(regular(rq));

  // x -> (xy)* = q y*  and  y -> (xy)* = x*.
  CHECK(d.left_apply(rq.basis_vec(1), d.basis_vec(3)) == scale(q, unit_vec(f, 4, 2)));
  CHECK(d.left_apply(rq.basis_vec(2), d.basis_vec(3)) == unit_vec(f, 4, 1));
  // (xy)* <- x = y*  and  (xy)* <- y = q x*.
  CHECK(d.right_apply(d.basis_vec(3), rq.basis_vec(1)) == unit_vec(f, 4, 2));
  CHECK(d.right_apply(d.basis_vec(3), rq.basis_vec(2)) == scale(q, unit_vec(f, 4, 1)));

  // nu = diag(1, q^-1, q, 1) on [1, x, y, xy].
  AlgMap nu = nakayama(rq, lambda);
  Mat expect(f, 4, 4);
  expect.at(0, 0) = f.one();
  expect.at(1, 1) = q.inv();
  expect.at(2, 2) = q;
  expect.at(3, 3) = f.one();
  CHECK(nu.matrix == expect);

  CHECK_THROWS_AS(nakayama(rq, unit_vec(f, 4, 0)), std::invalid_argument);  // 1* is singular
}

TEST_CASE("outer order of the quantum-plane Nakayama map follows the order of q") {
  // q = 3 in F13 has multiplicative order 3.
  Field f = Field::prime(13);
  FDAlgebra rq = quantum_plane(f, f.from_int(3));
  AlgMap nu = nakayama(rq, unit_vec(f, 4, 3));
  Rng rng(7);
  OutOrderResult oo = out_order(rq, nu, 8, rng, 8);
  REQUIRE(oo.order.has_value());
  CHECK(*oo.order == 3);
  for (std::size_t k = 0; k + 1 < oo.steps.size(); ++k) {
    CHECK_FALSE(oo.steps[k].inner());
    CHECK(oo.steps[k].evidence.exhaustive);
  }
  CHECK(oo.steps.back().inner());

  // q = 2 over Q has infinite order; no power becomes inner.
  Field fq = Field::rationals();
  FDAlgebra rq2 = quantum_plane(fq, fq.from_int(2));
  AlgMap nu2 = nakayama(rq2, unit_vec(fq, 4, 3));
  Rng rng2(8);
  OutOrderResult oo2 = out_order(rq2, nu2, 4, rng2, 8);
  CHECK_FALSE(oo2.order.has_value());
  CHECK(oo2.steps.size() == 4);
}

TEST_CASE("trace-like functionals: dimensions across the fixtures") {
  Field f = Field::rationals();
  CHECK(trace_like_functionals(matrix_algebra_2(f)).dim() == 1);
  CHECK(trace_like_functionals(group_algebra_c2(f)).dim() == 2);
  CHECK(trace_like_functionals(upper_triangular_2(f)).dim() == 2);
  CHECK(trace_like_functionals(quantum_plane(f, f.from_int(3))).dim() == 3);
  CHECK(trace_like_functionals(quantum_plane(f, f.one())).dim() == 4);
}

TEST_CASE("symmetry: witnesses for symmetric fixtures, exact refusals otherwise") {
  Field f = Field::rationals();
  Rng rng(4);

  SymmetricSearch m2 = is_symmetric(matrix_algebra_2(f), rng, 8);
  REQUIRE(m2.symmetric());
  CHECK(m2.trace_like_dim == 1);
  // The only trace-like line is spanned by the trace, so the witness kills E12, E21.
  CHECK(m2.witness->lambda[1].is_zero());
  CHECK(m2.witness->lambda[2].is_zero());
  CHECK(m2.witness->lambda[0] == m2.witness->lambda[3]);
  CHECK(m2.witness->iso.matrix == m2.witness->pairing);
  CHECK(is_bimodule_map(regular(matrix_algebra_2(f)), dual(regular(matrix_algebra_2(f))),
                        m2.witness->iso.matrix, HomKind::bimodule));

  CHECK(is_symmetric(group_algebra_c2(f), rng, 8).symmetric());
  CHECK(is_symmetric(quantum_plane(f, f.one()), rng, 8).symmetric());

  Field f13 = Field::prime(13);
  SymmetricSearch rqs = is_symmetric(quantum_plane(f13, f13.from_int(3)), rng, 8);
  CHECK_FALSE(rqs.symmetric());
  CHECK(rqs.evidence.exhaustive);
  CHECK(rqs.trace_like_dim == 3);

  Field f5 = Field::prime(5);
  SymmetricSearch t2s = is_symmetric(upper_triangular_2(f5), rng, 8);
  CHECK_FALSE(t2s.symmetric());
  CHECK(t2s.evidence.exhaustive);
}

TEST_CASE("quasi-Frobenius reports") {
  Field f = Field::rationals();
  CHECK(is_quasi_frobenius(matrix_algebra_2(f)).quasi_frobenius());
  CHECK(is_quasi_frobenius(group_algebra_c2(f)).quasi_frobenius());
  CHECK(is_quasi_frobenius(quantum_plane(f, f.from_int(2))).quasi_frobenius());

  QuasiFrobeniusReport t2 = is_quasi_frobenius(upper_triangular_2(f));
  CHECK_FALSE(t2.quasi_frobenius());
  CHECK_FALSE(t2.dual_module.projective_section.has_value());
}

TEST_CASE("Picard-order probe: symmetric algebras close at one, quantum planes at ord(q)") {
  Rng rng(6);
  Field f = Field::rationals();
  PicProbeResult m2 = pic_order_probe(matrix_algebra_2(f), 4, rng, 8);
  REQUIRE(m2.order.has_value());
  CHECK(*m2.order == 1);
  CHECK(m2.nakayama_out_order == 1);

  Field f13 = Field::prime(13);
  PicProbeResult rq = pic_order_probe(quantum_plane(f13, f13.from_int(3)), 8, rng, 8);
  REQUIRE(rq.order.has_value());
  CHECK(*rq.order == 3);
  CHECK(rq.power_dims == std::vector<int>{4, 4, 4});
  CHECK(rq.nakayama_out_order == 3);
  CHECK(rq.certificates.back().isomorphic());
  CHECK(rq.diagnostic.empty());

  // Over Q with q = 2 no power closes up.
  PicProbeResult open = pic_order_probe(quantum_plane(f, f.from_int(2)), 3, rng, 8);
  CHECK_FALSE(open.order.has_value());
  CHECK(open.diagnostic.empty());
  CHECK(open.power_dims.size() == 3);
  CHECK_FALSE(open.nakayama_out_order.has_value());
}

TEST_CASE("Nakayama automorphisms of different Frobenius forms agree in Out") {
  Field f13 = Field::prime(13);
  FDAlgebra rq = quantum_plane(f13, f13.from_int(3));
  Rng rng_a(21), rng_b(99), rng_c(5);
  FrobeniusSearch a = find_frobenius_form(rq, rng_a, 8);
  FrobeniusSearch b = find_frobenius_form(rq, rng_b, 8);
  REQUIRE(a.frobenius());
  REQUIRE(b.frobenius());
  CHECK(out_class_equal(rq, a.witness->nakayama, b.witness->nakayama, rng_c, 8).inner());

  // nu and nu^2 differ by nu itself, which is outer here.
  AlgMap nu = a.witness->nakayama;
  CHECK_FALSE(out_class_equal(rq, nu, compose(nu, compose(nu, nu)), rng_c, 8).inner());
}

TEST_CASE("pairing map: nu-fixed witness and the closed product formula") {
  Field f = Field::rationals();
  FDAlgebra rq = quantum_plane(f, -f.one());
  Vec lambda = unit_vec(f, 4, 3);
  FrobeniusWitness w{lambda, pairing_matrix(rq, lambda), nakayama(rq, lambda)};
  Rng rng(12);
  PairingMapResult res = frobenius_pairing_map(rq, w, rng, 8);

  // u is invertible, nu-fixed, and conjugation by it realizes nu^2.
  CHECK(rq.multiply(res.u, res.u_inv) == rq.unit);
  CHECK(w.nakayama.apply(res.u) == res.u);
  AlgMap nu2 = compose(w.nakayama, w.nakayama);
  for (int i = 0; i < 4; ++i)
    CHECK(rq.multiply(res.u_inv, rq.multiply(rq.basis_vec(i), res.u)) == nu2.apply(rq.basis_vec(i)));

  // Independent recomputation of the full map: e_i* (x) e_j* -> r_i nu(r_j) u^-1
  // with r_i the i-th column of the inverse pairing.
  Mat b_inv = *w.pairing.inverse();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Vec expect = rq.multiply(rq.multiply(b_inv.col(i), w.nakayama.apply(b_inv.col(j))), res.u_inv);
      CHECK(res.full_map.col(i * 4 + j) == expect);
    }

  // The descended map is a bimodule isomorphism onto the regular bimodule.
  CHECK(res.square.mod.dim == 4);
  CHECK(is_bimodule_map(res.square.mod, regular(rq), res.iso.matrix, HomKind::bimodule));
  CHECK(res.iso.matrix.inverse().has_value());

  // Same construction with the trace form on M2: nu = id, so u must be central.
  FDAlgebra m2 = matrix_algebra_2(f);
  Vec trace = vec_of(f, {"1", "0", "0", "1"});
  FrobeniusWitness w2{trace, pairing_matrix(m2, trace), nakayama(m2, trace)};
  CHECK(w2.nakayama.matrix.is_identity());
  Rng rng2(13);
  PairingMapResult res2 = frobenius_pairing_map(m2, w2, rng2, 8);
  CHECK(m2.multiply(res2.u, res2.u_inv) == m2.unit);
  CHECK(center(m2).contains(res2.u));
}
