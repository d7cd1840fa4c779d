#include "fdalg/bimodule.hpp"

#include <stdexcept>

namespace fdalg {

namespace {

Mat weighted_sum(const Field& f, int dim, const std::vector<Mat>& mats, const Vec& r) {
  Mat out(f, dim, dim);
  for (std::size_t i = 0; i < mats.size(); ++i)
    if (!r[i].is_zero()) out = out + mats[i].scaled(r[i]);
  return out;
}

// X acting on the left index of a tensor coordinate vector: index (a,b) -> a*wdim+b.
Vec lmul_tensor(const Mat& x, const Vec& v, int wdim) {
  int vdim = x.cols();
  Vec out = zero_vec(x.field(), x.rows() * wdim);
  for (int c = 0; c < vdim; ++c)
    for (int b = 0; b < wdim; ++b) {
      const Scalar& s = v[static_cast<std::size_t>(c * wdim + b)];
      if (s.is_zero()) continue;
      for (int a = 0; a < x.rows(); ++a)
        if (!x.at(a, c).is_zero())
          out[static_cast<std::size_t>(a * wdim + b)] += x.at(a, c) * s;
    }
  return out;
}

// Y acting on the right index.
Vec rmul_tensor(const Mat& y, const Vec& v, int vdim) {
  int wdim = y.cols();
  Vec out = zero_vec(y.field(), vdim * y.rows());
  for (int a = 0; a < vdim; ++a)
    for (int d = 0; d < wdim; ++d) {
      const Scalar& s = v[static_cast<std::size_t>(a * wdim + d)];
      if (s.is_zero()) continue;
      for (int b = 0; b < y.rows(); ++b)
        if (!y.at(b, d).is_zero())
          out[static_cast<std::size_t>(a * y.rows() + b)] += y.at(b, d) * s;
    }
  return out;
}

// Rows of the linear system M*actV[i] = actW[i]*M over vec(M)[r*dimV+c].
void insert_intertwiner_rows(EchelonBasis& eb, const std::vector<Mat>& act_v,
                             const std::vector<Mat>& act_w) {
  if (act_v.empty()) return;
  const Field& f = act_v[0].field();
  int dim_v = act_v[0].rows();
  int dim_w = act_w.empty() ? 0 : act_w[0].rows();
  for (std::size_t i = 0; i < act_v.size(); ++i) {
    const Mat& a = act_v[i];
    const Mat& b = act_w[i];
    for (int r = 0; r < dim_w; ++r)
      for (int c = 0; c < dim_v; ++c) {
        Vec row = zero_vec(f, dim_w * dim_v);
        for (int k = 0; k < dim_v; ++k)
          if (!a.at(k, c).is_zero()) row[static_cast<std::size_t>(r * dim_v + k)] += a.at(k, c);
        for (int k = 0; k < dim_w; ++k)
          if (!b.at(r, k).is_zero()) row[static_cast<std::size_t>(k * dim_v + c)] -= b.at(r, k);
        eb.insert(std::move(row));
      }
  }
}

LinearSubspace kernel_subspace(const Field& f, int ambient, EchelonBasis& constraints) {
  Mat ker = constraints.kernel();
  std::vector<Vec> rows;
  rows.reserve(static_cast<std::size_t>(ker.rows()));
  for (int r = 0; r < ker.rows(); ++r) rows.push_back(ker.row(r));
  return LinearSubspace::span(f, ambient, rows);
}

PitEvidence exact_negative() {
  PitEvidence e;
  e.exhaustive = true;
  return e;
}

// Invertible member of a space of matrices, with the shared pencil engine.
IsoResult search_invertible_map(const Field& f, const LinearSubspace& maps, int rows, int cols,
                                Rng& rng, int trials) {
  IsoResult result;
  result.hom_dim = maps.dim();
  if (rows != cols || maps.dim() == 0) {
    result.evidence = exact_negative();
    return result;
  }
  std::vector<Mat> gens;
  gens.reserve(static_cast<std::size_t>(maps.dim()));
  for (int k = 0; k < maps.dim(); ++k) {
    Mat m(f, rows, cols);
    Vec coords = maps.basis_row(k);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m.at(r, c) = coords[static_cast<std::size_t>(r * cols + c)];
    gens.push_back(std::move(m));
  }
  PencilSearch search = find_nonsingular(f, gens, rng, trials);
  result.evidence = search.evidence;
  if (search.coeffs) {
    Mat m(f, rows, cols);
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (!(*search.coeffs)[k].is_zero()) m = m + gens[k].scaled((*search.coeffs)[k]);
    if (!m.inverse()) throw std::logic_error("nonsingular pencil member is not invertible");
    result.iso = BimoduleMap{std::move(m)};
  }
  return result;
}

}  // namespace

Mat Bimodule::left_action_of(const Vec& r) const {
  return weighted_sum(algebra.field, dim, left_act, r);
}

Mat Bimodule::right_action_of(const Vec& r) const {
  return weighted_sum(algebra.field, dim, right_act, r);
}

CheckReport check_bimodule(const Bimodule& V) {
  CheckReport report;
  const FDAlgebra& A = V.algebra;
  auto name = [&](int i) { return A.basis_names[static_cast<std::size_t>(i)]; };
  if (static_cast<int>(V.left_act.size()) != A.dim || static_cast<int>(V.right_act.size()) != A.dim) {
    report.violations.push_back("action count != algebra dimension");
    return report;
  }
  if (!V.left_action_of(A.unit).is_identity()) report.violations.push_back("left unit action");
  if (!V.right_action_of(A.unit).is_identity()) report.violations.push_back("right unit action");
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      const Vec& prod = A.product_of_basis(i, j);
      if (V.left_act[static_cast<std::size_t>(i)] * V.left_act[static_cast<std::size_t>(j)] !=
          V.left_action_of(prod))
        report.violations.push_back("left(" + name(i) + " " + name(j) + ")");
      if (V.right_act[static_cast<std::size_t>(j)] * V.right_act[static_cast<std::size_t>(i)] !=
          V.right_action_of(prod))
        report.violations.push_back("right(" + name(i) + " " + name(j) + ")");
      if (V.left_act[static_cast<std::size_t>(i)] * V.right_act[static_cast<std::size_t>(j)] !=
          V.right_act[static_cast<std::size_t>(j)] * V.left_act[static_cast<std::size_t>(i)])
        report.violations.push_back("commute(" + name(i) + ", " + name(j) + ")");
    }
  return report;
}

bool is_bimodule_map(const Bimodule& V, const Bimodule& W, const Mat& m, HomKind kind) {
  if (m.rows() != W.dim || m.cols() != V.dim) return false;
  for (int i = 0; i < V.algebra.dim; ++i) {
    if (kind != HomKind::right &&
        m * V.left_act[static_cast<std::size_t>(i)] != W.left_act[static_cast<std::size_t>(i)] * m)
      return false;
    if (kind != HomKind::left &&
        m * V.right_act[static_cast<std::size_t>(i)] != W.right_act[static_cast<std::size_t>(i)] * m)
      return false;
  }
  return true;
}

Bimodule regular(const FDAlgebra& A) {
  Bimodule V;
  V.algebra = A;
  V.dim = A.dim;
  V.basis_names = A.basis_names;
  V.left_act.reserve(static_cast<std::size_t>(A.dim));
  V.right_act.reserve(static_cast<std::size_t>(A.dim));
  for (int i = 0; i < A.dim; ++i) {
    V.left_act.push_back(A.left_mult(A.basis_vec(i)));
    V.right_act.push_back(A.right_mult(A.basis_vec(i)));
  }
  return V;
}

Bimodule dual(const Bimodule& V) {
  Bimodule D;
  D.algebra = V.algebra;
  D.dim = V.dim;
  D.basis_names.reserve(static_cast<std::size_t>(V.dim));
  for (const auto& n : V.basis_names) D.basis_names.push_back(n + "*");
  for (int i = 0; i < V.algebra.dim; ++i) {
    // (r -> v*)(v) = v*(v r) and (v* <- r)(v) = v*(r v): transposed actions, sides swapped.
    D.left_act.push_back(V.right_act[static_cast<std::size_t>(i)].transpose());
    D.right_act.push_back(V.left_act[static_cast<std::size_t>(i)].transpose());
  }
  return D;
}

Bimodule twist(const Bimodule& V, const AlgMap& alpha, const AlgMap& beta) {
  if (alpha.anti || beta.anti) throw std::invalid_argument("twists need plain automorphisms");
  if (!is_automorphism(V.algebra, alpha) || !is_automorphism(V.algebra, beta))
    throw std::invalid_argument("twists need automorphisms of the acting algebra");
  Bimodule T;
  T.algebra = V.algebra;
  T.dim = V.dim;
  T.basis_names = V.basis_names;
  for (int i = 0; i < V.algebra.dim; ++i) {
    T.left_act.push_back(V.left_action_of(alpha.apply(V.algebra.basis_vec(i))));
    T.right_act.push_back(V.right_action_of(beta.apply(V.algebra.basis_vec(i))));
  }
  return T;
}

bool same_actions(const Bimodule& V, const Bimodule& W) {
  if (V.dim != W.dim || !V.algebra.same_shape(W.algebra)) return false;
  for (std::size_t i = 0; i < V.left_act.size(); ++i)
    if (V.left_act[i] != W.left_act[i] || V.right_act[i] != W.right_act[i]) return false;
  return true;
}

TensorBimodule tensor_over(const Bimodule& V, const Bimodule& W) {
  if (!V.algebra.same_shape(W.algebra))
    throw std::invalid_argument("tensor factors live over different algebras");
  const FDAlgebra& A = V.algebra;
  const Field& f = A.field;
  int ambient = V.dim * W.dim;

  EchelonBasis rel(f, ambient);
  for (int r = 0; r < A.dim; ++r) {
    const Mat& rv = V.right_act[static_cast<std::size_t>(r)];
    const Mat& lw = W.left_act[static_cast<std::size_t>(r)];
    for (int a = 0; a < V.dim; ++a)
      for (int b = 0; b < W.dim; ++b) {
        // (v_a * r) (x) w_b - v_a (x) (r * w_b)
        Vec row = zero_vec(f, ambient);
        for (int c = 0; c < V.dim; ++c)
          if (!rv.at(c, a).is_zero()) row[static_cast<std::size_t>(c * W.dim + b)] += rv.at(c, a);
        for (int d = 0; d < W.dim; ++d)
          if (!lw.at(d, b).is_zero()) row[static_cast<std::size_t>(a * W.dim + d)] -= lw.at(d, b);
        rel.insert(std::move(row));
      }
  }

  LinearSubspace relations = LinearSubspace::from_echelon(rel);
  QuotientSpace carrier(f, ambient, relations);

  Bimodule Q;
  Q.algebra = A;
  Q.dim = carrier.dim();
  for (int k = 0; k < carrier.dim(); ++k) {
    int free_col = -1;
    for (int r = 0; r < ambient; ++r)
      if (!carrier.section().at(r, k).is_zero()) { free_col = r; break; }
    Q.basis_names.push_back("[" + V.basis_names[static_cast<std::size_t>(free_col / W.dim)] + "(x)" +
                            W.basis_names[static_cast<std::size_t>(free_col % W.dim)] + "]");
  }
  for (int i = 0; i < A.dim; ++i) {
    const Mat& lv = V.left_act[static_cast<std::size_t>(i)];
    const Mat& rw = W.right_act[static_cast<std::size_t>(i)];
    // Actions must map the relation span into itself to descend.
    for (int k = 0; k < relations.dim(); ++k) {
      Vec rel_vec = relations.basis_row(k);
      if (!rel.contains(lmul_tensor(lv, rel_vec, W.dim)) ||
          !rel.contains(rmul_tensor(rw, rel_vec, V.dim)))
        throw std::logic_error("tensor actions do not descend to the quotient");
    }
    Mat ql(f, Q.dim, Q.dim), qr(f, Q.dim, Q.dim);
    for (int k = 0; k < Q.dim; ++k) {
      Vec lifted = carrier.section().col(k);
      Vec lcol = carrier.project(lmul_tensor(lv, lifted, W.dim));
      Vec rcol = carrier.project(rmul_tensor(rw, lifted, V.dim));
      for (int t = 0; t < Q.dim; ++t) {
        ql.at(t, k) = lcol[static_cast<std::size_t>(t)];
        qr.at(t, k) = rcol[static_cast<std::size_t>(t)];
      }
    }
    Q.left_act.push_back(std::move(ql));
    Q.right_act.push_back(std::move(qr));
  }
  return TensorBimodule{std::move(Q), std::move(carrier)};
}

LinearSubspace hom_space(const Bimodule& V, const Bimodule& W, HomKind kind) {
  if (!V.algebra.same_shape(W.algebra))
    throw std::invalid_argument("hom requires one common algebra");
  const Field& f = V.algebra.field;
  int ambient = W.dim * V.dim;
  EchelonBasis constraints(f, ambient);
  if (kind != HomKind::right) insert_intertwiner_rows(constraints, V.left_act, W.left_act);
  if (kind != HomKind::left) insert_intertwiner_rows(constraints, V.right_act, W.right_act);
  return kernel_subspace(f, ambient, constraints);
}

Mat map_from_coords(const Bimodule& V, const Bimodule& W, const Vec& coords) {
  Mat m(V.algebra.field, W.dim, V.dim);
  for (int r = 0; r < W.dim; ++r)
    for (int c = 0; c < V.dim; ++c) m.at(r, c) = coords[static_cast<std::size_t>(r * V.dim + c)];
  return m;
}

Vec coords_of_map(const Mat& m) {
  Vec v;
  v.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

IsoResult is_isomorphic(const Bimodule& V, const Bimodule& W, HomKind kind, Rng& rng, int trials) {
  if (V.dim != W.dim) {
    IsoResult no;
    no.evidence = exact_negative();
    return no;
  }
  LinearSubspace maps = hom_space(V, W, kind);
  IsoResult result = search_invertible_map(V.algebra.field, maps, W.dim, V.dim, rng, trials);
  if (result.iso && !is_bimodule_map(V, W, result.iso->matrix, kind))
    throw std::logic_error("pencil member is not an intertwiner");
  return result;
}

std::optional<Mat> is_projective_left(const Bimodule& V) {
  const FDAlgebra& A = V.algebra;
  const Field& f = A.field;
  int m = V.dim, n = A.dim;
  Bimodule reg = regular(A);
  LinearSubspace homs = hom_space(V, reg, HomKind::left);
  int h = homs.dim();
  // Sections of pi: A^m -> V, pi(e_i (x) r) = r*v_i, written as m maps V -> A
  // drawn from the hom space: unknowns c_{i,k} over copies i and hom basis k.
  std::vector<Mat> hom_mats;
  hom_mats.reserve(static_cast<std::size_t>(h));
  for (int k = 0; k < h; ++k) hom_mats.push_back(map_from_coords(V, reg, homs.basis_row(k)));

  Mat system(f, m * m, m * h);
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < h; ++k) {
        Vec image = V.left_apply(hom_mats[static_cast<std::size_t>(k)].col(a), V.basis_vec(i));
        for (int t = 0; t < m; ++t)
          system.at(a * m + t, i * h + k) = image[static_cast<std::size_t>(t)];
      }
  Vec rhs = zero_vec(f, m * m);
  for (int a = 0; a < m; ++a) rhs[static_cast<std::size_t>(a * m + a)] = f.one();
  auto solution = system.solve(rhs);
  if (!solution) return std::nullopt;

  Mat section(f, n * m, m);
  for (int i = 0; i < m; ++i) {
    Mat s_i(f, n, m);
    for (int k = 0; k < h; ++k)
      if (!(*solution)[static_cast<std::size_t>(i * h + k)].is_zero())
        s_i = s_i + hom_mats[static_cast<std::size_t>(k)].scaled((*solution)[static_cast<std::size_t>(i * h + k)]);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c) section.at(i * n + r, c) = s_i.at(r, c);
  }
  // pi(section(v_a)) = sum_i s_i(v_a) * v_i must reproduce v_a.
  for (int a = 0; a < m; ++a) {
    Vec column = section.col(a);
    Vec acc = zero_vec(f, m);
    for (int i = 0; i < m; ++i) {
      Vec r_i(column.begin() + i * n, column.begin() + (i + 1) * n);
      acc = add(acc, V.left_apply(r_i, V.basis_vec(i)));
    }
    if (acc != V.basis_vec(a)) throw std::logic_error("projective section failed pi*s = id");
  }
  return section;
}

GeneratorResult is_generator_left(const Bimodule& V) {
  const FDAlgebra& A = V.algebra;
  Bimodule reg = regular(A);
  LinearSubspace homs = hom_space(V, reg, HomKind::left);
  EchelonBasis trace(A.field, A.dim);
  for (int k = 0; k < homs.dim() && trace.rank() < A.dim; ++k) {
    Mat h = map_from_coords(V, reg, homs.basis_row(k));
    for (int a = 0; a < V.dim; ++a) trace.insert(h.col(a));
  }
  GeneratorResult result;
  result.trace_ideal_dim = trace.rank();
  result.generator = trace.rank() == A.dim;
  return result;
}

InvertibleBimoduleReport is_invertible_bimodule(const Bimodule& P) {
  const FDAlgebra& A = P.algebra;
  InvertibleBimoduleReport report;
  report.projective_section = is_projective_left(P);
  report.generator = is_generator_left(P);

  // omega: A -> End(_A P), omega(r) = right action of r; composition in End
  // reads right-to-left, so omega reverses products exactly as the right
  // anti-representation does.
  LinearSubspace end_space = hom_space(P, P, HomKind::left);
  report.end_dim = end_space.dim();
  if (report.end_dim == A.dim) {
    EchelonBasis image(A.field, P.dim * P.dim);
    bool ok = true;
    for (int i = 0; i < A.dim; ++i) {
      Vec w = coords_of_map(P.right_act[static_cast<std::size_t>(i)]);
      if (!end_space.contains(w)) ok = false;
      image.insert(std::move(w));
    }
    // Linear bijection onto the full endomorphism space; multiplicativity
    // omega(rs) = omega(s)omega(r) is the anti-representation axiom.
    for (int i = 0; i < A.dim && ok; ++i)
      for (int j = 0; j < A.dim && ok; ++j)
        if (P.right_action_of(A.product_of_basis(i, j)) !=
            P.right_act[static_cast<std::size_t>(j)] * P.right_act[static_cast<std::size_t>(i)])
          ok = false;
    report.omega_ring_iso = ok && image.rank() == A.dim;
  }
  return report;
}

Mat OneSidedModule::action_of(const Vec& r) const {
  return weighted_sum(algebra.field, dim, act, r);
}

CheckReport check_one_sided(const OneSidedModule& M) {
  CheckReport report;
  const FDAlgebra& A = M.algebra;
  if (static_cast<int>(M.act.size()) != A.dim) {
    report.violations.push_back("action count != algebra dimension");
    return report;
  }
  if (!M.action_of(A.unit).is_identity()) report.violations.push_back("unit action");
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      Mat composed = M.left ? M.act[static_cast<std::size_t>(i)] * M.act[static_cast<std::size_t>(j)]
                            : M.act[static_cast<std::size_t>(j)] * M.act[static_cast<std::size_t>(i)];
      if (composed != M.action_of(A.product_of_basis(i, j)))
        report.violations.push_back("act(" + A.basis_names[static_cast<std::size_t>(i)] + " " +
                                    A.basis_names[static_cast<std::size_t>(j)] + ")");
    }
  return report;
}

OneSidedModule submodule_of_regular(const FDAlgebra& A, const std::vector<Vec>& gens, bool left) {
  // Close the span under one-sided multiplication by all basis elements.
  EchelonBasis eb(A.field, A.dim);
  std::vector<Vec> frontier = gens;
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (Vec& v : frontier) {
      if (!eb.insert(v)) continue;
      const Vec& stored = v;  // the span changed; expand products of the new element
      for (int i = 0; i < A.dim; ++i) {
        Vec prod = left ? A.multiply(A.basis_vec(i), stored) : A.multiply(stored, A.basis_vec(i));
        if (!eb.contains(prod)) next.push_back(std::move(prod));
      }
    }
    frontier = std::move(next);
  }
  LinearSubspace span = LinearSubspace::from_echelon(eb);

  OneSidedModule M;
  M.algebra = A;
  M.dim = span.dim();
  M.left = left;
  for (int k = 0; k < span.dim(); ++k) {
    Vec b = span.basis_row(k);
    int support = 0, at = -1;
    for (int i = 0; i < A.dim; ++i)
      if (!b[static_cast<std::size_t>(i)].is_zero()) { ++support; at = i; }
    M.basis_names.push_back(support == 1 && b[static_cast<std::size_t>(at)].is_one()
                                ? A.basis_names[static_cast<std::size_t>(at)]
                                : "b" + std::to_string(k));
  }
  for (int i = 0; i < A.dim; ++i) {
    Mat a(A.field, M.dim, M.dim);
    for (int k = 0; k < M.dim; ++k) {
      Vec prod = left ? A.multiply(A.basis_vec(i), span.basis_row(k))
                      : A.multiply(span.basis_row(k), A.basis_vec(i));
      auto coords = span.coords_of(prod);
      if (!coords) throw std::logic_error("closure left the submodule span");
      for (int t = 0; t < M.dim; ++t) a.at(t, k) = (*coords)[static_cast<std::size_t>(t)];
    }
    M.act.push_back(std::move(a));
  }
  return M;
}

OneSidedModule dual_one_sided(const OneSidedModule& M) {
  OneSidedModule D;
  D.algebra = M.algebra;
  D.dim = M.dim;
  D.left = !M.left;
  for (const auto& n : M.basis_names) D.basis_names.push_back(n + "*");
  for (const Mat& a : M.act) D.act.push_back(a.transpose());
  return D;
}

OneSidedModule restrict_side(const Bimodule& V, bool left) {
  OneSidedModule M;
  M.algebra = V.algebra;
  M.dim = V.dim;
  M.left = left;
  M.basis_names = V.basis_names;
  M.act = left ? V.left_act : V.right_act;
  return M;
}

LinearSubspace hom_space_one_sided(const OneSidedModule& M, const OneSidedModule& N) {
  if (M.left != N.left) throw std::invalid_argument("hom requires modules on one side");
  if (!M.algebra.same_shape(N.algebra)) throw std::invalid_argument("hom requires one common algebra");
  const Field& f = M.algebra.field;
  int ambient = N.dim * M.dim;
  EchelonBasis constraints(f, ambient);
  insert_intertwiner_rows(constraints, M.act, N.act);
  return kernel_subspace(f, ambient, constraints);
}

IsoResult is_isomorphic_one_sided(const OneSidedModule& M, const OneSidedModule& N, Rng& rng,
                                  int trials) {
  if (M.dim != N.dim) {
    IsoResult no;
    no.evidence = exact_negative();
    return no;
  }
  LinearSubspace maps = hom_space_one_sided(M, N);
  IsoResult result = search_invertible_map(M.algebra.field, maps, N.dim, M.dim, rng, trials);
  if (result.iso)
    for (int i = 0; i < M.algebra.dim; ++i)
      if (result.iso->matrix * M.act[static_cast<std::size_t>(i)] !=
          N.act[static_cast<std::size_t>(i)] * result.iso->matrix)
        throw std::logic_error("pencil member is not an intertwiner");
  return result;
}

QuotientSpace tensor_over_one_sided(const OneSidedModule& U, const OneSidedModule& V) {
  if (U.left || !V.left) throw std::invalid_argument("tensor takes a right module then a left module");
  if (!U.algebra.same_shape(V.algebra)) throw std::invalid_argument("tensor requires one common algebra");
  const FDAlgebra& A = U.algebra;
  const Field& f = A.field;
  int ambient = U.dim * V.dim;
  EchelonBasis rel(f, ambient);
  for (int r = 0; r < A.dim; ++r) {
    const Mat& ru = U.act[static_cast<std::size_t>(r)];
    const Mat& lv = V.act[static_cast<std::size_t>(r)];
    for (int a = 0; a < U.dim; ++a)
      for (int b = 0; b < V.dim; ++b) {
        Vec row = zero_vec(f, ambient);
        for (int c = 0; c < U.dim; ++c)
          if (!ru.at(c, a).is_zero()) row[static_cast<std::size_t>(c * V.dim + b)] += ru.at(c, a);
        for (int d = 0; d < V.dim; ++d)
          if (!lv.at(d, b).is_zero()) row[static_cast<std::size_t>(a * V.dim + d)] -= lv.at(d, b);
        rel.insert(std::move(row));
      }
  }
  return QuotientSpace(f, ambient, LinearSubspace::from_echelon(rel));
}

}  // namespace fdalg
