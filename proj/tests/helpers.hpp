#pragma once
// Small constructors shared by the test suites.

#include "fdalg/algebra.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace fdalg::testing {

inline Vec vec_of(const Field& f, std::initializer_list<const char*> entries) {
  Vec v;
  v.reserve(entries.size());
  for (const char* s : entries) v.push_back(f.from_string(s));
  return v;
}

inline Mat mat_of(const Field& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows.begin()->size());
  Mat m(f, r, c);
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (const char* s : row) m.at(i, j++) = f.from_string(s);
    ++i;
  }
  return m;
}

// K[C_2] = K{e, g}, g^2 = e.
inline FDAlgebra group_algebra_c2(const Field& f) {
  Scalar one = f.one();
  return make_algebra(f, {"e", "g"}, vec_of(f, {"1", "0"}),
                      {{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}, {1, 1, 0, one}});
}

// Full 2x2 matrix algebra, basis {E11, E12, E21, E22}.
inline FDAlgebra matrix_algebra_2(const Field& f) {
  Scalar one = f.one();
  std::vector<std::tuple<int, int, int, Scalar>> triples;
  auto idx = [](int i, int j) { return 2 * i + j; };
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) triples.emplace_back(idx(i, j), idx(k, l), idx(i, l), one);
  return make_algebra(f, {"E11", "E12", "E21", "E22"}, vec_of(f, {"1", "0", "0", "1"}), triples);
}

// Upper-triangular 2x2 matrices, basis {E11, E12, E22}; not quasi-Frobenius.
inline FDAlgebra upper_triangular_2(const Field& f) {
  Scalar one = f.one();
  return make_algebra(f, {"E11", "E12", "E22"}, vec_of(f, {"1", "0", "1"}),
                      {{0, 0, 0, one}, {0, 1, 1, one}, {1, 2, 1, one}, {2, 2, 2, one}});
}

}  // namespace fdalg::testing
