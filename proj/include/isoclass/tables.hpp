#pragma once

#include <array>
#include <vector>

#include "isoclass/algebra.hpp"

namespace isoclass {

/// Golden fixtures: graph invariants of the small classification censuses.
/// Vertex 4-tuples count the R, C, S and T color classes. These values are
/// pinned; the pipeline recomputes every row from scratch and any mismatch is
/// reported as a hard failure instead of being auto-corrected.

struct QuasigroupRingRow {
  const char* pls;
  std::array<long long, 4> vertices;
  long long g1_edges;
  long long g2_edges;
  long long g2_triangles;
};

/// Order-2 partial quasigroup rings, all 8 isotopism-class labels.
inline const std::vector<QuasigroupRingRow>& p2_table(int p) {
  static const std::vector<QuasigroupRingRow> f2 = {
      {"00 00", {0, 0, 0, 0}, 0, 0, 0},  {"10 00", {2, 2, 1, 4}, 12, 16, 7},
      {"10 01", {3, 3, 1, 6}, 18, 23, 7}, {"10 02", {3, 3, 3, 7}, 21, 30, 16},
      {"10 20", {3, 2, 3, 6}, 18, 25, 12}, {"12 00", {2, 3, 3, 6}, 18, 25, 12},
      {"12 20", {3, 3, 3, 8}, 24, 33, 13}, {"12 21", {3, 3, 3, 8}, 24, 33, 13},
  };
  static const std::vector<QuasigroupRingRow> f3 = {
      {"00 00", {0, 0, 0, 0}, 0, 0, 0},      {"10 00", {6, 6, 2, 36}, 108, 118, 20},
      {"10 01", {8, 8, 2, 48}, 144, 156, 22}, {"10 02", {8, 8, 8, 56}, 168, 192, 48},
      {"10 20", {8, 6, 8, 48}, 144, 164, 42}, {"12 00", {6, 8, 8, 48}, 144, 164, 42},
      {"12 20", {8, 8, 8, 60}, 180, 204, 38}, {"12 21", {8, 8, 8, 56}, 168, 192, 48},
  };
  return p == 2 ? f2 : f3;
}

struct LieAlgebraRow {
  const char* label;                          // product description, e.g. "e1e2=e3, e1e3=-e2"
  std::vector<std::array<int, 4>> products;   // {i, j, k, c}: e_i e_j = c e_k, 1-based, c mod p
  std::array<long long, 4> vertices;
  long long g1_edges;
  long long g2_edges;
  long long g2_triangles;
};

/// 3-dimensional Lie algebra isomorphism-class representatives with their
/// G1/G2 invariants: 6 rows over F2, 7 over F3. -1 entries are taken mod p.
inline const std::vector<LieAlgebraRow>& l3_table(int p) {
  static const std::vector<LieAlgebraRow> f2 = {
      {"abelian", {}, {0, 0, 0, 0}, 0, 0, 0},
      {"e1e2=e3", {{1, 2, 3, 1}}, {6, 6, 1, 24}, 72, 78, 0},
      {"e1e2=e1", {{1, 2, 1, 1}}, {6, 6, 1, 24}, 72, 80, 9},
      {"e1e2=e3, e1e3=e2", {{1, 2, 3, 1}, {1, 3, 2, 1}}, {7, 7, 3, 36}, 108, 121, 11},
      {"e1e2=e2, e1e3=e3", {{1, 2, 2, 1}, {1, 3, 3, 1}}, {7, 7, 3, 36}, 108, 121, 27},
      {"e1e2=e2, e1e3=-e3, e2e3=-e1",
       {{1, 2, 2, 1}, {1, 3, 3, -1}, {2, 3, 1, -1}},
       {7, 7, 7, 42},
       126,
       147,
       19},
  };
  static const std::vector<LieAlgebraRow> f3 = {
      {"abelian", {}, {0, 0, 0, 0}, 0, 0, 0},
      {"e1e2=e3", {{1, 2, 3, 1}}, {24, 24, 2, 432}, 1296, 1320, 0},
      {"e1e2=e1", {{1, 2, 1, 1}}, {24, 24, 2, 432}, 1296, 1324, 38},
      {"e1e2=e3, e1e3=-e2", {{1, 2, 3, 1}, {1, 3, 2, -1}}, {26, 26, 8, 576}, 1728, 1770, 8},
      {"e1e2=e3, e1e3=e2", {{1, 2, 3, 1}, {1, 3, 2, 1}}, {26, 26, 8, 576}, 1728, 1770, 80},
      {"e1e2=e2, e1e3=e3", {{1, 2, 2, 1}, {1, 3, 3, 1}}, {26, 26, 8, 576}, 1728, 1770, 152},
      {"e1e2=e2, e1e3=-e3, e2e3=2e1",
       {{1, 2, 2, 1}, {1, 3, 3, -1}, {2, 3, 1, 2}},
       {26, 26, 26, 624},
       1872,
       1950,
       74},
  };
  return p == 2 ? f2 : f3;
}

/// Builds the anticommutative algebra of an l3_table row.
inline Algebra lie_representative(int p, const LieAlgebraRow& row) {
  Algebra A(p, 3);
  PrimeField F(p);
  for (auto [i, j, k, c] : row.products) {
    A.at(i - 1, j - 1, k - 1) = F.reduce(c);
    A.at(j - 1, i - 1, k - 1) = F.neg(F.reduce(c));
  }
  return A;
}

struct P3Row {
  const char* pls;
  std::array<long long, 4> vertices;
  long long g1_edges;
};

/// G1 invariants of the 80 non-abelian order-3 partial quasigroup ring
/// classes over F2. The row "120 031 302" had an unreadable label in the
/// source material; the prefix is the unique valid completion whose class is
/// not covered by the remaining 79 labels and whose invariants match the row.
inline const std::vector<P3Row>& p3_g1_table() {
  static const std::vector<P3Row> rows = {
      {"100 000 000", {4, 4, 1, 16}, 48},    {"120 000 000", {4, 6, 3, 24}, 72},
      {"123 000 000", {4, 7, 7, 28}, 84},    {"100 200 000", {6, 4, 3, 24}, 72},
      {"100 010 000", {6, 6, 1, 24}, 72},    {"100 020 000", {6, 6, 3, 28}, 84},
      {"120 200 000", {6, 6, 3, 32}, 96},    {"120 210 000", {6, 6, 3, 32}, 96},
      {"120 000 300", {6, 6, 6, 32}, 96},    {"120 000 310", {6, 6, 6, 36}, 108},
      {"120 001 000", {6, 7, 3, 32}, 96},    {"120 012 000", {6, 7, 3, 36}, 108},
      {"120 003 000", {6, 7, 7, 34}, 102},   {"120 000 302", {6, 7, 7, 36}, 108},
      {"123 200 000", {6, 7, 7, 36}, 108},   {"120 013 000", {6, 7, 7, 38}, 114},
      {"123 210 000", {6, 7, 7, 38}, 114},   {"123 230 000", {6, 7, 7, 40}, 120},
      {"123 231 000", {6, 7, 7, 40}, 120},   {"100 200 300", {7, 4, 7, 28}, 84},
      {"100 200 010", {7, 6, 3, 32}, 96},    {"120 200 010", {7, 6, 3, 36}, 108},
      {"100 200 030", {7, 6, 7, 34}, 102},   {"120 030 300", {7, 6, 7, 36}, 108},
      {"120 200 300", {7, 6, 7, 36}, 108},   {"120 010 300", {7, 6, 7, 38}, 114},
      {"120 210 300", {7, 6, 7, 38}, 114},   {"120 230 300", {7, 6, 7, 40}, 120},
      {"120 230 310", {7, 6, 7, 40}, 120},   {"100 010 001", {7, 7, 1, 28}, 84},
      {"100 010 002", {7, 7, 3, 34}, 102},   {"120 001 002", {7, 7, 3, 36}, 108},
      {"120 200 002", {7, 7, 3, 36}, 108},   {"120 200 001", {7, 7, 3, 38}, 114},
      {"120 210 001", {7, 7, 3, 38}, 114},   {"120 201 010", {7, 7, 3, 40}, 120},
      {"120 201 012", {7, 7, 3, 40}, 120},   {"100 020 003", {7, 7, 7, 37}, 111},
      {"120 002 003", {7, 7, 7, 38}, 114},   {"120 002 300", {7, 7, 7, 38}, 114},
      {"120 003 300", {7, 7, 7, 38}, 114},   {"120 001 300", {7, 7, 7, 39}, 117},
      {"120 200 003", {7, 7, 7, 40}, 120},   {"120 200 302", {7, 7, 7, 40}, 120},
      {"120 210 003", {7, 7, 7, 40}, 120},   {"123 010 001", {7, 7, 7, 40}, 120},
      {"123 200 300", {7, 7, 7, 40}, 120},   {"120 001 302", {7, 7, 7, 41}, 123},
      {"120 001 310", {7, 7, 7, 41}, 123},   {"120 201 300", {7, 7, 7, 41}, 123},
      {"123 200 010", {7, 7, 7, 41}, 123},   {"120 003 310", {7, 7, 7, 42}, 126},
      {"120 010 301", {7, 7, 7, 42}, 126},   {"120 010 302", {7, 7, 7, 42}, 126},
      {"120 012 300", {7, 7, 7, 42}, 126},   {"120 013 300", {7, 7, 7, 42}, 126},
      {"120 200 013", {7, 7, 7, 42}, 126},   {"120 203 001", {7, 7, 7, 42}, 126},
      {"120 203 300", {7, 7, 7, 42}, 126},   {"123 010 300", {7, 7, 7, 42}, 126},
      {"120 031 302", {7, 7, 7, 42}, 126},   {"120 210 301", {7, 7, 7, 42}, 126},
      {"120 213 001", {7, 7, 7, 42}, 126},   {"120 213 300", {7, 7, 7, 42}, 126},
      {"120 001 312", {7, 7, 7, 43}, 129},   {"120 201 302", {7, 7, 7, 43}, 129},
      {"120 231 300", {7, 7, 7, 43}, 129},   {"123 231 312", {7, 7, 7, 43}, 129},
      {"120 003 312", {7, 7, 7, 44}, 132},   {"120 013 301", {7, 7, 7, 44}, 132},
      {"120 013 302", {7, 7, 7, 44}, 132},   {"120 200 312", {7, 7, 7, 44}, 132},
      {"120 203 301", {7, 7, 7, 44}, 132},   {"123 210 301", {7, 7, 7, 44}, 132},
      {"123 031 310", {7, 7, 7, 45}, 135},   {"123 200 312", {7, 7, 7, 45}, 135},
      {"123 230 310", {7, 7, 7, 45}, 135},   {"123 012 230", {7, 7, 7, 46}, 138},
      {"123 210 031", {7, 7, 7, 46}, 138},   {"123 201 312", {7, 7, 7, 46}, 138},
  };
  return rows;
}

}  // namespace isoclass
