#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "isoclass/algebra.hpp"
#include "isoclass/colorgraph.hpp"

namespace isoclass {

// Shared vertex colors for all row/column/symbol/cell graph constructions.
inline constexpr int kColorRow = 0;
inline constexpr int kColorCol = 1;
inline constexpr int kColorSym = 2;
inline constexpr int kColorCell = 3;

/// n x n array with entries in {0..n}, 0 meaning an empty cell; each symbol
/// occurs at most once per row and per column.
struct PartialLatinSquare {
  int n = 0;
  std::vector<int> cells;  // row-major

  PartialLatinSquare() = default;
  PartialLatinSquare(int n_, std::vector<int> cells_) : n(n_), cells(std::move(cells_)) {}

  int at(int i, int j) const { return cells[std::size_t(i) * n + j]; }
  int& at(int i, int j) { return cells[std::size_t(i) * n + j]; }

  int filled_count() const {
    int k = 0;
    for (int c : cells) k += (c != 0);
    return k;
  }

  bool valid() const {
    if (int(cells.size()) != n * n) return false;
    for (int c : cells)
      if (c < 0 || c > n) return false;
    for (int i = 0; i < n; ++i) {
      std::vector<bool> row(n + 1, false), col(n + 1, false);
      for (int j = 0; j < n; ++j) {
        int a = at(i, j), b = at(j, i);
        if (a != 0) {
          if (row[a]) return false;
          row[a] = true;
        }
        if (b != 0) {
          if (col[b]) return false;
          col[b] = true;
        }
      }
    }
    return true;
  }

  bool operator==(const PartialLatinSquare& o) const { return n == o.n && cells == o.cells; }
  bool operator<(const PartialLatinSquare& o) const { return cells < o.cells; }
};

/// Text convention: rows written one after another, empty cells as zeros,
/// e.g. "12 20" or "120 210 000".
inline PartialLatinSquare parse_pls(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> rows;
  std::string tok;
  while (in >> tok) rows.push_back(tok);
  const int n = int(rows.size());
  if (n == 0) throw std::invalid_argument("parse_pls: empty input");
  PartialLatinSquare L(n, std::vector<int>(std::size_t(n) * n, 0));
  for (int i = 0; i < n; ++i) {
    if (int(rows[i].size()) != n) throw std::invalid_argument("parse_pls: row '" + rows[i] + "' has wrong length");
    for (int j = 0; j < n; ++j) {
      char ch = rows[i][j];
      if (ch < '0' || ch > char('0' + n)) throw std::invalid_argument("parse_pls: bad symbol in '" + rows[i] + "'");
      L.at(i, j) = ch - '0';
    }
  }
  if (!L.valid()) throw std::invalid_argument("parse_pls: Latin condition violated in \"" + text + "\"");
  return L;
}

inline std::string format_pls(const PartialLatinSquare& L) {
  std::string s;
  for (int i = 0; i < L.n; ++i) {
    if (i) s += ' ';
    for (int j = 0; j < L.n; ++j) s += char('0' + L.at(i, j));
  }
  return s;
}

/// Row/column/symbol permutations of [n], 0-based.
struct PermTriple {
  std::vector<int> rows, cols, syms;

  static PermTriple identity(int n) {
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    return {id, id, id};
  }
};

/// Isotopy action: cell (alpha(i), beta(j)) of the image holds gamma(l_ij).
inline PartialLatinSquare act(const PermTriple& t, const PartialLatinSquare& L) {
  PartialLatinSquare out(L.n, std::vector<int>(L.cells.size(), 0));
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j) {
      int s = L.at(i, j);
      if (s != 0) out.at(t.rows[i], t.cols[j]) = t.syms[s - 1] + 1;
    }
  return out;
}

inline PermTriple compose(const PermTriple& t2, const PermTriple& t1) {
  const int n = int(t1.rows.size());
  PermTriple r = PermTriple::identity(n);
  for (int i = 0; i < n; ++i) {
    r.rows[i] = t2.rows[t1.rows[i]];
    r.cols[i] = t2.cols[t1.cols[i]];
    r.syms[i] = t2.syms[t1.syms[i]];
  }
  return r;
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Lexicographically least cell string over the S_n^3 orbit of L.
inline PartialLatinSquare canonical_pls(const PartialLatinSquare& L) {
  auto perms = all_permutations(L.n);
  PartialLatinSquare best = L;
  PermTriple t;
  for (const auto& a : perms) {
    t.rows = a;
    for (const auto& b : perms) {
      t.cols = b;
      for (const auto& c : perms) {
        t.syms = c;
        PartialLatinSquare img = act(t, L);
        if (img.cells < best.cells) best = img;
      }
    }
  }
  return best;
}

/// All valid partial Latin squares of order n (row-major DFS with
/// row/column symbol masks).
inline std::vector<PartialLatinSquare> all_pls(int n) {
  std::vector<PartialLatinSquare> out;
  PartialLatinSquare L(n, std::vector<int>(std::size_t(n) * n, 0));
  std::vector<unsigned> rowmask(n, 0), colmask(n, 0);
  auto rec = [&](auto&& self, int cell) -> void {
    if (cell == n * n) {
      out.push_back(L);
      return;
    }
    int i = cell / n, j = cell % n;
    self(self, cell + 1);  // empty cell
    for (int s = 1; s <= n; ++s) {
      unsigned bit = 1u << s;
      if ((rowmask[i] & bit) || (colmask[j] & bit)) continue;
      rowmask[i] |= bit;
      colmask[j] |= bit;
      L.at(i, j) = s;
      self(self, cell + 1);
      L.at(i, j) = 0;
      rowmask[i] &= ~bit;
      colmask[j] &= ~bit;
    }
  };
  rec(rec, 0);
  return out;
}

/// One lexicographically-least representative per isotopism class.
/// Counts are 2, 8, 81 for n = 1, 2, 3.
inline std::vector<PartialLatinSquare> pls_isotopism_classes(int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("pls_isotopism_classes: order > 3 unsupported");
  std::set<std::vector<int>> canon;
  for (const auto& L : all_pls(n)) canon.insert(canonical_pls(L).cells);
  std::vector<PartialLatinSquare> out;
  for (const auto& cells : canon) out.emplace_back(n, cells);
  return out;
}

/// Partial quasigroup/magma ring: e_i e_j = e_{l_ij} on filled cells,
/// zero otherwise; all structure constants 1.
inline Algebra ring_of(const PartialLatinSquare& L, int p) {
  Algebra A(p, L.n);
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j) {
      int s = L.at(i, j);
      if (s != 0) A.at(i, j, s - 1) = 1;
    }
  return A;
}

/// Permutation-matrix lift of a magma isotopism: f(e_i) = e'_{alpha(i)}.
inline IsotopismTriple lift_magma_isotopism(const PermTriple& t, int p, int n) {
  auto perm_mat = [&](const std::vector<int>& perm) {
    Mat m(p, n);
    for (int i = 0; i < n; ++i) m.at(i, perm[i]) = 1;
    return m;
  };
  return {perm_mat(t.rows), perm_mat(t.cols), perm_mat(t.syms)};
}

/// McKay-style vertex-colored graph of a (partial) Latin square: row,
/// column and symbol vertices plus one cell vertex per filled cell.
inline ColoredGraph mckay_graph(const PartialLatinSquare& L) {
  if (!L.valid()) throw std::invalid_argument("mckay_graph: invalid partial Latin square");
  ColoredGraph g;
  std::vector<int> rid(L.n), cid(L.n), sid(L.n);
  for (int i = 0; i < L.n; ++i) rid[i] = g.add_vertex(kColorRow, "r" + std::to_string(i + 1));
  for (int i = 0; i < L.n; ++i) cid[i] = g.add_vertex(kColorCol, "c" + std::to_string(i + 1));
  for (int i = 0; i < L.n; ++i) sid[i] = g.add_vertex(kColorSym, "s" + std::to_string(i + 1));
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.n; ++j) {
      int s = L.at(i, j);
      if (s == 0) continue;
      int t = g.add_vertex(kColorCell, "t" + std::to_string(i + 1) + "," + std::to_string(j + 1));
      g.add_edge(rid[i], t);
      g.add_edge(cid[j], t);
      g.add_edge(sid[s - 1], t);
    }
  g.normalize();
  return g;
}

}  // namespace isoclass
