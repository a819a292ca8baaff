#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kirillov/ddop.hpp"
#include "kirillov/poly.hpp"
#include "kirillov/weyl.hpp"

namespace kirillov {

/// Horizontal edge label: 0 means +, otherwise a color in {1..n}.
using HLabel = int;
inline constexpr HLabel kPlus = 0;

/// Vertical edge label: a subset of {1..n} as a bit field (bit c-1 = color c).
using ColorSet = std::uint64_t;

inline bool cs_has(ColorSet s, int c) { return (s >> (c - 1)) & 1u; }
inline ColorSet cs_add(ColorSet s, int c) { return s | (ColorSet{1} << (c - 1)); }
inline ColorSet cs_del(ColorSet s, int c) { return s & ~(ColorSet{1} << (c - 1)); }
inline int cs_size(ColorSet s) { return __builtin_popcountll(s); }
/// |S_{[c+1, n]}|: number of members strictly greater than c.
inline int cs_above(ColorSet s, int c) { return cs_size(s >> c); }

inline std::vector<int> cs_members(ColorSet s) {
  std::vector<int> v;
  for (int c = 1; s; ++c, s >>= 1)
    if (s & 1) v.push_back(c);
  return v;
}

/// Complete homogeneous symmetric polynomial h_k(alpha, beta),
/// via h_k = alpha h_{k-1} + beta^k, h_0 = 1.
inline Polynomial h_poly(int k, int n) {
  if (k < 0) throw std::invalid_argument("h_poly: negative index");
  Polynomial h = Polynomial::one(n);
  Polynomial bp = Polynomial::one(n);
  Polynomial beta = Polynomial::beta(n);
  for (int j = 1; j <= k; ++j) {
    bp *= beta;
    h = Polynomial::alpha(n) * h + bp;
  }
  return h;
}

/// (+, Sigma, +) weight for |Sigma| = k, row variable x_i:
/// (-1)^{k+1} (((alpha+gamma)(beta+gamma) x + gamma) h_{k-1} + alpha beta h_{k-2}),
/// with the k = 0 convention collapsing to the constant 1.
inline Polynomial dagger(int k, int n, int i) {
  if (k < 0) throw std::invalid_argument("dagger: negative k");
  if (k == 0) return Polynomial::one(n);
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n),
             ga = Polynomial::gamma(n), x = Polynomial::x(n, i);
  Polynomial body = ((al + ga) * (be + ga) * x + ga) * h_poly(k - 1, n);
  if (k >= 2) body += al * be * h_poly(k - 2, n);
  return (k % 2 == 0) ? -body : body;  // (-1)^{k+1}
}

/// (c, Sigma, +) exit weight for k = |Sigma| >= 1, m = |Sigma_{[c+1,n]}|:
/// (-1)^k (-beta)^m (alpha beta h_{k-3} + gamma h_{k-2}), with the k = 1
/// convention yielding (-beta)^m and k = 2 dropping the h_{-1} term.
inline Polynomial ddagger(int k, int m, int n) {
  if (k < 1 || m < 0 || m > k - 1)
    throw std::invalid_argument("ddagger: bad (k, m)");
  Polynomial bm = (-Polynomial::beta(n)).pow(m);
  if (k == 1) return bm;
  Polynomial body = Polynomial::gamma(n) * h_poly(k - 2, n);
  if (k >= 3) body += Polynomial::alpha(n) * Polynomial::beta(n) * h_poly(k - 3, n);
  Polynomial r = bm * body;
  return (k % 2 == 0) ? r : -r;  // (-1)^k
}

/// The six admissible vertex families.  Returns the forced south label and
/// the Boltzmann weight, or nothing when (west, north, east) is inadmissible.
inline std::optional<std::pair<ColorSet, Polynomial>> vertex_weight(
    HLabel west, ColorSet north, HLabel east, int n, int i) {
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n),
             ga = Polynomial::gamma(n), x = Polynomial::x(n, i);
  Polynomial one = Polynomial::one(n);
  if (west == kPlus && east == kPlus)
    return {{north, dagger(cs_size(north), n, i)}};
  if (west != kPlus && west == east) {
    int m = cs_above(north, east);
    Polynomial w = cs_has(north, east)
                       ? (one + (al + be + ga) * x) * (al * be).pow(m)
                       : x * (al * be).pow(m);
    return {{north, w}};
  }
  if (west == kPlus && east != kPlus && !cs_has(north, east)) {
    int m = cs_above(north, east);
    Polynomial w = (-al).pow(m) * (one + (al + ga) * x) * (one + (be + ga) * x);
    return {{cs_add(north, east), w}};
  }
  if (west != kPlus && east == kPlus && cs_has(north, west))
    return {{cs_del(north, west),
             ddagger(cs_size(north), cs_above(north, west), n)}};
  if (west != kPlus && east != kPlus && west < east && cs_has(north, west) &&
      !cs_has(north, east)) {
    Polynomial w = (-al).pow(cs_above(north, east)) *
                   (-be).pow(cs_above(north, west)) * (one + (al + ga) * x);
    return {{cs_del(cs_add(north, east), west), w}};
  }
  if (west != kPlus && east != kPlus && west > east && cs_has(north, west) &&
      !cs_has(north, east)) {
    ColorSet south = cs_del(cs_add(north, east), west);
    Polynomial w = (-al).pow(cs_above(south, east)) *
                   (-be).pow(cs_above(north, west)) * (one + (be + ga) * x);
    return {{south, w}};
  }
  return std::nullopt;
}

/// All (west, south, weight) triples compatible with known (north, east).
inline std::vector<std::tuple<HLabel, ColorSet, Polynomial>> west_options(
    ColorSet north, HLabel east, int n, int i) {
  std::vector<std::tuple<HLabel, ColorSet, Polynomial>> out;
  std::vector<HLabel> wests;
  wests.push_back(kPlus);
  if (east == kPlus) {
    for (int c : cs_members(north)) wests.push_back(c);
  } else if (!cs_has(north, east)) {
    wests.push_back(east);
    for (int c : cs_members(north)) wests.push_back(c);
  } else {
    wests.assign(1, east);
  }
  for (HLabel w : wests)
    if (auto r = vertex_weight(w, north, east, n, i))
      out.emplace_back(w, r->first, std::move(r->second));
  return out;
}

struct LatticeBoundary {
  int n = 0;                   // rows / colors
  int N = 0;                   // columns are N, N-1, ..., 0
  std::vector<HLabel> left;    // per row 1..n (index 0-based)
  std::vector<ColorSet> top;   // per column; top[j] is column j, j = 0..N
};

inline LatticeBoundary boundary_from(const Permutation& w1, const Permutation& w2,
                                     const Partition& mu, int N, int n) {
  if (n > 64) throw std::invalid_argument("more than 64 colors unsupported");
  if (w1.size() != n || w2.size() != n)
    throw std::invalid_argument("boundary_from: permutation size mismatch");
  Partition m = mu.padded(n);
  if (N < m[0]) throw std::invalid_argument("boundary_from: N < mu_1");
  LatticeBoundary b;
  b.n = n;
  b.N = N;
  b.left.resize(n);
  b.top.assign(N + 1, 0);
  Permutation w1i = w1.inverse(), w2i = w2.inverse();
  for (int i = 1; i <= n; ++i) {
    b.left[i - 1] = n + 1 - w1i(i);
    int col = m[i - 1];
    int color = n + 1 - w2i(i);
    if (cs_has(b.top[col], color))
      throw std::invalid_argument("boundary_from: repeated top color");
    b.top[col] = cs_add(b.top[col], color);
  }
  return b;
}

/// Boundary whose partition function is the twisted Kirillov polynomial:
/// mu = lambda + rho, N = lambda_1 + n - 1, w1 = w, w2 = w0.
inline LatticeBoundary system_for_kn(const Permutation& w, const Partition& lambda) {
  int n = w.size();
  Partition lam = lambda.padded(n);
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) mu[i] = lam[i] + (n - 1 - i);
  int N = lam[0] + n - 1;
  return boundary_from(w, Permutation::longest_element(n), Partition(std::move(mu)),
                       N, n);
}

struct LatticeState {
  // Columns run N, N-1, ..., 0 from left to right.  horiz[i][k]: k = 0 is
  // the right boundary edge of row i+1; k = j+1 is the west edge of column j
  // (so k = N+1 is the left boundary edge).
  std::vector<std::vector<HLabel>> horiz;
  // vert[r][j], r = 0..n: vertical edge above row r+1 in column j
  // (r = n is the bottom boundary).
  std::vector<std::vector<ColorSet>> vert;
  Polynomial weight;
};

/// Depth-first enumeration: rows top to bottom, vertices right to left
/// (column 0 first), so every vertex sees known (north, east) and branches
/// over west_options.  Prunes rows whose final west label misses the left
/// boundary and last-row vertices whose south is nonempty.
inline void enumerate_states(const LatticeBoundary& b,
                             const std::function<void(const LatticeState&)>& emit) {
  int n = b.n, N = b.N;
  LatticeState st;
  st.horiz.assign(n, std::vector<HLabel>(N + 2, kPlus));
  st.vert.assign(n + 1, std::vector<ColorSet>(N + 1, 0));
  st.vert[0] = b.top;
  std::vector<std::vector<Polynomial>> rowpref(
      n, std::vector<Polynomial>(N + 2, Polynomial::zero(n)));
  // rowpref[i][k]: product of weights of columns < k in row i+1 and of all
  // vertices in earlier rows.

  std::function<void(int, int)> go = [&](int row, int col) {
    if (col > N) {
      if (st.horiz[row][N + 1] != b.left[row]) return;
      if (row + 1 == n) {
        st.weight = rowpref[row][N + 1];
        emit(st);
      } else {
        rowpref[row + 1][0] = rowpref[row][N + 1];
        go(row + 1, 0);
      }
      return;
    }
    ColorSet north = st.vert[row][col];
    HLabel east = st.horiz[row][col];
    for (auto& [west, south, w] : west_options(north, east, n, row + 1)) {
      if (row + 1 == n && south != 0) continue;  // bottom must be empty
      st.horiz[row][col + 1] = west;
      st.vert[row + 1][col] = south;
      rowpref[row][col + 1] = rowpref[row][col] * w;
      go(row, col + 1);
    }
  };
  rowpref[0][0] = Polynomial::one(n);
  go(0, 0);
}

inline std::vector<LatticeState> all_states(const LatticeBoundary& b) {
  std::vector<LatticeState> out;
  enumerate_states(b, [&](const LatticeState& s) { out.push_back(s); });
  return out;
}

inline long count_states(const LatticeBoundary& b) {
  long k = 0;
  enumerate_states(b, [&](const LatticeState&) { ++k; });
  return k;
}

inline Polynomial partition_function(const LatticeBoundary& b) {
  Polynomial z = Polynomial::zero(b.n);
  enumerate_states(b, [&](const LatticeState& s) { z += s.weight; });
  return z;
}

/// Closed form of the unique state for w1 = id, w2 = w0: in the column of a
/// group of g equal mu-parts, the g exit vertices contribute the weights
/// ddagger(j, 0) for j = 1..g; every westward crossing in row i contributes
/// x_i, giving prod_i x_i^{N - mu_{n+1-i}}.
inline Polynomial seed_closed_form(const Partition& mu, int N, int n) {
  Partition m = mu.padded(n);
  if (N < m[0]) throw std::invalid_argument("seed_closed_form: N < mu_1");
  Polynomial scalar = Polynomial::one(n);
  int i = 0;
  while (i < n) {
    int j = i;
    while (j < n && m[j] == m[i]) ++j;
    for (int r = 2; r <= j - i; ++r) scalar *= ddagger(r, 0, n);
    i = j;
  }
  VarContext ctx{n};
  Monomial mono(n + 3, 0);
  for (int k = 1; k <= n; ++k) mono[ctx.x_idx(k)] = N - m[n - k];
  return scalar * Polynomial::from_monomial(n, std::move(mono), 1);
}

}  // namespace kirillov
