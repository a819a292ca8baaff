#pragma once

#include <random>
#include <string>
#include <vector>

#include "kirillov/ddop.hpp"
#include "kirillov/lattice.hpp"
#include "kirillov/poly.hpp"

namespace kirillov {

/// R-vertex weight with the endomorphism convention
/// R(v_a (x) v_b) = sum_{c,d} R_{a,b}^{c,d} v_c (x) v_d:
/// (a, b) enter at (south-west, north-west), (c, d) leave at
/// (north-east, south-east); the south-west strand carries x_i.
/// Weights depend only on which labels are + and the relative order of the
/// colored ones, never on absolute color values.
inline Polynomial r_weight(HLabel a, HLabel b, HLabel c, HLabel d, int n,
                           int xi, int xj) {
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n),
             ga = Polynomial::gamma(n), one = Polynomial::one(n);
  Polynomial x_i = Polynomial::x(n, xi), x_j = Polynomial::x(n, xj);
  if (a == b && b == c && c == d) {
    // diagonal families: colored A1 carries x_j first, uncolored A2 carries x_i
    const Polynomial& u = (a == kPlus) ? x_i : x_j;
    const Polynomial& v = (a == kPlus) ? x_j : x_i;
    return (al + be + ga) * u + ga * v + one + (be + ga) * (al + ga) * u * v;
  }
  if (a == c && b == d && a != b) {
    // straight-through: B when the south-west label is smaller (+ counts as
    // smallest), C otherwise
    Polynomial diff = x_j - x_i;
    return (a < b) ? diff : al * be * diff;
  }
  if (a == d && b == c && a != b) {
    // exchange families
    if (a == kPlus) return (one + (be + ga) * x_i) * (one + (al + ga) * x_i);  // D2
    if (b == kPlus) return (one + (be + ga) * x_j) * (one + (al + ga) * x_j);  // E2
    if (a < b) return (one + (be + ga) * x_j) * (one + (al + ga) * x_i);       // D1
    return (one + (be + ga) * x_i) * (one + (al + ga) * x_j);                  // E1
  }
  return Polynomial::zero(n);
}

struct VerifyReport {
  long cases_checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive RTT check: for every boundary tuple (a, b, Sigma, c, d, Sigma')
/// with labels in {+, 1..n_colors}, the two three-vertex partition functions
/// agree.  Left side: the R-vertex feeds the two T-vertices; right side: the
/// T-vertices feed the R-vertex.
inline VerifyReport verify_rtt(int n_colors) {
  if (n_colors < 1 || n_colors > 4)
    throw std::invalid_argument("verify_rtt: n_colors in 1..4 required");
  int n = 2;  // ring carries x_i = x_1, x_j = x_2
  const int xi = 1, xj = 2;
  VerifyReport rep;
  std::vector<HLabel> labels(n_colors + 1);
  for (int l = 0; l <= n_colors; ++l) labels[l] = l;
  ColorSet full = (n_colors == 64) ? ~ColorSet{0} : (ColorSet{1} << n_colors) - 1;

  auto counts_match = [&](HLabel a, HLabel b, ColorSet sig, HLabel c, HLabel d,
                          ColorSet sigp) {
    for (int col = 1; col <= n_colors; ++col) {
      int in = (a == col) + (b == col) + (cs_has(sig, col) ? 1 : 0);
      int out = (c == col) + (d == col) + (cs_has(sigp, col) ? 1 : 0);
      if (in != out) return false;
    }
    return true;
  };

  for (HLabel a : labels)
    for (HLabel b : labels)
      for (HLabel c : labels)
        for (HLabel d : labels)
          for (ColorSet sig = 0; sig <= full; ++sig)
            for (ColorSet sigp = 0; sigp <= full; ++sigp) {
              if (!counts_match(a, b, sig, c, d, sigp)) continue;
              ++rep.cases_checked;
              Polynomial lhs = Polynomial::zero(n), rhs = Polynomial::zero(n);
              for (HLabel hi : labels)
                for (HLabel hj : labels) {
                  // LHS: R(a,b -> hi,hj), then T-row i (west hi, north Sigma,
                  // east c), then T-row j below it ending at Sigma'.
                  Polynomial rw = r_weight(a, b, hi, hj, n, xi, xj);
                  if (!rw.is_zero()) {
                    if (auto t1 = vertex_weight(hi, sig, c, n, xi))
                      if (auto t2 = vertex_weight(hj, t1->first, d, n, xj))
                        if (t2->first == sigp)
                          lhs += rw * t1->second * t2->second;
                  }
                  // RHS: T-row j (west b, north Sigma), T-row i below it,
                  // then R(hi,hj -> c,d).
                  Polynomial rw2 = r_weight(hi, hj, c, d, n, xi, xj);
                  if (!rw2.is_zero()) {
                    if (auto t1 = vertex_weight(b, sig, hj, n, xj))
                      if (auto t2 = vertex_weight(a, t1->first, hi, n, xi))
                        if (t2->first == sigp)
                          rhs += rw2 * t1->second * t2->second;
                  }
                }
              if (lhs != rhs)
                rep.failures.push_back(
                    "a=" + std::to_string(a) + " b=" + std::to_string(b) +
                    " c=" + std::to_string(c) + " d=" + std::to_string(d) +
                    " Sigma=" + std::to_string(sig) +
                    " Sigma'=" + std::to_string(sigp));
            }
  return rep;
}

/// RRR check with 3 colors: R12 R13 R23 = R23 R13 R12 on the 64-dimensional
/// triple tensor space, symbolically in alpha, beta, gamma, x1, x2, x3.
inline VerifyReport verify_rrr() {
  const int n = 3, dim = 4, dim3 = dim * dim * dim;
  using Matrix = std::vector<std::vector<Polynomial>>;
  auto zero_matrix = [&] {
    return Matrix(dim3, std::vector<Polynomial>(dim3, Polynomial::zero(n)));
  };

  // R acting on tensor positions (p, q) of (l0, l1, l2), 0-based, with
  // spectral parameters (x_{p+1}, x_{q+1}).
  auto r_on = [&](int p, int q) {
    Matrix m = zero_matrix();
    for (int in = 0; in < dim3; ++in) {
      int l[3] = {in / 16, (in / 4) % 4, in % 4};
      for (int c = 0; c < dim; ++c)
        for (int d = 0; d < dim; ++d) {
          Polynomial w = r_weight(l[p], l[q], c, d, n, p + 1, q + 1);
          if (w.is_zero()) continue;
          int o[3] = {l[0], l[1], l[2]};
          o[p] = c;
          o[q] = d;
          int out = o[0] * 16 + o[1] * 4 + o[2];
          m[out][in] += w;
        }
    }
    return m;
  };
  auto mul = [&](const Matrix& a, const Matrix& b) {
    Matrix m = zero_matrix();
    for (int i = 0; i < dim3; ++i)
      for (int k = 0; k < dim3; ++k) {
        if (a[i][k].is_zero()) continue;
        for (int j = 0; j < dim3; ++j)
          if (!b[k][j].is_zero()) m[i][j] += a[i][k] * b[k][j];
      }
    return m;
  };

  Matrix r12 = r_on(0, 1), r13 = r_on(0, 2), r23 = r_on(1, 2);
  Matrix lhs = mul(mul(r12, r13), r23);
  Matrix rhs = mul(mul(r23, r13), r12);
  VerifyReport rep;
  for (int i = 0; i < dim3; ++i)
    for (int j = 0; j < dim3; ++j) {
      ++rep.cases_checked;
      if (lhs[i][j] != rhs[i][j])
        rep.failures.push_back("entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
    }
  return rep;
}

/// Degeneration alpha = gamma = 0: family-by-family expected values, plus the
/// printed 4x4 one-color matrix in the basis order v_+ < v_1 with pairs
/// ordered (+,+), (+,1), (1,+), (1,1); rows index inputs (a,b), columns
/// outputs (c,d).
inline VerifyReport degenerate_r_check() {
  const int n = 2, xi = 1, xj = 2;
  VerifyReport rep;
  Polynomial be = Polynomial::beta(n), one = Polynomial::one(n);
  Polynomial x_i = Polynomial::x(n, xi), x_j = Polynomial::x(n, xj);
  std::map<int, Polynomial> sub;
  sub.emplace(VarContext::alpha_idx, Polynomial::zero(n));
  sub.emplace(VarContext::gamma_idx, Polynomial::zero(n));
  auto deg = [&](HLabel a, HLabel b, HLabel c, HLabel d) {
    return r_weight(a, b, c, d, n, xi, xj).substitute(sub);
  };
  auto expect = [&](const char* name, const Polynomial& got,
                    const Polynomial& want) {
    ++rep.cases_checked;
    if (got != want) rep.failures.push_back(name);
  };
  // colors 1 < 2 stand in for generic a < b
  expect("A1", deg(1, 1, 1, 1), one + be * x_j);
  expect("A2", deg(kPlus, kPlus, kPlus, kPlus), one + be * x_i);
  expect("B colored", deg(1, 2, 1, 2), x_j - x_i);
  expect("B uncolored", deg(kPlus, 1, kPlus, 1), x_j - x_i);
  expect("C colored", deg(2, 1, 2, 1), Polynomial::zero(n));
  expect("C uncolored", deg(1, kPlus, 1, kPlus), Polynomial::zero(n));
  expect("D1", deg(1, 2, 2, 1), one + be * x_j);
  expect("E1", deg(2, 1, 1, 2), one + be * x_i);
  expect("D2", deg(kPlus, 1, 1, kPlus), one + be * x_i);
  expect("E2", deg(1, kPlus, kPlus, 1), one + be * x_j);

  // printed one-color matrix
  Polynomial z = Polynomial::zero(n);
  Polynomial want[4][4] = {{one + be * x_i, z, z, z},
                           {z, x_j - x_i, one + be * x_i, z},
                           {z, one + be * x_j, z, z},
                           {z, z, z, one + be * x_j}};
  HLabel pairs[4][2] = {{kPlus, kPlus}, {kPlus, 1}, {1, kPlus}, {1, 1}};
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      expect(("matrix entry (" + std::to_string(r + 1) + "," +
              std::to_string(c + 1) + ")")
                 .c_str(),
             deg(pairs[r][0], pairs[r][1], pairs[c][0], pairs[c][1]),
             want[r][c]);
  return rep;
}

/// Exact division of p by (x_{i+1} - x_i); throws on a nonzero remainder.
inline Polynomial exact_divide_xdiff(Polynomial p, int i) {
  int n = p.n();
  VarContext ctx{n};
  int u = ctx.x_idx(i), v = ctx.x_idx(i + 1);
  Polynomial quot(n);
  while (!p.is_zero()) {
    auto lead = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it)
      if (it->first[v] > lead->first[v]) lead = it;
    if (lead->first[v] == 0)
      throw std::logic_error("exact_divide_xdiff: nonzero remainder");
    Monomial q = lead->first;
    q[v] -= 1;
    Polynomial qt = Polynomial::from_monomial(n, q, lead->second);
    quot += qt;
    p -= qt * (Polynomial::x(n, i + 1) - Polynomial::x(n, i));
  }
  return quot;
}

/// Train-argument operator identity: with (x_i, x_j) = (x_i, x_{i+1}),
/// (wt_A2 . f^{s_i} - wt_D1 . f) / (x_{i+1} - x_i) = T_i f for the reduced
/// symbolic family; the division must be exact.
inline VerifyReport train_recursion_identity(int i, int n, int trials = 100,
                                             unsigned seed = 12345) {
  VerifyReport rep;
  Polynomial a2 = r_weight(kPlus, kPlus, kPlus, kPlus, n, i, i + 1);
  Polynomial d1 = r_weight(1, 2, 2, 1, n, i, i + 1);
  GeneralParams p = ReducedParams::symbolic().general(n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> ed(0, 4), cd(-4, 4), td(1, 5);
  for (int t = 0; t < trials; ++t) {
    Polynomial f(n);
    int terms = td(rng);
    for (int k = 0; k < terms; ++k) {
      Monomial m(n + 3, 0);
      for (auto& e : m) e = ed(rng);
      f += Polynomial::from_monomial(n, std::move(m), cd(rng));
    }
    ++rep.cases_checked;
    try {
      Polynomial lhs = exact_divide_xdiff(a2 * f.swap_vars(i) - d1 * f, i);
      if (lhs != apply_T_general(p, i, f))
        rep.failures.push_back("mismatch for f = " + f.str());
    } catch (const std::logic_error&) {
      rep.failures.push_back("inexact division for f = " + f.str());
    }
  }
  return rep;
}

}  // namespace kirillov
