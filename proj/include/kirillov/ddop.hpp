#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kirillov/poly.hpp"
#include "kirillov/weyl.hpp"

namespace kirillov {

/// The five-parameter operator family
///   T_i = a + (b x_i + c x_{i+1} + h + e x_i x_{i+1}) d_i,
/// with each parameter an arbitrary polynomial (typically a constant or a
/// symbol in alpha, beta, gamma).
struct GeneralParams {
  Polynomial a, b, c, h, e;

  GeneralParams(Polynomial a_, Polynomial b_, Polynomial c_, Polynomial h_,
                Polynomial e_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), h(std::move(h_)),
        e(std::move(e_)) {}

  static GeneralParams from_ints(int n, long a_, long b_, long c_, long h_,
                                 long e_) {
    return GeneralParams(Polynomial::constant(n, a_), Polynomial::constant(n, b_),
                         Polynomial::constant(n, c_), Polynomial::constant(n, h_),
                         Polynomial::constant(n, e_));
  }
};

/// (a+b)(a-c) + he; the T_i braid iff this vanishes.
inline Polynomial braid_condition(const GeneralParams& p) {
  return (p.a + p.b) * (p.a - p.c) + p.h * p.e;
}

/// The reduced three-parameter family: a = -beta, b = alpha+beta+gamma,
/// c = gamma, h = 1, e = (alpha+gamma)(beta+gamma), which braids
/// identically.  Optionally specializes alpha, beta, gamma.
struct ReducedParams {
  std::optional<Polynomial> alpha, beta, gamma;  // empty = stay symbolic

  static ReducedParams symbolic() { return {}; }

  static ReducedParams specialized_ints(int n, long a, long b, long g) {
    ReducedParams p;
    p.alpha = Polynomial::constant(n, a);
    p.beta = Polynomial::constant(n, b);
    p.gamma = Polynomial::constant(n, g);
    return p;
  }

  GeneralParams general(int n) const {
    Polynomial al = alpha.value_or(Polynomial::alpha(n));
    Polynomial be = beta.value_or(Polynomial::beta(n));
    Polynomial ga = gamma.value_or(Polynomial::gamma(n));
    return GeneralParams(-be, al + be + ga, ga, Polynomial::one(n),
                         (al + ga) * (be + ga));
  }

  /// Substitution sending a symbolic-parameter polynomial into this
  /// specialization.
  Polynomial apply_to(const Polynomial& f) const {
    std::map<int, Polynomial> sub;
    if (alpha) sub.emplace(VarContext::alpha_idx, *alpha);
    if (beta) sub.emplace(VarContext::beta_idx, *beta);
    if (gamma) sub.emplace(VarContext::gamma_idx, *gamma);
    return sub.empty() ? f : f.substitute(sub);
  }
};

inline Polynomial apply_T_general(const GeneralParams& p, int i,
                                  const Polynomial& f) {
  int n = f.n();
  Polynomial coeff = p.b * Polynomial::x(n, i) + p.c * Polynomial::x(n, i + 1) +
                     p.h + p.e * Polynomial::x(n, i) * Polynomial::x(n, i + 1);
  return p.a * f + coeff * f.divided_difference(i);
}

/// T_{i_1} o ... o T_{i_l} applied to f: the rightmost letter acts first.
inline Polynomial apply_T_word(const GeneralParams& p, const std::vector<int>& word,
                               const Polynomial& f) {
  Polynomial r = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = apply_T_general(p, *it, r);
  return r;
}

/// Staircase seed exponents d_i = lambda_1 - lambda_{n+1-i} + n - i.
inline Polynomial twisted_seed(int n, const Partition& lambda) {
  Partition lam = lambda.padded(n);
  Monomial m(n + 3, 0);
  VarContext ctx{n};
  for (int i = 1; i <= n; ++i)
    m[ctx.x_idx(i)] = lam[0] - lam[n - i] + n - i;
  return Polynomial::from_monomial(n, std::move(m), 1);
}

/// Twisted Kirillov polynomial KN_w(x; lambda) for the reduced family.
inline Polynomial kirillov_poly(const Permutation& w, const Partition& lambda,
                                const ReducedParams& params) {
  int n = w.size();
  return apply_T_word(params.general(n), w.reduced_word(), twisted_seed(n, lambda));
}

/// Generalized Schubert polynomial: T_{w^{-1} w_0}(x^rho).
inline Polynomial generalized_schubert(const Permutation& w,
                                       const GeneralParams& p) {
  int n = w.size();
  if (!braid_condition(p).is_zero())
    throw std::invalid_argument("parameters do not satisfy the braid condition");
  Permutation u = w.inverse() * Permutation::longest_element(n);
  return apply_T_word(p, u.reduced_word(), twisted_seed(n, Partition::zero(n)));
}

/// Generalized key polynomial: T_{v_zeta}(x^{zeta+}).
inline Polynomial key_polynomial(const Composition& zeta, const GeneralParams& p) {
  int n = zeta.size();
  if (!braid_condition(p).is_zero())
    throw std::invalid_argument("parameters do not satisfy the braid condition");
  auto [zplus, v] = sort_composition(zeta);
  Monomial m(n + 3, 0);
  VarContext ctx{n};
  for (int i = 1; i <= n; ++i) m[ctx.x_idx(i)] = zplus[i - 1];
  return apply_T_word(p, v.reduced_word(), Polynomial::from_monomial(n, std::move(m), 1));
}

inline Polynomial key_polynomial(const Composition& zeta, const ReducedParams& params) {
  return key_polynomial(zeta, params.general(zeta.size()));
}

/// Di Francesco--Zinn-Justin polynomial: KN_w at alpha = beta = 1, gamma = 0,
/// lambda = 0.
inline Polynomial dz_polynomial(const Permutation& w) {
  int n = w.size();
  return kirillov_poly(w, Partition::zero(n),
                       ReducedParams::specialized_ints(n, 1, 1, 0));
}

/// Classical divided-difference route, used as an independent oracle: the
/// monomial-wise formula d_i(x^a y^b) = x^min y^min * (complete homogeneous
/// sum), never touching the synthetic-division path.
inline Polynomial divided_difference_oracle(const Polynomial& f, int i) {
  int n = f.n();
  VarContext ctx{n};
  int u = ctx.x_idx(i), v = ctx.x_idx(i + 1);
  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    int a = m[u], b = m[v];
    if (a == b) continue;
    int lo = std::min(a, b), hi = std::max(a, b);
    Int sign = (a > b) ? 1 : -1;
    // (x^b y^a - x^a y^b) / (y - x) summed as x^lo y^lo * h_{hi-lo-1}(x, y)
    for (int k = 0; k <= hi - lo - 1; ++k) {
      Monomial mm = m;
      mm[u] = lo + k;
      mm[v] = hi - 1 - k;
      out += Polynomial::from_monomial(n, std::move(mm), sign * c);
    }
  }
  return out;
}

/// Classical Schubert polynomial via plain divided differences only.
inline Polynomial schubert_classical(const Permutation& w) {
  int n = w.size();
  Permutation u = w.inverse() * Permutation::longest_element(n);
  Polynomial r = twisted_seed(n, Partition::zero(n));
  auto word = u.reduced_word();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = divided_difference_oracle(r, *it);
  return r;
}

}  // namespace kirillov
