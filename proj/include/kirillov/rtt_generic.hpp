#pragma once

#include <array>
#include <string>
#include <vector>

#include "kirillov/poly.hpp"
#include "kirillov/ybe.hpp"

namespace kirillov {

/// Cardinality-generic RTT verifier.
///
/// Instead of fixing n and enumerating subsets, boundary tuples are grouped
/// into case classes determined by (i) which of the four horizontal labels
/// a, b, c, d are +, (ii) the relative order of the colored ones, and (iii)
/// membership of each distinct color in the top set Sigma.  All quantities
/// that depend on the ambient and set cardinalities are represented by formal
/// symbols in an auxiliary polynomial ring:
///
///   slot 1, 2     x_i, x_j (spectral parameters)
///   slot 3        H   = h_{|Sigma|-4}(alpha, beta)
///   slot 4        B4  = beta^{|Sigma|-4}
///   slot 5        SG  = (-1)^{|Sigma|}
///   slots 6..9    PAk = (-alpha)^{|Sigma_{[r_k+1,n]}|}, k-th smallest color
///   slots 10..13  PBk = (-beta)^{|Sigma_{[r_k+1,n]}|}
///
/// Higher h's are expanded through h_k = alpha h_{k-1} + beta^k, so every
/// h_{|Sigma|-4+r} (0 <= r <= 4) is a polynomial in H and B4.  SG^2 folds to
/// 1.  Negative exponent offsets of the PA/PB symbols are tracked as
/// denominators and cleared by cross-multiplication, so each case class is
/// an identity of rational functions, valid for every n and every Sigma
/// with the given membership pattern and |Sigma| >= 4.  (Small-cardinality
/// patterns are covered exhaustively by verify_rtt.)
namespace rtt_generic_detail {

constexpr int kRing = 13;
constexpr int kXi = 1, kXj = 2, kH = 3, kB4 = 4, kSg = 5;
inline int pa_slot(int k) { return 5 + k; }   // k = 1..4
inline int pb_slot(int k) { return 9 + k; }   // k = 1..4

inline Polynomial sym(int slot) { return Polynomial::x(kRing, slot); }
inline Polynomial al() { return Polynomial::alpha(kRing); }
inline Polynomial be() { return Polynomial::beta(kRing); }
inline Polynomial ga() { return Polynomial::gamma(kRing); }
inline Polynomial one() { return Polynomial::one(kRing); }

/// h_{|Sigma|-4+r} for 0 <= r <= 4, in terms of H and B4.
inline const Polynomial& g_chain(int r) {
  static const std::vector<Polynomial> chain = [] {
    std::vector<Polynomial> v;
    v.push_back(sym(kH));
    for (int r = 1; r <= 4; ++r)
      v.push_back(al() * v.back() + sym(kB4) * be().pow(r));
    return v;
  }();
  if (r < 0 || r > 4) throw std::logic_error("g_chain: index out of range");
  return chain[r];
}

/// (-1)^{|Sigma| + delta}
inline Polynomial sign_pm(int delta) {
  return (delta & 1) ? -sym(kSg) : sym(kSg);
}

/// Membership pattern of the evolving vertical set relative to the baseline
/// Sigma: bit[k] for each of the m relevant colors (ordered r_1 < ... < r_m).
struct SymSet {
  std::array<int, 4> bit{};
  int m = 0;

  bool operator==(const SymSet&) const = default;
};

inline int delta(const SymSet& s, const SymSet& base) {
  int d = 0;
  for (int k = 0; k < s.m; ++k) d += s.bit[k] - base.bit[k];
  return d;
}

/// |S_{[r_k+1, n]}| - |Sigma_{[r_k+1, n]}|: contribution of colors above r_k.
inline int offset_above(const SymSet& s, const SymSet& base, int k) {
  int d = 0;
  for (int l = k; l < s.m; ++l) d += s.bit[l] - base.bit[l];
  return d;
}

/// A weight with denominator (-alpha)^dA (-beta)^dB.
struct SymWeight {
  Polynomial p = Polynomial::zero(kRing);
  int dA = 0, dB = 0;

  SymWeight& mul(const Polynomial& q) {
    p *= q;
    return *this;
  }
  /// multiply by (-alpha)^{|Sigma_{[r_k+1,n]}| + e}
  SymWeight& mul_pa(int k, int e) {
    p *= sym(pa_slot(k));
    if (e >= 0)
      p *= (-al()).pow(e);
    else
      dA += -e;
    return *this;
  }
  /// multiply by (-beta)^{|Sigma_{[r_k+1,n]}| + e}
  SymWeight& mul_pb(int k, int e) {
    p *= sym(pb_slot(k));
    if (e >= 0)
      p *= (-be()).pow(e);
    else
      dB += -e;
    return *this;
  }
};

/// Symbolic T-vertex: west/east labels are 0 (+) or a relevant color index
/// 1..m; the vertical set is a membership pattern over the relevant colors.
/// Mirrors vertex_weight family by family.
inline std::optional<std::pair<SymSet, SymWeight>> sym_vertex(
    int west, const SymSet& s, int east, const SymSet& base, int xslot) {
  Polynomial x = sym(xslot);
  int dl = delta(s, base);
  auto has = [&](int k) { return k >= 1 && s.bit[k - 1] == 1; };

  if (west == 0 && east == 0) {
    // dagger(|S|): (-1)^{|S|+1} (((a+g)(b+g)x + g) h_{|S|-1} + ab h_{|S|-2})
    SymWeight w;
    w.p = -sign_pm(dl) * (((al() + ga()) * (be() + ga()) * x + ga()) *
                              g_chain(3 + dl) +
                          al() * be() * g_chain(2 + dl));
    return {{s, std::move(w)}};
  }
  if (west != 0 && west == east) {
    SymWeight w;
    w.p = has(east) ? one() + (al() + be() + ga()) * x : x;
    // (alpha beta)^{|S_{[r+1,n]}|} = PA PB (alpha beta)^{offset}
    int off = offset_above(s, base, east);
    w.mul_pa(east, off).mul_pb(east, off);
    return {{s, std::move(w)}};
  }
  if (west == 0 && east != 0 && !has(east)) {
    SymSet south = s;
    south.bit[east - 1] = 1;
    SymWeight w;
    w.p = (one() + (al() + ga()) * x) * (one() + (be() + ga()) * x);
    w.mul_pa(east, offset_above(s, base, east));
    return {{south, std::move(w)}};
  }
  if (west != 0 && east == 0 && has(west)) {
    // ddagger(|S|, .): (-1)^{|S|} (-beta)^{|S_{[r+1,n]}|} (ab h_{|S|-3} + g h_{|S|-2})
    SymSet south = s;
    south.bit[west - 1] = 0;
    SymWeight w;
    w.p = sign_pm(dl) *
          (al() * be() * g_chain(1 + dl) + ga() * g_chain(2 + dl));
    w.mul_pb(west, offset_above(s, base, west));
    return {{south, std::move(w)}};
  }
  if (west != 0 && east != 0 && west < east && has(west) && !has(east)) {
    SymSet south = s;
    south.bit[west - 1] = 0;
    south.bit[east - 1] = 1;
    SymWeight w;
    w.p = one() + (al() + ga()) * x;
    w.mul_pa(east, offset_above(s, base, east));
    w.mul_pb(west, offset_above(s, base, west));
    return {{south, std::move(w)}};
  }
  if (west != 0 && east != 0 && west > east && has(west) && !has(east)) {
    SymSet south = s;
    south.bit[west - 1] = 0;
    south.bit[east - 1] = 1;
    SymWeight w;
    w.p = one() + (be() + ga()) * x;
    w.mul_pa(east, offset_above(south, base, east));
    w.mul_pb(west, offset_above(s, base, west));
    return {{south, std::move(w)}};
  }
  return std::nullopt;
}

/// R-weight over relevant color indices (0 = +), spectral slots fixed.
inline Polynomial sym_r_weight(int a, int b, int c, int d) {
  Polynomial x_i = sym(kXi), x_j = sym(kXj);
  if (a == b && b == c && c == d) {
    const Polynomial& u = (a == 0) ? x_i : x_j;
    const Polynomial& v = (a == 0) ? x_j : x_i;
    return (al() + be() + ga()) * u + ga() * v + one() +
           (be() + ga()) * (al() + ga()) * u * v;
  }
  if (a == c && b == d && a != b)
    return (a < b) ? x_j - x_i : al() * be() * (x_j - x_i);
  if (a == d && b == c && a != b) {
    if (a == 0) return (one() + (be() + ga()) * x_i) * (one() + (al() + ga()) * x_i);
    if (b == 0) return (one() + (be() + ga()) * x_j) * (one() + (al() + ga()) * x_j);
    if (a < b) return (one() + (be() + ga()) * x_j) * (one() + (al() + ga()) * x_i);
    return (one() + (be() + ga()) * x_i) * (one() + (al() + ga()) * x_j);
  }
  return Polynomial::zero(kRing);
}

/// Sum terms over a common denominator.
inline SymWeight combine(const std::vector<SymWeight>& terms) {
  SymWeight total;
  for (const auto& t : terms) {
    total.dA = std::max(total.dA, t.dA);
    total.dB = std::max(total.dB, t.dB);
  }
  for (const auto& t : terms)
    total.p += t.p * (-al()).pow(total.dA - t.dA) * (-be()).pow(total.dB - t.dB);
  return total;
}

/// Reduce SG^2 = 1.
inline Polynomial fold_sign(const Polynomial& p) {
  Polynomial out(kRing);
  for (const auto& [m, c] : p.terms()) {
    Monomial mm = m;
    mm[2 + kSg] %= 2;  // exponent slot of SG in the monomial layout
    out += Polynomial::from_monomial(kRing, std::move(mm), c);
  }
  return out;
}

}  // namespace rtt_generic_detail

/// Verifies the RTT identity across all case classes simultaneously for
/// every color count and every large-cardinality Sigma.
inline VerifyReport verify_rtt_generic() {
  using namespace rtt_generic_detail;
  VerifyReport rep;

  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      for (int c = 0; c <= 4; ++c)
        for (int d = 0; d <= 4; ++d) {
          // the distinct colors used must be exactly 1..m for some m, so each
          // case class is enumerated once
          int m = std::max(std::max(a, b), std::max(c, d));
          std::array<bool, 5> used{};
          for (int l : {a, b, c, d}) used[l] = true;
          bool canonical = true;
          for (int k = 1; k <= m; ++k) canonical = canonical && used[k];
          if (!canonical) continue;

          for (int mask = 0; mask < (1 << m); ++mask) {
            SymSet base;
            base.m = m;
            for (int k = 0; k < m; ++k) base.bit[k] = (mask >> k) & 1;

            // bottom boundary forced by color conservation
            SymSet bottom = base;
            bool feasible = true;
            for (int k = 1; k <= m; ++k) {
              int v = base.bit[k - 1] + (a == k) + (b == k) - (c == k) - (d == k);
              if (v < 0 || v > 1) feasible = false;
              bottom.bit[k - 1] = v;
            }
            if (!feasible) continue;
            ++rep.cases_checked;

            std::vector<SymWeight> lhs_terms, rhs_terms;
            for (int hi = 0; hi <= m; ++hi)
              for (int hj = 0; hj <= m; ++hj) {
                Polynomial rw = sym_r_weight(a, b, hi, hj);
                if (!rw.is_zero()) {
                  if (auto t1 = sym_vertex(hi, base, c, base, kXi))
                    if (auto t2 = sym_vertex(hj, t1->first, d, base, kXj))
                      if (t2->first == bottom) {
                        SymWeight t;
                        t.p = rw * t1->second.p * t2->second.p;
                        t.dA = t1->second.dA + t2->second.dA;
                        t.dB = t1->second.dB + t2->second.dB;
                        lhs_terms.push_back(std::move(t));
                      }
                }
                Polynomial rw2 = sym_r_weight(hi, hj, c, d);
                if (!rw2.is_zero()) {
                  if (auto t1 = sym_vertex(b, base, hj, base, kXj))
                    if (auto t2 = sym_vertex(a, t1->first, hi, base, kXi))
                      if (t2->first == bottom) {
                        SymWeight t;
                        t.p = rw2 * t1->second.p * t2->second.p;
                        t.dA = t1->second.dA + t2->second.dA;
                        t.dB = t1->second.dB + t2->second.dB;
                        rhs_terms.push_back(std::move(t));
                      }
                }
              }
            SymWeight lhs = combine(lhs_terms), rhs = combine(rhs_terms);
            Polynomial l = fold_sign(lhs.p * (-al()).pow(rhs.dA) *
                                     (-be()).pow(rhs.dB));
            Polynomial r = fold_sign(rhs.p * (-al()).pow(lhs.dA) *
                                     (-be()).pow(lhs.dB));
            if (l != r)
              rep.failures.push_back("a=" + std::to_string(a) +
                                     " b=" + std::to_string(b) +
                                     " c=" + std::to_string(c) +
                                     " d=" + std::to_string(d) +
                                     " mask=" + std::to_string(mask));
          }
        }
  return rep;
}

}  // namespace kirillov
