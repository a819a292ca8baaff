#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "kirillov/analysis.hpp"
#include "kirillov/ddop.hpp"
#include "kirillov/lattice.hpp"
#include "kirillov/rtt_generic.hpp"
#include "kirillov/weyl.hpp"
#include "kirillov/ybe.hpp"

namespace kirillov {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // empty on pass
  long long elapsed_ms = 0;
};

namespace acceptance_detail {

inline Polynomial random_poly(std::mt19937& rng, int n, int nterms, int maxexp) {
  Polynomial p(n);
  std::uniform_int_distribution<int> ed(0, maxexp), cd(-5, 5);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(n + 3, 0);
    for (auto& e : m) e = ed(rng);
    p += Polynomial::from_monomial(n, std::move(m), cd(rng));
  }
  return p;
}

inline void all_reduced_words(const Permutation& w, std::vector<int>& prefix,
                              std::vector<std::vector<int>>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i = 1; i < w.size(); ++i)
    if (w.inverse()(i) > w.inverse()(i + 1)) {
      prefix.push_back(i);
      all_reduced_words(Permutation::simple(i, w.size()) * w, prefix, out);
      prefix.pop_back();
    }
}

struct Check {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void expect(bool ok, const std::string& why) {
    if (!ok) fail(why);
  }
};

inline void crit_worked_example(Check& c) {
  int n = 3;
  Permutation w = Permutation::simple(2, n);
  Partition lam({1, 1, 0});
  Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n),
             ga = Polynomial::gamma(n);
  Polynomial x1 = Polynomial::x(n, 1), x2 = Polynomial::x(n, 2),
             x3 = Polynomial::x(n, 3);
  Polynomial want = x1.pow(3) * (Polynomial::one(n) + (al + ga) * x2 + ga * x3 +
                                 (al + ga) * (be + ga) * x2 * x3);
  c.expect(kirillov_poly(w, lam, ReducedParams::symbolic()) == want,
           "operator value differs");
  auto b = system_for_kn(w, lam);
  c.expect(partition_function(b) == want, "lattice value differs");
  c.expect(count_states(b) == 2, "state count != 2");
}

inline void crit_three_states(Check& c) {
  int n = 3;
  Permutation w1 = product_of_word({1, 2}, n), w2 = Permutation::simple(2, n);
  auto b = boundary_from(w1, w2, Partition({3, 1, 1}), 6, n);
  c.expect(count_states(b) == 3, "state count != 3");
}

inline void crit_main_identity(Check& c) {
  for (int n : {2, 3, 4}) {
    std::vector<std::vector<int>> lams = {{}, {1}, {1, 1}, {2, 1}};
    for (auto lam : lams) {
      lam.resize(n, 0);
      Partition l(lam);
      for (const auto& w : Permutation::all(n)) {
        Polynomial kn = kirillov_poly(w, l, ReducedParams::symbolic());
        if (kn != partition_function(system_for_kn(w, l)))
          c.fail("mismatch at n=" + std::to_string(n) + " w=" + w.str());
      }
    }
  }
}

inline void crit_seed(Check& c) {
  std::mt19937 rng(7401);
  std::uniform_int_distribution<int> nd(1, 4), pd(0, 3), extra(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    int n = nd(rng);
    std::vector<int> mu(n);
    for (auto& m : mu) m = pd(rng);
    std::sort(mu.rbegin(), mu.rend());
    Partition m(mu);
    int N = mu[0] + extra(rng);
    auto b = boundary_from(Permutation::identity(n),
                           Permutation::longest_element(n), m, N, n);
    if (count_states(b) != 1 || partition_function(b) != seed_closed_form(m, N, n))
      c.fail("seed mismatch at trial " + std::to_string(trial));
  }
}

inline void crit_rtt(Check& c) {
  for (int nc : {1, 2, 3})
    c.expect(verify_rtt(nc).ok(), "rtt failed at " + std::to_string(nc));
  auto g = verify_rtt_generic();
  c.expect(g.ok() && g.cases_checked == 183, "generic rtt failed");
}

inline void crit_rrr(Check& c) {
  auto rep = verify_rrr();
  c.expect(rep.ok() && rep.cases_checked == 4096, "rrr failed");
}

inline void crit_degenerate(Check& c) {
  c.expect(degenerate_r_check().ok(), "degenerate check failed");
}

inline void crit_hecke_braid(Check& c) {
  std::mt19937 rng(9130);
  for (int n = 2; n <= 4; ++n) {
    GeneralParams p = ReducedParams::symbolic().general(n);
    Polynomial al = Polynomial::alpha(n), be = Polynomial::beta(n);
    for (int i = 1; i < n; ++i)
      for (int t = 0; t < 100; ++t) {
        Polynomial f = random_poly(rng, n, 3, 3);
        Polynomial tf = apply_T_general(p, i, f);
        if (apply_T_general(p, i, tf) != (al - be) * tf + al * be * f)
          c.fail("hecke failed at n=" + std::to_string(n));
      }
  }
  int n = 3;
  GeneralParams good = ReducedParams::symbolic().general(n);
  c.expect(braid_condition(good).is_zero(), "reduced family not braiding");
  for (int t = 0; t < 10; ++t) {
    Polynomial f = random_poly(rng, n, 4, 3);
    if (apply_T_word(good, {1, 2, 1}, f) != apply_T_word(good, {2, 1, 2}, f))
      c.fail("braid relation failed for reduced family");
  }
  GeneralParams bad = GeneralParams::from_ints(n, 1, 0, 0, 1, 0);
  bool found = false;
  for (int a = 0; a <= 3 && !found; ++a)
    for (int b = 0; b <= 3 && !found; ++b)
      for (int d = 0; d <= 3 && !found; ++d) {
        Monomial m(n + 3, 0);
        VarContext ctx{n};
        m[ctx.x_idx(1)] = a;
        m[ctx.x_idx(2)] = b;
        m[ctx.x_idx(3)] = d;
        Polynomial f = Polynomial::from_monomial(n, std::move(m), 1);
        found = apply_T_word(bad, {1, 2, 1}, f) != apply_T_word(bad, {2, 1, 2}, f);
      }
  c.expect(found, "no braid-violating witness for (1,0,0,1,0)");
}

inline void crit_train(Check& c) {
  for (int n : {2, 3, 4})
    for (int i = 1; i < n; ++i) {
      auto rep = train_recursion_identity(i, n, 100);
      if (!rep.ok())
        c.fail("train failed at n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
}

inline void crit_positivity(Check& c) {
  c.expect(scan_positivity(4, PositivityMode::gamma_zero).negatives == 0,
           "gamma=0 scan has negatives");
  auto neg = negative_witnesses(4);
  c.expect(neg.size() == 2 && neg[0].w.oneline() == std::vector<int>{3, 4, 2, 1} &&
               neg[1].w.oneline() == std::vector<int>{4, 3, 1, 2},
           "symbolic negative set differs");
  auto key = key_positivity_counterexample();
  c.expect(key.contained_in_staircase && key.has_negative,
           "key counterexample missing");
  c.expect(scan_positivity(4, PositivityMode::gamma_eq_minus_alpha_minus_beta)
                   .negatives == 0,
           "sign-flipped scan has negatives");
  auto dz = scan_positivity(4, PositivityMode::dz);
  c.expect(dz.negatives == 0, "dz scan has negatives");
  for (const auto& w : Permutation::all(4)) {
    Polynomial p = dz_polynomial(w);
    for (const auto& [m, coeff] : p.terms())
      if (m[VarContext::alpha_idx] || m[VarContext::beta_idx] ||
          m[VarContext::gamma_idx])
        c.fail("dz polynomial keeps a parameter");
  }
}

inline void crit_schubert(Check& c) {
  int n = 4;
  Permutation w0 = Permutation::longest_element(n);
  ReducedParams zero = ReducedParams::specialized_ints(n, 0, 0, 0);
  for (const auto& w : Permutation::all(n))
    if (kirillov_poly(w, Partition::zero(n), zero) !=
        schubert_classical(w0 * w.inverse()))
      c.fail("schubert mismatch at w=" + w.str());
}

inline void crit_words_and_dual_forms(Check& c) {
  int n = 4;
  GeneralParams p = ReducedParams::symbolic().general(n);
  Polynomial seed = twisted_seed(n, Partition::zero(n));
  for (const auto& w : Permutation::all(n)) {
    std::vector<std::vector<int>> words;
    std::vector<int> prefix;
    all_reduced_words(w, prefix, words);
    Polynomial ref = apply_T_word(p, words.front(), seed);
    for (size_t k = 1; k < words.size(); ++k)
      if (apply_T_word(p, words[k], seed) != ref)
        c.fail("word dependence at w=" + w.str());
  }
  // dagger/ddagger closed forms agree with their h_k-free second forms
  Polynomial al = Polynomial::alpha(1), be = Polynomial::beta(1),
             ga = Polynomial::gamma(1), x1 = Polynomial::x(1, 1),
             one = Polynomial::one(1);
  for (int k = 1; k <= 12; ++k) {
    Polynomial sgn = (k % 2 == 0) ? one : -one;
    Polynomial second =
        sgn * (be.pow(k) - (be + ga) * h_poly(k - 1, 1) * (one + (al + ga) * x1));
    if (dagger(k, 1, 1) != second)
      c.fail("dagger dual form differs at k=" + std::to_string(k));
    if (k >= 2) {
      Polynomial second2 = -sgn * (be.pow(k - 1) - (be + ga) * h_poly(k - 2, 1));
      if (ddagger(k, 0, 1) != second2)
        c.fail("ddagger dual form differs at k=" + std::to_string(k));
    }
  }
}

}  // namespace acceptance_detail

/// Runs the twelve acceptance criteria and reports one result per criterion.
inline std::vector<CriterionResult> run_acceptance_suite() {
  using namespace acceptance_detail;
  struct Entry {
    const char* name;
    void (*fn)(Check&);
  };
  const Entry entries[] = {
      {"worked example (s2, lambda=(1,1,0)) via both oracles", crit_worked_example},
      {"mu=(3,1,1) system has three admissible states", crit_three_states},
      {"Z equals the operator polynomial across S2..S4", crit_main_identity},
      {"seed closed form on 50 random instances", crit_seed},
      {"RTT relation, one to three colors plus generic classes", crit_rtt},
      {"RRR relation, all 4096 entries", crit_rrr},
      {"degenerate five-vertex weights at alpha=gamma=0", crit_degenerate},
      {"Hecke quadratic relation and braid witness", crit_hecke_braid},
      {"train identity with exact division", crit_train},
      {"positivity landscape across S4", crit_positivity},
      {"classical Schubert oracle across S4", crit_schubert},
      {"reduced-word independence and dual weight forms", crit_words_and_dual_forms},
  };
  std::vector<CriterionResult> out;
  int idx = 0;
  for (const auto& e : entries) {
    CriterionResult r;
    r.index = ++idx;
    r.name = e.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      Check c;
      e.fn(c);
      r.pass = c.pass;
      r.detail = c.detail;
    } catch (const std::exception& ex) {
      r.pass = false;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace kirillov
