#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kirillov/ddop.hpp"
#include "kirillov/lattice.hpp"
#include "kirillov/weyl.hpp"

namespace kirillov {

enum class PositivityMode {
  symbolic,                         // full (beta, alpha, gamma) family
  gamma_zero,                       // Hecke-Grothendieck specialization
  gamma_eq_minus_alpha_minus_beta,  // gamma = -alpha-beta, signs flipped
  dz,                               // alpha = beta = 1, gamma = 0
};

inline PositivityMode parse_positivity_mode(const std::string& s) {
  if (s == "symbolic") return PositivityMode::symbolic;
  if (s == "gamma0") return PositivityMode::gamma_zero;
  if (s == "neg") return PositivityMode::gamma_eq_minus_alpha_minus_beta;
  if (s == "dz") return PositivityMode::dz;
  throw std::invalid_argument("unknown positivity mode: " + s);
}

/// The substitution defining each mode, applied to the symbolic polynomial.
/// The gamma = -alpha-beta mode simultaneously flips the signs of alpha and
/// beta, so "non-negative" afterwards means non-negative in (-alpha, -beta).
inline Polynomial apply_mode(const Polynomial& f, PositivityMode mode) {
  int n = f.n();
  std::map<int, Polynomial> sub;
  switch (mode) {
    case PositivityMode::symbolic:
      return f;
    case PositivityMode::gamma_zero:
      sub.emplace(VarContext::gamma_idx, Polynomial::zero(n));
      break;
    case PositivityMode::gamma_eq_minus_alpha_minus_beta:
      sub.emplace(VarContext::alpha_idx, -Polynomial::alpha(n));
      sub.emplace(VarContext::beta_idx, -Polynomial::beta(n));
      sub.emplace(VarContext::gamma_idx, Polynomial::alpha(n) + Polynomial::beta(n));
      break;
    case PositivityMode::dz:
      sub.emplace(VarContext::alpha_idx, Polynomial::one(n));
      sub.emplace(VarContext::beta_idx, Polynomial::one(n));
      sub.emplace(VarContext::gamma_idx, Polynomial::zero(n));
      break;
  }
  return f.substitute(sub);
}

struct PositivityRow {
  Permutation w;
  bool nonneg = true;
  std::optional<std::pair<Monomial, Int>> witness;
};

struct PositivityScan {
  int n = 0;
  PositivityMode mode = PositivityMode::symbolic;
  std::vector<PositivityRow> rows;
  long negatives = 0;
};

/// Per-permutation positivity report over S_n at lambda = 0, computing each
/// polynomial through both oracles (operator recursion and lattice partition
/// function).  An oracle disagreement is a fatal consistency error.  For
/// symbolic scans, every lattice state with a multi-color vertical edge is
/// asserted to carry a gamma-divisible weight.
inline PositivityScan scan_positivity(int n, PositivityMode mode) {
  if (n < 1 || n > 5) throw std::invalid_argument("scan_positivity: n in 1..5");
  PositivityScan scan;
  scan.n = n;
  scan.mode = mode;
  std::map<int, Polynomial> g0;
  g0.emplace(VarContext::gamma_idx, Polynomial::zero(n));
  for (const auto& w : Permutation::all(n)) {
    Polynomial op = apply_mode(
        kirillov_poly(w, Partition::zero(n), ReducedParams::symbolic()), mode);
    Polynomial lat = Polynomial::zero(n);
    enumerate_states(system_for_kn(w, Partition::zero(n)),
                     [&](const LatticeState& st) {
                       if (mode == PositivityMode::symbolic) {
                         bool multi = false;
                         for (const auto& row : st.vert)
                           for (ColorSet s : row) multi = multi || cs_size(s) > 1;
                         if (multi && !st.weight.substitute(g0).is_zero())
                           throw std::logic_error(
                               "multi-color state weight not divisible by gamma");
                       }
                       lat += apply_mode(st.weight, mode);
                     });
    if (op != lat)
      throw std::logic_error("oracle disagreement for w = " + w.str());
    PositivityRow row{w};
    auto rep = op.nonneg_report();
    row.nonneg = rep.all_nonneg;
    row.witness = rep.witness;
    if (!row.nonneg) ++scan.negatives;
    scan.rows.push_back(std::move(row));
  }
  return scan;
}

/// Permutations in S_n whose fully symbolic polynomial at lambda = 0 has a
/// negative coefficient.
inline std::vector<PositivityRow> negative_witnesses(int n) {
  std::vector<PositivityRow> out;
  for (auto& row : scan_positivity(n, PositivityMode::symbolic).rows)
    if (!row.nonneg) out.push_back(std::move(row));
  return out;
}

struct KeyCounterexampleReport {
  Composition zeta;
  bool contained_in_staircase = false;
  bool has_negative = false;
  std::optional<std::pair<Monomial, Int>> witness;
};

/// The smallest published failure of key positivity: zeta = (1,2,2,1), which
/// sits inside the staircase (4,3,2,1).
inline KeyCounterexampleReport key_positivity_counterexample() {
  KeyCounterexampleReport rep;
  rep.zeta = Composition({1, 2, 2, 1});
  Partition rho({4, 3, 2, 1});
  rep.contained_in_staircase = true;
  for (int i = 0; i < rep.zeta.size(); ++i)
    rep.contained_in_staircase =
        rep.contained_in_staircase && rep.zeta.parts[i] <= rho[i];
  Polynomial k = key_polynomial(rep.zeta, ReducedParams::symbolic());
  auto r = k.nonneg_report();
  rep.has_negative = !r.all_nonneg;
  rep.witness = r.witness;
  return rep;
}

struct CrosscheckReport {
  long checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Specialization sweep over S_n at lambda = 0:
/// (i)   alpha = beta = gamma = 0 recovers the classical Schubert polynomial
///       of w0 w^{-1}, recomputed by a plain divided-difference recursion;
/// (ii)  alpha = gamma = 0 matches the generalized Schubert value at
///       parameters (-beta, beta, 0, 1, 0) under the same indexing;
/// (iii) the alpha = beta = 1, gamma = 0 polynomial has non-negative integer
///       coefficients in x alone;
/// (iv)  the lattice oracle agrees in every specialization.
inline CrosscheckReport specialization_crosschecks(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("specialization_crosschecks: n in 1..4");
  CrosscheckReport rep;
  Permutation w0 = Permutation::longest_element(n);
  ReducedParams all_zero = ReducedParams::specialized_ints(n, 0, 0, 0);
  ReducedParams ag_zero;
  ag_zero.alpha = Polynomial::zero(n);
  ag_zero.gamma = Polynomial::zero(n);
  GeneralParams grothendieck(-Polynomial::beta(n), Polynomial::beta(n),
                             Polynomial::zero(n), Polynomial::one(n),
                             Polynomial::zero(n));
  for (const auto& w : Permutation::all(n)) {
    Permutation v = w0 * w.inverse();
    Partition zero = Partition::zero(n);
    Polynomial lattice_z = partition_function(system_for_kn(w, zero));
    auto fail = [&](const std::string& what) {
      rep.failures.push_back(what + " for w = " + w.str());
    };

    ++rep.checked;
    Polynomial schub = kirillov_poly(w, zero, all_zero);
    if (schub != schubert_classical(v)) fail("schubert mismatch");
    if (schub != all_zero.apply_to(lattice_z)) fail("schubert lattice mismatch");

    ++rep.checked;
    Polynomial groth = kirillov_poly(w, zero, ag_zero);
    if (groth != generalized_schubert(v, grothendieck))
      fail("grothendieck mismatch");
    if (groth != ag_zero.apply_to(lattice_z)) fail("grothendieck lattice mismatch");

    ++rep.checked;
    Polynomial dz = dz_polynomial(w);
    auto nn = dz.nonneg_report();
    if (!nn.all_nonneg) fail("dz negative coefficient");
    for (const auto& [m, c] : dz.terms())
      if (m[VarContext::alpha_idx] || m[VarContext::beta_idx] ||
          m[VarContext::gamma_idx])
        fail("dz parameter residue");
    if (dz != ReducedParams::specialized_ints(n, 1, 1, 0).apply_to(lattice_z))
      fail("dz lattice mismatch");
  }
  return rep;
}

}  // namespace kirillov
