#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kirillov {

using Int = boost::multiprecision::cpp_int;

/// Variable layout shared by every polynomial: the three parameters
/// alpha, beta, gamma followed by x_1, ..., x_n.  The order is fixed for
/// the lifetime of any polynomial built against a given n.
struct VarContext {
  int n = 1;  // number of x-variables

  int var_count() const { return n + 3; }

  static constexpr int alpha_idx = 0;
  static constexpr int beta_idx = 1;
  static constexpr int gamma_idx = 2;

  // i is 1-based: x_1 lives at slot 3.
  int x_idx(int i) const {
    if (i < 1 || i > n) throw std::out_of_range("x index out of range");
    return 2 + i;
  }

  std::string var_name(int idx) const {
    switch (idx) {
      case 0: return "alpha";
      case 1: return "beta";
      case 2: return "gamma";
      default: return "x" + std::to_string(idx - 2);
    }
  }
};

/// Exponent vector, positionally matching VarContext.
using Monomial = std::vector<std::int32_t>;

/// Graded-lexicographic order: compare total degree first, then the
/// exponent vectors lexicographically.
struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// Exact sparse multivariate polynomial over the integers.  Immutable in
/// spirit: all operations return new values, so polynomials can be shared
/// freely across threads.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("VarContext requires n >= 1");
  }

  static Polynomial zero(int n) { return Polynomial(n); }

  static Polynomial constant(int n, Int c) {
    Polynomial p(n);
    if (c != 0) p.terms_.emplace(Monomial(n + 3, 0), std::move(c));
    return p;
  }

  static Polynomial one(int n) { return constant(n, 1); }

  static Polynomial variable(int n, int idx) {
    if (idx < 0 || idx >= n + 3) throw std::out_of_range("variable index");
    Polynomial p(n);
    Monomial m(n + 3, 0);
    m[idx] = 1;
    p.terms_.emplace(std::move(m), 1);
    return p;
  }

  static Polynomial alpha(int n) { return variable(n, VarContext::alpha_idx); }
  static Polynomial beta(int n) { return variable(n, VarContext::beta_idx); }
  static Polynomial gamma(int n) { return variable(n, VarContext::gamma_idx); }
  static Polynomial x(int n, int i) {
    VarContext ctx{n};
    return variable(n, ctx.x_idx(i));
  }

  static Polynomial from_monomial(int n, Monomial m, Int c) {
    if (static_cast<int>(m.size()) != n + 3)
      throw std::invalid_argument("monomial length mismatch");
    Polynomial p(n);
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  int n_vars() const { return n_ + 3; }
  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  bool operator==(const Polynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator+(const Polynomial& o) const {
    check_ctx(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  Polynomial operator-() const {
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  Polynomial operator-(const Polynomial& o) const {
    check_ctx(o);
    Polynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_ctx(o);
    Polynomial r(n_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(ma.size());
        for (size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
        r.add_term(std::move(m), ca * cb);
      }
    }
    return r;
  }

  Polynomial operator*(const Int& c) const {
    Polynomial r(n_);
    if (c == 0) return r;
    for (const auto& [m, co] : terms_) r.terms_.emplace(m, co * c);
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = one(n_);
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) r *= base;
      base *= base;
      k >>= 1;
    }
    return r;
  }

  /// f^{s_i}: exchange x_i and x_{i+1}.
  Polynomial swap_vars(int i) const {
    VarContext ctx{n_};
    if (i < 1 || i + 1 > n_) throw std::out_of_range("swap_vars index");
    int a = ctx.x_idx(i), b = ctx.x_idx(i + 1);
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
      Monomial mm = m;
      std::swap(mm[a], mm[b]);
      r.terms_.emplace(std::move(mm), c);
    }
    return r;
  }

  /// (f^{s_i} - f) / (x_{i+1} - x_i).  The numerator is antisymmetric in
  /// (x_i, x_{i+1}), so the division is exact; a nonzero remainder is an
  /// arithmetic bug and throws.
  Polynomial divided_difference(int i) const {
    VarContext ctx{n_};
    if (i < 1 || i + 1 > n_) throw std::out_of_range("divided_difference index");
    int u = ctx.x_idx(i), v = ctx.x_idx(i + 1);
    Polynomial rem = swap_vars(i) - *this;
    Polynomial quot(n_);
    // Synthetic division by (x_{i+1} - x_i): repeatedly strip the term of
    // highest x_{i+1}-degree.  Each step lowers that degree, so this ends.
    while (!rem.terms_.empty()) {
      auto lead = rem.terms_.end();
      int best = -1;
      for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it) {
        if ((*it).first[v] > best) {
          best = (*it).first[v];
          lead = it;
        }
      }
      if (best == 0) throw std::logic_error("divided_difference: nonzero remainder");
      Monomial q = lead->first;
      Int c = lead->second;
      q[v] -= 1;
      // rem -= c * q * (x_v - x_u)
      rem.add_term(lead->first, -c);
      Monomial qu = q;
      qu[u] += 1;
      rem.add_term(std::move(qu), c);
      quot.add_term(std::move(q), std::move(c));
    }
    return quot;
  }

  /// Simultaneous exact substitution of polynomials for variables.
  Polynomial substitute(const std::map<int, Polynomial>& assignment) const {
    for (const auto& [idx, p] : assignment) {
      if (idx < 0 || idx >= n_ + 3) throw std::out_of_range("substitute index");
      if (p.n_ != n_) throw std::invalid_argument("substitute: context mismatch");
    }
    Polynomial r(n_);
    for (const auto& [m, c] : terms_) {
      Polynomial term = constant(n_, c);
      Monomial rest = m;
      for (const auto& [idx, p] : assignment) {
        int e = rest[idx];
        rest[idx] = 0;
        if (e > 0) term *= p.pow(e);
      }
      term *= from_monomial(n_, std::move(rest), 1);
      r += term;
    }
    return r;
  }

  struct NonnegReport {
    bool all_nonneg = true;
    std::optional<std::pair<Monomial, Int>> witness;
  };

  /// True iff every stored coefficient is positive (canonical form stores
  /// no zeros).  Witness is the first negative term in canonical order.
  NonnegReport nonneg_report() const {
    NonnegReport rep;
    for (const auto& [m, c] : terms_) {
      if (c < 0) {
        rep.all_nonneg = false;
        rep.witness = {m, c};
        break;
      }
    }
    return rep;
  }

  long total_degree() const {
    long d = 0;
    for (const auto& [m, c] : terms_)
      d = std::max(d, std::accumulate(m.begin(), m.end(), 0L));
    return d;
  }

  /// Canonical JSON, bit-exact across runs: terms in graded-lex order,
  /// coefficients as decimal strings.
  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : terms_) {
      nlohmann::ordered_json t;
      t["coeff"] = c.str();
      t["exps"] = m;
      terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
  }

  static Polynomial from_json(const nlohmann::json& j) {
    Polynomial p(j.at("n").get<int>());
    for (const auto& t : j.at("terms")) {
      Monomial m = t.at("exps").get<Monomial>();
      if (static_cast<int>(m.size()) != p.n_ + 3)
        throw std::invalid_argument("from_json: exponent length mismatch");
      p.add_term(std::move(m), Int(t.at("coeff").get<std::string>()));
    }
    return p;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    VarContext ctx{n_};
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += c > 0 ? " + " : " - ";
      else if (c < 0) s += "-";
      Int ab = abs(c);
      bool printed = false;
      if (ab != 1) {
        s += ab.str();
        printed = true;
      }
      for (size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        if (printed) s += "*";
        s += ctx.var_name(static_cast<int>(k));
        if (m[k] > 1) s += "^" + std::to_string(m[k]);
        printed = true;
      }
      if (!printed) s += ab.str();
    }
    return s;
  }

 private:
  void check_ctx(const Polynomial& o) const {
    if (n_ != o.n_)
      throw std::invalid_argument("polynomial context mismatch (different n)");
  }

  void add_term(Monomial m, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int n_ = 1;
  TermMap terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return p * c; }

}  // namespace kirillov
