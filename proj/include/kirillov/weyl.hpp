#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kirillov {

/// Permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    std::vector<bool> seen(oneline_.size(), false);
    for (int v : oneline_) {
      if (v < 1 || v > static_cast<int>(oneline_.size()) || seen[v - 1])
        throw std::invalid_argument("not a permutation of {1..n}");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }

  /// w_0(i) = n + 1 - i.
  static Permutation longest_element(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Permutation(std::move(v));
  }

  static Permutation simple(int i, int n) {
    auto p = identity(n);
    if (i < 1 || i >= n) throw std::out_of_range("simple reflection index");
    std::swap(p.oneline_[i - 1], p.oneline_[i]);
    return p;
  }

  int size() const { return static_cast<int>(oneline_.size()); }
  int operator()(int i) const { return oneline_.at(i - 1); }
  const std::vector<int>& oneline() const { return oneline_; }

  bool operator==(const Permutation& o) const { return oneline_ == o.oneline_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return oneline_ < o.oneline_; }

  /// Function composition: (this * o)(i) = this(o(i)).
  Permutation operator*(const Permutation& o) const {
    if (size() != o.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(size());
    for (int i = 1; i <= size(); ++i) v[i - 1] = (*this)(o(i));
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(size());
    for (int i = 1; i <= size(); ++i) v[oneline_[i - 1] - 1] = i;
    return Permutation(std::move(v));
  }

  int length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
      for (int j = i + 1; j < size(); ++j)
        if (oneline_[i] > oneline_[j]) ++inv;
    return inv;
  }

  bool is_identity() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)(i) != i) return false;
    return true;
  }

  /// Lexicographically smallest reduced word, obtained by repeatedly
  /// peeling off the smallest left descent.
  std::vector<int> reduced_word() const {
    std::vector<int> word;
    Permutation w = *this;
    Permutation winv = w.inverse();
    while (true) {
      int desc = 0;
      for (int i = 1; i < w.size(); ++i) {
        if (winv(i) > winv(i + 1)) {
          desc = i;
          break;
        }
      }
      if (desc == 0) break;
      w = simple(desc, w.size()) * w;
      winv = w.inverse();
      word.push_back(desc);
    }
    return word;
  }

  /// All one-line permutations of S_n.
  static std::vector<Permutation> all(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Permutation> out;
    do {
      out.push_back(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
  }

  std::string str() const {
    std::string s = "[";
    for (int i = 0; i < size(); ++i) {
      if (i) s += ",";
      s += std::to_string(oneline_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<int> oneline_;
};

inline Permutation product_of_word(const std::vector<int>& word, int n) {
  Permutation w = Permutation::identity(n);
  for (int i : word) w = w * Permutation::simple(i, n);
  return w;
}

/// Cycle notation: each cycle maps an element to its successor.
inline Permutation cycles_to_oneline(const std::vector<std::vector<int>>& cycles,
                                     int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<bool> seen(n, false);
  for (const auto& cyc : cycles) {
    for (size_t k = 0; k < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[(k + 1) % cyc.size()];
      if (a < 1 || a > n) throw std::invalid_argument("cycle entry out of range");
      if (seen[a - 1]) throw std::invalid_argument("repeated element in cycles");
      seen[a - 1] = true;
      v[a - 1] = b;
    }
  }
  return Permutation(std::move(v));
}

/// Weakly decreasing non-negative parts.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < 0) throw std::invalid_argument("negative partition part");
      if (i + 1 < parts.size() && parts[i] < parts[i + 1])
        throw std::invalid_argument("partition parts must weakly decrease");
    }
  }

  static Partition zero(int n) { return Partition(std::vector<int>(n, 0)); }

  static Partition staircase(int n) {  // rho = (n-1, ..., 1, 0)
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
    return Partition(std::move(p));
  }

  /// Pad with trailing zeros to length n.
  Partition padded(int n) const {
    if (static_cast<int>(parts.size()) > n)
      throw std::invalid_argument("partition longer than n");
    std::vector<int> p = parts;
    p.resize(n, 0);
    return Partition(std::move(p));
  }

  int size() const { return static_cast<int>(parts.size()); }
  int operator[](int i) const { return parts.at(i); }
  bool operator==(const Partition& o) const { return parts == o.parts; }
};

/// Weak composition: non-negative parts, no ordering constraint.
struct Composition {
  std::vector<int> parts;

  Composition() = default;
  explicit Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int v : parts)
      if (v < 0) throw std::invalid_argument("negative composition part");
  }

  int size() const { return static_cast<int>(parts.size()); }
  bool is_partition() const {
    return std::is_sorted(parts.begin(), parts.end(), std::greater<int>());
  }
};

/// Sorts zeta weakly decreasing and returns the minimal-length permutation v
/// with v . zeta = zeta+, where (v . zeta)_i = zeta_{v(i)}: v(i) is the
/// original position of the i-th largest part.  Stability on equal parts
/// makes v the minimal coset representative modulo stab(zeta+).
inline std::pair<Partition, Permutation> sort_composition(const Composition& zeta) {
  int n = zeta.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return zeta.parts[a] > zeta.parts[b];
  });
  std::vector<int> sorted(n), v(n);
  for (int k = 0; k < n; ++k) {
    sorted[k] = zeta.parts[order[k]];
    v[k] = order[k] + 1;
  }
  return {Partition(std::move(sorted)), Permutation(std::move(v))};
}

/// Parses "3412" (one-line, n <= 9), "(1,3,2,4)(5,6)" (cycles), or
/// "s1 s2" (word in simple reflections).  n == 0 infers n from the input.
inline Permutation parse_permutation(const std::string& s, int n = 0) {
  auto fail = [&] { throw std::invalid_argument("unparsable permutation: " + s); };
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch)) || s.find('s') != std::string::npos)
      t += ch;
  if (t.empty()) fail();
  if (t.find('s') != std::string::npos) {
    // word in simple reflections, e.g. "s1 s2"
    std::vector<int> word;
    size_t pos = 0;
    while ((pos = t.find('s', pos)) != std::string::npos) {
      ++pos;
      size_t end = pos;
      while (end < t.size() && std::isdigit(static_cast<unsigned char>(t[end]))) ++end;
      if (end == pos) fail();
      word.push_back(std::stoi(t.substr(pos, end - pos)));
      pos = end;
    }
    int need = word.empty() ? 1 : *std::max_element(word.begin(), word.end()) + 1;
    if (n == 0) n = need;
    if (n < need) fail();
    return product_of_word(word, n);
  }
  if (t[0] == '(') {
    std::vector<std::vector<int>> cycles;
    size_t pos = 0;
    int maxv = 0;
    while (pos < t.size()) {
      if (t[pos] != '(') fail();
      size_t close = t.find(')', pos);
      if (close == std::string::npos) fail();
      std::vector<int> cyc;
      std::string body = t.substr(pos + 1, close - pos - 1);
      size_t start = 0;
      while (start <= body.size()) {
        size_t comma = body.find(',', start);
        std::string num = body.substr(start, comma == std::string::npos
                                                  ? std::string::npos
                                                  : comma - start);
        if (!num.empty()) cyc.push_back(std::stoi(num));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (cyc.empty()) fail();
      maxv = std::max(maxv, *std::max_element(cyc.begin(), cyc.end()));
      cycles.push_back(std::move(cyc));
      pos = close + 1;
    }
    if (n == 0) n = maxv;
    return cycles_to_oneline(cycles, n);
  }
  // one-line digits
  std::vector<int> v;
  for (char ch : t) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) fail();
    v.push_back(ch - '0');
  }
  if (n != 0 && static_cast<int>(v.size()) != n) fail();
  return Permutation(std::move(v));
}

inline std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> v;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string num = s.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!num.empty()) v.push_back(std::stoi(num));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return v;
}

}  // namespace kirillov
