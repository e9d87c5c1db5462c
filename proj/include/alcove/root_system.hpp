#pragma once

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

// Root systems of types A_{n-1} and C_n: roots, weights, pairings and the
// circular orders used by the quantum Bruhat graph edge criteria.

namespace alcove {

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(msg);
}

struct ResourceLimitError : std::runtime_error {
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

enum class Kind { A, C };

inline std::string kind_name(Kind k) { return k == Kind::A ? "A" : "C"; }

// Type A is A_{n-1} realized on n letters; type C is C_n.
struct RootSystem {
  Kind kind;
  int n;

  RootSystem(Kind k, int n_) : kind(k), n(n_) {
    if (n < 2) throw std::invalid_argument("rank parameter n must be >= 2");
  }

  int rank() const { return kind == Kind::A ? n - 1 : n; }

  bool operator==(const RootSystem& o) const { return kind == o.kind && n == o.n; }
};

// Letters. Type A uses 1..n. Type C uses the alphabet 1,...,n,n-bar,...,1-bar
// encoded as nonzero integers with i-bar = -i; the letter order
// 1 < ... < n < n-bar < ... < 1-bar is NOT the integer order.
inline int letter_rank(const RootSystem& rs, int letter) {
  if (letter > 0 && letter <= rs.n) return letter;
  if (rs.kind == Kind::C && letter < 0 && -letter <= rs.n) return 2 * rs.n + 1 + letter;
  throw std::invalid_argument("letter out of domain");
}

inline bool letter_less(const RootSystem& rs, int a, int b) {
  return letter_rank(rs, a) < letter_rank(rs, b);
}

// Circular order starting at `start`: letters arranged clockwise in the
// letter order, read from `start`. Equal letters compare false.
inline bool circular_less(const RootSystem& rs, int start, int a, int b) {
  if (a == b) return false;
  const int cycle = rs.kind == Kind::A ? rs.n : 2 * rs.n;
  const int s = letter_rank(rs, start) - 1;
  const int pa = (letter_rank(rs, a) - 1 - s + cycle) % cycle;
  const int pb = (letter_rank(rs, b) - 1 - s + cycle) % cycle;
  return pa < pb;
}

inline std::string letter_str(int letter, bool bars = false) {
  if (letter > 0 || !bars) return std::to_string(letter);
  return std::to_string(-letter) + "̄";  // overline rendering, opt-in
}

// Roots are stored structurally; the Z^n vector form is derived.
//   Diff : sign * (e_i - e_j), i < j
//   Sum  : sign * (e_i + e_j), i < j      (type C only)
//   Twice: sign * 2 e_i,       j == i     (type C only)
enum class RootClass { Diff, Sum, Twice };

struct Root {
  RootClass cls;
  int i, j;
  int sign;

  bool positive() const { return sign > 0; }
  Root negated() const { return Root{cls, i, j, -sign}; }
  Root abs() const { return Root{cls, i, j, 1}; }

  bool operator==(const Root& o) const {
    return cls == o.cls && i == o.i && j == o.j && sign == o.sign;
  }
  bool operator!=(const Root& o) const { return !(*this == o); }
};

inline Root root_diff(int i, int j) {  // e_i - e_j, any i != j
  if (i < j) return Root{RootClass::Diff, i, j, 1};
  return Root{RootClass::Diff, j, i, -1};
}
inline Root root_sum(int i, int j) {  // e_i + e_j, i != j
  if (i > j) std::swap(i, j);
  return Root{RootClass::Sum, i, j, 1};
}
inline Root root_twice(int i) { return Root{RootClass::Twice, i, i, 1}; }

inline std::vector<int> root_vector(const Root& r, int n) {
  std::vector<int> v(n, 0);
  switch (r.cls) {
    case RootClass::Diff: v[r.i - 1] = r.sign; v[r.j - 1] = -r.sign; break;
    case RootClass::Sum: v[r.i - 1] = r.sign; v[r.j - 1] = r.sign; break;
    case RootClass::Twice: v[r.i - 1] = 2 * r.sign; break;
  }
  return v;
}

inline Root root_from_vector(const std::vector<int>& v) {
  int a = -1, b = -1;
  for (int k = 0; k < (int)v.size(); ++k) {
    if (v[k] == 0) continue;
    if (a < 0) a = k; else b = k;
  }
  if (b < 0) {
    require(a >= 0 && std::abs(v[a]) == 2, "not a root vector");
    return Root{RootClass::Twice, a + 1, a + 1, v[a] > 0 ? 1 : -1};
  }
  require(std::abs(v[a]) == 1 && std::abs(v[b]) == 1, "not a root vector");
  if (v[a] == v[b]) return Root{RootClass::Sum, a + 1, b + 1, v[a]};
  return Root{RootClass::Diff, a + 1, b + 1, v[a]};
}

// Serialized form. Positive roots render as "(i,j)", "(i,-j)", "(i,-i)".
// Negative type A roots use the swapped-pair form "(j,i)"; negative type C
// roots carry a leading minus.
inline std::string root_str(const Root& r) {
  auto pair_str = [](int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
  };
  switch (r.cls) {
    case RootClass::Diff:
      return r.sign > 0 ? pair_str(r.i, r.j) : pair_str(r.j, r.i);
    case RootClass::Sum:
      return (r.sign > 0 ? "" : "-") + pair_str(r.i, -r.j);
    default:
      return (r.sign > 0 ? "" : "-") + pair_str(r.i, -r.i);
  }
}

// All positive roots, each exactly once, in a fixed deterministic order.
inline std::vector<Root> positive_roots(const RootSystem& rs) {
  std::vector<Root> out;
  for (int i = 1; i <= rs.n; ++i)
    for (int j = i + 1; j <= rs.n; ++j) out.push_back(root_diff(i, j));
  if (rs.kind == Kind::C) {
    for (int i = 1; i <= rs.n; ++i)
      for (int j = i + 1; j <= rs.n; ++j) out.push_back(root_sum(i, j));
    for (int i = 1; i <= rs.n; ++i) out.push_back(root_twice(i));
  }
  return out;
}

inline std::vector<Root> simple_roots(const RootSystem& rs) {
  std::vector<Root> out;
  for (int i = 1; i < rs.n; ++i) out.push_back(root_diff(i, i + 1));
  if (rs.kind == Kind::C) out.push_back(root_twice(rs.n));
  return out;
}

inline Root highest_root(const RootSystem& rs) {
  return rs.kind == Kind::A ? root_diff(1, rs.n) : root_twice(1);
}

// theta = alpha_0 = -(highest root); a negative root.
inline Root theta(const RootSystem& rs) { return highest_root(rs).negated(); }

// alpha_p for operator index p: theta if p = 0, else the p-th simple root.
inline Root operator_root(const RootSystem& rs, int p) {
  if (p == 0) return theta(rs);
  if (p < 1 || p > rs.rank()) throw std::invalid_argument("operator index out of range");
  if (rs.kind == Kind::C && p == rs.n) return root_twice(rs.n);
  return root_diff(p, p + 1);
}

// <v, beta^vee> for an integer coordinate vector. Exact: the coroot of
// 2e_i is e_i, the other coroots coincide with their roots.
inline long pairing_vec(const std::vector<int>& v, const Root& beta) {
  switch (beta.cls) {
    case RootClass::Diff: return (long)beta.sign * (v[beta.i - 1] - v[beta.j - 1]);
    case RootClass::Sum: return (long)beta.sign * (v[beta.i - 1] + v[beta.j - 1]);
    default: return (long)beta.sign * v[beta.i - 1];
  }
}

// Weights. Type A weights live in Z^n / Z(1,..,1); the canonical
// representative has last coordinate 0, enforced on construction.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  Weight(const RootSystem& rs, std::vector<int> c) : coords(std::move(c)) {
    require((int)coords.size() == rs.n, "weight has wrong dimension");
    if (rs.kind == Kind::A) {
      const int last = coords.back();
      for (int& x : coords) x -= last;
    }
  }

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
};

inline long pairing(const Weight& lam, const Root& beta) {
  return pairing_vec(lam.coords, beta);
}

inline Weight weight_add(const RootSystem& rs, const Weight& a, const std::vector<int>& delta) {
  std::vector<int> c = a.coords;
  for (int k = 0; k < rs.n; ++k) c[k] += delta[k];
  return Weight(rs, std::move(c));
}

inline Weight rho(const RootSystem& rs) {
  std::vector<int> c(rs.n);
  for (int i = 0; i < rs.n; ++i) c[i] = rs.kind == Kind::A ? rs.n - 1 - i : rs.n - i;
  return Weight(rs, std::move(c));
}

inline Weight fundamental_weight(const RootSystem& rs, int k) {
  require(k >= 1 && k <= rs.rank(), "fundamental weight index out of range");
  std::vector<int> c(rs.n, 0);
  for (int i = 0; i < k; ++i) c[i] = 1;
  return Weight(rs, std::move(c));
}

// A dominant weight given as a partition (weakly decreasing, >= 0), with at
// most n-1 parts in type A and at most n parts in type C.
inline Weight weight_from_partition(const RootSystem& rs, const std::vector<int>& parts) {
  const int max_parts = rs.kind == Kind::A ? rs.n - 1 : rs.n;
  std::vector<int> p;
  for (int x : parts)
    if (x != 0) p.push_back(x);
  if ((int)p.size() > max_parts)
    throw std::invalid_argument("partition has too many parts for the root system");
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] < p[i + 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  for (int x : p)
    if (x < 0) throw std::invalid_argument("partition parts must be nonnegative");
  std::vector<int> c(rs.n, 0);
  std::copy(p.begin(), p.end(), c.begin());
  return Weight(rs, std::move(c));
}

inline bool is_dominant(const RootSystem& rs, const Weight& lam) {
  for (const Root& a : simple_roots(rs))
    if (pairing(lam, a) < 0) return false;
  return true;
}

// Conjugate partition (column heights of the Young diagram).
inline std::vector<int> conjugate_partition(const std::vector<int>& parts) {
  std::vector<int> cols;
  if (parts.empty()) return cols;
  for (int c = 1; c <= parts[0]; ++c) {
    int h = 0;
    for (int x : parts)
      if (x >= c) ++h;
    cols.push_back(h);
  }
  return cols;
}

inline std::vector<int> partition_of(const Weight& lam) {
  std::vector<int> p;
  for (int x : lam.coords)
    if (x != 0) p.push_back(x);
  return p;
}

}  // namespace alcove
