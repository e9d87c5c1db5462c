#pragma once

#include <sstream>

#include "root_system.hpp"

// Weyl group elements: permutations (type A) and signed permutations
// (type C) in window notation, with the length function and the right
// reflection action used throughout the chain constructions.

namespace alcove {

struct WeylElement {
  RootSystem sys;
  std::vector<int> window;  // w(1..n); type C entries are signed letters

  static WeylElement identity(const RootSystem& rs) {
    WeylElement w{rs, std::vector<int>(rs.n)};
    for (int i = 0; i < rs.n; ++i) w.window[i] = i + 1;
    return w;
  }

  // w applied to a letter of the domain; w(i-bar) = w(i)-bar.
  int operator()(int letter) const {
    if (letter > 0) return window[letter - 1];
    return -window[-letter - 1];
  }

  bool is_identity() const {
    for (int i = 0; i < sys.n; ++i)
      if (window[i] != i + 1) return false;
    return true;
  }

  bool operator==(const WeylElement& o) const { return window == o.window; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const {  // lexicographic, custom letter order
    for (int i = 0; i < sys.n; ++i)
      if (window[i] != o.window[i])
        return letter_rank(sys, window[i]) < letter_rank(sys, o.window[i]);
    return false;
  }
};

inline std::string window_str(const WeylElement& w, bool bars = false) {
  std::ostringstream os;
  for (int i = 0; i < w.sys.n; ++i) {
    if (i) os << ",";
    os << letter_str(w.window[i], bars);
  }
  return os.str();
}

// Full one-line notation w(1)..w(n) w(n-bar)..w(1-bar) (type C).
inline std::vector<int> full_one_line(const WeylElement& w) {
  std::vector<int> out;
  for (int i = 1; i <= w.sys.n; ++i) out.push_back(w(i));
  for (int i = w.sys.n; i >= 1; --i) out.push_back(w(-i));
  return out;
}

inline WeylElement from_full_one_line(const RootSystem& rs, const std::vector<int>& full) {
  require((int)full.size() == 2 * rs.n, "full one-line has wrong size");
  WeylElement w{rs, std::vector<int>(full.begin(), full.begin() + rs.n)};
  for (int i = 1; i <= rs.n; ++i)
    require(full[2 * rs.n - i] == -w(i), "full one-line is not bar-symmetric");
  return w;
}

// Group product: (a*b)(x) = a(b(x)).
inline WeylElement mult(const WeylElement& a, const WeylElement& b) {
  WeylElement r{a.sys, std::vector<int>(a.sys.n)};
  for (int i = 1; i <= a.sys.n; ++i) r.window[i - 1] = a(b(i));
  return r;
}

inline WeylElement inverse(const WeylElement& w) {
  WeylElement r{w.sys, std::vector<int>(w.sys.n)};
  for (int i = 1; i <= w.sys.n; ++i) {
    const int v = w.window[i - 1];
    if (v > 0) r.window[v - 1] = i;
    else r.window[-v - 1] = -i;
  }
  return r;
}

// Linear action on Z^n coordinates: w(e_i) = e_{w(i)} with e_{-j} = -e_j.
inline std::vector<int> act_on_vector(const WeylElement& w, const std::vector<int>& v) {
  std::vector<int> out(w.sys.n, 0);
  for (int i = 1; i <= w.sys.n; ++i) {
    const int t = w.window[i - 1];
    out[std::abs(t) - 1] += (t > 0 ? 1 : -1) * v[i - 1];
  }
  return out;
}

inline Root act_on_root(const WeylElement& w, const Root& r) {
  return root_from_vector(act_on_vector(w, root_vector(r, w.sys.n)));
}

// w * s_beta for a root beta, via the transposition compositions:
//   (i,j)      : swap window positions i and j
//   (i,-j)     : swap window positions i and j and negate both entries
//   (i,-i)     : negate the window entry at position i
inline WeylElement apply_reflection_right(const WeylElement& w, const Root& beta) {
  WeylElement r = w;
  switch (beta.cls) {
    case RootClass::Diff:
      std::swap(r.window[beta.i - 1], r.window[beta.j - 1]);
      break;
    case RootClass::Sum:
      require(w.sys.kind == Kind::C, "root outside the system");
      std::swap(r.window[beta.i - 1], r.window[beta.j - 1]);
      r.window[beta.i - 1] = -r.window[beta.i - 1];
      r.window[beta.j - 1] = -r.window[beta.j - 1];
      break;
    case RootClass::Twice:
      require(w.sys.kind == Kind::C, "root outside the system");
      r.window[beta.i - 1] = -r.window[beta.i - 1];
      break;
  }
  return r;
}

// s_beta * w acts on window values.
inline WeylElement apply_reflection_left(const Root& beta, const WeylElement& w) {
  const WeylElement s = apply_reflection_right(WeylElement::identity(w.sys), beta);
  return mult(s, w);
}

// Inversion count in type A; the window formula
//   l(w) = #{ (k,l) in [n] x [n-bar] : k <= |l|, w(k) > w(l) }
// in type C.
inline int length(const WeylElement& w) {
  const RootSystem& rs = w.sys;
  int len = 0;
  if (rs.kind == Kind::A) {
    for (int i = 0; i < rs.n; ++i)
      for (int j = i + 1; j < rs.n; ++j)
        if (w.window[i] > w.window[j]) ++len;
    return len;
  }
  for (int k = 1; k <= rs.n; ++k) {
    const int wk = letter_rank(rs, w(k));
    for (int labs = k; labs <= rs.n; ++labs) {
      if (labs > k && wk > letter_rank(rs, w(labs))) ++len;
      if (wk > letter_rank(rs, w(-labs))) ++len;
    }
  }
  return len;
}

inline long group_order(const RootSystem& rs) {
  long ord = 1;
  for (int i = 2; i <= rs.n; ++i) ord *= i;
  if (rs.kind == Kind::C)
    for (int i = 0; i < rs.n; ++i) ord *= 2;
  return ord;
}

// All group elements, sorted lexicographically on windows (custom letter
// order), so enumeration order is reproducible.
inline std::vector<WeylElement> all_group_elements(const RootSystem& rs,
                                                   long max_order = 3628800) {
  if (group_order(rs) > max_order)
    throw ResourceLimitError("Weyl group order exceeds the configured bound");
  std::vector<int> perm(rs.n);
  for (int i = 0; i < rs.n; ++i) perm[i] = i + 1;
  std::vector<WeylElement> out;
  do {
    if (rs.kind == Kind::A) {
      out.push_back(WeylElement{rs, perm});
    } else {
      for (int mask = 0; mask < (1 << rs.n); ++mask) {
        std::vector<int> win(perm);
        for (int b = 0; b < rs.n; ++b)
          if (mask & (1 << b)) win[b] = -win[b];
        out.push_back(WeylElement{rs, std::move(win)});
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace alcove
