#pragma once

#include <optional>

#include "root_system.hpp"

// Column-shape fillings: strictly increasing columns over [n] in type A and
// Kashiwara-Nakashima columns over the barred alphabet in type C, with the
// splitting that doubles a KN column into the pair (lC, rC).

namespace alcove {

using Column = std::vector<int>;  // entries, strictly increasing in letter order

inline bool is_strict_column(const RootSystem& rs, const Column& c) {
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    if (!letter_less(rs, c[k], c[k + 1])) return false;
  for (int x : c) {
    if (x == 0 || std::abs(x) > rs.n) return false;
    if (rs.kind == Kind::A && x < 0) return false;
  }
  return true;
}

inline void sort_column(const RootSystem& rs, Column& c) {
  std::sort(c.begin(), c.end(), [&](int a, int b) { return letter_less(rs, a, b); });
}

inline bool column_contains(const Column& c, int letter) {
  return std::find(c.begin(), c.end(), letter) != c.end();
}

// A column C = x_1..x_r is a KN column when no pair (z, z-bar) in C has
// positions q - p <= r - z.
inline bool is_kn_column(const RootSystem& rs, const Column& c) {
  require(rs.kind == Kind::C, "KN columns are a type C notion");
  if (!is_strict_column(rs, c)) return false;
  const int r = (int)c.size();
  for (int p = 0; p < r; ++p) {
    if (c[p] <= 0) continue;
    for (int q = p + 1; q < r; ++q) {
      if (c[q] != -c[p]) continue;
      if ((q + 1) - (p + 1) <= r - c[p]) return false;
    }
  }
  return true;
}

// Splitting per the greedy choice of t_1 > ... > t_k: t_i is the greatest
// unbarred letter below min(t_{i-1}, z_i) such that neither t_i nor its bar
// occurs in C. Returns nothing when the column cannot be split.
inline std::optional<std::pair<Column, Column>> split_column(const RootSystem& rs,
                                                             const Column& c) {
  require(rs.kind == Kind::C, "splitting is a type C notion");
  if (!is_strict_column(rs, c)) return std::nullopt;
  std::vector<int> z;  // z_1 > z_2 > ... : letters with both z and z-bar in c
  for (int x = rs.n; x >= 1; --x)
    if (column_contains(c, x) && column_contains(c, -x)) z.push_back(x);
  std::vector<int> t;
  int prev = rs.n + 1;
  for (int zi : z) {
    int ti = std::min(prev, zi) - 1;
    while (ti >= 1 && (column_contains(c, ti) || column_contains(c, -ti))) --ti;
    if (ti < 1) return std::nullopt;
    t.push_back(ti);
    prev = ti;
  }
  Column left = c, right = c;
  for (std::size_t i = 0; i < z.size(); ++i) {
    *std::find(left.begin(), left.end(), z[i]) = t[i];
    *std::find(right.begin(), right.end(), -z[i]) = -t[i];
  }
  sort_column(rs, left);
  sort_column(rs, right);
  return std::make_pair(std::move(left), std::move(right));
}

// Recovers the KN column whose splitting is (left, right): its unbarred
// entries come from the right column and its barred entries from the left.
inline std::optional<Column> unsplit_columns(const RootSystem& rs, const Column& left,
                                             const Column& right) {
  if (left.size() != right.size()) return std::nullopt;
  Column c;
  for (int x : right)
    if (x > 0) c.push_back(x);
  for (int x : left)
    if (x < 0) c.push_back(x);
  if (c.size() != left.size()) return std::nullopt;
  sort_column(rs, c);
  auto sp = split_column(rs, c);
  if (!sp || sp->first != left || sp->second != right) return std::nullopt;
  return c;
}

// All valid columns of a given height: subsets of [n] in type A, KN columns
// in type C; lexicographic in the letter order.
inline std::vector<Column> all_columns(const RootSystem& rs, int height) {
  const int alphabet = rs.kind == Kind::A ? rs.n : 2 * rs.n;
  require(height >= 1 && height <= alphabet, "column height out of range");
  std::vector<Column> out;
  std::vector<int> pick;
  auto letter_of_rank = [&](int r) { return r <= rs.n ? r : r - 2 * rs.n - 1; };
  auto rec = [&](auto&& self, int next_rank) -> void {
    if ((int)pick.size() == height) {
      Column c;
      for (int r : pick) c.push_back(letter_of_rank(r));
      if (rs.kind == Kind::A || is_kn_column(rs, c)) out.push_back(std::move(c));
      return;
    }
    for (int r = next_rank; r <= alphabet; ++r) {
      pick.push_back(r);
      self(self, r + 1);
      pick.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

inline std::string column_str(const Column& c, bool bars = false) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) s += "/";
    s += letter_str(c[k], bars);
  }
  return s;
}

}  // namespace alcove
