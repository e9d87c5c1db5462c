#pragma once

#include <map>
#include <tuple>

#include "root_system.hpp"

// Alcove paths from the fundamental alcove to its translate by -lambda,
// recorded as root sequences. Chains for arbitrary dominant lambda are
// concatenations of the standard omega_k-chains.

namespace alcove {

namespace detail {
// Type C omega_k-chain, split into its left and right parts:
//   G_l(k) = G_{kk} ... G_{k1},  G_r(k) = G_k ... G_2,
//   G_{ki} = ( (i,k+1), ..., (i,n), (i,-i), (i,-n), ..., (i,-(k+1)),
//              (i,-(i-1)), ..., (i,-1) ),
//   G_i    = ( (i,-(i-1)), ..., (i,-1) ).
inline std::pair<std::vector<Root>, std::vector<Root>> omega_chain_C(const RootSystem& rs,
                                                                     int k) {
  std::vector<Root> left, right;
  for (int i = k; i >= 1; --i) {
    for (int b = k + 1; b <= rs.n; ++b) left.push_back(root_diff(i, b));
    left.push_back(root_twice(i));
    for (int b = rs.n; b >= k + 1; --b) left.push_back(root_sum(i, b));
    for (int b = i - 1; b >= 1; --b) left.push_back(root_sum(i, b));
  }
  for (int i = k; i >= 2; --i)
    for (int b = i - 1; b >= 1; --b) right.push_back(root_sum(i, b));
  return {std::move(left), std::move(right)};
}
}  // namespace detail

// The omega_k-chain. Type A lists, for a = k down to 1, the roots
// (a, k+1), ..., (a, n).
inline std::vector<Root> omega_chain(const RootSystem& rs, int k) {
  if (k < 1 || k > rs.rank()) throw std::invalid_argument("omega index out of range");
  if (rs.kind == Kind::A) {
    std::vector<Root> out;
    for (int a = k; a >= 1; --a)
      for (int b = k + 1; b <= rs.n; ++b) out.push_back(root_diff(a, b));
    return out;
  }
  auto [left, right] = detail::omega_chain_C(rs, k);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

struct LambdaChain {
  RootSystem sys;
  Weight lambda;
  std::vector<int> lambda_parts;    // the partition
  std::vector<int> column_heights;  // conjugate partition
  std::vector<Root> roots;          // beta_1..beta_m
  std::vector<int> levels;          // l_i  = #{j < i : beta_j = beta_i}
  std::vector<int> co_levels;       // lt_i = <lambda, beta_i^vee> - l_i
  std::vector<std::size_t> segment_offsets;  // size segments()+1

  std::size_t size() const { return roots.size(); }

  // One segment per column in type A, an alternating left/right pair per
  // column in type C.
  int segments() const { return (int)segment_offsets.size() - 1; }

  // 1-based segment index of a 1-based chain position.
  int segment_of(std::size_t pos) const {
    require(pos >= 1 && pos <= size(), "chain position out of range");
    const int s = (int)(std::upper_bound(segment_offsets.begin(), segment_offsets.end(),
                                         pos - 1) -
                        segment_offsets.begin());
    return s;
  }

  // Height of the column a segment belongs to.
  int segment_height(int seg) const {
    const int col = sys.kind == Kind::A ? seg : (seg + 1) / 2;
    return column_heights[col - 1];
  }
};

inline LambdaChain lambda_chain(const RootSystem& rs, const Weight& lambda) {
  if (!is_dominant(rs, lambda)) throw std::invalid_argument("lambda must be dominant");
  LambdaChain chain{rs, lambda, partition_of(lambda), {}, {}, {}, {}, {}};
  chain.column_heights = conjugate_partition(chain.lambda_parts);
  chain.segment_offsets.push_back(0);
  for (int h : chain.column_heights) {
    if (rs.kind == Kind::A) {
      const std::vector<Root> block = omega_chain(rs, h);
      chain.roots.insert(chain.roots.end(), block.begin(), block.end());
      chain.segment_offsets.push_back(chain.roots.size());
    } else {
      auto [left, right] = detail::omega_chain_C(rs, h);
      chain.roots.insert(chain.roots.end(), left.begin(), left.end());
      chain.segment_offsets.push_back(chain.roots.size());
      chain.roots.insert(chain.roots.end(), right.begin(), right.end());
      chain.segment_offsets.push_back(chain.roots.size());
    }
  }
  chain.levels.resize(chain.size());
  chain.co_levels.resize(chain.size());
  std::map<std::tuple<int, int, int>, int> seen;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const Root& b = chain.roots[i];
    chain.levels[i] = seen[{(int)b.cls, b.i, b.j}]++;
    chain.co_levels[i] = (int)pairing(lambda, b) - chain.levels[i];
    require(chain.co_levels[i] >= 1, "co-level must be positive on a reduced chain");
  }
  return chain;
}

}  // namespace alcove
