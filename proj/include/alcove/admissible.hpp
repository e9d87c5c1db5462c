#pragma once

#include "lambda_chain.hpp"
#include "parallel.hpp"
#include "qbg.hpp"

// Admissible subsets: J = {j_1 < ... < j_s} is admissible when
// 1 -> r_{j_1} -> r_{j_1}r_{j_2} -> ... is a path in the quantum Bruhat
// graph, each step labeled by the chain root at that position.

namespace alcove {

inline bool is_admissible(const LambdaChain& chain, const std::vector<int>& J) {
  WeylElement w = WeylElement::identity(chain.sys);
  int prev = 0;
  for (int j : J) {
    require(j > prev && (std::size_t)j <= chain.size(), "folding positions must be sorted");
    prev = j;
    const Root& beta = chain.roots[j - 1];
    if (edge_kind_fast(w, beta) == QbgEdgeKind::None) return false;
    w = apply_reflection_right(w, beta);
  }
  return true;
}

namespace detail {
inline void admissible_dfs(const LambdaChain& chain, std::vector<int>& J,
                           const WeylElement& w, std::size_t from,
                           std::vector<std::vector<int>>& out) {
  out.push_back(J);
  for (std::size_t k = from; k <= chain.size(); ++k) {
    const Root& beta = chain.roots[k - 1];
    if (edge_kind_fast(w, beta) == QbgEdgeKind::None) continue;
    J.push_back((int)k);
    admissible_dfs(chain, J, apply_reflection_right(w, beta), k + 1, out);
    J.pop_back();
  }
}
}  // namespace detail

// All admissible subsets in lexicographic order. Every prefix of an
// admissible subset is admissible (prefixes of paths are paths), which is
// what makes the DFS complete. Parallelism splits on the first folding
// position; the merge is in position order, so results do not depend on
// the worker count.
inline std::vector<std::vector<int>> enumerate_admissible(const LambdaChain& chain,
                                                          std::size_t max_chain_length = 64,
                                                          int workers = 1) {
  if (chain.size() > max_chain_length)
    throw ResourceLimitError("chain length exceeds the configured bound");
  const WeylElement id = WeylElement::identity(chain.sys);
  if (workers <= 1) {
    std::vector<std::vector<int>> out;
    std::vector<int> J;
    detail::admissible_dfs(chain, J, id, 1, out);
    return out;
  }
  std::vector<std::size_t> starts;  // admissible singletons {k}
  for (std::size_t k = 1; k <= chain.size(); ++k)
    if (edge_kind_fast(id, chain.roots[k - 1]) != QbgEdgeKind::None) starts.push_back(k);
  std::vector<std::vector<std::vector<int>>> buckets(starts.size());
  for_chunks(starts.size(), workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t s = b; s < e; ++s) {
      const std::size_t k = starts[s];
      std::vector<int> J{(int)k};
      detail::admissible_dfs(chain, J, apply_reflection_right(id, chain.roots[k - 1]),
                             k + 1, buckets[s]);
    }
  });
  std::vector<std::vector<int>> out;
  out.push_back({});
  for (auto& b : buckets)
    for (auto& J : b) out.push_back(std::move(J));
  return out;
}

}  // namespace alcove
