#pragma once

#include "alcove_crystal.hpp"
#include "tensor_crystal.hpp"

// The filling maps connecting admissible subsets to tensor elements, the
// content/height-counting identities, and the crystal isomorphism verifier.

namespace alcove {

// fill(J): walk the chain multiplying the reflections at positions of J,
// snapshotting window prefixes at segment boundaries. Defined for every
// J, admissible or not. Type A produces one column per segment; type C
// produces the doubled filling (two columns per original column).
inline std::vector<Column> fill(const LambdaChain& chain, const std::vector<int>& J) {
  WeylElement pi = WeylElement::identity(chain.sys);
  std::vector<Column> columns;
  std::size_t next = 0;
  for (int s = 1; s <= chain.segments(); ++s) {
    for (std::size_t k = chain.segment_offsets[s - 1] + 1; k <= chain.segment_offsets[s];
         ++k) {
      if (next < J.size() && (std::size_t)J[next] == k) {
        pi = apply_reflection_right(pi, chain.roots[k - 1]);
        ++next;
      }
    }
    const int h = chain.segment_height(s);
    columns.emplace_back(pi.window.begin(), pi.window.begin() + h);
  }
  require(next == J.size(), "folding positions out of range");
  return columns;
}

struct SortedFilling {
  std::vector<Column> columns;  // sorted columns; the doubled filling in type C
  TensorElement element;        // tensor of KN columns (equals columns in type A)
};

// sfill(J): sort the columns of fill(J) ascendingly; in type C additionally
// recover the KN column behind each consecutive split pair. Recovery failing
// for an admissible J would be a model bug, so it throws.
inline SortedFilling sfill(const LambdaChain& chain, const std::vector<int>& J) {
  SortedFilling out;
  out.columns = fill(chain, J);
  for (Column& c : out.columns) sort_column(chain.sys, c);
  if (chain.sys.kind == Kind::A) {
    out.element.factors = out.columns;
    return out;
  }
  TensorElement doubled{out.columns};
  auto back = unsplit_element(chain.sys, doubled);
  require(back.has_value(), "sorted pair is not a split column pair");
  out.element = std::move(*back);
  return out;
}

// Content in doubled units: entry x holds 2*N_x in type A and
// N_x - N_{x-bar} = 2*c_x in type C. Exact half-integers.
inline std::vector<int> content2(const RootSystem& rs, const std::vector<Column>& columns,
                                 std::size_t first_q = SIZE_MAX) {
  std::vector<int> c(rs.n, 0);
  const std::size_t q = std::min(first_q, columns.size());
  for (std::size_t k = 0; k < q; ++k)
    for (int x : columns[k]) c[std::abs(x) - 1] += rs.kind == Kind::A ? 2 : (x > 0 ? 1 : -1);
  return c;
}

inline Weight content_weight(const RootSystem& rs, const std::vector<Column>& columns) {
  std::vector<int> c2 = content2(rs, columns);
  for (int& x : c2) {
    require(x % 2 == 0, "content of a full filling must be integral");
    x /= 2;
  }
  return Weight(rs, std::move(c2));
}

// mu(J) = ct(fill(J)), for arbitrary J.
inline bool verify_weight_lemma(const LambdaChain& chain, const std::vector<int>& J) {
  return fold(chain, J).mu == content_weight(chain.sys, fill(chain, J));
}

// sgn(gamma_k) l_k = <ct(sigma[q]), gamma_k^vee> whenever gamma_k lies in
// the (q+1)-st segment, for arbitrary J.
inline bool verify_height_counting(const LambdaChain& chain, const std::vector<int>& J) {
  const FoldedChain f = fold(chain, J);
  const std::vector<Column> sigma = fill(chain, J);
  for (std::size_t k = 1; k <= chain.size(); ++k) {
    const int q = chain.segment_of(k) - 1;
    const int sgn = f.gamma[k - 1].positive() ? 1 : -1;
    if (2L * sgn * f.folded_levels[k - 1] !=
        pairing_vec(content2(chain.sys, sigma, q), f.gamma[k - 1]))
      return false;
  }
  return true;
}

// Per-column statistics a_i and prefix sums h_j for an operator index p,
// doubled so the type C half-integers stay exact.
struct FillingStats {
  std::vector<int> a2;  // 1-based in spirit: a2[i-1] is column i
  std::vector<int> h2;  // h2[j] = 2*h_j, size columns+1, h2[0] = 0
  int M2 = 0;           // 2*max h
  int m_prime = 0;      // minimal j with h2[j] = M2
};

inline FillingStats filling_stats(const RootSystem& rs, const std::vector<Column>& columns,
                                  int p) {
  const Root alpha = operator_root(rs, p);
  FillingStats st;
  st.h2.push_back(0);
  for (std::size_t i = 0; i < columns.size(); ++i) {
    st.a2.push_back((int)pairing_vec(content2(rs, {columns[i]}), alpha));
    st.h2.push_back(st.h2.back() + st.a2.back());
  }
  st.M2 = *std::max_element(st.h2.begin(), st.h2.end());
  st.m_prime = (int)(std::find(st.h2.begin(), st.h2.end(), st.M2) - st.h2.begin());
  return st;
}

}  // namespace alcove
