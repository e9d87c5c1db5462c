#pragma once

#include "lambda_chain.hpp"
#include "weyl.hpp"

// Folding a lambda-chain at a set J of positions: the signed roots
// gamma_k, the folded levels, gamma_infinity, the weight mu(J) and the
// height statistic.

namespace alcove {

// An affine map v -> u(v) + t with u in W. The affine reflection in
// H_{beta,k} is (s_beta, k*beta).
struct AffineMap {
  WeylElement u;
  std::vector<int> t;

  static AffineMap identity(const RootSystem& rs) {
    return AffineMap{WeylElement::identity(rs), std::vector<int>(rs.n, 0)};
  }

  std::vector<int> apply(const std::vector<int>& v) const {
    std::vector<int> out = act_on_vector(u, v);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += t[k];
    return out;
  }

  // this := this o s_{beta,level}
  void compose_reflection(const Root& beta, int level) {
    const std::vector<int> shift = act_on_vector(u, root_vector(beta, u.sys.n));
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += level * shift[k];
    u = apply_reflection_right(u, beta);
  }
};

struct FoldedChain {
  const LambdaChain* chain;  // not owned
  std::vector<int> J;        // sorted folding positions, 1-based
  std::vector<Root> gamma;   // signed folded roots
  std::vector<int> folded_levels;  // l_k^Delta
  std::vector<int> eps;            // +1 off J, -1 on J
  std::vector<int> gamma_inf;      // image of rho under the folding product
  Weight mu;
  std::vector<int> J_plus, J_minus;
  long height = 0;  // sum of co-levels over negative folding positions
};

inline FoldedChain fold(const LambdaChain& chain, const std::vector<int>& J) {
  for (std::size_t a = 0; a + 1 < J.size(); ++a)
    require(J[a] < J[a + 1], "folding positions must be strictly increasing");
  if (!J.empty())
    require(J.front() >= 1 && (std::size_t)J.back() <= chain.size(),
            "folding position out of range");

  const RootSystem& rs = chain.sys;
  FoldedChain f;
  f.chain = &chain;
  f.J = J;
  f.gamma.reserve(chain.size());
  f.folded_levels.reserve(chain.size());
  f.eps.assign(chain.size(), 1);
  for (int j : J) f.eps[j - 1] = -1;

  AffineMap map = AffineMap::identity(rs);  // composed r-hat over foldings so far
  std::size_t next = 0;
  for (std::size_t k = 1; k <= chain.size(); ++k) {
    const Root beta = chain.roots[k - 1];
    const Root g = act_on_root(map.u, beta);
    // The hyperplane H_{beta_k, -l_k} maps to H_{gamma_k, -l_k + <t, gamma_k^vee>},
    // and H_{gamma,c} = H_{|gamma|, sgn(gamma) c}.
    const int lvl = (g.positive() ? 1 : -1) *
                    (chain.levels[k - 1] - (int)pairing_vec(map.t, g));
    f.gamma.push_back(g);
    f.folded_levels.push_back(lvl);
    if (next < J.size() && (std::size_t)J[next] == k) {
      map.compose_reflection(beta, -chain.levels[k - 1]);
      ++next;
    }
  }

  // gamma_infinity uses the linear reflections only, not the affine ones
  f.gamma_inf = act_on_vector(map.u, rho(rs).coords);
  // mu(J) = -(r-hat product)(-lambda)
  std::vector<int> neg_lambda = chain.lambda.coords;
  for (int& x : neg_lambda) x = -x;
  std::vector<int> img = map.apply(neg_lambda);
  for (int& x : img) x = -x;
  f.mu = Weight(rs, std::move(img));

  for (int j : J) {
    if (f.gamma[j - 1].positive()) f.J_plus.push_back(j);
    else {
      f.J_minus.push_back(j);
      f.height += chain.co_levels[j - 1];
    }
  }
  return f;
}

inline long height(const FoldedChain& f) { return f.height; }
inline const Weight& weight_mu(const FoldedChain& f) { return f.mu; }

}  // namespace alcove
