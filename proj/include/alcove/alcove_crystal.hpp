#pragma once

#include <optional>

#include "admissible.hpp"
#include "folding.hpp"

#include <nlohmann/json.hpp>

// Crystal operators f_p / e_p on admissible subsets, driven by the
// piecewise-linear profiles g_alpha of the folded levels.

namespace alcove {

// Profile of g_alpha for alpha = alpha_p (simple, or theta when p = 0).
// Values are stored doubled so half-integers stay exact. Slot t (1-based)
// covers the finite index I[t-1]; the last slot is the infinity sentinel.
struct GAlphaProfile {
  Root alpha;
  std::vector<int> I;            // positions with gamma_i = +-alpha, ascending
  std::vector<int> half2;        // 2*g(t - 1/2) = 2*sgn(alpha)*level_i_t
  int inf2 = 0;                  // 2*g(n + 1/2) = 2*<mu, alpha^vee>
  int g0_2 = 0;                  // 2*g(0) = -sgn(alpha)
  std::vector<std::pair<int, int>> sigma;  // slopes (first half, second half)
  int sigma_last = 0;            // slope into the endpoint
  int M2 = 0;                    // 2*max(g)

  bool attains_at_slot(std::size_t t) const { return half2[t] == M2; }
  bool attains_at_infinity() const { return inf2 == M2; }

  // Slot of the first peak over I-hat (I.size() encodes infinity), used by
  // f_p; -1 when the maximum is never attained at a half point.
  std::ptrdiff_t min_peak_slot() const {
    for (std::size_t t = 0; t < I.size(); ++t)
      if (attains_at_slot(t)) return (std::ptrdiff_t)t;
    return attains_at_infinity() ? (std::ptrdiff_t)I.size() : -1;
  }

  // Slot of the last peak over the finite indices, used by e_p.
  std::ptrdiff_t max_finite_peak_slot() const {
    for (std::ptrdiff_t t = (std::ptrdiff_t)I.size() - 1; t >= 0; --t)
      if (attains_at_slot(t)) return t;
    return -1;
  }
};

inline GAlphaProfile g_profile(const FoldedChain& f, int p) {
  const RootSystem& rs = f.chain->sys;
  GAlphaProfile prof;
  prof.alpha = operator_root(rs, p);
  const Root aabs = prof.alpha.abs();
  for (std::size_t k = 1; k <= f.gamma.size(); ++k)
    if (f.gamma[k - 1].abs() == aabs) prof.I.push_back((int)k);

  prof.g0_2 = -prof.alpha.sign;
  prof.inf2 = 2 * (int)pairing(f.mu, prof.alpha);
  prof.sigma_last = pairing_vec(f.gamma_inf, prof.alpha) > 0 ? 1 : -1;

  int g2 = prof.g0_2;
  prof.M2 = g2;
  for (int i : prof.I) {
    const int s = f.gamma[i - 1] == prof.alpha ? 1 : -1;
    const int s2 = f.eps[i - 1] * s;
    prof.sigma.emplace_back(s, s2);
    g2 += s;  // to the half point
    require(g2 == prof.alpha.sign * 2 * f.folded_levels[i - 1],
            "profile walk disagrees with folded levels");
    prof.half2.push_back(g2);
    prof.M2 = std::max(prof.M2, g2);
    g2 += s2;  // to the integer point
    prof.M2 = std::max(prof.M2, g2);
  }
  g2 += prof.sigma_last;
  require(g2 == prof.inf2, "profile endpoint disagrees with <mu, alpha^vee>");
  prof.M2 = std::max(prof.M2, prof.inf2);
  return prof;
}

// The pair of positions an f_p move touches: k enters J and m (when finite)
// leaves it. Empty when M <= delta_{p,0}.
struct FMove {
  int k;
  std::optional<int> m;  // nullopt encodes the infinity sentinel
};

inline std::optional<FMove> f_move(const FoldedChain& f, const GAlphaProfile& prof,
                                   int p) {
  const int delta2 = p == 0 ? 2 : 0;
  if (prof.M2 <= delta2) return std::nullopt;
  const std::ptrdiff_t mpos = prof.min_peak_slot();
  require(mpos >= 0, "maximum not attained at any half point");
  require(mpos >= 1, "m has no predecessor in I-hat");
  FMove mv{prof.I[mpos - 1], std::nullopt};
  require(f.eps[mv.k - 1] == 1, "predecessor position already folded");
  if (mpos < (std::ptrdiff_t)prof.I.size()) {
    mv.m = prof.I[mpos];
    require(f.eps[*mv.m - 1] == -1, "peak position not folded");
  }
  return mv;
}

// f_p(J) = (J \ {m}) u {k} when M > delta_{p,0}, where m is the first index
// of I-hat whose level reaches M and k is its predecessor; null otherwise.
// The convention J \ {inf} = J u {inf} = J handles the sentinel.
inline std::optional<std::vector<int>> crystal_f(const FoldedChain& f, int p) {
  const GAlphaProfile prof = g_profile(f, p);
  const auto mv = f_move(f, prof, p);
  if (!mv) return std::nullopt;
  std::vector<int> out;
  for (int j : f.J)
    if (!mv->m || j != *mv->m) out.push_back(j);
  out.insert(std::upper_bound(out.begin(), out.end(), mv->k), mv->k);
  return out;
}

// e_p(J) = (J \ {k}) u {m} when M > <mu(J), alpha_p^vee> and M >= delta_{p,0},
// where k is the last finite index of I reaching M and m its successor in
// I-hat.
inline std::optional<std::vector<int>> crystal_e(const FoldedChain& f, int p) {
  const GAlphaProfile prof = g_profile(f, p);
  const int delta2 = p == 0 ? 2 : 0;
  if (!(prof.M2 > prof.inf2 && prof.M2 >= delta2)) return std::nullopt;
  const std::ptrdiff_t kpos = prof.max_finite_peak_slot();
  require(kpos >= 0, "maximum not attained at a finite index");
  const int k = prof.I[kpos];
  require(f.eps[k - 1] == -1, "peak position not folded");
  std::vector<int> out;
  for (int j : f.J)
    if (j != k) out.push_back(j);
  if (kpos + 1 < (std::ptrdiff_t)prof.I.size()) {
    const int m = prof.I[kpos + 1];
    require(f.eps[m - 1] == 1, "successor position already folded");
    out.insert(std::upper_bound(out.begin(), out.end(), m), m);
  }
  return out;
}

inline std::optional<std::vector<int>> crystal_f(const LambdaChain& chain,
                                                 const std::vector<int>& J, int p) {
  return crystal_f(fold(chain, J), p);
}
inline std::optional<std::vector<int>> crystal_e(const LambdaChain& chain,
                                                 const std::vector<int>& J, int p) {
  return crystal_e(fold(chain, J), p);
}

// Restrictions on the sigma sequence of g_alpha over an admissible subset:
// (C1) the first slope is up (simple alpha), (C2) an up second half-slope
// forces an up first half-slope next, maxima occur only at half points with
// the peak shape, and M is a nonnegative integer; the theta variants hold
// under their thresholds M >= 1 / M >= 2.
inline std::vector<std::string> check_g_profile_conditions(const GAlphaProfile& prof,
                                                           bool is_theta) {
  std::vector<std::string> bad;
  const std::size_t slots = prof.I.size();
  if (!is_theta) {
    if (slots > 0 && prof.sigma[0].first != 1) bad.push_back("C1 fails");
    if (slots == 0 && prof.sigma_last != 1) bad.push_back("C1 (empty I) fails");
  }
  for (std::size_t t = 0; t + 1 < slots; ++t)
    if (prof.sigma[t].second == 1 && prof.sigma[t + 1].first != 1)
      bad.push_back("C2 fails at slot " + std::to_string(t + 1));
  if (slots > 0 && prof.sigma[slots - 1].second == 1 && prof.sigma_last != 1)
    bad.push_back("C2 fails at the last slot");

  const int threshold2 = is_theta ? 2 : 0;
  if (prof.M2 >= threshold2) {
    if (prof.M2 % 2 != 0) bad.push_back("maximum is not an integer");
    if (prof.g0_2 == prof.M2) bad.push_back("maximum attained at x=0");
    // walk integer points and check none attains M
    int g2 = prof.g0_2;
    for (std::size_t t = 0; t < slots; ++t) {
      g2 += prof.sigma[t].first + prof.sigma[t].second;
      if (g2 == prof.M2) bad.push_back("maximum attained at integer x");
    }
    for (std::size_t t = 0; t < slots; ++t)
      if (prof.attains_at_slot(t) &&
          !(prof.sigma[t].first == 1 && prof.sigma[t].second == -1))
        bad.push_back("peak slot " + std::to_string(t + 1) + " is not (1,-1)");
    if (prof.attains_at_infinity() && prof.sigma_last != 1)
      bad.push_back("peak at infinity without rising slope");
  }
  // minimum attaining point (threshold M >= 2 for theta, M > 0 otherwise)
  if (prof.M2 >= (is_theta ? 4 : 2)) {
    std::ptrdiff_t first = -1;
    for (std::size_t t = 0; t < slots; ++t)
      if (prof.attains_at_slot(t)) { first = (std::ptrdiff_t)t; break; }
    const bool at_inf = first < 0;
    if (at_inf) require(prof.attains_at_infinity(), "maximum not attained");
    // slot holding the first peak, 1-based
    const std::size_t peak = at_inf ? slots + 1 : (std::size_t)first + 1;
    if (peak < 2) bad.push_back("minimum peak at the first slot");
    else {
      if (prof.sigma[peak - 2] != std::make_pair(1, 1))
        bad.push_back("slope into the minimum peak is not (1,1)");
      if (prof.half2[peak - 2] != prof.M2 - 2)
        bad.push_back("level before the minimum peak is not M-1");
      int g2 = prof.g0_2;
      bool prefix_ok = g2 <= prof.M2 - 2;
      for (std::size_t t = 0; t + 1 < peak - 1; ++t) {
        g2 += prof.sigma[t].first;
        prefix_ok = prefix_ok && g2 <= prof.M2 - 2;
        g2 += prof.sigma[t].second;
        prefix_ok = prefix_ok && g2 <= prof.M2 - 2;
      }
      if (!prefix_ok) bad.push_back("profile exceeds M-1 before the minimum peak");
    }
  }
  // maximum attaining point (requires M > g(n+1/2); theta also needs M >= 1)
  if (prof.M2 > prof.inf2 && prof.M2 >= threshold2) {
    std::ptrdiff_t last = -1;
    for (std::ptrdiff_t t = (std::ptrdiff_t)slots - 1; t >= 0; --t)
      if (prof.attains_at_slot(t)) { last = t; break; }
    if (last < 0) bad.push_back("maximum not attained at a finite slot");
    else {
      const std::size_t k = (std::size_t)last + 1;  // paper's k = slot index
      const bool next_is_last = k == slots;
      if (next_is_last) {
        if (prof.sigma_last != -1) bad.push_back("slope after the maximum peak is not down");
        if (prof.inf2 != prof.M2 - 2) bad.push_back("endpoint after maximum peak is not M-1");
      } else {
        if (prof.sigma[k] != std::make_pair(-1, -1))
          bad.push_back("slope after the maximum peak is not (-1,-1)");
        if (prof.half2[k] != prof.M2 - 2)
          bad.push_back("level after the maximum peak is not M-1");
        int g2 = prof.half2[k];
        bool tail_ok = true;
        for (std::size_t t = k + 1; t <= slots; ++t) {
          g2 += prof.sigma[t - 1].second;
          tail_ok = tail_ok && g2 <= prof.M2 - 2;
          if (t < slots) {
            g2 += prof.sigma[t].first;
            tail_ok = tail_ok && g2 <= prof.M2 - 2;
          }
        }
        g2 += prof.sigma_last;
        tail_ok = tail_ok && g2 <= prof.M2 - 2;
        if (!tail_ok) bad.push_back("profile exceeds M-1 after the maximum peak");
      }
    }
  }
  return bad;
}

// --- the crystal graph on admissible subsets --------------------------------

struct AlcoveCrystal {
  const LambdaChain* chain;
  std::vector<std::vector<int>> vertices;  // admissible subsets, lex order
  std::vector<FoldedChain> folded;         // parallel to vertices
  struct Edge { int from, to, p; };
  std::vector<Edge> edges;  // ordered by (from, p)

  int vertex_index(const std::vector<int>& J) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), J);
    require(it != vertices.end() && *it == J, "subset is not a crystal vertex");
    return (int)(it - vertices.begin());
  }
};

inline AlcoveCrystal build_alcove_crystal(const LambdaChain& chain,
                                          std::size_t max_chain_length = 64,
                                          int workers = 1) {
  AlcoveCrystal g;
  g.chain = &chain;
  g.vertices = enumerate_admissible(chain, max_chain_length, workers);
  std::sort(g.vertices.begin(), g.vertices.end());
  g.folded.resize(g.vertices.size());
  const int rank = chain.sys.rank();
  std::vector<std::vector<AlcoveCrystal::Edge>> buckets(g.vertices.size());
  for_chunks(g.vertices.size(), workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      g.folded[v] = fold(chain, g.vertices[v]);
      for (int p = 0; p <= rank; ++p)
        if (auto out = crystal_f(g.folded[v], p))
          buckets[v].push_back({(int)v, g.vertex_index(*out), p});
    }
  });
  for (auto& b : buckets)
    for (auto& e : b) g.edges.push_back(e);
  return g;
}

// --- serialization ----------------------------------------------------------

inline std::string subset_str(const std::vector<int>& J) {
  std::string s = "{";
  for (std::size_t i = 0; i < J.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(J[i]);
  }
  return s + "}";
}

inline nlohmann::json folded_to_json(const FoldedChain& f) {
  nlohmann::json j;
  j["J"] = f.J;
  j["gamma"] = nlohmann::json::array();
  for (const Root& g : f.gamma) j["gamma"].push_back(root_str(g));
  j["folded_levels"] = f.folded_levels;
  j["gamma_inf"] = f.gamma_inf;
  j["J_plus"] = f.J_plus;
  j["J_minus"] = f.J_minus;
  j["mu"] = f.mu.coords;
  j["height"] = f.height;
  return j;
}

// Every f_0 edge produced by this model is a dual Demazure arrow, so the
// flag is uniformly true here.
inline nlohmann::json alcove_crystal_to_json(const AlcoveCrystal& g) {
  nlohmann::json j;
  j["kind"] = kind_name(g.chain->sys.kind);
  j["n"] = g.chain->sys.n;
  j["lambda"] = g.chain->lambda_parts;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    j["vertices"].push_back({{"J", g.vertices[v]},
                             {"mu", g.folded[v].mu.coords},
                             {"height", g.folded[v].height}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back(
        {{"from", e.from}, {"to", e.to}, {"p", e.p}, {"dual_demazure", true}});
  return j;
}

inline std::string alcove_crystal_to_dot(const AlcoveCrystal& g) {
  std::ostringstream os;
  os << "digraph alcove_crystal {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  n" << v << " [label=\"" << subset_str(g.vertices[v]) << "\"];\n";
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.p
       << "\", dual_demazure=true];\n";
  os << "}\n";
  return os.str();
}

}  // namespace alcove
