#pragma once

#include "parallel.hpp"
#include "weyl.hpp"

#include <nlohmann/json.hpp>

// The quantum Bruhat graph on W: Bruhat covers w -> w s_beta with
// l(w s_beta) = l(w) + 1, plus quantum edges with
// l(w s_beta) = l(w) - 2<rho, beta^vee> + 1.

namespace alcove {

enum class QbgEdgeKind { None, Cover, Quantum };

inline std::string edge_kind_str(QbgEdgeKind k) {
  switch (k) {
    case QbgEdgeKind::Cover: return "cover";
    case QbgEdgeKind::Quantum: return "quantum";
    default: return "none";
  }
}

inline QbgEdgeKind edge_kind_by_length(const WeylElement& w, const Root& beta) {
  require(beta.positive(), "edge label must be a positive root");
  const int lw = length(w);
  const int lv = length(apply_reflection_right(w, beta));
  if (lv == lw + 1) return QbgEdgeKind::Cover;
  if (lv == lw - 2 * (int)pairing(rho(w.sys), beta) + 1) return QbgEdgeKind::Quantum;
  return QbgEdgeKind::None;
}

// Decides Cover vs Quantum once the existence test has passed: exactly one
// of the two length equations can hold, and a cover raises the length.
inline QbgEdgeKind classify_existing_edge(const WeylElement& w, const Root& beta) {
  return length(apply_reflection_right(w, beta)) > length(w) ? QbgEdgeKind::Cover
                                                             : QbgEdgeKind::Quantum;
}

// Type A circular-order criterion: w --(i,j)--> w(i,j) is an edge iff there
// is no k with i < k < j and w(i) < w(k) < w(j) circularly from w(i).
inline QbgEdgeKind edge_kind_fast_A(const WeylElement& w, const Root& beta) {
  require(w.sys.kind == Kind::A && beta.cls == RootClass::Diff && beta.positive(),
          "type A edge test needs a positive root (i,j)");
  const int wi = w(beta.i), wj = w(beta.j);
  for (int k = beta.i + 1; k < beta.j; ++k)
    if (circular_less(w.sys, wi, w(k), wj)) return QbgEdgeKind::None;
  return classify_existing_edge(w, beta);
}

// Type C criteria, one per root class.
inline QbgEdgeKind edge_kind_fast_C(const WeylElement& w, const Root& beta) {
  require(w.sys.kind == Kind::C && beta.positive(), "type C edge test needs a positive root");
  const RootSystem& rs = w.sys;
  switch (beta.cls) {
    case RootClass::Diff: {
      const int wi = w(beta.i), wj = w(beta.j);
      for (int k = beta.i + 1; k < beta.j; ++k)
        if (circular_less(rs, wi, w(k), wj)) return QbgEdgeKind::None;
      return classify_existing_edge(w, beta);
    }
    case RootClass::Sum: {
      // Edge w -> w(i,-j) iff w(i) < w(j-bar), both letters have the same
      // sign, and no position k strictly between i and j-bar has
      // w(i) < w(k) < w(j-bar) in the letter order.
      const int wi = w(beta.i), wjb = w(-beta.j);
      if (!letter_less(rs, wi, wjb)) return QbgEdgeKind::None;
      if ((wi > 0) != (wjb > 0)) return QbgEdgeKind::None;
      for (int k = beta.i + 1; k <= rs.n; ++k)
        if (letter_less(rs, wi, w(k)) && letter_less(rs, w(k), wjb)) return QbgEdgeKind::None;
      for (int k = rs.n; k > beta.j; --k)
        if (letter_less(rs, wi, w(-k)) && letter_less(rs, w(-k), wjb)) return QbgEdgeKind::None;
      return classify_existing_edge(w, beta);
    }
    default: {
      const int wi = w(beta.i), wib = w(-beta.i);
      for (int k = beta.i + 1; k <= rs.n; ++k)
        if (circular_less(rs, wi, w(k), wib)) return QbgEdgeKind::None;
      return classify_existing_edge(w, beta);
    }
  }
}

inline QbgEdgeKind edge_kind_fast(const WeylElement& w, const Root& beta) {
  return w.sys.kind == Kind::A ? edge_kind_fast_A(w, beta) : edge_kind_fast_C(w, beta);
}

struct QbgEdge {
  int from;
  int to;
  int root_index;  // into positive_roots order
  QbgEdgeKind kind;
};

struct QuantumBruhatGraph {
  RootSystem sys;
  std::vector<WeylElement> vertices;  // sorted windows
  std::vector<Root> roots;
  std::vector<std::vector<QbgEdge>> adjacency;  // per vertex, root order

  int vertex_index(const WeylElement& w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    require(it != vertices.end() && *it == w, "vertex not in graph");
    return (int)(it - vertices.begin());
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto& a : adjacency) c += a.size();
    return c;
  }
};

inline QuantumBruhatGraph build_quantum_bruhat_graph(const RootSystem& rs,
                                                     long max_group_order = 3628800,
                                                     int workers = 1) {
  QuantumBruhatGraph g{rs, all_group_elements(rs, max_group_order), positive_roots(rs), {}};
  g.adjacency.resize(g.vertices.size());
  for_chunks(g.vertices.size(), workers, [&](std::size_t b, std::size_t e) {
    for (std::size_t v = b; v < e; ++v) {
      for (int ri = 0; ri < (int)g.roots.size(); ++ri) {
        const QbgEdgeKind kind = edge_kind_fast(g.vertices[v], g.roots[ri]);
        if (kind == QbgEdgeKind::None) continue;
        const WeylElement target = apply_reflection_right(g.vertices[v], g.roots[ri]);
        g.adjacency[v].push_back(QbgEdge{(int)v, g.vertex_index(target), ri, kind});
      }
    }
  });
  return g;
}

// --- structural checks -----------------------------------------------------

// w qstep s_theta w as a relation: s_theta w = w s_gamma with
// gamma = |w^{-1}(theta)|, tested by the quantum length equation.
inline bool qstep_to_stheta(const WeylElement& w) {
  const Root gamma = act_on_root(inverse(w), theta(w.sys)).abs();
  const WeylElement v = apply_reflection_left(theta(w.sys), w);
  return length(v) == length(w) - 2 * (int)pairing(rho(w.sys), gamma) + 1;
}

// Both biconditionals: w^{-1}(theta) > 0 iff w qstep s_theta w, and
// w^{-1}(theta) < 0 iff s_theta w qstep w.
inline std::vector<std::string> check_lemma_theta(const RootSystem& rs,
                                                  long max_group_order = 3628800) {
  std::vector<std::string> bad;
  for (const WeylElement& w : all_group_elements(rs, max_group_order)) {
    const bool theta_pos = act_on_root(inverse(w), theta(rs)).positive();
    if (theta_pos != qstep_to_stheta(w))
      bad.push_back("direction 1 fails at w=" + window_str(w));
    const WeylElement sw = apply_reflection_left(theta(rs), w);
    if (!theta_pos != qstep_to_stheta(sw))
      bad.push_back("direction 2 fails at w=" + window_str(w));
  }
  return bad;
}

// The two diamond statements. For a simple root alpha and positive beta
// with s_a w != w s_b:
//   [w covered by s_a w  and  w -> w s_b]  iff
//   [w s_b covered by s_a w s_b  and  s_a w -> s_a w s_b],
// and in that context, w covered by w s_b iff s_a w covered by s_a w s_b.
// The theta variant replaces covers by qstep and alpha by theta.
inline std::vector<std::string> check_diamond_lemmas(const RootSystem& rs,
                                                     long max_group_order = 3628800) {
  std::vector<std::string> bad;
  const auto elements = all_group_elements(rs, max_group_order);
  const auto positives = positive_roots(rs);
  auto covered_by_left = [](const WeylElement& x, const Root& alpha) {
    return length(apply_reflection_left(alpha, x)) == length(x) + 1;
  };
  auto is_edge = [](const WeylElement& x, const Root& beta) {
    return edge_kind_by_length(x, beta) != QbgEdgeKind::None;
  };
  for (const WeylElement& w : elements) {
    for (const Root& beta : positives) {
      const WeylElement wb = apply_reflection_right(w, beta);
      for (const Root& alpha : simple_roots(rs)) {
        if (apply_reflection_left(alpha, w) == wb) continue;
        const bool lhs = covered_by_left(w, alpha) && is_edge(w, beta);
        const bool rhs = covered_by_left(wb, alpha) &&
                         is_edge(apply_reflection_left(alpha, w), beta);
        if (lhs != rhs) {
          bad.push_back("simple diamond fails at w=" + window_str(w) + " beta=" +
                        root_str(beta) + " alpha=" + root_str(alpha));
          continue;
        }
        if (lhs) {
          const bool low = length(wb) == length(w) + 1;
          const WeylElement aw = apply_reflection_left(alpha, w);
          const bool high = length(apply_reflection_right(aw, beta)) == length(aw) + 1;
          if (low != high)
            bad.push_back("cover transfer fails at w=" + window_str(w) + " beta=" +
                          root_str(beta) + " alpha=" + root_str(alpha));
        }
      }
      if (apply_reflection_left(theta(rs), w) != wb) {
        const bool lhs = qstep_to_stheta(w) && is_edge(w, beta);
        const bool rhs = qstep_to_stheta(wb) &&
                         is_edge(apply_reflection_left(theta(rs), w), beta);
        if (lhs != rhs)
          bad.push_back("theta diamond fails at w=" + window_str(w) + " beta=" +
                        root_str(beta));
      }
    }
  }
  return bad;
}

// --- serialization ----------------------------------------------------------

inline std::string qbg_to_dot(const QuantumBruhatGraph& g, bool bars = false) {
  std::ostringstream os;
  os << "digraph qbg {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    os << "  n" << v << " [label=\"" << window_str(g.vertices[v], bars) << "\"];\n";
  for (const auto& adj : g.adjacency)
    for (const QbgEdge& e : adj)
      os << "  n" << e.from << " -> n" << e.to << " [kind=" << edge_kind_str(e.kind)
         << ", label=\"" << root_str(g.roots[e.root_index]) << "\"];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::json qbg_to_json(const QuantumBruhatGraph& g) {
  nlohmann::json j;
  j["kind"] = kind_name(g.sys.kind);
  j["n"] = g.sys.n;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back(window_str(v));
  j["edges"] = nlohmann::json::array();
  for (const auto& adj : g.adjacency)
    for (const QbgEdge& e : adj)
      j["edges"].push_back({{"from", e.from},
                            {"to", e.to},
                            {"root", root_str(g.roots[e.root_index])},
                            {"kind", edge_kind_str(e.kind)}});
  return j;
}

}  // namespace alcove
