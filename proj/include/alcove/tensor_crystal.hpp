#pragma once

#include <optional>

#include "columns.hpp"
#include "parallel.hpp"

#include <nlohmann/json.hpp>

// Tensor products of column crystals with the signature-rule operators,
// including i = 0, Demazure / dual Demazure arrow classification and the
// energy statistic obtained by propagating its defining recursion.

namespace alcove {

struct TensorElement {
  std::vector<Column> factors;

  bool operator==(const TensorElement& o) const { return factors == o.factors; }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }
  bool operator<(const TensorElement& o) const { return factors < o.factors; }
};

inline std::string tensor_str(const TensorElement& b, bool bars = false) {
  std::string s;
  for (std::size_t f = 0; f < b.factors.size(); ++f) {
    if (f) s += "⊗";  // tensor sign
    s += column_str(b.factors[f], bars);
  }
  return s;
}

// Reading word: each column bottom to top, factors left to right.
inline std::vector<int> word(const TensorElement& b) {
  std::vector<int> w;
  for (const Column& c : b.factors)
    for (auto it = c.rbegin(); it != c.rend(); ++it) w.push_back(*it);
  return w;
}

namespace detail {

// +1 if the letter encodes as +, -1 as -, 0 if outside the class of i.
inline int signature_symbol(const RootSystem& rs, int i, int letter) {
  if (rs.kind == Kind::A) {
    if (i == 0) return letter == rs.n ? 1 : letter == 1 ? -1 : 0;
    return letter == i ? 1 : letter == i + 1 ? -1 : 0;
  }
  if (i == 0) return letter == -1 ? 1 : letter == 1 ? -1 : 0;
  if (i == rs.n) return letter == rs.n ? 1 : letter == -rs.n ? -1 : 0;
  if (letter == i || letter == -(i + 1)) return 1;
  if (letter == i + 1 || letter == -i) return -1;
  return 0;
}

inline int raise_letter(const RootSystem& rs, int i, int letter) {  // - to +
  if (rs.kind == Kind::A) return i == 0 ? rs.n : i;
  if (i == 0) return -1;
  if (i == rs.n) return rs.n;
  return letter == i + 1 ? i : -(i + 1);
}

inline int lower_letter(const RootSystem& rs, int i, int letter) {  // + to -
  if (rs.kind == Kind::A) return i == 0 ? 1 : i + 1;
  if (i == 0) return 1;
  if (i == rs.n) return -rs.n;
  return letter == i ? i + 1 : -i;
}

}  // namespace detail

struct SignatureEntry {
  int symbol;   // +1 or -1
  int factor;   // which column
  int index;    // entry position within the column
};

// The i-signature: encode the class letters of the word, then cancel
// adjacent -+ pairs until none remain. Survivors keep references to the
// cells they came from, so operators edit the original cell even when the
// same letter repeats.
struct SignatureWord {
  std::vector<SignatureEntry> raw;
  std::vector<SignatureEntry> reduced;  // x pluses then y minuses

  int plus_count() const {
    return (int)std::count_if(reduced.begin(), reduced.end(),
                              [](const SignatureEntry& e) { return e.symbol > 0; });
  }
  int minus_count() const { return (int)reduced.size() - plus_count(); }
};

inline SignatureWord i_signature(const RootSystem& rs, const TensorElement& b, int i) {
  SignatureWord sig;
  // For the 0-class in type A the letter 1 plays the raised role, so a
  // factor holding both 1 and n must contribute the cancelling pair -+;
  // reading those class letters bottom-up would order them +- instead.
  const bool ascending = rs.kind == Kind::A && i == 0;
  for (std::size_t f = 0; f < b.factors.size(); ++f) {
    const Column& c = b.factors[f];
    for (int step = 0; step < (int)c.size(); ++step) {
      const int k = ascending ? step : (int)c.size() - 1 - step;
      const int s = detail::signature_symbol(rs, i, c[k]);
      if (s != 0) sig.raw.push_back({s, (int)f, k});
    }
  }
  for (const SignatureEntry& e : sig.raw) {
    if (e.symbol > 0 && !sig.reduced.empty() && sig.reduced.back().symbol < 0)
      sig.reduced.pop_back();  // cancel the -+ pair
    else
      sig.reduced.push_back(e);
  }
  return sig;
}

namespace detail {

inline void replace_cell(const RootSystem& rs, TensorElement& b, const SignatureEntry& e,
                         int new_letter) {
  Column& c = b.factors[e.factor];
  c[e.index] = new_letter;
  sort_column(rs, c);
  require(is_strict_column(rs, c), "operator produced an invalid column");
}

// Signature-rule operators acting directly on the stored letters. In type C
// these are applied to the doubled (split) element.
inline std::optional<TensorElement> raw_f(const RootSystem& rs, const TensorElement& b,
                                          int i) {
  const SignatureWord sig = i_signature(rs, b, i);
  const int x = sig.plus_count();
  if (x == 0) return std::nullopt;
  const SignatureEntry cell = sig.reduced[x - 1];  // rightmost +
  TensorElement out = b;
  replace_cell(rs, out, cell,
               lower_letter(rs, i, b.factors[cell.factor][cell.index]));
  return out;
}

inline std::optional<TensorElement> raw_e(const RootSystem& rs, const TensorElement& b,
                                          int i) {
  const SignatureWord sig = i_signature(rs, b, i);
  const int x = sig.plus_count();
  if (sig.minus_count() == 0) return std::nullopt;
  const SignatureEntry cell = sig.reduced[x];  // leftmost -
  TensorElement out = b;
  replace_cell(rs, out, cell,
               raise_letter(rs, i, b.factors[cell.factor][cell.index]));
  return out;
}

}  // namespace detail

// The doubled form of a type C element: each KN factor replaced by its
// split pair (lC, rC).
inline TensorElement split_element(const RootSystem& rs, const TensorElement& b) {
  TensorElement d;
  for (const Column& c : b.factors) {
    auto sp = split_column(rs, c);
    require(sp.has_value(), "factor is not a KN column");
    d.factors.push_back(sp->first);
    d.factors.push_back(sp->second);
  }
  return d;
}

inline std::optional<TensorElement> unsplit_element(const RootSystem& rs,
                                                    const TensorElement& d) {
  require(d.factors.size() % 2 == 0, "doubled element needs an even number of columns");
  TensorElement b;
  for (std::size_t f = 0; f + 1 < d.factors.size(); f += 2) {
    auto c = unsplit_columns(rs, d.factors[f], d.factors[f + 1]);
    if (!c) return std::nullopt;
    b.factors.push_back(std::move(*c));
  }
  return b;
}

// Crystal operators. Type A acts by the signature rule directly; type C
// computes on the split doubling, applying the raw operator twice, and
// pulls the result back to KN columns.
inline std::optional<TensorElement> f_op(const RootSystem& rs, const TensorElement& b,
                                         int i) {
  if (rs.kind == Kind::A) return detail::raw_f(rs, b, i);
  auto once = detail::raw_f(rs, split_element(rs, b), i);
  if (!once) return std::nullopt;
  auto twice = detail::raw_f(rs, *once, i);
  require(twice.has_value(), "doubled operator application must come in pairs");
  auto back = unsplit_element(rs, *twice);
  require(back.has_value(), "doubled image is not a valid splitting");
  return back;
}

inline std::optional<TensorElement> e_op(const RootSystem& rs, const TensorElement& b,
                                         int i) {
  if (rs.kind == Kind::A) return detail::raw_e(rs, b, i);
  auto once = detail::raw_e(rs, split_element(rs, b), i);
  if (!once) return std::nullopt;
  auto twice = detail::raw_e(rs, *once, i);
  require(twice.has_value(), "doubled operator application must come in pairs");
  auto back = unsplit_element(rs, *twice);
  require(back.has_value(), "doubled image is not a valid splitting");
  return back;
}

// String statistics phi_i = #f-steps to 0, eps_i = #e-steps to 0, read off
// the reduced signature (halved on the doubling in type C).
inline int phi_stat(const RootSystem& rs, const TensorElement& b, int i) {
  if (rs.kind == Kind::A) return i_signature(rs, b, i).plus_count();
  const int doubled = i_signature(rs, split_element(rs, b), i).plus_count();
  require(doubled % 2 == 0, "doubled string statistic must be even");
  return doubled / 2;
}

inline int eps_stat(const RootSystem& rs, const TensorElement& b, int i) {
  if (rs.kind == Kind::A) return i_signature(rs, b, i).minus_count();
  const int doubled = i_signature(rs, split_element(rs, b), i).minus_count();
  require(doubled % 2 == 0, "doubled string statistic must be even");
  return doubled / 2;
}

// Weight: +e_x per unbarred letter x, -e_x per barred letter x-bar.
inline Weight tensor_weight(const RootSystem& rs, const TensorElement& b) {
  std::vector<int> c(rs.n, 0);
  for (const Column& col : b.factors)
    for (int x : col) c[std::abs(x) - 1] += x > 0 ? 1 : -1;
  return Weight(rs, std::move(c));
}

enum class ArrowClass { Both, DemazureOnly, DualDemazureOnly, Neither };

// Classification of the arrow b -> f_i(b); defined only when f_i(b) != 0.
// Every arrow with i != 0 is both; an i = 0 arrow is Demazure when
// eps_0(b) >= 1 and dual Demazure when phi_0(b) >= 2.
inline ArrowClass classify_arrow(const RootSystem& rs, const TensorElement& b, int i) {
  if (i != 0) return ArrowClass::Both;
  const bool demazure = eps_stat(rs, b, 0) >= 1;
  const bool dual = phi_stat(rs, b, 0) >= 2;
  if (demazure && dual) return ArrowClass::Both;
  if (demazure) return ArrowClass::DemazureOnly;
  if (dual) return ArrowClass::DualDemazureOnly;
  return ArrowClass::Neither;
}

// --- crystal graph -----------------------------------------------------------

struct CrystalGraph {
  RootSystem sys;
  std::vector<int> lambda_parts;
  std::vector<int> column_heights;
  std::vector<TensorElement> vertices;  // sorted
  struct Edge {
    int from, to, i;
    bool demazure, dual_demazure;
  };
  std::vector<Edge> edges;
  std::vector<std::optional<long>> energy;  // set by compute_energy

  int vertex_index(const TensorElement& b) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), b);
    require(it != vertices.end() && *it == b, "element is not a crystal vertex");
    return (int)(it - vertices.begin());
  }
};

// The classical highest weight element: column i is 1..height_i.
inline TensorElement classical_highest(const std::vector<int>& column_heights) {
  TensorElement b;
  for (int h : column_heights) {
    Column c(h);
    for (int k = 0; k < h; ++k) c[k] = k + 1;
    b.factors.push_back(std::move(c));
  }
  return b;
}

inline CrystalGraph build_tensor_crystal(const RootSystem& rs,
                                         const std::vector<int>& lambda_parts,
                                         std::size_t max_vertices = 2000000,
                                         int workers = 1) {
  CrystalGraph g{rs, lambda_parts, conjugate_partition(lambda_parts), {}, {}, {}};
  for (int h : g.column_heights)
    require(h <= rs.rank(), "column height exceeds the rank");
  std::size_t count = 1;
  std::vector<std::vector<Column>> choices;
  for (int h : g.column_heights) {
    choices.push_back(all_columns(rs, h));
    count *= choices.back().size();
    if (count > max_vertices)
      throw ResourceLimitError("tensor crystal exceeds the configured vertex bound");
  }
  g.vertices.reserve(count);
  TensorElement cur;
  auto rec = [&](auto&& self, std::size_t f) -> void {
    if (f == choices.size()) {
      g.vertices.push_back(cur);
      return;
    }
    for (const Column& c : choices[f]) {
      cur.factors.push_back(c);
      self(self, f + 1);
      cur.factors.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(g.vertices.begin(), g.vertices.end());

  const int rank = rs.rank();
  std::vector<std::vector<CrystalGraph::Edge>> buckets(g.vertices.size());
  for_chunks(g.vertices.size(), workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v) {
      for (int i = 0; i <= rank; ++i) {
        auto img = f_op(rs, g.vertices[v], i);
        if (!img) continue;
        const ArrowClass cls = classify_arrow(rs, g.vertices[v], i);
        buckets[v].push_back({(int)v, g.vertex_index(*img), i,
                              cls == ArrowClass::Both || cls == ArrowClass::DemazureOnly,
                              cls == ArrowClass::Both ||
                                  cls == ArrowClass::DualDemazureOnly});
      }
    }
  });
  for (auto& b : buckets)
    for (auto& e : b) g.edges.push_back(e);
  return g;
}

// Propagates the energy recursion from the classical highest weight element
// (energy 0): classical arrows preserve it, dual Demazure 0-arrows lower it
// by one. Vertices outside the anchor's dual-Demazure component keep no
// value. Returns propagation conflicts (must be empty).
inline std::vector<std::string> compute_energy(CrystalGraph& g) {
  std::vector<std::string> conflicts;
  g.energy.assign(g.vertices.size(), std::nullopt);
  const int anchor = g.vertex_index(classical_highest(g.column_heights));
  g.energy[anchor] = 0;
  std::vector<int> queue{anchor};
  std::vector<std::vector<std::pair<int, int>>> constraints(g.vertices.size());
  for (const auto& e : g.edges) {
    if (e.i != 0) {
      constraints[e.from].push_back({e.to, 0});
      constraints[e.to].push_back({e.from, 0});
    } else if (e.dual_demazure) {
      constraints[e.from].push_back({e.to, -1});
      constraints[e.to].push_back({e.from, +1});
    }
  }
  while (!queue.empty()) {
    const int v = queue.back();
    queue.pop_back();
    for (auto [u, delta] : constraints[v]) {
      const long val = *g.energy[v] + delta;
      if (!g.energy[u]) {
        g.energy[u] = val;
        queue.push_back(u);
      } else if (*g.energy[u] != val) {
        conflicts.push_back("energy conflict between vertices " + std::to_string(v) +
                            " and " + std::to_string(u));
      }
    }
  }
  return conflicts;
}

// --- serialization ----------------------------------------------------------

inline nlohmann::json tensor_to_json(const TensorElement& b) {
  nlohmann::json cols = nlohmann::json::array();
  for (const Column& c : b.factors) cols.push_back(c);
  return cols;
}

inline nlohmann::json crystal_to_json(const CrystalGraph& g) {
  nlohmann::json j;
  j["kind"] = kind_name(g.sys.kind);
  j["n"] = g.sys.n;
  j["lambda"] = g.lambda_parts;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    nlohmann::json jv{{"columns", tensor_to_json(g.vertices[v])},
                      {"label", tensor_str(g.vertices[v])}};
    if (!g.energy.empty()) {
      if (g.energy[v]) jv["energy"] = *g.energy[v];
      else jv["energy"] = nullptr;
    }
    j["vertices"].push_back(jv);
  }
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"i", e.i},
                          {"demazure", e.demazure},
                          {"dual_demazure", e.dual_demazure}});
  return j;
}

inline std::string crystal_to_dot(const CrystalGraph& g, bool bars = false) {
  std::ostringstream os;
  os << "digraph tensor_crystal {\n";
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    os << "  n" << v << " [label=\"" << tensor_str(g.vertices[v], bars) << "\"";
    if (!g.energy.empty() && g.energy[v]) os << ", energy=" << *g.energy[v];
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.i
       << "\", demazure=" << (e.demazure ? "true" : "false")
       << ", dual_demazure=" << (e.dual_demazure ? "true" : "false") << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace alcove
