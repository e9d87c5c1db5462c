#pragma once

#include "fill_map.hpp"

// The isomorphism verifier: exhaustive checks that the sorted filling map
// is a bijection intertwining the crystal operators on dual Demazure
// arrows, that the height statistic matches the energy recursion, and that
// the structural identities behind the proof hold at desk scale.

namespace alcove {

struct Check {
  std::string name;
  bool pass = true;
  nlohmann::json counterexamples = nlohmann::json::array();

  void fail(nlohmann::json ce, std::size_t cap = 25) {
    pass = false;
    if (counterexamples.size() < cap) counterexamples.push_back(std::move(ce));
  }
};

struct VerifyOptions {
  bool all_subsets = false;       // also run the content lemmas over every J
  std::size_t max_chain_length = 64;
  std::size_t max_vertices = 2000000;
  int workers = 1;
};

struct VerifyReport {
  RootSystem sys;
  std::vector<int> lambda;
  std::size_t admissible_count = 0;
  std::size_t tensor_vertex_count = 0;
  std::size_t energy_unreached = 0;
  std::vector<Check> checks;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const Check& c) { return c.pass; });
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["kind"] = kind_name(sys.kind);
    j["n"] = sys.n;
    j["lambda"] = lambda;
    j["counts"] = {{"admissible", admissible_count},
                   {"tensor_vertices", tensor_vertex_count},
                   {"energy_unreached", energy_unreached}};
    j["pass"] = pass();
    j["checks"] = nlohmann::json::array();
    for (const Check& c : checks)
      j["checks"].push_back(
          {{"name", c.name}, {"pass", c.pass}, {"counterexamples", c.counterexamples}});
    return j;
  }
};

namespace detail {

inline std::pair<std::vector<int>, std::vector<int>> signature_classes(const RootSystem& rs,
                                                                       int p) {
  if (rs.kind == Kind::A) {
    if (p == 0) return {{rs.n}, {1}};
    return {{p}, {p + 1}};
  }
  if (p == 0) return {{-1}, {1}};
  if (p == rs.n) return {{rs.n}, {-rs.n}};
  return {{p, -(p + 1)}, {p + 1, -p}};
}

inline std::vector<int> column_class_members(const Column& c, const std::vector<int>& cls) {
  std::vector<int> out;
  for (int x : cls)
    if (column_contains(c, x)) out.push_back(x);
  return out;
}

inline int find_tensor_vertex(const CrystalGraph& g, const TensorElement& b) {
  auto it = std::lower_bound(g.vertices.begin(), g.vertices.end(), b);
  return it != g.vertices.end() && *it == b ? (int)(it - g.vertices.begin()) : -1;
}

}  // namespace detail

inline VerifyReport verify_isomorphism(const RootSystem& rs,
                                       const std::vector<int>& lambda_parts,
                                       const VerifyOptions& opts = {}) {
  VerifyReport rep{rs, lambda_parts, 0, 0, 0, {}};
  const LambdaChain chain = lambda_chain(rs, weight_from_partition(rs, lambda_parts));
  const AlcoveCrystal ac =
      build_alcove_crystal(chain, opts.max_chain_length, opts.workers);
  CrystalGraph tc =
      build_tensor_crystal(rs, chain.lambda_parts, opts.max_vertices, opts.workers);
  rep.admissible_count = ac.vertices.size();
  rep.tensor_vertex_count = tc.vertices.size();
  const int rank = rs.rank();

  Check bijection{"bijection"};
  Check intertwine{"crystal_intertwine"};
  Check inverses{"operator_inverse"};
  Check closure{"operator_closure"};
  Check weight_shift{"weight_shift"};
  Check profile_conditions{"g_profile_conditions"};
  Check max_corr{"max_correspondence"};
  Check chain_filling{"chain_filling"};
  Check root_matching{"root_matching"};
  Check weight_lemma{"weight_lemma"};
  Check height_counting{"height_counting"};
  Check energy_check{"energy"};
  Check kn_recovery{"kn_recovery"};
  Check splitting{"splitting_props"};

  // sorted fillings of every admissible subset
  std::vector<SortedFilling> images(ac.vertices.size());
  std::vector<int> image_index(ac.vertices.size(), -1);
  for (std::size_t v = 0; v < ac.vertices.size(); ++v) {
    try {
      images[v] = sfill(chain, ac.vertices[v]);
    } catch (const std::logic_error& err) {
      kn_recovery.fail({{"J", ac.vertices[v]}, {"error", err.what()}});
      continue;
    }
    image_index[v] = detail::find_tensor_vertex(tc, images[v].element);
  }

  // bijection: counts agree, every image is a vertex, no two subsets collide
  if (ac.vertices.size() != tc.vertices.size())
    bijection.fail({{"what", "admissible count differs from tensor vertex count"},
                    {"admissible", ac.vertices.size()},
                    {"tensor_vertices", tc.vertices.size()}});
  {
    std::map<int, int> taken;
    for (std::size_t v = 0; v < ac.vertices.size(); ++v) {
      if (image_index[v] < 0) {
        bijection.fail({{"J", ac.vertices[v]}, {"what", "image is not a crystal vertex"}});
        continue;
      }
      auto [it, fresh] = taken.insert({image_index[v], (int)v});
      if (!fresh)
        bijection.fail({{"J", ac.vertices[v]},
                        {"collides_with", ac.vertices[it->second]},
                        {"what", "sfill is not injective"}});
    }
  }

  // per-vertex, per-operator checks, parallel over vertices with an ordered
  // merge so reports are reproducible
  const int nchecks = 8;
  std::vector<std::vector<nlohmann::json>> fails(nchecks);
  std::vector<std::vector<std::vector<nlohmann::json>>> buckets(
      ac.vertices.size(), std::vector<std::vector<nlohmann::json>>(nchecks));
  enum { CI, INV, CLO, WSH, PRO, MAX, CHF, RTM };

  for_chunks(ac.vertices.size(), opts.workers, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v) {
      const std::vector<int>& J = ac.vertices[v];
      const FoldedChain& f = ac.folded[v];
      auto& out = buckets[v];
      if (image_index[v] < 0) continue;
      const TensorElement& b = images[v].element;
      const std::vector<Column>& cols = images[v].columns;
      for (int p = 0; p <= rank; ++p) {
        try {
        const GAlphaProfile prof = g_profile(f, p);
        const auto fJ = crystal_f(f, p);
        const auto eJ = crystal_e(f, p);
        const auto fb = f_op(rs, b, p);
        const auto mv = f_move(f, prof, p);

        // dual Demazure arrows match f_p support, and the maps commute
        bool dual_arrow = false;
        if (fb) {
          const ArrowClass cls = classify_arrow(rs, b, p);
          dual_arrow = cls == ArrowClass::Both || cls == ArrowClass::DualDemazureOnly;
        }
        if (fJ.has_value() != dual_arrow)
          out[CI].push_back({{"J", J},
                             {"p", p},
                             {"f_defined", fJ.has_value()},
                             {"dual_demazure_arrow", dual_arrow}});
        else if (fJ && sfill(chain, *fJ).element != *fb)
          out[CI].push_back({{"J", J},
                             {"p", p},
                             {"sfill_f", tensor_to_json(sfill(chain, *fJ).element)},
                             {"f_sfill", tensor_to_json(*fb)}});

        // partial inverses on both sides
        if (fJ && crystal_e(fold(chain, *fJ), p) != J)
          out[INV].push_back({{"J", J}, {"p", p}, {"what", "e_p(f_p(J)) != J"}});
        if (eJ && crystal_f(fold(chain, *eJ), p) != J)
          out[INV].push_back({{"J", J}, {"p", p}, {"what", "f_p(e_p(J)) != J"}});
        if (fb && (!e_op(rs, *fb, p) || *e_op(rs, *fb, p) != b))
          out[INV].push_back({{"J", J}, {"p", p}, {"what", "e_i(f_i(b)) != b"}});
        if (auto eb = e_op(rs, b, p); eb && (!f_op(rs, *eb, p) || *f_op(rs, *eb, p) != b))
          out[INV].push_back({{"J", J}, {"p", p}, {"what", "f_i(e_i(b)) != b"}});

        // operator images stay admissible
        if (fJ && !is_admissible(chain, *fJ))
          out[CLO].push_back({{"J", J}, {"p", p}, {"what", "f_p image not admissible"}});
        if (eJ && !is_admissible(chain, *eJ))
          out[CLO].push_back({{"J", J}, {"p", p}, {"what", "e_p image not admissible"}});

        // mu shifts by alpha_p
        const std::vector<int> av = root_vector(operator_root(rs, p), rs.n);
        if (fJ) {
          std::vector<int> neg = av;
          for (int& x : neg) x = -x;
          if (fold(chain, *fJ).mu != weight_add(rs, f.mu, neg))
            out[WSH].push_back({{"J", J}, {"p", p}, {"what", "mu(f_p(J)) != mu(J)-alpha_p"}});
        }
        if (eJ && fold(chain, *eJ).mu != weight_add(rs, f.mu, av))
          out[WSH].push_back({{"J", J}, {"p", p}, {"what", "mu(e_p(J)) != mu(J)+alpha_p"}});

        // sigma restrictions and peak shape of the profile
        for (const std::string& viol : check_g_profile_conditions(prof, p == 0))
          out[PRO].push_back({{"J", J}, {"p", p}, {"violation", viol}});

        // M vs M' on the sorted filling
        const FillingStats st = filling_stats(rs, cols, p);
        if (prof.M2 < st.M2)
          out[MAX].push_back(
              {{"J", J}, {"p", p}, {"M2", prof.M2}, {"Mprime2", st.M2}, {"what", "M < M'"}});
        if (prof.M2 >= (p == 0 ? 2 : 0) && prof.M2 != st.M2)
          out[MAX].push_back({{"J", J},
                              {"p", p},
                              {"M2", prof.M2},
                              {"Mprime2", st.M2},
                              {"what", "M != M' above threshold"}});

        // unfolded occurrences of alpha_p force the stated column statistic
        const Root alpha = operator_root(rs, p);
        for (std::size_t k = 1; k <= chain.size(); ++k) {
          if (f.eps[k - 1] != 1 || f.gamma[k - 1] != alpha) continue;
          const int q = chain.segment_of(k);
          bool ok;
          if (rs.kind == Kind::A) ok = st.a2[q - 1] == 2;
          else if (q % 2 == 1)
            ok = (st.a2[q - 1] == 1 && q < (int)st.a2.size() && st.a2[q] == 1) ||
                 st.a2[q - 1] == 2;
          else ok = st.a2[q - 1] == 2;
          if (!ok)
            out[CHF].push_back({{"J", J}, {"p", p}, {"k", k}, {"segment", q}});
        }

        // the f move lands in the column the filling statistics predict
        if (mv) {
          const int kseg = chain.segment_of(mv->k);
          bool pos_ok;
          if (rs.kind == Kind::A) pos_ok = kseg == st.m_prime;
          else if (st.a2[st.m_prime - 1] == 2) pos_ok = kseg == st.m_prime;
          else pos_ok = kseg == st.m_prime - 1;
          if (!pos_ok)
            out[RTM].push_back({{"J", J},
                                {"p", p},
                                {"k_segment", kseg},
                                {"m_prime", st.m_prime},
                                {"what", "new folding position in wrong column"}});
          const int upper = mv->m ? chain.segment_of(*mv->m) : (int)st.a2.size() + 1;
          for (int i = st.m_prime + 1; i < upper; ++i)
            if (st.a2[i - 1] != 0)
              out[RTM].push_back({{"J", J},
                                  {"p", p},
                                  {"column", i},
                                  {"what", "nonzero a_i between m' and m''"}});
        }
        } catch (const std::logic_error& err) {
          out[CI].push_back({{"J", J}, {"p", p}, {"error", err.what()}});
        }
      }
    }
  });
  for (auto& vb : buckets)
    for (int c = 0; c < nchecks; ++c)
      for (auto& ce : vb[c]) fails[c].push_back(std::move(ce));
  for (auto& ce : fails[CI]) intertwine.fail(std::move(ce));
  for (auto& ce : fails[INV]) inverses.fail(std::move(ce));
  for (auto& ce : fails[CLO]) closure.fail(std::move(ce));
  for (auto& ce : fails[WSH]) weight_shift.fail(std::move(ce));
  for (auto& ce : fails[PRO]) profile_conditions.fail(std::move(ce));
  for (auto& ce : fails[MAX]) max_corr.fail(std::move(ce));
  for (auto& ce : fails[CHF]) chain_filling.fail(std::move(ce));
  for (auto& ce : fails[RTM]) root_matching.fail(std::move(ce));

  // content lemmas on the admissible subsets (and optionally on all J)
  for (std::size_t v = 0; v < ac.vertices.size(); ++v) {
    if (!verify_weight_lemma(chain, ac.vertices[v]))
      weight_lemma.fail({{"J", ac.vertices[v]}});
    if (!verify_height_counting(chain, ac.vertices[v]))
      height_counting.fail({{"J", ac.vertices[v]}});
  }
  if (opts.all_subsets) {
    require(chain.size() <= 24, "all-subsets sweep needs a short chain");
    for (std::size_t mask = 0; mask < (std::size_t{1} << chain.size()); ++mask) {
      std::vector<int> J;
      for (std::size_t k = 0; k < chain.size(); ++k)
        if (mask & (std::size_t{1} << k)) J.push_back((int)k + 1);
      if (!verify_weight_lemma(chain, J)) weight_lemma.fail({{"J", J}});
      if (!verify_height_counting(chain, J)) height_counting.fail({{"J", J}});
    }
  }

  // energy: propagate the recursion and compare with -height
  for (const std::string& conflict : compute_energy(tc))
    energy_check.fail({{"what", conflict}});
  if (tc.energy[tc.vertex_index(classical_highest(tc.column_heights))] != 0)
    energy_check.fail({{"what", "anchor energy is not zero"}});
  for (std::size_t v = 0; v < ac.vertices.size(); ++v) {
    if (image_index[v] < 0) continue;
    const auto& d = tc.energy[image_index[v]];
    if (!d) { ++rep.energy_unreached; continue; }
    if (*d != -ac.folded[v].height)
      energy_check.fail({{"J", ac.vertices[v]},
                         {"energy", *d},
                         {"height", ac.folded[v].height}});
  }

  // type C: splitting structure of the crystal vertices and of the peaks
  if (rs.kind == Kind::C) {
    for (const TensorElement& b : tc.vertices) {
      for (const Column& c : b.factors) {
        const auto sp = split_column(rs, c);
        if (!sp) {
          splitting.fail({{"column", c}, {"what", "vertex factor fails to split"}});
          continue;
        }
        for (int x = 1; x <= rs.n; ++x) {
          const bool in_l = column_contains(sp->first, x) || column_contains(sp->first, -x);
          const bool in_r =
              column_contains(sp->second, x) || column_contains(sp->second, -x);
          if (in_l != in_r)
            splitting.fail({{"column", c}, {"x", x}, {"what", "lC/rC membership differs"}});
        }
      }
    }
    for (std::size_t v = 0; v < ac.vertices.size(); ++v) {
      if (image_index[v] < 0) continue;
      for (int p = 0; p <= rank; ++p) {
        const FillingStats st = filling_stats(rs, images[v].columns, p);
        if (st.m_prime == 0 || st.a2[st.m_prime - 1] != 1) continue;
        if (st.m_prime % 2 != 0) {
          splitting.fail({{"J", ac.vertices[v]}, {"p", p}, {"what", "m' is odd"}});
          continue;
        }
        const auto [plus, minus] = detail::signature_classes(rs, p);
        const auto left = detail::column_class_members(images[v].columns[st.m_prime - 2], plus);
        const auto right = detail::column_class_members(images[v].columns[st.m_prime - 1], plus);
        const bool no_minus =
            detail::column_class_members(images[v].columns[st.m_prime - 2], minus).empty() &&
            detail::column_class_members(images[v].columns[st.m_prime - 1], minus).empty();
        if (left.size() != 1 || left != right || !no_minus)
          splitting.fail({{"J", ac.vertices[v]},
                          {"p", p},
                          {"m_prime", st.m_prime},
                          {"what", "half peak columns do not share one plus letter"}});
      }
    }
  }

  rep.checks = {bijection,   intertwine,    inverses,      closure,
                weight_shift, profile_conditions, max_corr, chain_filling,
                root_matching, weight_lemma, height_counting, energy_check};
  if (rs.kind == Kind::C) {
    rep.checks.push_back(kn_recovery);
    rep.checks.push_back(splitting);
  }
  return rep;
}

}  // namespace alcove
