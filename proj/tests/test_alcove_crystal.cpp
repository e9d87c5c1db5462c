#include <catch2/catch_amalgamated.hpp>

#include <alcove/alcove_crystal.hpp>

using namespace alcove;

namespace {
LambdaChain make_chain(Kind k, int n, const std::vector<int>& parts) {
  const RootSystem rs(k, n);
  return lambda_chain(rs, weight_from_partition(rs, parts));
}
}  // namespace

TEST_CASE("profiles of the worked folding") {
  const LambdaChain chain = make_chain(Kind::A, 3, {3, 2});
  const FoldedChain f = fold(chain, {1, 2, 3, 5});

  const GAlphaProfile p2 = g_profile(f, 2);
  REQUIRE(p2.I == std::vector<int>{1, 4});
  REQUIRE(p2.half2 == std::vector<int>{0, 0});  // levels 0, 0
  REQUIRE(p2.inf2 == 2);                        // l^inf = 1
  REQUIRE(p2.M2 == 2);

  const GAlphaProfile p0 = g_profile(f, 0);
  REQUIRE(p0.I == std::vector<int>{3, 6});
  REQUIRE(p0.half2 == std::vector<int>{2, 0});  // sgn(theta) levels 1, 0
  REQUIRE(p0.g0_2 == 1);
  REQUIRE(p0.M2 == 2);  // max of g_theta is 1
  REQUIRE(p0.inf2 == -2);
}

TEST_CASE("operators of the worked folding") {
  const LambdaChain chain = make_chain(Kind::A, 3, {3, 2});
  const std::vector<int> J{1, 2, 3, 5};
  REQUIRE(crystal_f(chain, J, 2) == std::vector<int>{1, 2, 3, 4, 5});
  REQUIRE_FALSE(crystal_f(chain, J, 0).has_value());
  REQUIRE(crystal_e(chain, J, 0) == std::vector<int>{1, 2, 5, 6});
  REQUIRE(crystal_e(chain, {1, 2, 3, 4, 5}, 2) == J);
}

TEST_CASE("operators on the smallest chain") {
  const LambdaChain chain = make_chain(Kind::A, 2, {1});
  REQUIRE(crystal_f(chain, {}, 1) == std::vector<int>{1});
  REQUIRE_FALSE(crystal_e(chain, {}, 1).has_value());
  REQUIRE_FALSE(crystal_f(chain, {1}, 1).has_value());
  REQUIRE(crystal_e(chain, {1}, 1) == std::vector<int>{});
}

TEST_CASE("operator closure, inverses and weight shifts") {
  for (auto [kind, n, parts] :
       {std::tuple<Kind, int, std::vector<int>>{Kind::A, 3, {3, 2}},
        {Kind::A, 3, {2, 1}},
        {Kind::C, 2, {1, 1}},
        {Kind::C, 2, {2, 1}}}) {
    const LambdaChain chain = make_chain(kind, n, parts);
    const RootSystem& rs = chain.sys;
    for (const auto& J : enumerate_admissible(chain)) {
      const FoldedChain f = fold(chain, J);
      for (int p = 0; p <= rs.rank(); ++p) {
        const auto fJ = crystal_f(f, p);
        const auto eJ = crystal_e(f, p);
        if (fJ) {
          REQUIRE(is_admissible(chain, *fJ));
          REQUIRE(crystal_e(fold(chain, *fJ), p) == J);
          const std::vector<int> neg = root_vector(operator_root(rs, p).negated(), rs.n);
          REQUIRE(fold(chain, *fJ).mu == weight_add(rs, f.mu, neg));
        }
        if (eJ) {
          REQUIRE(is_admissible(chain, *eJ));
          REQUIRE(crystal_f(fold(chain, *eJ), p) == J);
          const std::vector<int> pos = root_vector(operator_root(rs, p), rs.n);
          REQUIRE(fold(chain, *eJ).mu == weight_add(rs, f.mu, pos));
        }
      }
    }
  }
}

TEST_CASE("profile conditions hold on admissible subsets") {
  for (auto [kind, n, parts] :
       {std::tuple<Kind, int, std::vector<int>>{Kind::A, 3, {3, 2}},
        {Kind::C, 2, {2, 1}}}) {
    const LambdaChain chain = make_chain(kind, n, parts);
    for (const auto& J : enumerate_admissible(chain)) {
      const FoldedChain f = fold(chain, J);
      for (int p = 0; p <= chain.sys.rank(); ++p) {
        const auto violations = check_g_profile_conditions(g_profile(f, p), p == 0);
        CAPTURE(J, p, violations);
        REQUIRE(violations.empty());
      }
    }
  }
}

TEST_CASE("profile walk matches affine levels on every subset") {
  // the sigma walk reconstruction of g_alpha agrees with the folded levels
  // even off the admissible set (g_profile throws on disagreement)
  for (auto [kind, n, parts] :
       {std::tuple<Kind, int, std::vector<int>>{Kind::A, 3, {2, 1}},
        {Kind::C, 2, {1, 1}}}) {
    const LambdaChain chain = make_chain(kind, n, parts);
    for (std::size_t mask = 0; mask < (1u << chain.size()); ++mask) {
      std::vector<int> J;
      for (std::size_t k = 0; k < chain.size(); ++k)
        if (mask & (1u << k)) J.push_back((int)k + 1);
      const FoldedChain f = fold(chain, J);
      for (int p = 0; p <= chain.sys.rank(); ++p) REQUIRE_NOTHROW(g_profile(f, p));
    }
  }
}

TEST_CASE("alcove crystal graph of the worked chain") {
  const LambdaChain chain = make_chain(Kind::A, 3, {3, 2});
  const AlcoveCrystal g = build_alcove_crystal(chain);
  REQUIRE(g.vertices.size() == 27);
  const int from = g.vertex_index({1, 2, 3, 5});
  const int to = g.vertex_index({1, 2, 3, 4, 5});
  const bool found = std::any_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
    return e.from == from && e.to == to && e.p == 2;
  });
  REQUIRE(found);
  const auto j = alcove_crystal_to_json(g);
  REQUIRE(j["vertices"].size() == 27);
  for (const auto& e : j["edges"]) REQUIRE(e["dual_demazure"] == true);
  // deterministic across workers
  REQUIRE(alcove_crystal_to_json(build_alcove_crystal(chain, 64, 2)).dump() == j.dump());
  REQUIRE(alcove_crystal_to_dot(g) == alcove_crystal_to_dot(build_alcove_crystal(chain, 64, 3)));
}

TEST_CASE("folded chain serialization") {
  const LambdaChain chain = make_chain(Kind::A, 3, {3, 2});
  const auto j = folded_to_json(fold(chain, {1, 2, 3, 5}));
  REQUIRE(j["J"] == nlohmann::json({1, 2, 3, 5}));
  REQUIRE(j["gamma"][2] == "(3,1)");
  REQUIRE(j["mu"] == nlohmann::json({1, 1, 0}));  // canonical form of -e_3
  REQUIRE(j["height"] == 2);
}
