#include <catch2/catch_amalgamated.hpp>

#include <alcove/verify.hpp>

using namespace alcove;

namespace {
LambdaChain make_chain(Kind k, int n, const std::vector<int>& parts) {
  const RootSystem rs(k, n);
  return lambda_chain(rs, weight_from_partition(rs, parts));
}

void check_all_subsets(const LambdaChain& chain) {
  for (std::size_t mask = 0; mask < (1u << chain.size()); ++mask) {
    std::vector<int> J;
    for (std::size_t k = 0; k < chain.size(); ++k)
      if (mask & (1u << k)) J.push_back((int)k + 1);
    CAPTURE(J);
    REQUIRE(verify_weight_lemma(chain, J));
    REQUIRE(verify_height_counting(chain, J));
  }
}
}  // namespace

TEST_CASE("fill of the worked example") {
  const LambdaChain chain = make_chain(Kind::A, 3, {4, 3});
  const std::vector<int> J{1, 2, 3, 5, 7};
  REQUIRE(fill(chain, J) ==
          std::vector<Column>{{2, 3}, {2, 1}, {2, 3}, {3}});
  const SortedFilling s = sfill(chain, J);
  REQUIRE(s.element == TensorElement{{{2, 3}, {1, 2}, {2, 3}, {3}}});
}

TEST_CASE("fill of the empty subset is the highest weight filling") {
  const LambdaChain chain = make_chain(Kind::A, 3, {4, 3});
  REQUIRE(fill(chain, {}) == std::vector<Column>{{1, 2}, {1, 2}, {1, 2}, {1}});
  const LambdaChain c32 = make_chain(Kind::A, 3, {3, 2});
  REQUIRE(sfill(c32, {}).element == TensorElement{{{1, 2}, {1, 2}, {1}}});
  REQUIRE(sfill(c32, {1, 2, 3, 5}).element == TensorElement{{{2, 3}, {1, 2}, {1}}});
}

TEST_CASE("type C fillings sort into split pairs") {
  const LambdaChain chain = make_chain(Kind::C, 2, {1});
  const auto subsets = enumerate_admissible(chain);
  REQUIRE(subsets.size() == 4);
  std::set<Column> recovered;
  for (const auto& J : subsets) {
    const SortedFilling s = sfill(chain, J);
    REQUIRE(s.columns.size() == 2);
    REQUIRE(s.element.factors.size() == 1);
    recovered.insert(s.element.factors[0]);
  }
  REQUIRE(recovered == std::set<Column>{{1}, {2}, {-2}, {-1}});
}

TEST_CASE("content of fillings") {
  const LambdaChain chain = make_chain(Kind::A, 3, {4, 3});
  const std::vector<Column> sigma = fill(chain, {1, 2, 3, 5, 7});
  REQUIRE(content2(chain.sys, sigma) == std::vector<int>{2, 6, 6});  // ct=(1,3,3)
  REQUIRE(content_weight(chain.sys, sigma) == fold(chain, {1, 2, 3, 5, 7}).mu);
  REQUIRE(content_weight(chain.sys, {}) == Weight(chain.sys, {0, 0, 0}));
  const LambdaChain cc = make_chain(Kind::C, 2, {2, 1});
  REQUIRE(content_weight(cc.sys, fill(cc, {})) == cc.lambda);
}

TEST_CASE("content lemmas over every subset") {
  check_all_subsets(make_chain(Kind::A, 3, {2, 1}));
  check_all_subsets(make_chain(Kind::A, 3, {3, 2}));
  check_all_subsets(make_chain(Kind::C, 2, {1}));
  check_all_subsets(make_chain(Kind::C, 2, {1, 1}));
}

TEST_CASE("filling statistics match the worked run") {
  const LambdaChain chain = make_chain(Kind::A, 3, {4, 3});
  const SortedFilling s = sfill(chain, {1, 2, 3, 5, 7});
  const FillingStats st = filling_stats(chain.sys, s.columns, 2);
  REQUIRE(st.M2 == 2);       // M' = 1
  REQUIRE(st.m_prime == 2);  // first column pair reaching it
  const FoldedChain f = fold(chain, {1, 2, 3, 5, 7});
  const GAlphaProfile prof = g_profile(f, 2);
  REQUIRE(prof.M2 == 2);  // M = M'
  const auto mv = f_move(f, prof, 2);
  REQUIRE(mv.has_value());
  REQUIRE(mv->k == 4);
  REQUIRE(mv->m == 7);
  REQUIRE(crystal_f(f, 2) == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("verify report for the worked type A shapes") {
  VerifyOptions opts;
  opts.all_subsets = true;
  const VerifyReport rep = verify_isomorphism(RootSystem(Kind::A, 3), {3, 2}, opts);
  CAPTURE(rep.to_json().dump(2));
  REQUIRE(rep.pass());
  REQUIRE(rep.admissible_count == 27);
  REQUIRE(rep.tensor_vertex_count == 27);
  REQUIRE(rep.energy_unreached == 0);

  // the negative case: J = {1,2,3,5} has f_0(J) = 0 while the crystal
  // arrow exists but is not dual Demazure
  const LambdaChain chain = make_chain(Kind::A, 3, {3, 2});
  const std::vector<int> J{1, 2, 3, 5};
  REQUIRE_FALSE(crystal_f(fold(chain, J), 0).has_value());
  const TensorElement b = sfill(chain, J).element;
  REQUIRE(f_op(chain.sys, b, 0) ==
          TensorElement{{{1, 2}, {1, 2}, {1}}});  // the arrow exists
  REQUIRE(classify_arrow(chain.sys, b, 0) == ArrowClass::DemazureOnly);
}

TEST_CASE("verify report for the smallest shape") {
  const VerifyReport rep = verify_isomorphism(RootSystem(Kind::A, 2), {1});
  REQUIRE(rep.pass());
  REQUIRE(rep.admissible_count == 2);
}

TEST_CASE("verify report for type C shapes") {
  for (const std::vector<int>& parts : {std::vector<int>{1}, {1, 1}}) {
    VerifyOptions opts;
    opts.all_subsets = parts == std::vector<int>{1};
    const VerifyReport rep = verify_isomorphism(RootSystem(Kind::C, 2), parts, opts);
    CAPTURE(parts, rep.to_json().dump(2));
    REQUIRE(rep.pass());
  }
}

TEST_CASE("report serialization shape") {
  const VerifyReport rep = verify_isomorphism(RootSystem(Kind::A, 2), {1});
  const auto j = rep.to_json();
  REQUIRE(j["kind"] == "A");
  REQUIRE(j["counts"]["admissible"] == 2);
  REQUIRE(j["pass"] == true);
  bool saw_bijection = false;
  for (const auto& c : j["checks"]) {
    REQUIRE(c["pass"] == true);
    REQUIRE(c["counterexamples"].is_array());
    if (c["name"] == "bijection") saw_bijection = true;
  }
  REQUIRE(saw_bijection);
}

TEST_CASE("disconnected dual Demazure components stay unanchored") {
  // at rank three this shape splits the dual Demazure subgraph, so part of
  // the crystal is unreachable from the anchor and carries no energy value
  const RootSystem rs(Kind::C, 3);
  const VerifyReport rep = verify_isomorphism(rs, {2, 1});
  REQUIRE(rep.pass());
  REQUIRE(rep.admissible_count == 84);
  REQUIRE(rep.energy_unreached == 14);

  // minus height still satisfies the recursion edge-wise on every
  // component, anchored or not
  const LambdaChain chain = lambda_chain(rs, weight_from_partition(rs, {2, 1}));
  const AlcoveCrystal ac = build_alcove_crystal(chain);
  CrystalGraph tc = build_tensor_crystal(rs, {2, 1});
  std::vector<long> neg_height(tc.vertices.size());
  for (std::size_t v = 0; v < ac.vertices.size(); ++v)
    neg_height[tc.vertex_index(sfill(chain, ac.vertices[v]).element)] =
        -ac.folded[v].height;
  for (const auto& e : tc.edges) {
    if (e.i != 0) REQUIRE(neg_height[e.to] == neg_height[e.from]);
    else if (e.dual_demazure) REQUIRE(neg_height[e.to] == neg_height[e.from] - 1);
  }
}

TEST_CASE("larger shapes pass verification") {
  REQUIRE(verify_isomorphism(RootSystem(Kind::C, 3), {1, 1}).pass());
  REQUIRE(verify_isomorphism(RootSystem(Kind::C, 3), {1, 1, 1}).pass());
  REQUIRE(verify_isomorphism(RootSystem(Kind::A, 4), {3, 2, 1}).pass());
}

TEST_CASE("verification is deterministic across workers") {
  VerifyOptions one, two;
  two.workers = 2;
  const auto a = verify_isomorphism(RootSystem(Kind::C, 2), {2, 1}, one).to_json().dump();
  const auto b = verify_isomorphism(RootSystem(Kind::C, 2), {2, 1}, two).to_json().dump();
  REQUIRE(a == b);
}
