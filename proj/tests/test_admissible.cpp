#include <catch2/catch_amalgamated.hpp>

#include <alcove/admissible.hpp>

using namespace alcove;

TEST_CASE("worked admissible subsets") {
  const RootSystem a3(Kind::A, 3);
  const LambdaChain chain32 = lambda_chain(a3, Weight(a3, {3, 2, 0}));
  REQUIRE(is_admissible(chain32, {1, 2, 3, 5}));
  REQUIRE(is_admissible(chain32, {}));
  const LambdaChain chain43 = lambda_chain(a3, Weight(a3, {4, 3, 0}));
  REQUIRE(is_admissible(chain43, {1, 2, 3, 5, 7}));
}

TEST_CASE("rank one enumeration") {
  const RootSystem rs(Kind::A, 2);
  const LambdaChain chain = lambda_chain(rs, fundamental_weight(rs, 1));
  REQUIRE(enumerate_admissible(chain) ==
          std::vector<std::vector<int>>{{}, {1}});
}

TEST_CASE("DFS enumeration equals the brute force oracle") {
  const RootSystem rs(Kind::A, 3);
  const LambdaChain chain = lambda_chain(rs, Weight(rs, {3, 2, 0}));
  std::vector<std::vector<int>> brute;
  for (std::size_t mask = 0; mask < (1u << chain.size()); ++mask) {
    std::vector<int> J;
    for (std::size_t k = 0; k < chain.size(); ++k)
      if (mask & (1u << k)) J.push_back((int)k + 1);
    if (is_admissible(chain, J)) brute.push_back(J);
  }
  std::sort(brute.begin(), brute.end());
  auto dfs = enumerate_admissible(chain);
  REQUIRE(std::count(dfs.begin(), dfs.end(), std::vector<int>{1, 2, 3, 5}) == 1);
  REQUIRE(std::count(dfs.begin(), dfs.end(), std::vector<int>{1, 2, 3, 4, 5}) == 1);
  std::sort(dfs.begin(), dfs.end());
  REQUIRE(dfs == brute);
}

TEST_CASE("enumeration emits subsets in lexicographic order") {
  const RootSystem rs(Kind::C, 2);
  const LambdaChain chain = lambda_chain(rs, Weight(rs, {2, 1}));
  const auto subsets = enumerate_admissible(chain);
  REQUIRE(std::is_sorted(subsets.begin(), subsets.end()));
  for (const auto& J : subsets) {  // prefix property
    for (std::size_t cut = 0; cut < J.size(); ++cut)
      REQUIRE(is_admissible(chain, std::vector<int>(J.begin(), J.begin() + cut)));
  }
}

TEST_CASE("worker counts do not change the enumeration") {
  const RootSystem rs(Kind::C, 2);
  const LambdaChain chain = lambda_chain(rs, Weight(rs, {2, 1}));
  const auto one = enumerate_admissible(chain, 64, 1);
  REQUIRE(one == enumerate_admissible(chain, 64, 2));
  REQUIRE(one == enumerate_admissible(chain, 64, 5));
}

TEST_CASE("chain length bound raises a resource error") {
  const RootSystem rs(Kind::A, 3);
  const LambdaChain chain = lambda_chain(rs, Weight(rs, {3, 2, 0}));
  REQUIRE_THROWS_AS(enumerate_admissible(chain, 4), ResourceLimitError);
}

TEST_CASE("admissible counts match crystal dimensions") {
  const RootSystem a3(Kind::A, 3);
  // product of binomials C(n, column height)
  const auto count = [&](const std::vector<int>& parts, Kind kind, int n,
                         const std::vector<long>& dims) {
    const RootSystem rs(kind, n);
    const LambdaChain chain = lambda_chain(rs, weight_from_partition(rs, parts));
    long expect = 1;
    for (int h : conjugate_partition(parts)) expect *= dims[h];
    REQUIRE((long)enumerate_admissible(chain).size() == expect);
  };
  count({3, 2}, Kind::A, 3, {0, 3, 3, 1});
  count({4, 3}, Kind::A, 3, {0, 3, 3, 1});
  count({2, 1, 1}, Kind::A, 4, {0, 4, 6, 4, 1});
  count({1}, Kind::C, 2, {0, 4, 5});
  count({1, 1}, Kind::C, 2, {0, 4, 5});
  count({2, 1}, Kind::C, 2, {0, 4, 5});
}
