#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "freelie/hall.hpp"

using namespace freelie;

namespace {

// Monomials named by structure for readability.
MonoId ba(MonomialPool& p) { return p.make_node(p.generator(1), p.generator(0)); }

}  // namespace

TEST_CASE("generators are ordered a < b < c") {
  MonomialPool pool(3);
  CHECK(pool.compare(pool.generator(0), pool.generator(1)) < 0);
  CHECK(pool.compare(pool.generator(1), pool.generator(2)) < 0);
  CHECK(pool.compare(pool.generator(1), pool.generator(1)) == 0);
  CHECK(pool.gen_name(0) == "a");
  CHECK(pool.gen_name(1) == "b");
  CHECK(pool.gen_name(2) == "c");
  MonomialPool big(5);
  CHECK(big.gen_name(3) == "a1");
  CHECK(big.gen_name(4) == "a2");
  CHECK(big.gen_index_by_name("a2") == 4);
  CHECK(big.gen_index_by_name("zz") == -1);
}

TEST_CASE("degree dominates the order") {
  MonomialPool pool(3);
  MonoId m = ba(pool);
  CHECK(pool.compare(m, pool.generator(2)) > 0);  // [b,a] > c
  CHECK(pool.degree(m) == 2);
  CHECK(pool.multidegree(m) == std::vector<std::int32_t>{1, 1, 0});
}

TEST_CASE("hall recognition on bracket trees") {
  MonomialPool pool(3);
  auto leaf = [](int g) { return BracketTree::leaf(g); };
  CHECK(is_hall(pool, BracketTree::node(leaf(1), leaf(0))));   // [b,a]
  CHECK(!is_hall(pool, BracketTree::node(leaf(0), leaf(1))));  // [a,b]
  CHECK(!is_hall(pool, BracketTree::node(leaf(0), leaf(0))));  // [a,a]
  // [[b,a],b]: left factor's right leg a <= b
  CHECK(is_hall(pool, BracketTree::node(BracketTree::node(leaf(1), leaf(0)), leaf(1))));
  // [[c,b],a]: right leg b > a violates condition (iii)
  CHECK(!is_hall(pool, BracketTree::node(BracketTree::node(leaf(2), leaf(1)), leaf(0))));
  CHECK(is_hall(pool, leaf(2)));
}

TEST_CASE("basis generation matches hand enumeration in low degree") {
  MonomialPool pool(3);
  const auto& h1 = pool.degree_slice(1);
  REQUIRE(h1.size() == 3);
  CHECK(pool.str(h1[0]) == "a");
  CHECK(pool.str(h1[1]) == "b");
  CHECK(pool.str(h1[2]) == "c");

  const auto& h2 = pool.degree_slice(2);
  REQUIRE(h2.size() == 3);
  CHECK(pool.str(h2[0]) == "[b,a]");
  CHECK(pool.str(h2[1]) == "[c,a]");
  CHECK(pool.str(h2[2]) == "[c,b]");

  CHECK(pool.degree_slice(3).size() == 8);
}

TEST_CASE("per-degree counts match the Witt formula") {
  // independent number-theoretic oracle vs tree enumeration
  std::uint64_t expected3[] = {3, 3, 8, 18, 48, 116};
  MonomialPool pool(3);
  for (int n = 1; n <= 6; ++n) {
    CHECK(witt_dimension(3, n) == expected3[n - 1]);
    CHECK(pool.degree_slice(n).size() == expected3[n - 1]);
  }
  MonomialPool pool2(2);
  std::uint64_t expected2[] = {2, 1, 2, 3, 6, 9, 18, 30};
  for (int n = 1; n <= 8; ++n) {
    CHECK(witt_dimension(2, n) == expected2[n - 1]);
    CHECK(pool2.degree_slice(n).size() == expected2[n - 1]);
  }
}

TEST_CASE("generated monomials satisfy the Hall conditions") {
  MonomialPool pool(3);
  // reconstruct each monomial as a tree and recheck
  std::function<BracketTree(MonoId)> tree = [&](MonoId m) {
    if (pool.is_leaf(m)) return BracketTree::leaf(pool.gen_index(m));
    return BracketTree::node(tree(pool.left(m)), tree(pool.right(m)));
  };
  for (MonoId m : pool.basis_up_to(6)) {
    BracketTree t = tree(m);
    CHECK(is_hall(pool, t));
    CHECK(*to_hall(pool, t) == m);
  }
}

TEST_CASE("multidegree sums to degree across the basis") {
  MonomialPool pool(3);
  for (MonoId m : pool.basis_up_to(6)) {
    int sum = 0;
    for (int d : pool.multidegree(m)) sum += d;
    CHECK(sum == pool.degree(m));
  }
}

TEST_CASE("the order is a strict total order") {
  MonomialPool pool(3);
  auto basis = pool.basis_up_to(5);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    MonoId x = basis[pick(rng)], y = basis[pick(rng)], z = basis[pick(rng)];
    int xy = pool.compare(x, y), yx = pool.compare(y, x);
    CHECK(xy == -yx);
    CHECK((xy == 0) == (x == y));
    if (pool.compare(x, y) < 0 && pool.compare(y, z) < 0) CHECK(pool.compare(x, z) < 0);
  }
  // basis_up_to is sorted ascending
  for (size_t i = 1; i < basis.size(); ++i) CHECK(pool.compare(basis[i - 1], basis[i]) < 0);
}

TEST_CASE("[b,a^(k)] chains and their pairs are basis members") {
  MonomialPool pool(3);
  auto basis = pool.basis_up_to(8);
  auto in_basis = [&](MonoId m) {
    return std::find(basis.begin(), basis.end(), m) != basis.end();
  };
  MonoId chain = pool.generator(1);
  std::vector<MonoId> chains{chain};
  for (int k = 1; k <= 5; ++k) {
    chain = pool.make_node(chain, pool.generator(0));
    chains.push_back(chain);
    CHECK(in_basis(chain));
  }
  for (int k = 1; k <= 5; ++k)
    for (int p = 0; p < k; ++p) {
      if (pool.degree(chains[k]) + pool.degree(chains[p]) > 8) continue;
      CHECK(pool.is_hall_pair(chains[k], chains[p]));
      CHECK(in_basis(pool.make_node(chains[k], chains[p])));
    }
}

TEST_CASE("multidegree slices partition the degree slices") {
  MonomialPool pool(3);
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<std::int32_t>, std::vector<MonoId>> parts;
    for (MonoId m : pool.degree_slice(n)) parts[pool.multidegree(m)].push_back(m);
    size_t covered = 0;
    for (const auto& [mdeg, want] : parts) {
      CHECK(pool.multidegree_slice(mdeg) == want);
      covered += want.size();
    }
    CHECK(covered == pool.degree_slice(n).size());
  }
  // narrow cells are reachable without building whole degree slices
  MonomialPool fresh(3);
  CHECK(fresh.multidegree_slice({14, 1, 1}).size() == 15);
  CHECK(fresh.multidegree_slice({3, 0, 0}).empty());
  CHECK(fresh.multidegree_slice({0, 1, 0}).size() == 1);
  CHECK_THROWS_AS(fresh.multidegree_slice({-1, 1, 1}), Error);
  CHECK_THROWS_AS(fresh.multidegree_slice({0, 0, 0}), Error);
  CHECK_THROWS_AS(fresh.multidegree_slice({1, 1}), Error);
}

TEST_CASE("witt dimension input validation") {
  CHECK_THROWS_AS(witt_dimension(0, 1), Error);
  CHECK_THROWS_AS(witt_dimension(3, 0), Error);
  CHECK(witt_dimension(3, 12) == 44220);
}
