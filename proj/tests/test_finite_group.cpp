#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "groupcodes/errors.hpp"
#include "groupcodes/finite_group.hpp"

using namespace groupcodes;

namespace {

bool axioms_hold(const FiniteGroup& g) {
  const std::size_t q = g.order();
  for (std::size_t a = 0; a < q; ++a) {
    std::set<Element> row, col;
    for (std::size_t b = 0; b < q; ++b) {
      row.insert(g.mul(Element(a), Element(b)));
      col.insert(g.mul(Element(b), Element(a)));
      for (std::size_t c = 0; c < q; ++c)
        if (g.mul(g.mul(Element(a), Element(b)), Element(c)) != g.mul(Element(a), g.mul(Element(b), Element(c))))
          return false;
    }
    if (row.size() != q || col.size() != q) return false;
    if (g.mul(g.identity(), Element(a)) != a || g.mul(Element(a), g.identity()) != a) return false;
    if (g.mul(Element(a), g.inv(Element(a))) != g.identity()) return false;
  }
  return true;
}

// Every bijection h with h(ab) = h(a)h(b), by brute force over all q! maps.
std::size_t brute_force_isomorphisms(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return 0;
  std::vector<Element> perm(g.order());
  std::iota(perm.begin(), perm.end(), Element{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < g.order() && ok; ++a)
      for (std::size_t b = 0; b < g.order() && ok; ++b)
        ok = perm[g.mul(Element(a), Element(b))] == h.mul(perm[a], perm[b]);
    count += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::size_t totient(std::size_t m) {
  std::size_t count = 0;
  for (std::size_t k = 1; k <= m; ++k) count += std::gcd(k, m) == 1;
  return count;
}

std::vector<std::vector<std::size_t>> s3_table() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return table;
}

}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(cyclic_group(1).order() == 1);
  const FiniteGroup z4 = cyclic_group(4);
  CHECK(z4.mul(1, 3) == 0);
  CHECK(z4.inv(1) == 3);
  CHECK(cyclic_group(2).table_rows() == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}});
  CHECK_THROWS_AS(cyclic_group(0), Error);
  try {
    cyclic_group(0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_order);
  }
}

TEST_CASE("product groups") {
  const FiniteGroup v = product_group({cyclic_group(2), cyclic_group(2)});
  CHECK(v.order() == 4);
  for (Element a = 0; a < 4; ++a) CHECK(v.inv(a) == a);
  CHECK(v.is_abelian());

  const FiniteGroup z2z3 = product_group({cyclic_group(2), cyclic_group(3)});
  CHECK(z2z3.order() == 6);
  CHECK(brute_force_isomorphisms(z2z3, cyclic_group(6)) == 2);
  CHECK(brute_force_isomorphisms(product_group({cyclic_group(2), cyclic_group(2)}), cyclic_group(4)) == 0);

  CHECK(product_group({cyclic_group(4)}) == cyclic_group(4));
  CHECK_THROWS_AS(product_group(std::span<const FiniteGroup>{}), Error);

  // Mixed-radix encoding, first factor most significant.
  const FiniteGroup p = product_group({cyclic_group(2), cyclic_group(3)});
  CHECK(decode_product_element(p, 4) == std::vector<Element>{1, 1});
  const std::vector<Element> parts{1, 2};
  CHECK(encode_product_element(p, parts) == 5);
  for (Element x = 0; x < 6; ++x) CHECK(encode_product_element(p, decode_product_element(p, x)) == x);
}

TEST_CASE("groups from tables") {
  const FiniteGroup z2 = group_from_table({{0, 1}, {1, 0}}, "Z2");
  CHECK(z2 == cyclic_group(2));
  try {
    group_from_table({{0, 1}, {1, 1}}, "bad");
    FAIL("expected not-a-group");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_a_group);
  }
  const FiniteGroup s3 = group_from_table(s3_table(), "S3");
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(axioms_hold(s3));

  // Latin square but not associative: the quasigroup x*y = -x-y mod 3.
  CHECK_THROWS_AS(group_from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}, "q"), Error);
}

TEST_CASE("constructed groups satisfy the axioms exhaustively") {
  for (std::size_t m = 1; m <= 32; ++m) CHECK(axioms_hold(cyclic_group(m)));
  CHECK(axioms_hold(product_group({cyclic_group(2), cyclic_group(2), cyclic_group(2)})));
  CHECK(axioms_hold(product_group({cyclic_group(4), cyclic_group(2)})));
  CHECK(axioms_hold(product_group({cyclic_group(3), cyclic_group(3)})));
  CHECK(axioms_hold(product_group({cyclic_group(2), cyclic_group(4), cyclic_group(4)})));
}

TEST_CASE("automorphism groups") {
  CHECK(automorphisms(cyclic_group(2)).size() == 1);
  const auto z4 = automorphisms(cyclic_group(4));
  REQUIRE(z4.size() == 2);
  CHECK(z4[0].mapping == std::vector<Element>{0, 1, 2, 3});
  CHECK(z4[1].mapping == std::vector<Element>{0, 3, 2, 1});
  const FiniteGroup v = product_group({cyclic_group(2), cyclic_group(2)});
  CHECK(automorphisms(v).size() == 6);
  CHECK(automorphisms(v).size() == brute_force_isomorphisms(v, v));
  CHECK(automorphisms(group_from_table(s3_table(), "S3")).size() == 6);
  CHECK_THROWS_AS(automorphisms(cyclic_group(17)), Error);
  CHECK(automorphisms(cyclic_group(17), 32).size() == 16);
}

TEST_CASE("automorphism count of Z/m equals the totient") {
  for (std::size_t m = 1; m <= 12; ++m) CHECK(automorphisms(cyclic_group(m)).size() == totient(m));
}

TEST_CASE("automorphisms form a group") {
  const std::vector<FiniteGroup> groups{cyclic_group(5), cyclic_group(8), cyclic_group(12),
                                        product_group({cyclic_group(2), cyclic_group(2)}),
                                        product_group({cyclic_group(2), cyclic_group(4)}),
                                        group_from_table(s3_table(), "S3")};
  for (const auto& g : groups) {
    const auto auts = automorphisms(g);
    std::set<std::vector<Element>> set;
    for (const auto& a : auts) set.insert(a.mapping);
    std::vector<Element> id(g.order());
    std::iota(id.begin(), id.end(), Element{0});
    CHECK(set.contains(id));
    for (const auto& a : auts) {
      CHECK(a.mapping[g.identity()] == g.identity());
      std::vector<Element> inv(g.order());
      for (std::size_t x = 0; x < g.order(); ++x) inv[a.mapping[x]] = Element(x);
      CHECK(set.contains(inv));
      for (const auto& b : auts) {
        std::vector<Element> ab(g.order());
        for (std::size_t x = 0; x < g.order(); ++x) ab[x] = a.mapping[b.mapping[x]];
        CHECK(set.contains(ab));
      }
    }
  }
}

TEST_CASE("subgroup isomorphisms extend canonically") {
  const FiniteGroup z4 = cyclic_group(4);
  const std::vector<Element> sub{0, 2};
  const auto maps = subgroup_isomorphisms(z4, sub, sub);
  REQUIRE(maps.size() == 1);
  CHECK(maps[0] == std::vector<Element>{0, 1, 2, 3});
  const std::vector<Element> full{0, 1, 2, 3};
  CHECK(subgroup_isomorphisms(z4, full, full).size() == 2);
  const std::vector<Element> gens = z4.generators();
  CHECK(z4.subgroup_closure(gens) == full);
  CHECK(z4.element_order(2) == 2);
}
