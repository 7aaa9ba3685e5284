#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupcodes/corpus.hpp"
#include "groupcodes/decompose.hpp"
#include "groupcodes/errors.hpp"
#include "groupcodes/isomorphy.hpp"

using namespace groupcodes;
namespace cp = groupcodes::corpus;

namespace {

GroupCode as_group(const Code& c) { return *GroupCode::view(c); }
GroupCode rep3() { return cp::repetition(cp::z(2), 3); }

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TEST_CASE("a code is isomorphic to itself") {
  const GroupCode c = cp::z4_example();
  const auto w = gc_isomorphic(c, c);
  REQUIRE(w);
  CHECK(w->verified_hom);
  CHECK(is_group_code_isomorphism(w->iso, c, c));
  CHECK(apply_to_code(w->iso, c) == c);
}

TEST_CASE("summand order does not matter") {
  const GroupCode a = as_group(direct_sum(cp::even_weight3(), rep3()));
  const GroupCode b = as_group(direct_sum(rep3(), cp::even_weight3()));
  const auto w = gc_isomorphic(a, b);
  REQUIRE(w);
  CHECK(apply_to_code(w->iso, a) == b);
  CHECK(is_group_code_isomorphism(w->iso, a, b));
}

TEST_CASE("non-isomorphic codes") {
  CHECK_FALSE(gc_isomorphic(cp::even_weight3(), rep3()).has_value());
  CHECK_FALSE(isomorphic(cp::even_weight3(), full_space(cp::z(2), 2)));
  const GroupCode sub = GroupCode::generate(cp::z(4), 2, std::vector<Word>{Word{2, 2}});
  const GroupCode two = GroupCode::generate(cp::z(4), 2, std::vector<Word>{Word{2, 0}});
  CHECK_FALSE(gc_isomorphic(sub, two).has_value());
}

TEST_CASE("plain isomorphy allows arbitrary symbol maps") {
  const Code a = Code::from_words(cyclic_group(2), 3, {Word{0, 0, 0}, Word{1, 1, 1}});
  const Code b = Code::from_words(cyclic_group(2), 3, {Word{1, 0, 0}, Word{0, 1, 1}});
  const auto w = code_isomorphic(a, b);
  REQUIRE(w);
  CHECK(apply_to_code(*w, a) == b);
  CHECK(isomorphic(a, b));
  const Code c = Code::from_words(cyclic_group(2), 3, {Word{0, 0, 0}, Word{0, 1, 1}});
  CHECK_FALSE(code_isomorphic(a, c).has_value());
}

TEST_CASE("property: isomorphy is symmetric and transitive on images") {
  cp::Rng rng(51);
  for (const auto& g : cp::small_groups())
    for (int t = 0; t < 10; ++t) {
      const std::size_t n = 1 + cp::draw(rng, 4);
      const GroupCode c = cp::random_group_code(rng, g, n, 2);
      const GroupCode d = GroupCode::from_code(apply_to_code(cp::random_automorphism_isometry(rng, *g, n), c));
      const GroupCode e = GroupCode::from_code(apply_to_code(cp::random_automorphism_isometry(rng, *g, n), d));
      const auto cd = gc_isomorphic(c, d);
      const auto dc = gc_isomorphic(d, c);
      REQUIRE(cd);
      REQUIRE(dc);
      CHECK(is_group_code_isomorphism(cd->iso, c, d));
      CHECK(is_group_code_isomorphism(dc->iso, d, c));
      CHECK(is_group_code_isomorphism(compose(dc->iso, cd->iso), c, c));
      const auto ce = gc_isomorphic(c, e);
      REQUIRE(ce);
      CHECK(apply_to_code(ce->iso, c) == e);
    }
}

TEST_CASE("automorphism group orders") {
  CHECK(aut_group(full_space(cp::z(4), 1)).order == 2);
  CHECK(aut_group(full_space(cp::z(3), 2)).order == 8);
  CHECK(aut_group(full_space(cp::klein(), 2)).order == 72);
  CHECK(aut_group(cp::even_weight3()).order == 6);
  const AutGroupReport r = aut_group(full_space(cp::z(3), 2));
  CHECK(r.complete);
  CHECK(r.closure_verified);
  CHECK(r.elements.size() == 8);
  CHECK_FALSE(r.generators.empty());
  CHECK(r.generators.front() != Isometry::identity(3, 2));
}

TEST_CASE("property: |Aut(G^n)| = |Aut(G)|^n n!") {
  for (const auto& g : cp::small_groups())
    for (std::size_t n = 1; n <= 3; ++n) {
      const GroupCode c = full_space(g, n);
      const Decomposition d = decompose(c);
      const AutGroupReport r = aut_group(c, {}, &d);
      const BigInt expect = pow(BigInt(automorphisms(*g).size()), static_cast<unsigned>(n)) * factorial(n);
      CHECK(r.order == expect);
      REQUIRE(r.predicted_order);
      CHECK(*r.predicted_order == expect);
    }
}

TEST_CASE("property: automorphisms of sums preserve blocks") {
  const std::vector<Code> parts{cp::even_weight3(), rep3(), cp::even_weight3()};
  const GroupCode c = as_group(direct_sum(parts));
  const Decomposition d = decompose(c);
  const AutGroupReport r = aut_group(c, {}, &d);
  CHECK(r.order == 6 * 6 * 2 * 6);
  REQUIRE(r.elements.size() == 432);
  for (const auto& phi : r.elements) CHECK(verify_block_preservation(c, d.blocks, d.isotype_of, phi));
}

TEST_CASE("block preservation requires an automorphism") {
  const GroupCode c = as_group(direct_sum(cp::even_weight3(), rep3()));
  const Decomposition d = decompose(c);
  const Isometry bad = Isometry::from_equivalence(2, Equivalence::from_one_based({4, 2, 3, 1, 5, 6}));
  try {
    verify_block_preservation(c, d.blocks, d.isotype_of, bad);
    FAIL("expected precondition error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition);
  }
}

TEST_CASE("search limits") {
  SearchLimits tiny;
  tiny.max_nodes = 3;
  const GroupCode a = full_space(cp::klein(), 4);
  try {
    gc_isomorphic(a, a, tiny);
    FAIL("expected resource limit");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::resource_limit);
  }
  const AutGroupReport r = aut_group(a, tiny);
  CHECK_FALSE(r.complete);
}

TEST_CASE("normalization is idempotent") {
  cp::Rng rng(52);
  const GroupCode c = cp::z4_example();
  for (int t = 0; t < 20; ++t) {
    const Isometry phi = normalize_on(cp::random_isometry(rng, 4, 3), c);
    CHECK(normalize_on(phi, c) == phi);
  }
}
