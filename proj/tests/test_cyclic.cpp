#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupcodes/corpus.hpp"
#include "groupcodes/cyclic.hpp"
#include "groupcodes/errors.hpp"

using namespace groupcodes;
namespace cp = groupcodes::corpus;
using Idx = std::vector<std::size_t>;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::invalid_input;
}

}  // namespace

TEST_CASE("cyclic shift") {
  CHECK(cyclic_shift(Word{1, 0, 0}) == Word{0, 0, 1});
  CHECK(cyclic_shift(Word{1, 2, 3, 0}) == Word{2, 3, 0, 1});
  CHECK(is_cyclic(cp::even_weight3()));
  CHECK(is_cyclic(cp::repetition(cp::z(3), 5)));
  CHECK_FALSE(is_cyclic(cp::z4_example()));
  CHECK(shift_orbit_sizes(cp::even_weight3()) == Idx{1, 3});
}

TEST_CASE("interleaving") {
  CHECK(interleaving_permutation(3, 2).one_based() == Idx{1, 3, 5, 2, 4, 6});
  CHECK(interleaving_permutation(2, 3).one_based() == Idx{1, 4, 2, 5, 3, 6});
  const Interleaving il = interleave(cp::even_weight3(), 2);
  CHECK(il.code.size() == 16);
  CHECK(is_cyclic(il.code));
  for (const auto& [x, y] : cp::interleaving_table()) CHECK(il.code.contains(y));
  CHECK(code_of([] { interleave(cp::z4_example(), 2); }) == Errc::precondition);
}

TEST_CASE("components of cyclic codes") {
  const ComponentStructure s = cyclic_structure(interleave(cp::even_weight3(), 2).code);
  CHECK(s.multiplicity == 2);
  CHECK(s.components_pairwise_isomorphic);
  CHECK(s.components_cyclic);
  CHECK(s.representative == Code(cp::even_weight3()));
  CHECK(cyclic_structure(full_space(cp::z(3), 4)).multiplicity == 4);
  CHECK(cyclic_structure(cp::even_weight3()).multiplicity == 1);
  CHECK(code_of([] { cyclic_structure(cp::z4_example()); }) == Errc::precondition);
}

TEST_CASE("property: interleaved and random cyclic codes have uniform components") {
  cp::Rng rng(61);
  for (const auto& g : cp::small_groups())
    for (int t = 0; t < 15; ++t) {
      const std::size_t n = 1 + cp::draw(rng, 5);
      Word w = Word::filled(n, 0);
      for (std::size_t i = 0; i < n; ++i) w[i] = Element(cp::draw(rng, g->order()));
      const GroupCode c = cp::cyclic_closure(g, w);
      CHECK(is_cyclic(c));
      const ComponentStructure s = cyclic_structure(c);
      CHECK(s.components_pairwise_isomorphic);
      CHECK(s.components_cyclic);
      CHECK(n % s.multiplicity == 0);
      const std::size_t copies = 2 + cp::draw(rng, 2);
      std::size_t words = 1;
      for (std::size_t i = 0; i < copies; ++i) words *= c.size();
      if (words <= 4096) CHECK(cyclic_structure(interleave(c, copies).code).multiplicity % copies == 0);
    }
}

TEST_CASE("factorization") {
  using F = std::vector<std::pair<std::uint64_t, std::size_t>>;
  CHECK(factorize(1).empty());
  CHECK(factorize(360) == F{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(97) == F{{97, 1}});
  CHECK(factorize(1024) == F{{2, 10}});
}

TEST_CASE("gcd criterion") {
  CHECK_FALSE(gcd_criterion(8, 3).has_value());
  REQUIRE(gcd_criterion(8, 4));
  CHECK(gcd_criterion(8, 4)->xi == 3);
  CHECK_FALSE(gcd_criterion(36, 4).has_value());
  CHECK(gcd_criterion(12, 6)->xi == 1);
  CHECK(gcd_criterion(1, 3)->xi == 0);
  CHECK(gcd_certificate(cp::repetition(cp::z(2), 3)).has_value());
  CHECK(code_of([] { gcd_certificate(cp::z4_example()); }) == Errc::precondition);
}

TEST_CASE("the gcd criterion is not a converse") {
  // Decomposable and silent.
  const GroupCode cube = full_space(cp::z(2), 3);
  CHECK_FALSE(gcd_certificate(cube).has_value());
  CHECK(is_decomposable(cube).has_value());
  // Indecomposable and still silent.
  const GroupCode rep = cp::repetition(cp::z(4), 2);
  CHECK(rep.size() == 4);
  CHECK_FALSE(gcd_certificate(rep).has_value());
  CHECK_FALSE(is_decomposable(rep).has_value());
}

TEST_CASE("property: a gcd certificate implies indecomposability") {
  cp::Rng rng(62);
  std::size_t hits = 0;
  for (const auto& g : cp::small_groups())
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + cp::draw(rng, 6);
      Word w = Word::filled(n, 0);
      for (std::size_t i = 0; i < n; ++i) w[i] = Element(cp::draw(rng, g->order()));
      const GroupCode c = cp::cyclic_closure(g, w);
      if (c.size() > 1 && gcd_certificate(c)) {
        ++hits;
        CHECK(cyclic_structure(c).multiplicity == 1);
      }
    }
  CHECK(hits > 10);
}

TEST_CASE("join") {
  const std::vector<GroupCode> parts{cp::repetition(cp::z(2), 3), cp::repetition(cp::z(3), 3)};
  const GroupCode j = join(parts);
  CHECK(j.q() == 6);
  CHECK(j.size() == 6);
  CHECK(j.length() == 3);
  CHECK(is_cyclic(j));
  CHECK(min_distance(j) == 3);

  const std::vector<GroupCode> lens{cp::repetition(cp::z(2), 3), cp::repetition(cp::z(2), 2)};
  CHECK(code_of([&] { join(lens); }) == Errc::incompatible_words);
  const std::vector<GroupCode> noncyclic{cp::z4_example(), cp::repetition(cp::z(2), 3)};
  CHECK(code_of([&] { join(noncyclic); }) == Errc::precondition);
}

TEST_CASE("cyclic report") {
  const CyclicReport r = cyclic_report(interleave(cp::even_weight3(), 2).code);
  CHECK(r.is_cyclic);
  CHECK_FALSE(r.gcd_certificate.has_value());
  REQUIRE(r.component_structure);
  CHECK(r.component_structure->multiplicity == 2);
  const CyclicReport z = cyclic_report(cp::z4_example());
  CHECK_FALSE(z.is_cyclic);
  CHECK_FALSE(z.component_structure.has_value());
}
