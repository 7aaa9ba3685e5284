#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "groupcodes/corpus.hpp"
#include "groupcodes/errors.hpp"
#include "groupcodes/isometry.hpp"
#include "groupcodes/selftest.hpp"

using namespace groupcodes;
namespace cp = groupcodes::corpus;

namespace {

const Equivalence kInterleave32 = Equivalence::from_one_based({1, 3, 5, 2, 4, 6});

std::vector<Word> all_words(std::size_t q, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= q;
  std::vector<Word> out;
  for (std::size_t p = 0; p < total; ++p) out.push_back(selftest::point_word(p, q, n));
  return out;
}

Word random_word(cp::Rng& rng, std::size_t q, std::size_t n) {
  Word w = Word::filled(n, 0);
  for (std::size_t i = 0; i < n; ++i) w[i] = Element(cp::draw(rng, q));
  return w;
}

}  // namespace

TEST_CASE("pull action") {
  const Word x{2, 0, 1};
  CHECK(apply_pull(Isometry::identity(3, 3), x) == x);
  const Isometry swap = Isometry::from_equivalence(2, Equivalence::from_one_based({2, 1}));
  CHECK(swap(Word{0, 1}) == Word{1, 0});
  Configuration flip = Configuration::identity(2, 2);
  flip.maps[0] = {1, 0};
  CHECK(Isometry(flip, Equivalence::identity(2))(Word{0, 1}) == Word{1, 1});
  CHECK_THROWS_AS(apply_pull(swap, Word{0, 1, 1}), Error);
}

TEST_CASE("push action reproduces interleaving rows") {
  // sigma(2) = 3: x_2 lands in position 3.
  CHECK(apply_push(kInterleave32, Word{0, 1, 0, 0, 0, 0}) == Word{0, 0, 1, 0, 0, 0});
  CHECK(apply_push(kInterleave32, Word{0, 0, 0, 1, 1, 0}) == Word{0, 1, 0, 1, 0, 0});
  CHECK(apply_push(kInterleave32, Word{1, 1, 0, 1, 0, 1}) == Word{1, 1, 1, 0, 0, 1});
  for (const auto& [x, y] : cp::interleaving_table()) CHECK(apply_push(kInterleave32, x) == y);
  CHECK_THROWS_AS(apply_push(kInterleave32, Word{0, 1}), Error);
}

TEST_CASE("composition and inverses") {
  cp::Rng rng(21);
  const Isometry a = cp::random_isometry(rng, 3, 4);
  const Isometry id = Isometry::identity(3, 4);
  CHECK(compose(id, a) == a);
  CHECK(compose(a, id) == a);
  CHECK(compose(a, a.inverse()) == id);
  CHECK(compose(a.inverse(), a) == id);
  CHECK_THROWS_AS(compose(a, Isometry::identity(3, 3)), Error);
}

TEST_CASE("conjugating a configuration by an equivalence reindexes it") {
  cp::Rng rng(22);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + cp::draw(rng, 5);
    const Isometry r = cp::random_isometry(rng, 3, n);
    const Configuration f = r.config();
    const Isometry sigma = Isometry::from_equivalence(3, cp::random_isometry(rng, 3, n).equiv());
    const Isometry conj = compose(sigma.inverse(), compose(Isometry(f, Equivalence::identity(n)), sigma));
    CHECK(conj.equiv() == Equivalence::identity(n));
    CHECK(conj.config() == f.reindexed(sigma.equiv().inverse()));
  }
}

TEST_CASE("isometries act on codes") {
  const Code c = cp::z4_example();
  CHECK(apply_to_code(Isometry::identity(4, 3), c) == c);
  cp::Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const Code img = apply_to_code(cp::random_isometry(rng, 4, 3), c);
    CHECK(img.size() == c.size());
    CHECK(min_distance(img) == min_distance(c));
  }
  const Code d = cp::even_weight3();
  const std::vector<Code> parts{d, d};
  std::vector<Word> expected;
  for (const auto& [x, y] : cp::interleaving_table()) expected.push_back(y);
  CHECK(apply_push_to_code(kInterleave32, direct_sum(parts)) == Code::from_words(cyclic_group(2), 6, expected));
}

TEST_CASE("isometry group order") {
  CHECK(isometry_group_order(2, 2) == 8);
  CHECK(isometry_group_order(1, 5) == 120);
  CHECK(isometry_group_order(3, 1) == 6);
  CHECK(isometry_group_order(2, 3) == 48);
  CHECK(isometry_group_order(26, 30) > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("enumeration") {
  auto count = [](std::size_t q, std::size_t n) {
    IsometryEnumerator it(q, n);
    std::set<Isometry> seen;
    std::size_t k = 0;
    std::optional<Isometry> prev;
    while (auto iso = it.next()) {
      seen.insert(*iso);
      if (prev) CHECK(std::tie(prev->equiv(), prev->config()) < std::tie(iso->equiv(), iso->config()));
      prev = iso;
      ++k;
    }
    CHECK(seen.size() == k);
    return k;
  };
  CHECK(count(2, 2) == 8);
  CHECK(count(2, 1) == 2);
  CHECK(count(2, 3) == 48);
  CHECK_THROWS_AS(IsometryEnumerator(5, 3), Error);
  CHECK_THROWS_AS(IsometryEnumerator(2, 3, 10), Error);
}

TEST_CASE("property: enumerated isometries preserve distance") {
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {4, 1}};
  for (auto [q, n] : cases) {
    const auto words = all_words(q, n);
    IsometryEnumerator it(q, n);
    while (auto iso = it.next())
      for (const auto& x : words)
        for (const auto& y : words) REQUIRE(hamming_distance((*iso)(x), (*iso)(y)) == hamming_distance(x, y));
  }
}

TEST_CASE("property: every distance-preserving bijection is some f o sigma") {
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 2}, {4, 2}};
  for (auto [q, n] : cases) {
    const auto brute = selftest::brute_force_isometries(q, n);
    std::set<std::vector<std::size_t>> normal;
    IsometryEnumerator it(q, n);
    const auto words = all_words(q, n);
    while (auto iso = it.next()) {
      std::vector<std::size_t> table;
      for (const auto& w : words) table.push_back(selftest::point_index((*iso)(w), q));
      normal.insert(table);
    }
    CHECK(BigInt(brute.size()) == isometry_group_order(q, n));
    CHECK(std::set<std::vector<std::size_t>>(brute.begin(), brute.end()) == normal);
  }
}

TEST_CASE("property: push equals pull with the inverse permutation") {
  cp::Rng rng(24);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + cp::draw(rng, 8);
    const Equivalence s = cp::random_isometry(rng, 2, n).equiv();
    const Word x = random_word(rng, 4, n);
    CHECK(apply_push(s, x) == apply_pull(Isometry::from_equivalence(4, s.inverse()), x));
  }
}

TEST_CASE("property: group axioms on sampled isometries") {
  cp::Rng rng(25);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + cp::draw(rng, 5);
    const Isometry a = cp::random_isometry(rng, 3, n);
    const Isometry b = cp::random_isometry(rng, 3, n);
    const Isometry c = cp::random_isometry(rng, 3, n);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    const Word x = random_word(rng, 3, n);
    CHECK(compose(a, b)(x) == a(b(x)));
    CHECK(a.inverse()(a(x)) == x);
  }
}

TEST_CASE("invalid isometries are rejected") {
  Configuration bad = Configuration::identity(2, 2);
  bad.maps[1] = {0, 0};
  CHECK_THROWS_AS(Isometry(bad, Equivalence::identity(2)), Error);
  CHECK_THROWS_AS(Isometry(Configuration::identity(2, 2), Equivalence{{0, 0}}), Error);
  CHECK_THROWS_AS(Equivalence::from_one_based({0, 1}), Error);
}
