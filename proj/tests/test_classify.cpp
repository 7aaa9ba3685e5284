#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "groupcodes/classify.hpp"
#include "groupcodes/corpus.hpp"
#include "groupcodes/errors.hpp"

using namespace groupcodes;
namespace cp = groupcodes::corpus;

namespace {

Code rep3() { return Code::from_words(cyclic_group(2), 3, {Word{0, 0, 0}, Word{1, 1, 1}}); }

std::vector<Code> corpus_codes() {
  std::vector<Code> out{cp::z4_example(), cp::even_weight3(), cp::hamming74(), cp::ternary_hamming(), cp::simplex7(),
                        rep3()};
  cp::Rng rng(31);
  for (const auto& g : cp::small_groups()) {
    for (std::size_t n = 1; n <= 4; ++n) out.push_back(full_space(g, n));
    for (std::size_t n = 1; n <= 7; n += 2) out.push_back(cp::repetition(g, n));
    for (int t = 0; t < 30; ++t) {
      out.push_back(cp::random_code(rng, g, 1 + cp::draw(rng, 5), 10));
      out.push_back(cp::random_group_code(rng, g, 1 + cp::draw(rng, 5), 2));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("ball sizes") {
  CHECK(ball_size(2, 7, 0) == 1);
  CHECK(ball_size(2, 7, 1) == 8);
  CHECK(ball_size(2, 3, 1) == 4);
  CHECK(ball_size(3, 4, 1) == 9);
  CHECK(ball_size(2, 3, 7) == 8);
}

TEST_CASE("trivial codes") {
  CHECK(is_trivial(full_space(cp::z(2), 2)));
  CHECK_FALSE(is_trivial(rep3()));
  CHECK_FALSE(is_trivial(cp::z4_example()));
}

TEST_CASE("degenerate codes") {
  const Code c = Code::from_words(cyclic_group(2), 2, {Word{0, 0}, Word{0, 1}});
  CHECK(is_degenerate(c));
  CHECK(degenerate_coordinates(c) == std::vector<std::size_t>{0});
  CHECK_FALSE(is_degenerate(cp::z4_example()));
  CHECK_FALSE(is_degenerate(full_space(cp::z(3), 3)));
}

TEST_CASE("MDS codes") {
  CHECK(is_mds(rep3()));
  CHECK(is_mds(full_space(cp::z(4), 3)));
  CHECK(is_mds(cp::even_weight3()));
  CHECK_FALSE(is_mds(cp::z4_example()));
  CHECK_FALSE(is_mds(Code::from_words(cyclic_group(2), 3, {Word{1, 0, 1}})));
}

TEST_CASE("perfect codes") {
  CHECK(is_perfect(rep3()));
  CHECK(is_perfect(cp::hamming74()));
  CHECK(is_perfect(cp::ternary_hamming()));
  CHECK_FALSE(is_perfect(cp::even_weight3()));
  CHECK(is_perfect_by_covering(cp::hamming74()));
  CHECK_FALSE(is_perfect_by_covering(cp::even_weight3()));
  CHECK_THROWS_AS(is_perfect_by_covering(full_space(cp::z(2), 17)), Error);
}

TEST_CASE("constant weight") {
  CHECK_FALSE(constant_weight_group(generate_group_code(cyclic_group(2), 3, {})).has_value());
  CHECK(constant_weight_group(cp::even_weight3()) == 2);
  CHECK(constant_weight_group(cp::repetition(cp::z(2), 3)) == 3);
  CHECK(constant_weight_group(cp::simplex7()) == 4);
  CHECK_FALSE(constant_weight_group(cp::z4_example()).has_value());

  const Word w{1, 0, 1};
  const auto single = constant_weight_general(Code::from_words(cyclic_group(2), 3, {w}));
  REQUIRE(single);
  CHECK(single->center == w);
  CHECK(single->radius == 0);

  const auto pair = constant_weight_general(Code::from_words(cyclic_group(2), 2, {Word{0, 1}, Word{1, 0}}));
  REQUIRE(pair);
  CHECK(pair->center == Word{0, 0});
  CHECK(pair->radius == 1);

  CHECK_FALSE(constant_weight_general(full_space(cp::z(2), 2)).has_value());
  CHECK_THROWS_AS(constant_weight_general(rep3(), {}, 4), Error);
  // Odd length: no word is equidistant from 000 and 111.
  CHECK_FALSE(constant_weight_general(rep3()).has_value());
  const Code rep2 = Code::from_words(cyclic_group(2), 2, {Word{0, 0}, Word{1, 1}});
  const std::vector<Word> only{Word{1, 0}};
  const auto restricted = constant_weight_general(rep2, only, 1);
  REQUIRE(restricted);
  CHECK(restricted->center == Word{1, 0});
  CHECK(restricted->radius == 1);
}

TEST_CASE("classification summary") {
  const Classification c = classify(cp::even_weight3());
  CHECK_FALSE(c.is_trivial);
  CHECK_FALSE(c.is_degenerate);
  CHECK(c.is_mds);
  CHECK_FALSE(c.is_perfect);
  REQUIRE(c.constant_weight);
  CHECK(c.constant_weight->radius == 2);
  CHECK(c.correction_capacity == 0);
}

TEST_CASE("property: MDS and perfect codes are trivial exactly when d = 1 or e = 0") {
  std::size_t mds = 0, perfect = 0;
  for (const auto& c : corpus_codes()) {
    const ParameterReport p = parameters(c);
    if (is_mds(c)) {
      ++mds;
      CHECK(is_trivial(c) == (p.min_distance == 1));
    }
    if (is_perfect(c)) {
      ++perfect;
      CHECK(is_trivial(c) == (p.correction_capacity == 0));
    }
  }
  CHECK(mds > 10);
  CHECK(perfect > 5);
}

TEST_CASE("property: sphere packing agrees with the covering oracle") {
  for (const auto& c : corpus_codes())
    if (big_pow(c.q(), c.length()) <= kCoveringOracleCap) CHECK(is_perfect(c) == is_perfect_by_covering(c));
}

TEST_CASE("property: constant-weight group codes have constant pairwise distances") {
  cp::Rng rng(32);
  for (const auto& g : cp::small_groups())
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + cp::draw(rng, 6);
      Word w = Word::filled(n, 0);
      for (std::size_t i = 0; i < n; ++i) w[i] = Element(cp::draw(rng, g->order()));
      const GroupCode c = GroupCode::generate(g, n, std::span<const Word>(&w, 1));
      if (auto r = constant_weight_group(c))
        for (const auto& x : c.words())
          for (const auto& y : c.words())
            if (x != y) {
              CHECK(hamming_distance(x, y) == *r);
              CHECK(c.contains(multiply(c.alphabet(), x, invert(c.alphabet(), y))));
            }
    }
}
