#include "groupcodes/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "groupcodes/cyclic.hpp"

namespace groupcodes::corpus {

std::size_t draw(Rng& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

AlphabetPtr z(std::size_t m) { return share(cyclic_group(m)); }

AlphabetPtr klein() { return share(product_group({cyclic_group(2), cyclic_group(2)})); }

GroupCode z4_example() { return generate_group_code(cyclic_group(4), 3, {Word{2, 0, 0}, Word{1, 2, 1}}); }

GroupCode even_weight3() { return generate_group_code(cyclic_group(2), 3, {Word{1, 1, 0}, Word{0, 1, 1}}); }

std::vector<std::pair<Word, Word>> interleaving_table() {
  return {
      {{0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0}}, {{0, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 0}},
      {{0, 0, 0, 0, 1, 1}, {0, 0, 0, 1, 0, 1}}, {{0, 0, 0, 1, 0, 1}, {0, 1, 0, 0, 0, 1}},
      {{1, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}}, {{1, 1, 0, 1, 1, 0}, {1, 1, 1, 1, 0, 0}},
      {{1, 1, 0, 0, 1, 1}, {1, 0, 1, 1, 0, 1}}, {{1, 1, 0, 1, 0, 1}, {1, 1, 1, 0, 0, 1}},
      {{0, 1, 1, 0, 0, 0}, {0, 0, 1, 0, 1, 0}}, {{0, 1, 1, 1, 1, 0}, {0, 1, 1, 1, 1, 0}},
      {{0, 1, 1, 0, 1, 1}, {0, 0, 1, 1, 1, 1}}, {{0, 1, 1, 1, 0, 1}, {0, 1, 1, 0, 1, 1}},
      {{1, 0, 1, 0, 0, 0}, {1, 0, 0, 0, 1, 0}}, {{1, 0, 1, 1, 1, 0}, {1, 1, 0, 1, 1, 0}},
      {{1, 0, 1, 0, 1, 1}, {1, 0, 0, 1, 1, 1}}, {{1, 0, 1, 1, 0, 1}, {1, 1, 0, 0, 1, 1}},
  };
}

GroupCode hamming74() {
  // Generator rows of the systematic [7,4] code with parity bits p1 p2 p3.
  return generate_group_code(cyclic_group(2), 7,
                             {Word{1, 0, 0, 0, 1, 1, 0}, Word{0, 1, 0, 0, 1, 0, 1}, Word{0, 0, 1, 0, 0, 1, 1},
                              Word{0, 0, 0, 1, 1, 1, 1}});
}

GroupCode ternary_hamming() { return generate_group_code(cyclic_group(3), 4, {Word{1, 0, 1, 1}, Word{0, 1, 1, 2}}); }

GroupCode simplex7() {
  // Parity-check rows of hamming74().
  return generate_group_code(cyclic_group(2), 7,
                             {Word{1, 1, 0, 1, 1, 0, 0}, Word{1, 0, 1, 1, 0, 1, 0}, Word{0, 1, 1, 1, 0, 0, 1}});
}

GroupCode repetition(AlphabetPtr g, std::size_t n) {
  std::vector<Word> gens;
  for (Element a : g->generators()) gens.push_back(Word::filled(n, a));
  return GroupCode::generate(std::move(g), n, gens);
}

std::vector<AlphabetPtr> small_groups() { return {z(2), z(3), z(4), klein()}; }

std::vector<NamedCode> indecomposable_pool(const AlphabetPtr& g) {
  auto gc = [&](std::string name, std::size_t n, std::vector<Word> gens) {
    return NamedCode{std::move(name), GroupCode::generate(g, n, gens)};
  };
  switch (g->order()) {
    case 2:
      return {gc("G", 1, {Word{1}}),
              gc("rep2", 2, {Word{1, 1}}),
              gc("rep3", 3, {Word{1, 1, 1}}),
              gc("even3", 3, {Word{1, 1, 0}, Word{0, 1, 1}}),
              gc("even4", 4, {Word{1, 1, 0, 0}, Word{0, 1, 1, 0}, Word{0, 0, 1, 1}})};
    case 3:
      return {gc("G", 1, {Word{1}}), gc("rep2", 2, {Word{1, 1}}), gc("rep3", 3, {Word{1, 1, 1}}),
              gc("mds3", 3, {Word{1, 1, 1}, Word{0, 1, 2}})};
    case 4:
      if (g->kind() == FiniteGroup::Kind::cyclic)
        return {gc("G", 1, {Word{1}}), gc("sub2", 1, {Word{2}}), gc("rep2", 2, {Word{1, 1}}),
                gc("rep2_2", 2, {Word{2, 2}}), gc("mixed2", 2, {Word{1, 2}}),
                gc("z4_example", 3, {Word{2, 0, 0}, Word{1, 2, 1}})};
      return {gc("G", 1, {Word{1}, Word{2}}), gc("sub2", 1, {Word{1}}), gc("diag2_small", 2, {Word{1, 1}}),
              gc("diag2", 2, {Word{1, 1}, Word{2, 2}}), gc("mixed2", 2, {Word{1, 1}, Word{2, 0}})};
    default:
      return {};
  }
}

GroupCode random_group_code(Rng& rng, const AlphabetPtr& g, std::size_t n, std::size_t max_generators) {
  const std::size_t k = 1 + draw(rng, max_generators);
  std::vector<Word> gens;
  for (std::size_t i = 0; i < k; ++i) {
    Word w = Word::filled(n, 0);
    for (std::size_t t = 0; t < n; ++t) w[t] = static_cast<Element>(draw(rng, g->order()));
    gens.push_back(std::move(w));
  }
  return GroupCode::generate(g, n, gens);
}

GroupCode cyclic_closure(const AlphabetPtr& g, const Word& w) {
  std::vector<Word> gens{w};
  for (std::size_t s = 1; s < w.size(); ++s) gens.push_back(cyclic_shift(gens.back()));
  return GroupCode::generate(g, w.size(), gens);
}

Code random_code(Rng& rng, const AlphabetPtr& g, std::size_t n, std::size_t max_words) {
  const std::size_t k = 1 + draw(rng, max_words);
  std::vector<Word> words;
  for (std::size_t i = 0; i < k; ++i) {
    Word w = Word::filled(n, 0);
    for (std::size_t t = 0; t < n; ++t) w[t] = static_cast<Element>(draw(rng, g->order()));
    words.push_back(std::move(w));
  }
  return Code::from_words(g, n, std::move(words));
}

namespace {

Equivalence random_permutation(Rng& rng, std::size_t n) {
  Equivalence e = Equivalence::identity(n);
  for (std::size_t i = n; i > 1; --i) std::swap(e.sigma[i - 1], e.sigma[draw(rng, i)]);
  return e;
}

}  // namespace

Isometry random_automorphism_isometry(Rng& rng, const FiniteGroup& g, std::size_t n) {
  const auto auts = automorphisms(g);
  Configuration config;
  for (std::size_t j = 0; j < n; ++j) config.maps.push_back(auts[draw(rng, auts.size())].mapping);
  return Isometry(std::move(config), random_permutation(rng, n));
}

Isometry random_isometry(Rng& rng, std::size_t q, std::size_t n) {
  Configuration config;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Element> m(q);
    std::iota(m.begin(), m.end(), Element{0});
    for (std::size_t i = q; i > 1; --i) std::swap(m[i - 1], m[draw(rng, i)]);
    config.maps.push_back(std::move(m));
  }
  return Isometry(std::move(config), random_permutation(rng, n));
}

}  // namespace groupcodes::corpus
