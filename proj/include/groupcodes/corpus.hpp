#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "groupcodes/code.hpp"
#include "groupcodes/isometry.hpp"

namespace groupcodes::corpus {

using Rng = std::mt19937_64;

/// Uniform draw in [0, bound) that does not depend on the standard library's
/// distribution implementation.
std::size_t draw(Rng& rng, std::size_t bound);

AlphabetPtr z(std::size_t m);
AlphabetPtr klein();

/// The 8-word code over Z/4 generated by (2,0,0) and (1,2,1).
GroupCode z4_example();
/// {000, 110, 011, 101} over Z/2.
GroupCode even_weight3();
/// The 16 rows of the interleaving table for D^2, in table order, as
/// (word of D^2, image) pairs.
std::vector<std::pair<Word, Word>> interleaving_table();
GroupCode hamming74();
/// Ternary Hamming code of length 4 (9 words, perfect).
GroupCode ternary_hamming();
/// Binary simplex code of length 7 (constant weight 4).
GroupCode simplex7();
GroupCode repetition(AlphabetPtr g, std::size_t n);

struct NamedCode {
  std::string name;
  GroupCode code;
};

/// Indecomposable group codes over one alphabet, pairwise non-isomorphic.
std::vector<NamedCode> indecomposable_pool(const AlphabetPtr& g);
/// The four alphabets used throughout: Z/2, Z/3, Z/4, Klein four.
std::vector<AlphabetPtr> small_groups();

GroupCode random_group_code(Rng& rng, const AlphabetPtr& g, std::size_t n, std::size_t max_generators);
/// Smallest cyclic group code containing the given word.
GroupCode cyclic_closure(const AlphabetPtr& g, const Word& w);
Code random_code(Rng& rng, const AlphabetPtr& g, std::size_t n, std::size_t max_words);

/// sigma uniform in S_n, f_j uniform in Aut(G); such isometries map group
/// codes to group codes.
Isometry random_automorphism_isometry(Rng& rng, const FiniteGroup& g, std::size_t n);
Isometry random_isometry(Rng& rng, std::size_t q, std::size_t n);

}  // namespace groupcodes::corpus
