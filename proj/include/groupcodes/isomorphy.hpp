#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "groupcodes/code.hpp"
#include "groupcodes/isometry.hpp"

namespace groupcodes {

struct Decomposition;

/// Caps for the backtracking searches. Exceeding them raises
/// Errc::resource_limit (or flags an automorphism report incomplete).
struct SearchLimits {
  std::uint64_t max_nodes = 50'000'000;
  std::size_t max_length = 32;
  std::size_t max_alphabet = 64;
  /// Per-coordinate bijections tried for plain codes grow like |P|!.
  std::uint64_t max_coordinate_maps = 40'320;
};

/// An isometry of G^n (pull convention) that maps the source group code onto
/// the target and restricts to a group isomorphism.
struct GroupCodeIso {
  Isometry iso;
  bool verified_hom = false;
};

/// Extensional check: `iso` maps `src` onto `dst`, fixes the identity word,
/// and satisfies iso(x*g) = iso(x)*iso(g) for all x in src and generators g.
bool is_group_code_isomorphism(const Isometry& iso, const GroupCode& src, const GroupCode& dst);

/// Searches sigma coordinate by coordinate; for each target coordinate j the
/// map f_j ranges over group isomorphisms pi_{sigma(j)}(C) -> pi_j(D),
/// extended to a bijection of G. Partial images of a generating set of C must
/// stay inside the matching prefix projection of D.
std::optional<GroupCodeIso> gc_isomorphic(const GroupCode& c, const GroupCode& d, const SearchLimits& limits = {});

/// Isometry of A^n mapping c onto d, with no homomorphism requirement.
std::optional<Isometry> code_isomorphic(const Code& c, const Code& d, const SearchLimits& limits = {});

/// Dispatches to gc_isomorphic when both codes are group codes.
bool isomorphic(const Code& c, const Code& d, const SearchLimits& limits = {});

/// Rewrites every f_j outside pi_{sigma(j)}(c) to the canonical extension.
/// Isometries agreeing on the coordinate projections of `c` then compare equal.
Isometry normalize_on(const Isometry& iso, const Code& c);

struct AutStructure {
  std::size_t isotype = 0;
  BigInt component_order;
  std::size_t multiplicity = 0;
};

inline constexpr std::uint64_t kExplicitAutLimit = 10'000;
inline constexpr std::uint64_t kAutClosureLimit = 1'000'000;

/// Automorphisms are counted as pairs (sigma, f restricted to the coordinate
/// projections), which is how they act on the code and its projections.
struct AutGroupReport {
  BigInt order;
  std::vector<Isometry> generators;
  /// Every automorphism, when order <= kExplicitAutLimit.
  std::vector<Isometry> elements;
  bool complete = true;
  /// Generators were closed and produced exactly `order` elements.
  bool closure_verified = false;
  std::vector<AutStructure> structure;
  std::optional<BigInt> predicted_order;
};

/// Enumerates Aut_GC(C) exhaustively. With a decomposition, also computes
/// |Aut_GC(D_j)| per isotype and throws Errc::theorem_violation if the order
/// differs from prod |Aut_GC(D_j)|^a_j * a_j!.
AutGroupReport aut_group(const GroupCode& c, const SearchLimits& limits = {}, const Decomposition* decomposition = nullptr);

/// True iff `phi` sends every embedded summand (codewords supported on one
/// block) onto the embedded summand of a block of the same isotype. Throws
/// Errc::precondition when phi is not an automorphism of `c`.
bool verify_block_preservation(const GroupCode& c, const std::vector<std::vector<std::size_t>>& blocks,
                               const std::vector<std::size_t>& isotype_of, const Isometry& phi);

}  // namespace groupcodes
