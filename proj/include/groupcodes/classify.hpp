#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "groupcodes/code.hpp"

namespace groupcodes {

/// |B_r(c)| = sum_{i<=r} C(n,i) (q-1)^i; r > n clamps to q^n.
BigInt ball_size(std::size_t q, std::size_t n, std::size_t r);

/// |C| = q^n, i.e. C is A^n.
bool is_trivial(const Code& c);

/// Coordinates (0-based) on which every codeword agrees.
std::vector<std::size_t> degenerate_coordinates(const Code& c);
inline bool is_degenerate(const Code& c) { return !degenerate_coordinates(c).empty(); }

/// |C| = q^(n-d+1) in exact arithmetic. Singleton codes are never MDS.
bool is_mds(const Code& c);

/// |C| * |B_e| = q^n with e the correction capacity.
bool is_perfect(const Code& c);

inline constexpr std::size_t kCoveringOracleCap = std::size_t{1} << 16;

/// Walks all of A^n and checks that the radius-e balls around codewords are
/// disjoint and cover the space. Throws Errc::resource_limit when q^n > cap.
bool is_perfect_by_covering(const Code& c, std::size_t cap = kCoveringOracleCap);

/// r > 0 such that every non-identity codeword has weight r; absent for the
/// trivial subgroup.
std::optional<std::size_t> constant_weight_group(const GroupCode& c);

struct ConstantWeight {
  Word center;
  std::size_t radius = 0;
};

inline constexpr std::size_t kConstantWeightSearchCap = std::size_t{1} << 20;

/// Lexicographically first center x0 with every codeword at the same distance
/// from x0. Singletons report (w, 0). When `candidates` is non-empty only those
/// centers are tried; otherwise all of A^n is searched, subject to `cap`.
std::optional<ConstantWeight> constant_weight_general(const Code& c, std::span<const Word> candidates = {},
                                                      std::size_t cap = kConstantWeightSearchCap);

struct Classification {
  bool is_trivial = false;
  bool is_degenerate = false;
  std::vector<std::size_t> degenerate_coordinates;
  bool is_mds = false;
  bool is_perfect = false;
  std::optional<ConstantWeight> constant_weight;
  std::size_t correction_capacity = 0;
};

/// Group codes measure constant weight from the identity word; other codes
/// search for a center when A^n is small enough, and leave it unset otherwise.
Classification classify(const Code& c);

}  // namespace groupcodes
