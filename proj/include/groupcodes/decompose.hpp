#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "groupcodes/code.hpp"
#include "groupcodes/isometry.hpp"
#include "groupcodes/isomorphy.hpp"

namespace groupcodes {

/// Reasons a code is indecomposable without a partition search, in the order
/// they are tried.
enum class Certificate {
  mds_nontrivial,
  perfect_nontrivial,
  constant_weight_nondegenerate,
  prime_cardinality_nondegenerate,
};

std::string_view to_string(Certificate c) noexcept;

/// Every applicable certificate, in priority order. The constant-weight tag is
/// only issued for group codes.
std::vector<Certificate> certificates(const Code& c);
std::optional<Certificate> indecomposability_certificate(const Code& c);

struct DecomposeOptions {
  /// Largest number of free coordinates the subset search will enumerate.
  std::size_t max_partition_bits = 24;
  /// Skip the subset search for codes carrying a certificate.
  bool use_certificates = true;
  SearchLimits iso_limits;
};

/// |C| = |pi_J(C)| * |pi_K(C)| with K the complement of J (0-based, non-empty,
/// proper subset).
bool split_test(const Code& c, std::span<const std::size_t> j);

/// The smallest, then lexicographically least, coordinate set J containing
/// coordinate 0 that passes split_test; absent when the code is
/// indecomposable. Throws Errc::resource_limit above the subset cap.
std::optional<std::vector<std::size_t>> is_decomposable(const Code& c, const DecomposeOptions& options = {});

struct Isotype {
  std::size_t representative = 0;  // index into Decomposition::components
  std::size_t multiplicity = 0;
  std::vector<std::size_t> members;
};

struct Decomposition {
  /// 0-based coordinate blocks, each sorted, ordered by smallest element.
  std::vector<std::vector<std::size_t>> blocks;
  /// pi_block(C) per block; indecomposable.
  std::vector<Code> components;
  std::vector<std::size_t> isotype_of;
  std::vector<Isotype> isotypes;
  /// Equivalence (identity configuration) carrying C onto the direct sum of
  /// the components in block order.
  Isometry witness = Isometry::identity(0, 0);
  std::vector<Certificate> certificates;
};

/// Repeatedly splits off the least indecomposable block containing the first
/// remaining coordinate. Constant coordinates become singleton blocks first.
Decomposition decompose(const Code& c, const DecomposeOptions& options = {});

}  // namespace groupcodes
