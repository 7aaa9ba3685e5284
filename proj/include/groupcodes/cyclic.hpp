#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "groupcodes/code.hpp"
#include "groupcodes/decompose.hpp"
#include "groupcodes/isometry.hpp"

namespace groupcodes {

/// The n-cycle delta = (1 ... n) acting by pull: y_j = x_{j+1}, indices mod n.
Word cyclic_shift(const Word& x);

bool is_cyclic(const Code& c);

/// Sizes of the orbits of the codewords under the cyclic shift, sorted.
std::vector<std::size_t> shift_orbit_sizes(const Code& c);

/// sigma(s*m + r) = (r-1)*l + (s+1) for 0 <= s < l, 1 <= r <= m, evaluated in
/// 1-based indices and stored 0-based.
Equivalence interleaving_permutation(std::size_t m, std::size_t copies);

struct Interleaving {
  GroupCode code;
  Equivalence sigma;
};

/// Pushes every word of D^copies through the interleaving permutation
/// (y_{sigma(t)} = x_t). Throws Errc::precondition when D is not cyclic and
/// Errc::theorem_violation if the result is not cyclic.
Interleaving interleave(const GroupCode& d, std::size_t copies);

struct ComponentStructure {
  Code representative;
  std::size_t multiplicity = 0;
  bool components_pairwise_isomorphic = true;
  bool components_cyclic = true;
};

/// Decomposes a cyclic group code and checks that all components are
/// isomorphic and that each block projection is itself cyclic. Throws
/// Errc::theorem_violation if either check fails.
ComponentStructure cyclic_structure(const GroupCode& c, const DecomposeOptions& options = {});

struct GcdCertificate {
  std::uint64_t xi = 0;  // gcd of the prime exponents of |C|
};

/// Prime factorization by trial division, as (prime, exponent) pairs.
std::vector<std::pair<std::uint64_t, std::size_t>> factorize(std::uint64_t v);

/// Present iff gcd(xi, n) = 1 where xi is the gcd of the exponents of
/// `cardinality`.
std::optional<GcdCertificate> gcd_criterion(std::uint64_t cardinality, std::size_t n);
/// Same criterion for a cyclic group code. Throws Errc::precondition if the
/// code is not cyclic.
std::optional<GcdCertificate> gcd_certificate(const GroupCode& c);

/// Codes over the product of the alphabets whose i-th component word lies in
/// the i-th code. All codes must have the same length and be cyclic.
GroupCode join(std::span<const GroupCode> codes);

struct CyclicReport {
  bool is_cyclic = false;
  std::vector<std::size_t> shift_orbit_sizes;
  std::optional<GcdCertificate> gcd_certificate;
  std::optional<ComponentStructure> component_structure;
};

/// The gcd certificate and component structure are filled only for cyclic
/// group codes.
CyclicReport cyclic_report(const Code& c, const DecomposeOptions& options = {});

}  // namespace groupcodes
