#include "groupcodes/cyclic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "groupcodes/errors.hpp"
#include "groupcodes/isomorphy.hpp"

namespace groupcodes {

Word cyclic_shift(const Word& x) {
  Word y = x;
  const std::size_t n = x.size();
  for (std::size_t j = 0; j < n; ++j) y[j] = x[(j + 1) % n];
  return y;
}

bool is_cyclic(const Code& c) {
  return std::all_of(c.words().begin(), c.words().end(), [&](const Word& w) { return c.contains(cyclic_shift(w)); });
}

std::vector<std::size_t> shift_orbit_sizes(const Code& c) {
  std::set<Word> seen;
  std::vector<std::size_t> sizes;
  for (const auto& w : c.words()) {
    if (seen.contains(w)) continue;
    std::size_t k = 0;
    Word x = w;
    do {
      seen.insert(x);
      x = cyclic_shift(x);
      ++k;
    } while (x != w);
    sizes.push_back(k);
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Equivalence interleaving_permutation(std::size_t m, std::size_t copies) {
  if (m == 0 || copies == 0) throw Error(Errc::invalid_input, "interleaving needs m >= 1 and copies >= 1");
  const std::size_t l = copies;
  std::vector<std::size_t> one_based(m * l);
  for (std::size_t s = 0; s < l; ++s)
    for (std::size_t r = 1; r <= m; ++r) one_based[s * m + r - 1] = (r - 1) * l + (s + 1);
  return Equivalence::from_one_based(one_based);
}

Interleaving interleave(const GroupCode& d, std::size_t copies) {
  if (!is_cyclic(d)) throw Error(Errc::precondition, "interleaving requires a cyclic code");
  std::vector<Code> parts(copies, d);
  const Code power = direct_sum(parts);
  Equivalence sigma = interleaving_permutation(d.length(), copies);
  Code image = apply_push_to_code(sigma, power);
  if (!is_cyclic(image)) throw Error(Errc::theorem_violation, "interleaved code is not cyclic");
  return {GroupCode::from_code(image), std::move(sigma)};
}

ComponentStructure cyclic_structure(const GroupCode& c, const DecomposeOptions& options) {
  if (!is_cyclic(c)) throw Error(Errc::precondition, "component structure requires a cyclic group code");
  const Decomposition dec = decompose(c, options);
  ComponentStructure out{dec.components.front(), dec.components.size(), true, true};
  for (std::size_t k = 1; k < dec.components.size(); ++k)
    if (!isomorphic(dec.components.front(), dec.components[k], options.iso_limits))
      out.components_pairwise_isomorphic = false;
  for (const auto& comp : dec.components)
    if (!is_cyclic(comp)) out.components_cyclic = false;
  if (!out.components_pairwise_isomorphic)
    throw Error(Errc::theorem_violation, "components of a cyclic group code are not all isomorphic");
  if (!out.components_cyclic)
    throw Error(Errc::theorem_violation, "a component projection of a cyclic group code is not cyclic");
  return out;
}

std::vector<std::pair<std::uint64_t, std::size_t>> factorize(std::uint64_t v) {
  std::vector<std::pair<std::uint64_t, std::size_t>> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p != 0) continue;
    std::size_t e = 0;
    while (v % p == 0) {
      v /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (v > 1) out.emplace_back(v, 1);
  return out;
}

std::optional<GcdCertificate> gcd_criterion(std::uint64_t cardinality, std::size_t n) {
  std::uint64_t xi = 0;
  for (auto [p, e] : factorize(cardinality)) xi = std::gcd(xi, static_cast<std::uint64_t>(e));
  if (std::gcd(xi, static_cast<std::uint64_t>(n)) != 1) return std::nullopt;
  return GcdCertificate{xi};
}

std::optional<GcdCertificate> gcd_certificate(const GroupCode& c) {
  if (!is_cyclic(c)) throw Error(Errc::precondition, "the gcd criterion applies to cyclic group codes");
  return gcd_criterion(c.size(), c.length());
}

GroupCode join(std::span<const GroupCode> codes) {
  if (codes.empty()) throw Error(Errc::invalid_input, "join of no codes");
  const std::size_t n = codes.front().length();
  std::vector<FiniteGroup> factors;
  for (const auto& c : codes) {
    if (c.length() != n) throw Error(Errc::incompatible_words, "joined codes must share one length");
    if (!is_cyclic(c)) throw Error(Errc::precondition, "joined codes must be cyclic");
    factors.push_back(c.alphabet());
  }
  auto product = share(product_group(factors));

  // Odometer over one codeword from each code.
  std::vector<Word> words;
  std::vector<std::size_t> pick(codes.size(), 0);
  std::vector<Element> parts(codes.size());
  while (true) {
    Word w = Word::filled(n, 0);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t i = 0; i < codes.size(); ++i) parts[i] = codes[i][pick[i]][t];
      w[t] = encode_product_element(*product, parts);
    }
    words.push_back(std::move(w));
    std::size_t i = codes.size();
    while (i > 0 && ++pick[i - 1] == codes[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  GroupCode out = GroupCode::from_code(Code::from_words(product, n, std::move(words)));
  if (!is_cyclic(out)) throw Error(Errc::theorem_violation, "join is not cyclic");
  return out;
}

CyclicReport cyclic_report(const Code& c, const DecomposeOptions& options) {
  CyclicReport r;
  r.is_cyclic = is_cyclic(c);
  r.shift_orbit_sizes = shift_orbit_sizes(c);
  if (auto gc = GroupCode::view(c); gc && r.is_cyclic) {
    r.gcd_certificate = gcd_certificate(*gc);
    r.component_structure = cyclic_structure(*gc, options);
  }
  return r;
}

}  // namespace groupcodes
