#include "groupcodes/classify.hpp"

#include <algorithm>

#include "groupcodes/errors.hpp"

namespace groupcodes {

namespace {

// Calls fn on every word of A^n in lexicographic order.
template <typename Fn>
void for_each_word(std::size_t q, std::size_t n, Fn&& fn) {
  Word w = Word::filled(n, 0);
  while (true) {
    fn(w);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (w[i] + 1u < q) {
        ++w[i];
        break;
      }
      w[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

BigInt ball_size(std::size_t q, std::size_t n, std::size_t r) {
  if (r >= n) return big_pow(q, n);
  BigInt total = 0;
  BigInt binom = 1;  // C(n, i)
  BigInt power = 1;  // (q-1)^i
  for (std::size_t i = 0; i <= r; ++i) {
    total += binom * power;
    binom = binom * (n - i) / (i + 1);
    power *= (q - 1);
  }
  return total;
}

bool is_trivial(const Code& c) { return BigInt(c.size()) == big_pow(c.q(), c.length()); }

std::vector<std::size_t> degenerate_coordinates(const Code& c) {
  std::vector<std::size_t> out;
  const auto& first = c.words().front();
  for (std::size_t i = 0; i < c.length(); ++i) {
    const bool constant =
        std::all_of(c.words().begin(), c.words().end(), [&](const Word& w) { return w[i] == first[i]; });
    if (constant) out.push_back(i);
  }
  return out;
}

bool is_mds(const Code& c) {
  if (c.size() < 2) return false;
  const std::size_t d = min_distance(c);
  return BigInt(c.size()) == big_pow(c.q(), c.length() - d + 1);
}

bool is_perfect(const Code& c) {
  const std::size_t e = (min_distance(c) - 1) / 2;
  return BigInt(c.size()) * ball_size(c.q(), c.length(), e) == big_pow(c.q(), c.length());
}

bool is_perfect_by_covering(const Code& c, std::size_t cap) {
  if (big_pow(c.q(), c.length()) > cap)
    throw Error(Errc::resource_limit, "covering enumeration of A^n capped at " + std::to_string(cap) + " words");
  const std::size_t e = (min_distance_pairwise(c) - 1) / 2;
  bool ok = true;
  for_each_word(c.q(), c.length(), [&](const Word& x) {
    if (!ok) return;
    std::size_t hits = 0;
    for (const auto& w : c.words()) hits += hamming_distance(x, w) <= e;
    ok = hits == 1;
  });
  return ok;
}

std::optional<std::size_t> constant_weight_group(const GroupCode& c) {
  const Word e = c.identity_word();
  std::optional<std::size_t> r;
  for (const auto& w : c.words()) {
    if (w == e) continue;
    const std::size_t wt = weight(w, e);
    if (r && *r != wt) return std::nullopt;
    r = wt;
  }
  return r;
}

std::optional<ConstantWeight> constant_weight_general(const Code& c, std::span<const Word> candidates,
                                                      std::size_t cap) {
  if (c.size() == 1) return ConstantWeight{c.words().front(), 0};
  const auto test = [&](const Word& x0) -> std::optional<std::size_t> {
    const std::size_t r = hamming_distance(c.words().front(), x0);
    for (const auto& w : c.words())
      if (hamming_distance(w, x0) != r) return std::nullopt;
    return r;
  };
  if (!candidates.empty()) {
    std::vector<Word> sorted(candidates.begin(), candidates.end());
    std::sort(sorted.begin(), sorted.end());
    for (const auto& x0 : sorted)
      if (auto r = test(x0)) return ConstantWeight{x0, *r};
    return std::nullopt;
  }
  if (big_pow(c.q(), c.length()) > cap)
    throw Error(Errc::resource_limit, "constant-weight center search over A^n capped at " + std::to_string(cap) +
                                          " words; restrict the candidate centers");
  std::optional<ConstantWeight> found;
  for_each_word(c.q(), c.length(), [&](const Word& x0) {
    if (found) return;
    if (auto r = test(x0)) found = ConstantWeight{x0, *r};
  });
  return found;
}

Classification classify(const Code& c) {
  Classification k;
  k.is_trivial = is_trivial(c);
  k.degenerate_coordinates = degenerate_coordinates(c);
  k.is_degenerate = !k.degenerate_coordinates.empty();
  k.is_mds = is_mds(c);
  k.is_perfect = is_perfect(c);
  k.correction_capacity = (min_distance(c) - 1) / 2;
  if (auto gc = GroupCode::view(c)) {
    if (auto r = constant_weight_group(*gc)) k.constant_weight = ConstantWeight{gc->identity_word(), *r};
  } else if (big_pow(c.q(), c.length()) <= kConstantWeightSearchCap) {
    k.constant_weight = constant_weight_general(c);
  }
  return k;
}

}  // namespace groupcodes
