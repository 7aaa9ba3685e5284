#include "groupcodes/decompose.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

#include "groupcodes/classify.hpp"
#include "groupcodes/errors.hpp"

namespace groupcodes {

std::string_view to_string(Certificate c) noexcept {
  switch (c) {
    case Certificate::mds_nontrivial: return "mds-nontrivial";
    case Certificate::perfect_nontrivial: return "perfect-nontrivial";
    case Certificate::constant_weight_nondegenerate: return "constant-weight-nondegenerate";
    case Certificate::prime_cardinality_nondegenerate: return "prime-cardinality-nondegenerate";
  }
  return "unknown";
}

namespace {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

// Counts |pi_J(C)| for coordinate bitmasks J. Each word is packed into up to
// four 64-bit lanes; a projection is a lane-wise mask and counting is
// sort + unique over masked keys. Memoized per mask.
class ProjectionCounter {
 public:
  static constexpr std::size_t kLanes = 4;
  using Key = std::array<std::uint64_t, kLanes>;

  explicit ProjectionCounter(const Code& c) : n_(c.length()) {
    bits_ = std::max<std::size_t>(1, std::bit_width(c.q() - 1));
    if (n_ * bits_ > 64 * kLanes)
      throw Error(Errc::resource_limit, "word too long to pack for the partition search");
    lanes_ = (n_ * bits_ + 63) / 64;
    packed_.reserve(c.size());
    for (const auto& w : c.words()) {
      Key k{};
      for (std::size_t i = 0; i < n_; ++i) {
        const std::size_t bit = i * bits_;
        k[bit / 64] |= static_cast<std::uint64_t>(w[i]) << (bit % 64);
      }
      packed_.push_back(k);
    }
    scratch_.resize(packed_.size());
  }

  std::size_t count(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    Key lane_mask{};
    const std::uint64_t symbol_mask = (bits_ >= 64) ? ~0ull : ((1ull << bits_) - 1);
    for (std::size_t i = 0; i < n_; ++i) {
      if (!((mask >> i) & 1)) continue;
      const std::size_t bit = i * bits_;
      lane_mask[bit / 64] |= symbol_mask << (bit % 64);
    }
    for (std::size_t w = 0; w < packed_.size(); ++w)
      for (std::size_t l = 0; l < lanes_; ++l) scratch_[w][l] = packed_[w][l] & lane_mask[l];
    std::sort(scratch_.begin(), scratch_.end());
    const std::size_t distinct =
        static_cast<std::size_t>(std::unique(scratch_.begin(), scratch_.end()) - scratch_.begin());
    memo_.emplace(mask, distinct);
    return distinct;
  }

 private:
  std::size_t n_;
  std::size_t bits_ = 1;
  std::size_t lanes_ = 1;
  std::vector<Key> packed_;
  std::vector<Key> scratch_;
  std::unordered_map<std::uint64_t, std::size_t> memo_;
};

std::uint64_t to_mask(std::span<const std::size_t> coords) {
  std::uint64_t m = 0;
  for (std::size_t i : coords) m |= 1ull << i;
  return m;
}

// Visits (size-k subsets of `pool`) in lexicographic order until fn returns true.
template <typename Fn>
bool for_each_combination(const std::vector<std::size_t>& pool, std::size_t k, Fn&& fn) {
  const std::size_t m = pool.size();
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::size_t> chosen(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (fn(chosen)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

}  // namespace

std::vector<Certificate> certificates(const Code& c) {
  std::vector<Certificate> out;
  const bool trivial = is_trivial(c);
  const bool degenerate = is_degenerate(c);
  if (!trivial && is_mds(c)) out.push_back(Certificate::mds_nontrivial);
  if (!trivial && is_perfect(c)) out.push_back(Certificate::perfect_nontrivial);
  if (auto gc = GroupCode::view(c); gc && !degenerate && constant_weight_group(*gc))
    out.push_back(Certificate::constant_weight_nondegenerate);
  if (!degenerate && is_prime(c.size())) out.push_back(Certificate::prime_cardinality_nondegenerate);
  return out;
}

std::optional<Certificate> indecomposability_certificate(const Code& c) {
  auto all = certificates(c);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool split_test(const Code& c, std::span<const std::size_t> j) {
  if (j.empty() || j.size() >= c.length())
    throw Error(Errc::invalid_index_set, "J must be a non-empty proper subset of the coordinates");
  std::vector<std::size_t> jv(j.begin(), j.end());
  std::sort(jv.begin(), jv.end());
  if (std::adjacent_find(jv.begin(), jv.end()) != jv.end() || jv.back() >= c.length())
    throw Error(Errc::invalid_index_set, "J has repeated or out-of-range coordinates");
  std::vector<std::size_t> kv;
  for (std::size_t i = 0, t = 0; i < c.length(); ++i) {
    if (t < jv.size() && jv[t] == i) {
      ++t;
      continue;
    }
    kv.push_back(i);
  }
  return projection_size(c, jv) * projection_size(c, kv) == c.size();
}

std::optional<std::vector<std::size_t>> is_decomposable(const Code& c, const DecomposeOptions& options) {
  const std::size_t n = c.length();
  if (n < 2) return std::nullopt;
  const auto degenerate = degenerate_coordinates(c);
  if (!degenerate.empty() && degenerate.front() == 0) return std::vector<std::size_t>{0};

  std::vector<std::size_t> free;
  for (std::size_t i = 1; i < n; ++i)
    if (!std::binary_search(degenerate.begin(), degenerate.end(), i)) free.push_back(i);
  if (free.size() + 1 > options.max_partition_bits || n > 64) {
    std::string partial;
    for (auto cert : certificates(c)) partial += " " + std::string(to_string(cert));
    throw Error(Errc::resource_limit, "partition search over " + std::to_string(free.size() + 1) +
                                          " coordinates exceeds the cap of " +
                                          std::to_string(options.max_partition_bits) + "; certificates:" +
                                          (partial.empty() ? " none" : partial));
  }

  ProjectionCounter counter(c);
  const std::uint64_t all = (n == 64) ? ~0ull : ((1ull << n) - 1);
  // J never needs a constant coordinate other than 0: adding one leaves both
  // projection sizes unchanged. J = {0} u free is proper only when some
  // coordinate is constant.
  const std::size_t max_extra = degenerate.empty() ? free.size() - (free.empty() ? 0 : 1) : free.size();
  if (free.empty() && degenerate.empty()) return std::nullopt;

  std::optional<std::vector<std::size_t>> found;
  for (std::size_t extra = 0; extra <= max_extra && !found; ++extra) {
    for_each_combination(free, extra, [&](const std::vector<std::size_t>& chosen) {
      std::uint64_t jmask = 1ull | to_mask(chosen);
      const std::uint64_t kmask = all & ~jmask;
      if (kmask == 0) return false;
      const std::size_t pj = counter.count(jmask);
      if (c.size() % pj != 0) return false;
      if (pj * counter.count(kmask) != c.size()) return false;
      std::vector<std::size_t> j{0};
      j.insert(j.end(), chosen.begin(), chosen.end());
      found = std::move(j);
      return true;
    });
  }
  return found;
}

Decomposition decompose(const Code& c, const DecomposeOptions& options) {
  Decomposition out;
  const auto degenerate = degenerate_coordinates(c);
  for (std::size_t i : degenerate) out.blocks.push_back({i});

  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < c.length(); ++i)
    if (!std::binary_search(degenerate.begin(), degenerate.end(), i)) rest.push_back(i);

  while (!rest.empty()) {
    if (rest.size() == 1) {
      out.blocks.push_back(rest);
      break;
    }
    const Code sub = projection(c, rest);
    std::optional<std::vector<std::size_t>> local;
    if (!(options.use_certificates && indecomposability_certificate(sub))) local = is_decomposable(sub, options);
    if (!local) {
      out.blocks.push_back(rest);
      break;
    }
    std::vector<std::size_t> block;
    for (std::size_t k : *local) block.push_back(rest[k]);
    std::vector<std::size_t> remaining;
    std::set_difference(rest.begin(), rest.end(), block.begin(), block.end(), std::back_inserter(remaining));
    out.blocks.push_back(std::move(block));
    rest = std::move(remaining);
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  Equivalence sigma;
  for (const auto& b : out.blocks) {
    out.components.push_back(projection(c, b));
    sigma.sigma.insert(sigma.sigma.end(), b.begin(), b.end());
  }
  out.witness = Isometry::from_equivalence(c.q(), std::move(sigma));

  for (std::size_t k = 0; k < out.components.size(); ++k) {
    std::size_t type = out.isotypes.size();
    for (std::size_t t = 0; t < out.isotypes.size(); ++t) {
      if (isomorphic(out.components[out.isotypes[t].representative], out.components[k], options.iso_limits)) {
        type = t;
        break;
      }
    }
    if (type == out.isotypes.size()) out.isotypes.push_back({k, 0, {}});
    ++out.isotypes[type].multiplicity;
    out.isotypes[type].members.push_back(k);
    out.isotype_of.push_back(type);
  }
  out.certificates = certificates(c);
  return out;
}

}  // namespace groupcodes
