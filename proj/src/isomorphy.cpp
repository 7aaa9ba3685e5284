#include "groupcodes/isomorphy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "groupcodes/decompose.hpp"
#include "groupcodes/errors.hpp"

namespace groupcodes {

namespace {

std::uint64_t mix(std::uint64_t h, Element s) {
  std::uint64_t z = h ^ ((static_cast<std::uint64_t>(s) + 1) * 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::vector<Element> column_values(const Code& c, std::size_t i) {
  std::vector<char> seen(c.q(), 0);
  for (const auto& w : c.words()) seen[w[i]] = 1;
  std::vector<Element> out;
  for (std::size_t a = 0; a < c.q(); ++a)
    if (seen[a]) out.push_back(static_cast<Element>(a));
  return out;
}

// Sorted symbol frequencies of a column; invariant under alphabet bijections.
std::vector<std::size_t> column_signature(const Code& c, std::size_t i) {
  std::vector<std::size_t> freq(c.q(), 0);
  for (const auto& w : c.words()) ++freq[w[i]];
  std::erase(freq, 0);
  std::sort(freq.begin(), freq.end());
  return freq;
}

std::vector<Element> canonical_extension(std::vector<Element> partial, std::size_t q, Element unset) {
  std::vector<char> used(q, 0);
  for (Element y : partial)
    if (y != unset) used[y] = 1;
  Element next = 0;
  for (auto& y : partial) {
    if (y != unset) continue;
    while (used[next]) ++next;
    y = next;
    used[next] = 1;
  }
  return partial;
}

class CapExceeded {};

// Backtracking search for isometries f o sigma-bar carrying `src` onto `dst`.
class IsometrySearch {
 public:
  IsometrySearch(const Code& src, const Code& dst, bool group, const SearchLimits& limits)
      : src_(src), dst_(dst), group_(group), limits_(limits), n_(src.length()) {
    if (n_ > limits.max_length)
      throw Error(Errc::resource_limit, "isomorphism search capped at length " + std::to_string(limits.max_length));
    if (src.q() > limits.max_alphabet)
      throw Error(Errc::resource_limit, "isomorphism search capped at alphabet order " +
                                            std::to_string(limits.max_alphabet));
    for (std::size_t i = 0; i < n_; ++i) {
      src_cols_.push_back(column_values(src, i));
      dst_cols_.push_back(column_values(dst, i));
      src_sig_.push_back(column_signature(src, i));
      dst_sig_.push_back(column_signature(dst, i));
    }
    checks_ = group ? src.generators() : src.words();
    prefixes_.resize(n_);
    for (const auto& w : dst.words()) {
      std::uint64_t h = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        h = mix(h, w[j]);
        prefixes_[j].insert(h);
      }
    }
  }

  // Calls visit(iso) for every isometry found until visit returns false.
  // Throws CapExceeded when the node budget runs out.
  template <typename Visit>
  void run(Visit&& visit) {
    sigma_.assign(n_, 0);
    maps_.assign(n_, {});
    used_.assign(n_, 0);
    hashes_.assign(n_ + 1, std::vector<std::uint64_t>(checks_.size(), 0));
    stop_ = false;
    recurse(0, visit);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  const std::vector<std::vector<Element>>& coordinate_maps(std::size_t i, std::size_t j) {
    auto key = std::make_pair(src_cols_[i], dst_cols_[j]);
    auto it = map_cache_.find(key);
    if (it != map_cache_.end()) return it->second;
    std::vector<std::vector<Element>> maps;
    const auto& from = key.first;
    const auto& to = key.second;
    if (group_) {
      maps = subgroup_isomorphisms(src_.alphabet(), from, to);
    } else if (from.size() == to.size()) {
      std::uint64_t count = 1;
      for (std::size_t k = 2; k <= from.size(); ++k) count *= k;
      if (count > limits_.max_coordinate_maps)
        throw Error(Errc::resource_limit, "too many coordinate bijections (" + std::to_string(count) + ")");
      std::vector<Element> perm = to;
      do {
        std::vector<Element> partial(src_.q(), kUnset);
        for (std::size_t k = 0; k < from.size(); ++k) partial[from[k]] = perm[k];
        maps.push_back(canonical_extension(std::move(partial), src_.q(), kUnset));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return map_cache_.emplace(std::move(key), std::move(maps)).first->second;
  }

  template <typename Visit>
  void recurse(std::size_t j, Visit& visit) {
    if (stop_) return;
    if (j == n_) {
      leaf(visit);
      return;
    }
    for (std::size_t i = 0; i < n_ && !stop_; ++i) {
      if (used_[i] || src_sig_[i] != dst_sig_[j]) continue;
      const auto& candidates = coordinate_maps(i, j);
      for (const auto& f : candidates) {
        if (stop_) return;
        if (++nodes_ > limits_.max_nodes) throw CapExceeded{};
        bool ok = true;
        auto& next = hashes_[j + 1];
        const auto& prev = hashes_[j];
        for (std::size_t w = 0; w < checks_.size(); ++w) {
          next[w] = mix(prev[w], f[checks_[w][i]]);
          if (!prefixes_[j].contains(next[w])) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        used_[i] = 1;
        sigma_[j] = i;
        maps_[j] = f;
        recurse(j + 1, visit);
        used_[i] = 0;
      }
    }
  }

  template <typename Visit>
  void leaf(Visit& visit) {
    Isometry iso(Configuration{maps_}, Equivalence{sigma_});
    for (const auto& w : src_.words())
      if (!dst_.contains(iso(w))) return;
    if (!visit(iso)) stop_ = true;
  }

  static constexpr Element kUnset = 0xFF;

  const Code& src_;
  const Code& dst_;
  bool group_;
  SearchLimits limits_;
  std::size_t n_;
  std::vector<std::vector<Element>> src_cols_, dst_cols_;
  std::vector<std::vector<std::size_t>> src_sig_, dst_sig_;
  std::vector<Word> checks_;
  std::vector<std::unordered_set<std::uint64_t>> prefixes_;
  std::map<std::pair<std::vector<Element>, std::vector<Element>>, std::vector<std::vector<Element>>> map_cache_;

  std::vector<std::size_t> sigma_;
  std::vector<std::vector<Element>> maps_;
  std::vector<char> used_;
  std::vector<std::vector<std::uint64_t>> hashes_;
  bool stop_ = false;
  std::uint64_t nodes_ = 0;
};

std::vector<std::size_t> sorted_projection_sizes(const Code& c) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.length(); ++i) out.push_back(column_values(c, i).size());
  std::sort(out.begin(), out.end());
  return out;
}

bool same_shape(const Code& c, const Code& d) {
  return c.alphabet() == d.alphabet() && c.length() == d.length() && c.size() == d.size() &&
         sorted_projection_sizes(c) == sorted_projection_sizes(d);
}

std::string isometry_key(const Isometry& iso) {
  std::string key;
  for (std::size_t s : iso.equiv().sigma) key.push_back(static_cast<char>(s));
  for (const auto& m : iso.config().maps) key.append(m.begin(), m.end());
  return key;
}

}  // namespace

bool is_group_code_isomorphism(const Isometry& iso, const GroupCode& src, const GroupCode& dst) {
  if (iso.length() != src.length() || iso.q() != src.q() || !(src.alphabet() == dst.alphabet())) return false;
  if (src.size() != dst.size() || src.length() != dst.length()) return false;
  const auto& g = src.alphabet();
  if (iso(src.identity_word()) != dst.identity_word()) return false;
  std::vector<Word> image;
  image.reserve(src.size());
  for (const auto& w : src.words()) image.push_back(iso(w));
  std::sort(image.begin(), image.end());
  if (image != dst.words()) return false;
  for (const auto& x : src.words())
    for (const auto& gen : src.generators())
      if (iso(multiply(g, x, gen)) != multiply(g, iso(x), iso(gen))) return false;
  return true;
}

std::optional<GroupCodeIso> gc_isomorphic(const GroupCode& c, const GroupCode& d, const SearchLimits& limits) {
  if (!same_shape(c, d)) return std::nullopt;
  if (weight_distribution(c) != weight_distribution(d)) return std::nullopt;
  IsometrySearch search(c, d, true, limits);
  std::optional<Isometry> found;
  try {
    search.run([&](const Isometry& iso) {
      found = iso;
      return false;
    });
  } catch (const CapExceeded&) {
    throw Error(Errc::resource_limit, "isomorphism search exceeded " + std::to_string(limits.max_nodes) + " nodes");
  }
  if (!found) return std::nullopt;
  GroupCodeIso out{*found, is_group_code_isomorphism(*found, c, d)};
  if (!out.verified_hom) throw Error(Errc::theorem_violation, "search produced an unverifiable witness");
  return out;
}

std::optional<Isometry> code_isomorphic(const Code& c, const Code& d, const SearchLimits& limits) {
  if (!same_shape(c, d)) return std::nullopt;
  if (c.size() <= 2048 && distance_distribution(c) != distance_distribution(d)) return std::nullopt;
  IsometrySearch search(c, d, false, limits);
  std::optional<Isometry> found;
  try {
    search.run([&](const Isometry& iso) {
      found = iso;
      return false;
    });
  } catch (const CapExceeded&) {
    throw Error(Errc::resource_limit, "isomorphism search exceeded " + std::to_string(limits.max_nodes) + " nodes");
  }
  return found;
}

bool isomorphic(const Code& c, const Code& d, const SearchLimits& limits) {
  auto gc = GroupCode::view(c);
  auto gd = GroupCode::view(d);
  if (gc && gd) return gc_isomorphic(*gc, *gd, limits).has_value();
  return code_isomorphic(c, d, limits).has_value();
}

Isometry normalize_on(const Isometry& iso, const Code& c) {
  constexpr Element kUnset = 0xFF;
  Configuration cfg;
  for (std::size_t j = 0; j < iso.length(); ++j) {
    std::vector<Element> partial(iso.q(), kUnset);
    for (Element a : column_values(c, iso.equiv().sigma[j])) partial[a] = iso.config().maps[j][a];
    cfg.maps.push_back(canonical_extension(std::move(partial), iso.q(), kUnset));
  }
  return Isometry(std::move(cfg), iso.equiv());
}

namespace {

BigInt factorial(std::size_t k) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace

AutGroupReport aut_group(const GroupCode& c, const SearchLimits& limits, const Decomposition* decomposition) {
  AutGroupReport report;
  IsometrySearch search(c, c, true, limits);

  std::uint64_t count = 0;
  std::vector<Isometry> closure;
  std::unordered_set<std::string> closure_keys;
  bool closure_overflow = false;
  closure.push_back(normalize_on(Isometry::identity(c.q(), c.length()), c));
  closure_keys.insert(isometry_key(closure.back()));

  // Greedy generating set: an element outside the current closure becomes a
  // generator, and the closure is regrown from it.
  const auto absorb = [&](const Isometry& iso) {
    if (closure_overflow || closure_keys.contains(isometry_key(iso))) return;
    report.generators.push_back(iso);
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (const auto& g : report.generators) {
        Isometry prod = normalize_on(compose(closure[i], g), c);
        if (closure_keys.insert(isometry_key(prod)).second) closure.push_back(std::move(prod));
      }
      if (closure.size() > kAutClosureLimit) {
        closure_overflow = true;
        return;
      }
    }
  };

  try {
    search.run([&](const Isometry& iso) {
      ++count;
      if (count <= kExplicitAutLimit) report.elements.push_back(iso);
      absorb(iso);
      return true;
    });
  } catch (const CapExceeded&) {
    report.complete = false;
  }
  report.order = count;
  if (count > kExplicitAutLimit) report.elements.clear();
  std::sort(report.elements.begin(), report.elements.end());
  report.closure_verified = report.complete && !closure_overflow && BigInt(closure.size()) == report.order;
  // The trivial group has no generators; its closure is {identity}.
  if (report.complete && report.generators.empty() && count == 1) report.closure_verified = true;

  if (decomposition != nullptr && report.complete) {
    BigInt predicted = 1;
    for (std::size_t t = 0; t < decomposition->isotypes.size(); ++t) {
      const auto& iso_type = decomposition->isotypes[t];
      auto rep = GroupCode::view(decomposition->components[iso_type.representative]);
      if (!rep) throw Error(Errc::precondition, "decomposition components are not group codes");
      const BigInt comp = aut_group(*rep, limits).order;
      report.structure.push_back({t, comp, iso_type.multiplicity});
      BigInt term = 1;
      for (std::size_t k = 0; k < iso_type.multiplicity; ++k) term *= comp;
      predicted *= term * factorial(iso_type.multiplicity);
    }
    report.predicted_order = predicted;
    if (predicted != report.order)
      throw Error(Errc::theorem_violation, "automorphism group order " + report.order.str() +
                                               " differs from the predicted " + predicted.str());
  }
  return report;
}

bool verify_block_preservation(const GroupCode& c, const std::vector<std::vector<std::size_t>>& blocks,
                               const std::vector<std::size_t>& isotype_of, const Isometry& phi) {
  if (!is_group_code_isomorphism(phi, c, c)) throw Error(Errc::precondition, "phi is not an automorphism of the code");
  if (blocks.size() != isotype_of.size()) throw Error(Errc::invalid_input, "one isotype label per block required");
  const Element e = c.alphabet().identity();
  std::vector<std::set<Word>> embedded(blocks.size());
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::vector<char> inside(c.length(), 0);
    for (std::size_t i : blocks[b]) inside[i] = 1;
    for (const auto& w : c.words()) {
      bool ok = true;
      for (std::size_t i = 0; i < c.length() && ok; ++i) ok = inside[i] || w[i] == e;
      if (ok) embedded[b].insert(w);
    }
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::set<Word> image;
    for (const auto& w : embedded[b]) image.insert(phi(w));
    bool matched = false;
    for (std::size_t k = 0; k < blocks.size() && !matched; ++k)
      matched = embedded[k] == image && isotype_of[k] == isotype_of[b];
    if (!matched) return false;
  }
  return true;
}

}  // namespace groupcodes
