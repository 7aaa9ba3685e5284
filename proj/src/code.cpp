#include "groupcodes/code.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "groupcodes/errors.hpp"

namespace groupcodes {

BigInt big_pow(std::size_t base, std::size_t exp) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::uint64_t h = 0x9E3779B97F4A7C15ull ^ w.size();
  for (Element s : w) {
    h ^= s + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Word& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

namespace {

void check_length(const Word& x, const Word& y) {
  if (x.size() != y.size())
    throw Error(Errc::incompatible_words,
                "word lengths " + std::to_string(x.size()) + " and " + std::to_string(y.size()) + " differ");
}

void check_same_alphabet(const Code& c, const Code& d) {
  if (!(c.alphabet() == d.alphabet()))
    throw Error(Errc::incompatible_alphabets, c.alphabet().label() + " vs " + d.alphabet().label());
}

void check_coords(const Code& c, std::span<const std::size_t> coords) {
  if (coords.empty()) throw Error(Errc::invalid_index_set, "empty coordinate set");
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= c.length())
      throw Error(Errc::invalid_index_set, "coordinate " + std::to_string(coords[i] + 1) + " outside 1.." +
                                               std::to_string(c.length()));
    if (i > 0 && coords[i] <= coords[i - 1])
      throw Error(Errc::invalid_index_set, "coordinates must be strictly increasing");
  }
}

}  // namespace

Code Code::from_words(AlphabetPtr alphabet, std::size_t length, std::vector<Word> words) {
  if (!alphabet) throw Error(Errc::invalid_input, "missing alphabet");
  if (words.empty()) throw Error(Errc::invalid_input, "a code must be a non-empty set of words");
  for (const auto& w : words) {
    if (w.size() != length)
      throw Error(Errc::incompatible_words, "word " + to_string(w) + " does not have length " + std::to_string(length));
    for (Element s : w)
      if (s >= alphabet->order())
        throw Error(Errc::invalid_input, "word " + to_string(w) + " has a symbol outside the alphabet of order " +
                                             std::to_string(alphabet->order()));
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  Code c;
  c.alphabet_ = std::move(alphabet);
  c.length_ = length;
  c.words_ = std::move(words);
  return c;
}

bool Code::contains(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

bool operator==(const Code& a, const Code& b) {
  return a.length_ == b.length_ && *a.alphabet_ == *b.alphabet_ && a.words_ == b.words_;
}

Word multiply(const FiniteGroup& g, const Word& x, const Word& y) {
  check_length(x, y);
  Word r = x;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = g.mul(x[i], y[i]);
  return r;
}

Word invert(const FiniteGroup& g, const Word& x) {
  Word r = x;
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = g.inv(x[i]);
  return r;
}

void GroupCode::compute_generators() {
  const auto& g = *alphabet_;
  generators_.clear();
  std::unordered_set<Word, WordHash> span{Word::filled(length_, g.identity())};
  for (const auto& w : words_) {
    if (span.contains(w)) continue;
    generators_.push_back(w);
    // Close the span under right multiplication by all generators.
    std::vector<Word> frontier(span.begin(), span.end());
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (const auto& gen : generators_) {
        Word y = multiply(g, frontier[i], gen);
        if (span.insert(y).second) frontier.push_back(std::move(y));
      }
      if (span.size() > words_.size()) return;  // not closed; caller reports
    }
  }
}

GroupCode GroupCode::from_code(const Code& c) {
  GroupCode gc;
  static_cast<Code&>(gc) = c;
  const auto& g = *c.alphabet_;
  const Word e = Word::filled(c.length_, g.identity());
  bool closed = c.contains(e);
  if (closed) {
    gc.compute_generators();
    closed = true;
    for (const auto& w : c.words_) {
      for (const auto& gen : gc.generators_) {
        if (!c.contains(multiply(g, w, gen))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
  }
  if (!closed) {
    if (!c.contains(e))
      throw Error(Errc::closure_violation, "identity word " + to_string(e) + " is not a codeword");
    for (const auto& x : c.words_)
      for (const auto& y : c.words_)
        if (!c.contains(multiply(g, x, y)))
          throw Error(Errc::closure_violation,
                      "product of " + to_string(x) + " and " + to_string(y) + " is not a codeword");
    throw Error(Errc::closure_violation, "set is not a subgroup");
  }
  gc.group_ = true;
  return gc;
}

GroupCode GroupCode::generate(AlphabetPtr alphabet, std::size_t length, std::span<const Word> generators) {
  if (!alphabet) throw Error(Errc::invalid_input, "missing alphabet");
  const auto& g = *alphabet;
  for (const auto& w : generators) {
    if (w.size() != length)
      throw Error(Errc::incompatible_words, "generator " + to_string(w) + " does not have length " +
                                                std::to_string(length));
    for (Element s : w)
      if (s >= g.order()) throw Error(Errc::invalid_input, "generator " + to_string(w) + " has a symbol out of range");
  }
  std::unordered_set<Word, WordHash> seen{Word::filled(length, g.identity())};
  std::vector<Word> members(seen.begin(), seen.end());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& gen : generators) {
      Word y = multiply(g, members[i], gen);
      if (seen.insert(y).second) members.push_back(std::move(y));
    }
  }
  GroupCode gc;
  static_cast<Code&>(gc) = Code::from_words(std::move(alphabet), length, std::move(members));
  gc.group_ = true;
  gc.compute_generators();
  return gc;
}

std::optional<GroupCode> GroupCode::view(const Code& c) {
  if (!c.is_group_code()) return std::nullopt;
  GroupCode gc;
  static_cast<Code&>(gc) = c;
  return gc;
}

std::size_t hamming_distance(const Word& x, const Word& y) {
  check_length(x, y);
  std::size_t d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) d += x[i] != y[i];
  return d;
}

std::size_t weight(const Word& x, const Word& x0) { return hamming_distance(x, x0); }

std::size_t min_distance_pairwise(const Code& c) {
  std::size_t best = c.length() + 1;
  const auto& ws = c.words();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) best = std::min(best, hamming_distance(ws[i], ws[j]));
  return best;
}

std::size_t min_weight_nonidentity(const GroupCode& c) {
  const Word e = c.identity_word();
  std::size_t best = c.length() + 1;
  for (const auto& w : c.words())
    if (w != e) best = std::min(best, weight(w, e));
  return best;
}

std::size_t min_distance(const Code& c) {
  if (auto gc = GroupCode::view(c)) return min_weight_nonidentity(*gc);
  return min_distance_pairwise(c);
}

std::vector<std::size_t> weight_distribution(const GroupCode& c) {
  std::vector<std::size_t> dist(c.length() + 1, 0);
  const Word e = c.identity_word();
  for (const auto& w : c.words()) ++dist[weight(w, e)];
  return dist;
}

std::vector<std::size_t> distance_distribution(const Code& c) {
  std::vector<std::size_t> dist(c.length() + 1, 0);
  const auto& ws = c.words();
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (i != j) ++dist[hamming_distance(ws[i], ws[j])];
  return dist;
}

Code projection(const Code& c, std::span<const std::size_t> coords) {
  check_coords(c, coords);
  std::vector<Word> words;
  words.reserve(c.size());
  for (const auto& w : c.words()) {
    std::vector<Element> s(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) s[i] = w[coords[i]];
    words.emplace_back(std::move(s));
  }
  Code p = Code::from_words(c.alphabet_ptr(), coords.size(), std::move(words));
  if (c.is_group_code()) return GroupCode::from_code(p);
  return p;
}

std::size_t projection_size(const Code& c, std::span<const std::size_t> coords) {
  check_coords(c, coords);
  std::unordered_set<Word, WordHash> seen;
  for (const auto& w : c.words()) {
    std::vector<Element> s(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) s[i] = w[coords[i]];
    seen.emplace(std::move(s));
  }
  return seen.size();
}

Code direct_sum(const Code& c, const Code& d) {
  check_same_alphabet(c, d);
  std::vector<Word> words;
  words.reserve(c.size() * d.size());
  for (const auto& x : c.words()) {
    for (const auto& y : d.words()) {
      std::vector<Element> s(x.begin(), x.end());
      s.insert(s.end(), y.begin(), y.end());
      words.emplace_back(std::move(s));
    }
  }
  Code sum = Code::from_words(c.alphabet_ptr(), c.length() + d.length(), std::move(words));
  if (c.is_group_code() && d.is_group_code()) return GroupCode::from_code(sum);
  return sum;
}

Code direct_sum(std::span<const Code> parts) {
  if (parts.empty()) throw Error(Errc::invalid_input, "direct sum of no codes");
  Code acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = direct_sum(acc, parts[i]);
  return acc;
}

GroupCode full_space(AlphabetPtr g, std::size_t n) {
  std::vector<Word> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (Element s : g->generators()) {
      Word w = Word::filled(n, g->identity());
      w[i] = s;
      gens.push_back(w);
    }
  }
  return GroupCode::generate(std::move(g), n, gens);
}

ParameterReport parameters(const Code& c) {
  ParameterReport r;
  r.q = c.q();
  r.length = c.length();
  r.cardinality = c.size();
  r.min_distance = min_distance(c);
  r.correction_capacity = (r.min_distance - 1) / 2;
  if (r.q > 1) {
    r.dimension = std::log(static_cast<double>(r.cardinality)) / std::log(static_cast<double>(r.q));
    BigInt p = 1;
    for (std::size_t k = 0; p <= r.cardinality; ++k, p *= r.q) {
      if (p == r.cardinality) {
        r.exact_dimension = k;
        r.dimension = static_cast<double>(k);
        break;
      }
    }
  } else {
    r.exact_dimension = 0;
  }
  // Singleton: |C| <= q^(n-d+1); vacuous for the singleton sentinel d = n+1.
  if (r.min_distance <= r.length) r.singleton_bound_holds = BigInt(r.cardinality) <= big_pow(r.q, r.length - r.min_distance + 1);
  return r;
}

}  // namespace groupcodes
