#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "groupcodes/finite_group.hpp"

namespace groupcodes {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_pow(std::size_t base, std::size_t exp);

/// A point of A^n: a fixed-length vector of symbol indices.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Element> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Element> symbols) : symbols_(symbols) {}
  static Word filled(std::size_t n, Element value) { return Word(std::vector<Element>(n, value)); }

  std::size_t size() const noexcept { return symbols_.size(); }
  Element operator[](std::size_t i) const noexcept { return symbols_[i]; }
  Element& operator[](std::size_t i) noexcept { return symbols_[i]; }
  std::span<const Element> symbols() const noexcept { return symbols_; }
  auto begin() const noexcept { return symbols_.begin(); }
  auto end() const noexcept { return symbols_.end(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Element> symbols_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

std::string to_string(const Word& w);

using AlphabetPtr = std::shared_ptr<const FiniteGroup>;

inline AlphabetPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

/// A non-empty set of words of common length over one alphabet. Words are kept
/// sorted lexicographically and deduplicated. Codes built through GroupCode
/// remember that they are subgroups (and a generating set), and keep that
/// knowledge when handled as plain codes.
class Code {
 public:
  /// Validates symbols and lengths, sorts and deduplicates. Throws
  /// Errc::invalid_input for an empty word list.
  static Code from_words(AlphabetPtr alphabet, std::size_t length, std::vector<Word> words);
  static Code from_words(const FiniteGroup& alphabet, std::size_t length, std::vector<Word> words) {
    return from_words(share(alphabet), length, std::move(words));
  }

  const FiniteGroup& alphabet() const noexcept { return *alphabet_; }
  const AlphabetPtr& alphabet_ptr() const noexcept { return alphabet_; }
  std::size_t q() const noexcept { return alphabet_->order(); }
  std::size_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return words_.size(); }
  const std::vector<Word>& words() const noexcept { return words_; }
  const Word& operator[](std::size_t i) const noexcept { return words_[i]; }
  bool contains(const Word& w) const;

  bool is_group_code() const noexcept { return group_; }
  /// Greedy generating set (group codes only; empty otherwise).
  const std::vector<Word>& generators() const noexcept { return generators_; }

  /// Same alphabet table, length, and word set.
  friend bool operator==(const Code& a, const Code& b);

 protected:
  Code() = default;

  AlphabetPtr alphabet_;
  std::size_t length_ = 0;
  std::vector<Word> words_;
  bool group_ = false;
  std::vector<Word> generators_;

  friend class GroupCode;
};

/// A subgroup of G^n.
class GroupCode : public Code {
 public:
  /// Checks identity membership and closure. Throws Errc::closure_violation
  /// naming a witness pair (x, y) whose product is missing.
  static GroupCode from_code(const Code& c);
  /// Smallest subgroup of G^n containing `generators`.
  static GroupCode generate(AlphabetPtr alphabet, std::size_t length, std::span<const Word> generators);
  static GroupCode generate(const FiniteGroup& alphabet, std::size_t length, std::span<const Word> generators) {
    return generate(share(alphabet), length, generators);
  }
  /// Wraps a code already known to be a group code (is_group_code() true).
  static std::optional<GroupCode> view(const Code& c);

  Word identity_word() const { return Word::filled(length_, alphabet_->identity()); }

 private:
  GroupCode() = default;
  void compute_generators();
};

inline GroupCode generate_group_code(AlphabetPtr g, std::size_t n, std::span<const Word> generators) {
  return GroupCode::generate(std::move(g), n, generators);
}
inline GroupCode generate_group_code(const FiniteGroup& g, std::size_t n, std::initializer_list<Word> generators) {
  return GroupCode::generate(g, n, std::span<const Word>(generators.begin(), generators.size()));
}

/// Componentwise product and inverse in G^n.
Word multiply(const FiniteGroup& g, const Word& x, const Word& y);
Word invert(const FiniteGroup& g, const Word& x);

std::size_t hamming_distance(const Word& x, const Word& y);
/// Weight of x relative to x0, i.e. d(x, x0).
std::size_t weight(const Word& x, const Word& x0);

/// Minimum distance over distinct codeword pairs; n + 1 for a singleton code.
/// Group codes use the weight scan, other codes a pairwise scan.
std::size_t min_distance(const Code& c);
std::size_t min_distance_pairwise(const Code& c);
std::size_t min_weight_nonidentity(const GroupCode& c);

/// Number of codewords at each weight 0..n relative to the identity word.
std::vector<std::size_t> weight_distribution(const GroupCode& c);
/// Number of ordered pairs (x, y), x != y, at each distance 0..n.
std::vector<std::size_t> distance_distribution(const Code& c);

/// Restriction to coordinates `coords` (0-based, strictly increasing,
/// non-empty). Group codes project to group codes.
Code projection(const Code& c, std::span<const std::size_t> coords);
inline Code projection(const Code& c, std::initializer_list<std::size_t> coords) {
  return projection(c, std::span<const std::size_t>(coords.begin(), coords.size()));
}
/// Cardinality of the projection without materialising it.
std::size_t projection_size(const Code& c, std::span<const std::size_t> coords);

/// Concatenated pairs. Group codes sum to a group code.
Code direct_sum(const Code& c, const Code& d);
Code direct_sum(std::span<const Code> parts);

/// The full space A^n (group code).
GroupCode full_space(AlphabetPtr g, std::size_t n);

struct ParameterReport {
  std::size_t q = 0;
  std::size_t length = 0;
  std::uint64_t cardinality = 0;
  /// log_q |C|, always present.
  double dimension = 0.0;
  /// Set when |C| is an exact power of q.
  std::optional<std::size_t> exact_dimension;
  std::size_t min_distance = 0;
  std::size_t correction_capacity = 0;
  bool singleton_bound_holds = true;
};

ParameterReport parameters(const Code& c);

}  // namespace groupcodes
