#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace groupcodes {

/// Alphabet symbols are dense indices 0..q-1.
using Element = std::uint8_t;

inline constexpr std::size_t kMaxGroupOrder = 128;
inline constexpr std::size_t kDefaultAutomorphismCap = 16;

/// A finite group stored as its multiplication table. Instances are validated
/// when built and never change afterwards.
class FiniteGroup {
 public:
  enum class Kind { cyclic, product, table };

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const noexcept { return table_[a * order_ + b]; }
  Element inv(Element a) const noexcept { return inverse_[a]; }

  const std::string& label() const noexcept { return label_; }
  Kind kind() const noexcept { return kind_; }
  /// Only meaningful for Kind::product.
  const std::vector<FiniteGroup>& factors() const noexcept { return factors_; }

  std::vector<std::vector<std::size_t>> table_rows() const;
  const std::vector<Element>& inverses() const noexcept { return inverse_; }

  bool is_abelian() const;
  std::size_t element_order(Element a) const;

  /// Greedy generating set: repeatedly adds the smallest element outside the
  /// subgroup generated so far.
  std::vector<Element> generators() const;
  /// Greedy generating set of the subgroup whose (sorted) elements are given.
  std::vector<Element> generators_of(std::span<const Element> subgroup) const;
  /// Sorted elements of the subgroup generated by `gens`.
  std::vector<Element> subgroup_closure(std::span<const Element> gens) const;

  /// Equal tables (labels are ignored).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;
  static FiniteGroup from_flat(std::size_t order, std::vector<Element> table, std::string label, Kind kind);

  friend FiniteGroup cyclic_group(std::size_t m);
  friend FiniteGroup product_group(std::span<const FiniteGroup> factors);
  friend FiniteGroup group_from_table(const std::vector<std::vector<std::size_t>>& table, std::string label);

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::string label_;
  Kind kind_ = Kind::table;
  std::vector<FiniteGroup> factors_;
};

/// Z/m under addition.
FiniteGroup cyclic_group(std::size_t m);

/// Direct product. Element (a_1,...,a_k) is encoded mixed-radix with the first
/// factor most significant: index = ((a_1 * q_2 + a_2) * q_3 + a_3) ...
FiniteGroup product_group(std::span<const FiniteGroup> factors);
inline FiniteGroup product_group(std::initializer_list<FiniteGroup> factors) {
  return product_group(std::span<const FiniteGroup>(factors.begin(), factors.size()));
}

/// Validates closure, associativity, identity and inverses. Throws
/// Errc::not_a_group naming the failed axiom and a witness.
FiniteGroup group_from_table(const std::vector<std::vector<std::size_t>>& table, std::string label);

/// Mixed-radix helpers for product groups.
std::vector<Element> decode_product_element(const FiniteGroup& product, Element x);
Element encode_product_element(const FiniteGroup& product, std::span<const Element> parts);

struct GroupAutomorphism {
  std::vector<Element> mapping;

  friend bool operator==(const GroupAutomorphism&, const GroupAutomorphism&) = default;
  friend auto operator<=>(const GroupAutomorphism&, const GroupAutomorphism&) = default;
};

/// All automorphisms, sorted by mapping. Backtracks on images of the greedy
/// generating set. Throws Errc::resource_limit above `max_order`.
std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, std::size_t max_order = kDefaultAutomorphismCap);

/// All group isomorphisms between two subgroups `from` and `to` of `g` (sorted
/// element lists). Each result is a bijection of the whole group: it agrees
/// with the isomorphism on `from` and sends the remaining elements, in
/// increasing order, onto the elements outside `to` in increasing order.
std::vector<std::vector<Element>> subgroup_isomorphisms(const FiniteGroup& g, std::span<const Element> from,
                                                        std::span<const Element> to);

}  // namespace groupcodes
