#include "groupcodes/finite_group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "groupcodes/errors.hpp"

namespace groupcodes {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_flat(std::size_t order, std::vector<Element> table, std::string label, Kind kind) {
  FiniteGroup g;
  g.order_ = order;
  g.table_ = std::move(table);
  g.label_ = std::move(label);
  g.kind_ = kind;

  const auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(g.table_[a * order + b]); };

  // Latin square: every row and column is a permutation.
  std::vector<char> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[at(a, b)]) {
        throw Error(Errc::not_a_group, "latin square: row " + std::to_string(a) + " repeats element " +
                                           std::to_string(at(a, b)) + " (witness " + triple(a, b, at(a, b)) + ")");
      }
      seen[at(a, b)] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[at(b, a)]) {
        throw Error(Errc::not_a_group, "latin square: column " + std::to_string(a) + " repeats element " +
                                           std::to_string(at(b, a)) + " (witness " + triple(b, a, at(b, a)) + ")");
      }
      seen[at(b, a)] = 1;
    }
  }

  std::size_t e = order;
  for (std::size_t c = 0; c < order && e == order; ++c) {
    bool ok = true;
    for (std::size_t a = 0; a < order && ok; ++a) ok = at(c, a) == a && at(a, c) == a;
    if (ok) e = c;
  }
  if (e == order) throw Error(Errc::not_a_group, "identity: no two-sided identity element");
  g.identity_ = static_cast<Element>(e);

  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b)
      for (std::size_t c = 0; c < order; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw Error(Errc::not_a_group, "associativity fails at witness triple " + triple(a, b, c));

  g.inverse_.assign(order, 0);
  for (std::size_t a = 0; a < order; ++a) {
    std::size_t b = 0;
    while (b < order && at(a, b) != e) ++b;
    if (b == order || at(b, a) != e)
      throw Error(Errc::not_a_group, "inverse: element " + std::to_string(a) + " has no two-sided inverse");
    g.inverse_[a] = static_cast<Element>(b);
  }
  return g;
}

FiniteGroup cyclic_group(std::size_t m) {
  if (m == 0) throw Error(Errc::invalid_order, "cyclic group order must be positive");
  if (m > kMaxGroupOrder) throw Error(Errc::invalid_order, "group order above " + std::to_string(kMaxGroupOrder));
  std::vector<Element> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = static_cast<Element>((a + b) % m);
  auto g = FiniteGroup::from_flat(m, std::move(table), "Z/" + std::to_string(m), FiniteGroup::Kind::cyclic);
  return g;
}

FiniteGroup product_group(std::span<const FiniteGroup> factors) {
  if (factors.empty()) throw Error(Errc::invalid_input, "product of an empty factor list");
  std::size_t order = 1;
  for (const auto& f : factors) {
    order *= f.order();
    if (order > kMaxGroupOrder)
      throw Error(Errc::invalid_order, "product order above " + std::to_string(kMaxGroupOrder));
  }
  const std::size_t k = factors.size();
  std::vector<std::vector<Element>> digits(order, std::vector<Element>(k));
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t rest = x;
    for (std::size_t i = k; i-- > 0;) {
      digits[x][i] = static_cast<Element>(rest % factors[i].order());
      rest /= factors[i].order();
    }
  }
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i].order() + factors[i].mul(digits[a][i], digits[b][i]);
      table[a * order + b] = static_cast<Element>(idx);
    }
  }
  std::string label;
  for (std::size_t i = 0; i < k; ++i) label += (i ? " x " : "") + factors[i].label();
  auto g = FiniteGroup::from_flat(order, std::move(table), std::move(label), FiniteGroup::Kind::product);
  g.factors_.assign(factors.begin(), factors.end());
  return g;
}

FiniteGroup group_from_table(const std::vector<std::vector<std::size_t>>& table, std::string label) {
  const std::size_t q = table.size();
  if (q == 0) throw Error(Errc::invalid_order, "empty multiplication table");
  if (q > kMaxGroupOrder) throw Error(Errc::invalid_order, "group order above " + std::to_string(kMaxGroupOrder));
  std::vector<Element> flat(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    if (table[a].size() != q)
      throw Error(Errc::not_a_group, "table row " + std::to_string(a) + " has length " +
                                         std::to_string(table[a].size()) + ", expected " + std::to_string(q));
    for (std::size_t b = 0; b < q; ++b) {
      if (table[a][b] >= q)
        throw Error(Errc::not_a_group, "closure: entry " + triple(a, b, table[a][b]) + " outside 0.." +
                                           std::to_string(q - 1));
      flat[a * q + b] = static_cast<Element>(table[a][b]);
    }
  }
  return FiniteGroup::from_flat(q, std::move(flat), std::move(label), FiniteGroup::Kind::table);
}

std::vector<std::vector<std::size_t>> FiniteGroup::table_rows() const {
  std::vector<std::vector<std::size_t>> rows(order_, std::vector<std::size_t>(order_));
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = 0; b < order_; ++b) rows[a][b] = table_[a * order_ + b];
  return rows;
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

std::vector<Element> FiniteGroup::subgroup_closure(std::span<const Element> gens) const {
  std::vector<char> in(order_, 0);
  std::vector<Element> members{identity_};
  in[identity_] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : gens) {
      const Element y = mul(members[i], g);
      if (!in[y]) {
        in[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> FiniteGroup::generators_of(std::span<const Element> subgroup) const {
  std::vector<Element> gens;
  std::vector<Element> current{identity_};
  for (Element x : subgroup) {
    if (std::binary_search(current.begin(), current.end(), x)) continue;
    gens.push_back(x);
    current = subgroup_closure(gens);
  }
  return gens;
}

std::vector<Element> FiniteGroup::generators() const {
  std::vector<Element> all(order_);
  std::iota(all.begin(), all.end(), Element{0});
  return generators_of(all);
}

std::vector<Element> decode_product_element(const FiniteGroup& product, Element x) {
  const auto& fs = product.factors();
  std::vector<Element> parts(fs.size());
  std::size_t rest = x;
  for (std::size_t i = fs.size(); i-- > 0;) {
    parts[i] = static_cast<Element>(rest % fs[i].order());
    rest /= fs[i].order();
  }
  return parts;
}

Element encode_product_element(const FiniteGroup& product, std::span<const Element> parts) {
  const auto& fs = product.factors();
  if (parts.size() != fs.size()) throw Error(Errc::invalid_input, "wrong number of product components");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (parts[i] >= fs[i].order()) throw Error(Errc::invalid_input, "product component out of range");
    idx = idx * fs[i].order() + parts[i];
  }
  return static_cast<Element>(idx);
}

namespace {

constexpr Element kUnset = 0xFF;

// Backtracking over images of the generators of `from`. The partial map is
// kept closed: after assigning a generator image, every product x*g with x
// already mapped and g an assigned generator is forced, which detects
// non-homomorphic or non-injective assignments immediately.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& g, std::span<const Element> from, std::span<const Element> to)
      : g_(g), gens_(g.generators_of(from)), to_(to.begin(), to.end()), from_(from.begin(), from.end()),
        candidates_by_order_(g.order() + 1) {
    for (Element y : to_) candidates_by_order_[g.element_order(y)].push_back(y);
  }

  std::vector<std::vector<Element>> run() {
    if (from_.size() != to_.size()) return {};
    std::vector<Element> map(g_.order(), kUnset);
    std::vector<char> used(g_.order(), 0);
    map[g_.identity()] = g_.identity();
    used[g_.identity()] = 1;
    std::vector<Element> domain{g_.identity()};
    recurse(0, map, used, domain);
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  void recurse(std::size_t k, std::vector<Element>& map, std::vector<char>& used, std::vector<Element>& domain) {
    if (k == gens_.size()) {
      results_.push_back(extend(map));
      return;
    }
    const Element gen = gens_[k];
    for (Element img : candidates_by_order_[g_.element_order(gen)]) {
      auto map2 = map;
      auto used2 = used;
      auto domain2 = domain;
      if (assign(k, gen, img, map2, used2, domain2)) recurse(k + 1, map2, used2, domain2);
    }
  }

  bool assign(std::size_t k, Element gen, Element img, std::vector<Element>& map, std::vector<char>& used,
              std::vector<Element>& domain) const {
    if (map[gen] != kUnset) return map[gen] == img;
    if (used[img]) return false;
    std::vector<std::pair<Element, Element>> assigned;  // generator -> image
    for (std::size_t i = 0; i < k; ++i) assigned.emplace_back(gens_[i], map[gens_[i]]);
    assigned.emplace_back(gen, img);
    // Re-close the domain under right multiplication by all assigned generators.
    for (std::size_t i = 0; i < domain.size(); ++i) {
      for (auto [s, t] : assigned) {
        const Element x = g_.mul(domain[i], s);
        const Element y = g_.mul(map[domain[i]], t);
        if (map[x] == kUnset) {
          if (used[y] || !std::binary_search(to_.begin(), to_.end(), y)) return false;
          map[x] = y;
          used[y] = 1;
          domain.push_back(x);
        } else if (map[x] != y) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Element> extend(const std::vector<Element>& map) const {
    std::vector<Element> full = map;
    std::vector<char> used(g_.order(), 0);
    for (Element x : from_) used[map[x]] = 1;
    Element next = 0;
    for (std::size_t x = 0; x < g_.order(); ++x) {
      if (full[x] != kUnset) continue;
      while (used[next]) ++next;
      full[x] = next;
      used[next] = 1;
    }
    return full;
  }

  const FiniteGroup& g_;
  std::vector<Element> gens_;
  std::vector<Element> to_;
  std::vector<Element> from_;
  std::vector<std::vector<Element>> candidates_by_order_;
  std::vector<std::vector<Element>> results_;
};

}  // namespace

std::vector<std::vector<Element>> subgroup_isomorphisms(const FiniteGroup& g, std::span<const Element> from,
                                                        std::span<const Element> to) {
  return IsoSearch(g, from, to).run();
}

std::vector<GroupAutomorphism> automorphisms(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw Error(Errc::resource_limit, "automorphism search capped at order " + std::to_string(max_order) +
                                          ", group has order " + std::to_string(g.order()));
  std::vector<Element> all(g.order());
  std::iota(all.begin(), all.end(), Element{0});
  std::vector<GroupAutomorphism> out;
  for (auto& m : subgroup_isomorphisms(g, all, all)) out.push_back({std::move(m)});
  return out;
}

}  // namespace groupcodes
