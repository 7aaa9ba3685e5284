#include "groupcodes/isometry.hpp"

#include <algorithm>
#include <numeric>

#include "groupcodes/errors.hpp"

namespace groupcodes {

namespace {

bool is_bijection(const std::vector<Element>& m, std::size_t q) {
  if (m.size() != q) return false;
  std::vector<char> seen(q, 0);
  for (Element x : m) {
    if (x >= q || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

void check_word(const Isometry& iso, const Word& x) {
  if (x.size() != iso.length())
    throw Error(Errc::incompatible_words, "isometry of length " + std::to_string(iso.length()) +
                                              " applied to word of length " + std::to_string(x.size()));
}

}  // namespace

Equivalence Equivalence::identity(std::size_t n) {
  Equivalence e;
  e.sigma.resize(n);
  std::iota(e.sigma.begin(), e.sigma.end(), std::size_t{0});
  return e;
}

Equivalence Equivalence::from_one_based(const std::vector<std::size_t>& images) {
  Equivalence e;
  for (std::size_t v : images) {
    if (v == 0) throw Error(Errc::invalid_input, "1-based permutation contains 0");
    e.sigma.push_back(v - 1);
  }
  if (!e.is_permutation()) throw Error(Errc::invalid_input, "not a permutation of 1..n");
  return e;
}

std::vector<std::size_t> Equivalence::one_based() const {
  std::vector<std::size_t> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = sigma[i] + 1;
  return out;
}

Equivalence Equivalence::inverse() const {
  Equivalence e;
  e.sigma.resize(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) e.sigma[sigma[i]] = i;
  return e;
}

bool Equivalence::is_permutation() const {
  std::vector<char> seen(sigma.size(), 0);
  for (std::size_t v : sigma) {
    if (v >= sigma.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Configuration Configuration::identity(std::size_t q, std::size_t n) {
  std::vector<Element> id(q);
  std::iota(id.begin(), id.end(), Element{0});
  return Configuration{std::vector<std::vector<Element>>(n, id)};
}

Configuration Configuration::reindexed(const Equivalence& s) const {
  Configuration out;
  out.maps.reserve(maps.size());
  for (std::size_t i = 0; i < maps.size(); ++i) out.maps.push_back(maps[s.sigma[i]]);
  return out;
}

Isometry::Isometry(Configuration config, Equivalence equiv) : config_(std::move(config)), equiv_(std::move(equiv)) {
  if (config_.size() != equiv_.size())
    throw Error(Errc::invalid_input, "configuration and equivalence lengths differ");
  if (!equiv_.is_permutation()) throw Error(Errc::invalid_input, "sigma is not a permutation");
  q_ = config_.maps.empty() ? 0 : config_.maps[0].size();
  for (const auto& m : config_.maps)
    if (!is_bijection(m, q_)) throw Error(Errc::invalid_input, "configuration entry is not an alphabet bijection");
}

Isometry Isometry::identity(std::size_t q, std::size_t n) {
  auto iso = Isometry(Configuration::identity(q, n), Equivalence::identity(n));
  iso.q_ = q;
  return iso;
}

Isometry Isometry::from_equivalence(std::size_t q, Equivalence equiv) {
  const std::size_t n = equiv.size();
  auto iso = Isometry(Configuration::identity(q, n), std::move(equiv));
  iso.q_ = q;
  return iso;
}

Word Isometry::operator()(const Word& x) const {
  check_word(*this, x);
  Word y = x;
  for (std::size_t j = 0; j < x.size(); ++j) y[j] = config_.maps[j][x[equiv_.sigma[j]]];
  return y;
}

Isometry Isometry::inverse() const {
  // x_i = f_{s^-1(i)}^{-1}(y_{s^-1(i)})
  Equivalence inv = equiv_.inverse();
  Configuration cfg;
  cfg.maps.resize(length());
  for (std::size_t i = 0; i < length(); ++i) {
    const auto& f = config_.maps[inv.sigma[i]];
    std::vector<Element> finv(q_);
    for (std::size_t a = 0; a < q_; ++a) finv[f[a]] = static_cast<Element>(a);
    cfg.maps[i] = std::move(finv);
  }
  Isometry r(std::move(cfg), std::move(inv));
  r.q_ = q_;
  return r;
}

Word apply_pull(const Isometry& iso, const Word& x) { return iso(x); }

Word apply_push(const Equivalence& equiv, const Word& x) {
  if (x.size() != equiv.size())
    throw Error(Errc::incompatible_words, "equivalence of length " + std::to_string(equiv.size()) +
                                              " applied to word of length " + std::to_string(x.size()));
  Word y = x;
  for (std::size_t t = 0; t < x.size(); ++t) y[equiv.sigma[t]] = x[t];
  return y;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  if (a.length() != b.length() || a.q() != b.q())
    throw Error(Errc::incompatible_words, "composing isometries of different shapes");
  // (a o b)(x)_j = a.f_j(b.f_{a.s(j)}(x_{b.s(a.s(j))}))
  const std::size_t n = a.length();
  Equivalence s;
  s.sigma.resize(n);
  Configuration cfg;
  cfg.maps.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = a.equiv().sigma[j];
    s.sigma[j] = b.equiv().sigma[k];
    const auto& fa = a.config().maps[j];
    const auto& fb = b.config().maps[k];
    std::vector<Element> f(a.q());
    for (std::size_t x = 0; x < a.q(); ++x) f[x] = fa[fb[x]];
    cfg.maps[j] = std::move(f);
  }
  if (n == 0) return a;
  return Isometry(std::move(cfg), std::move(s));
}

Code apply_to_code(const Isometry& iso, const Code& c) {
  if (iso.length() != c.length() || iso.q() != c.q())
    throw Error(Errc::incompatible_words, "isometry shape does not match the code");
  std::vector<Word> out;
  out.reserve(c.size());
  for (const auto& w : c.words()) out.push_back(iso(w));
  return Code::from_words(c.alphabet_ptr(), c.length(), std::move(out));
}

Code apply_push_to_code(const Equivalence& equiv, const Code& c) {
  std::vector<Word> out;
  out.reserve(c.size());
  for (const auto& w : c.words()) out.push_back(apply_push(equiv, w));
  return Code::from_words(c.alphabet_ptr(), c.length(), std::move(out));
}

BigInt isometry_group_order(std::size_t q, std::size_t n) {
  if (q == 0 || n == 0) throw Error(Errc::invalid_input, "isometry group order needs q >= 1 and n >= 1");
  BigInt qf = 1;
  for (std::size_t i = 2; i <= q; ++i) qf *= i;
  BigInt r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= qf;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

IsometryEnumerator::IsometryEnumerator(std::size_t q, std::size_t n, std::uint64_t cap) : q_(q), n_(n) {
  if (isometry_group_order(q, n) > cap)
    throw Error(Errc::resource_limit, "enumerating " + isometry_group_order(q, n).str() +
                                          " isometries exceeds the cap of " + std::to_string(cap));
  sigma_ = Equivalence::identity(n).sigma;
  maps_ = Configuration::identity(q, n).maps;
}

bool IsometryEnumerator::advance() {
  for (std::size_t i = n_; i-- > 0;) {
    if (std::next_permutation(maps_[i].begin(), maps_[i].end())) return true;
    // next_permutation wrapped maps_[i] back to the identity; carry.
  }
  return std::next_permutation(sigma_.begin(), sigma_.end());
}

std::optional<Isometry> IsometryEnumerator::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  auto iso = Isometry(Configuration{maps_}, Equivalence{sigma_});
  return iso;
}

}  // namespace groupcodes
