#include "groupcodes/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "groupcodes/classify.hpp"
#include "groupcodes/corpus.hpp"
#include "groupcodes/cyclic.hpp"
#include "groupcodes/decompose.hpp"
#include "groupcodes/errors.hpp"
#include "groupcodes/isometry.hpp"
#include "groupcodes/isomorphy.hpp"

namespace groupcodes::selftest {

using corpus::Rng;

std::size_t point_index(const Word& w, std::size_t q) {
  std::size_t idx = 0;
  for (Element s : w) idx = idx * q + s;
  return idx;
}

Word point_word(std::size_t index, std::size_t q, std::size_t n) {
  Word w = Word::filled(n, 0);
  for (std::size_t t = n; t > 0; --t) {
    w[t - 1] = static_cast<Element>(index % q);
    index /= q;
  }
  return w;
}

std::vector<std::vector<std::size_t>> brute_force_isometries(std::size_t q, std::size_t n) {
  std::size_t points = 1;
  for (std::size_t i = 0; i < n; ++i) points *= q;
  std::vector<Word> words;
  for (std::size_t p = 0; p < points; ++p) words.push_back(point_word(p, q, n));
  std::vector<std::vector<std::size_t>> dist(points, std::vector<std::size_t>(points));
  for (std::size_t a = 0; a < points; ++a)
    for (std::size_t b = 0; b < points; ++b) dist[a][b] = hamming_distance(words[a], words[b]);

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> image(points);
  std::vector<bool> used(points, false);
  std::function<void(std::size_t)> extend = [&](std::size_t p) {
    if (p == points) {
      out.push_back(image);
      return;
    }
    for (std::size_t v = 0; v < points; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t r = 0; r < p && ok; ++r) ok = dist[v][image[r]] == dist[p][r];
      if (!ok) continue;
      used[v] = true;
      image[p] = v;
      extend(p + 1);
      used[v] = false;
    }
  };
  extend(0);
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::size_t violations = 0;

  void violate(const std::string& what) {
    if (violations < 3) detail << "violation: " << what << "; ";
    ++violations;
    pass = false;
  }
};

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::size_t> complement(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) out.push_back(i);
  return out;
}

bool exhaustive_indecomposable(const Code& c) {
  DecomposeOptions opts;
  opts.use_certificates = false;
  return !is_decomposable(c, opts).has_value();
}

// Criterion 1.
void z4_projection_table(Outcome& o, const Options&) {
  const GroupCode c = corpus::z4_example();
  const std::set<Word> expected{{0, 0, 0}, {2, 0, 0}, {1, 2, 1}, {3, 2, 1}, {2, 0, 2}, {0, 0, 2}, {3, 2, 3}, {1, 2, 3}};
  if (std::set<Word>(c.words().begin(), c.words().end()) != expected) o.violate("codeword list differs");
  const std::pair<std::size_t, std::size_t> table[3] = {{4, 4}, {2, 8}, {4, 4}};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t j[1] = {i};
    const std::size_t pj = projection_size(c, j);
    const std::size_t pk = projection_size(c, complement(3, i));
    o.detail << pj << "*" << pk << "=" << pj * pk << (i < 2 ? " " : "; ");
    if (pj != table[i].first || pk != table[i].second) o.violate("projection sizes for coordinate " + std::to_string(i + 1));
    if (split_test(c, j)) o.violate("split_test passed");
  }
  if (is_decomposable(c)) o.violate("is_decomposable found a split");
  o.detail << "|C|=" << c.size() << ", indecomposable";
}

// Criterion 2.
void interleaving_table(Outcome& o, const Options&) {
  const GroupCode d = corpus::even_weight3();
  const Interleaving il = interleave(d, 2);
  const std::vector<std::size_t> sigma{1, 3, 5, 2, 4, 6};
  if (il.sigma.one_based() != sigma) o.violate("sigma differs");
  const std::vector<Code> parts{d, d};
  const Code power = direct_sum(parts);
  std::set<Word> images;
  std::size_t rows = 0;
  for (const auto& [x, y] : corpus::interleaving_table()) {
    if (!power.contains(x)) o.violate("row input outside D^2");
    if (apply_push(il.sigma, x) != y) o.violate("row " + to_string(x) + " maps to " + to_string(apply_push(il.sigma, x)));
    if (!il.code.contains(y)) o.violate("row output missing from the code");
    images.insert(y);
    ++rows;
  }
  if (il.code.size() != 16 || images.size() != 16) o.violate("expected 16 distinct rows");
  if (!is_cyclic(il.code)) o.violate("result is not cyclic");
  o.detail << rows << " rows bit-exact, sigma=[" << join_sizes(il.sigma.one_based()) << "], cyclic";
}

// Criterion 3.
void isometry_structure(Outcome& o, const Options&) {
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  for (auto [q, n] : cases) {
    const auto brute = brute_force_isometries(q, n);
    std::set<std::vector<std::size_t>> normal_forms;
    std::size_t enumerated = 0;
    IsometryEnumerator it(q, n);
    std::size_t points = brute.empty() ? 0 : brute.front().size();
    while (auto iso = it.next()) {
      std::vector<std::size_t> table(points);
      for (std::size_t p = 0; p < points; ++p) table[p] = point_index((*iso)(point_word(p, q, n)), q);
      normal_forms.insert(std::move(table));
      ++enumerated;
    }
    const BigInt expected = isometry_group_order(q, n);
    const std::set<std::vector<std::size_t>> brute_set(brute.begin(), brute.end());
    if (BigInt(brute.size()) != expected) o.violate("brute-force count for q=" + std::to_string(q));
    if (normal_forms.size() != enumerated) o.violate("normal forms not distinct");
    if (brute_set != normal_forms) o.violate("brute-force maps differ from normal forms");
    o.detail << "q=" << q << ",n=" << n << ":" << brute.size() << " ";
  }
}

// Criterion 4.
void certificates_agree(Outcome& o, const Options& opts) {
  std::size_t checked = 0, cw = 0;
  auto check = [&](const Code& c, const std::string& name, std::optional<Certificate> must) {
    const auto certs = certificates(c);
    if (certs.empty()) o.violate(name + " has no certificate");
    if (must && std::find(certs.begin(), certs.end(), *must) == certs.end())
      o.violate(name + " lacks " + std::string(to_string(*must)));
    if (!exhaustive_indecomposable(c)) o.violate(name + " splits under exhaustive search");
    ++checked;
  };
  auto z2 = corpus::z(2);
  for (std::size_t n = 3; n <= 9; n += 2)
    check(corpus::repetition(z2, n), "repetition" + std::to_string(n), Certificate::mds_nontrivial);
  check(corpus::hamming74(), "hamming74", Certificate::perfect_nontrivial);

  Rng rng(opts.seed);
  std::set<std::pair<std::string, std::vector<Word>>> seen;
  std::vector<Code> pool{corpus::even_weight3(), corpus::simplex7(), corpus::ternary_hamming()};
  for (const auto& g : corpus::small_groups()) {
    for (std::size_t n = 2; n <= 8; ++n) {
      for (int trial = 0; trial < 40; ++trial) {
        GroupCode c = trial % 2 == 0 ? corpus::random_group_code(rng, g, n, 2)
                                     : corpus::cyclic_closure(g, corpus::random_code(rng, g, n, 1).words().front());
        if (c.size() > 4096) continue;
        pool.push_back(std::move(c));
      }
      // A full-support word generates a constant-weight code over each of these groups.
      Word w = Word::filled(n, 0);
      for (std::size_t t = 0; t < n; ++t) w[t] = static_cast<Element>(1 + corpus::draw(rng, g->order() - 1));
      if (g->order() == 4 && g->kind() == FiniteGroup::Kind::cyclic)
        for (std::size_t t = 0; t < n; ++t) w[t] = static_cast<Element>(corpus::draw(rng, 2) ? 1 : 3);
      pool.push_back(GroupCode::generate(g, n, std::span<const Word>(&w, 1)));
    }
  }
  for (const auto& c : pool) {
    auto gc = GroupCode::view(c);
    if (!gc || is_degenerate(c) || !constant_weight_group(*gc)) continue;
    if (!seen.insert({c.alphabet().label(), c.words()}).second) continue;
    ++cw;
    check(c, "constant-weight code " + std::to_string(cw), Certificate::constant_weight_nondegenerate);
  }
  if (cw < 20) o.violate("constant-weight corpus too small (" + std::to_string(cw) + ")");
  o.detail << checked << " codes certified (" << cw << " constant-weight), exhaustive search agrees";
}

struct PoolSum {
  AlphabetPtr g;
  std::vector<std::pair<std::size_t, std::size_t>> types;  // (pool index, alpha)
};

Code build_sum(const std::vector<corpus::NamedCode>& pool, const PoolSum& s, Rng* shuffle) {
  std::vector<Code> parts;
  for (auto [idx, alpha] : s.types)
    for (std::size_t a = 0; a < alpha; ++a) parts.push_back(pool[idx].code);
  if (shuffle)
    for (std::size_t i = parts.size(); i > 1; --i) std::swap(parts[i - 1], parts[corpus::draw(*shuffle, i)]);
  return direct_sum(parts);
}

// Criterion 5.
void unique_decomposition(Outcome& o, const Options& opts) {
  Rng rng(opts.seed ^ 0x5eedull);
  const auto groups = corpus::small_groups();
  std::size_t recovered = 0, trials = 0;
  while (trials < opts.randomized_sums) {
    const AlphabetPtr& g = groups[corpus::draw(rng, groups.size())];
    const auto pool = corpus::indecomposable_pool(g);
    PoolSum s{g, {}};
    std::vector<std::size_t> idx(pool.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (std::size_t i = idx.size(); i > 1; --i) std::swap(idx[i - 1], idx[corpus::draw(rng, i)]);
    const std::size_t k = 1 + corpus::draw(rng, std::min<std::size_t>(3, pool.size()));
    std::size_t n = 0;
    double size = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t alpha = 1 + corpus::draw(rng, 3);
      s.types.emplace_back(idx[i], alpha);
      n += alpha * pool[idx[i]].code.length();
      for (std::size_t a = 0; a < alpha; ++a) size *= static_cast<double>(pool[idx[i]].code.size());
    }
    if (n < 2 || n > 12 || size > 8192) continue;
    ++trials;

    const Code sum = build_sum(pool, s, &rng);
    const Isometry scramble = corpus::random_automorphism_isometry(rng, *g, sum.length());
    const GroupCode c = GroupCode::from_code(apply_to_code(scramble, sum));
    const Decomposition dec = decompose(c);

    std::map<std::size_t, std::size_t> found;
    bool matched = true;
    for (const auto& t : dec.isotypes) {
      std::optional<std::size_t> which;
      for (std::size_t p = 0; p < pool.size() && !which; ++p)
        if (isomorphic(pool[p].code, dec.components[t.representative])) which = p;
      if (!which) {
        matched = false;
        break;
      }
      found[*which] += t.multiplicity;
    }
    std::map<std::size_t, std::size_t> built(s.types.begin(), s.types.end());
    std::vector<Code> comps(dec.components.begin(), dec.components.end());
    const bool reconstructs = apply_to_code(dec.witness, c) == direct_sum(comps);
    if (matched && found == built && reconstructs)
      ++recovered;
    else
      o.violate("trial " + std::to_string(trials) + " over " + g->label() + (reconstructs ? "" : " (witness)"));
  }
  o.detail << recovered << "/" << trials << " scrambled sums recovered";
}

// Criterion 6.
void automorphism_structure(Outcome& o, const Options& opts) {
  std::size_t checks = 0;
  for (const auto& g : corpus::small_groups()) {
    const std::size_t aut_g = automorphisms(*g).size();
    for (std::size_t n = 1; n <= 3; ++n) {
      const GroupCode full = full_space(g, n);
      const Decomposition dec = decompose(full);
      const AutGroupReport r = aut_group(full, {}, &dec);
      BigInt expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= aut_g;
      for (std::size_t i = 2; i <= n; ++i) expected *= i;
      if (!r.complete || r.order != expected) o.violate(g->label() + "^" + std::to_string(n) + " order " + r.order.str());
      if (opts.oracle) {
        // Count isometries of G^n that are group automorphisms of G^n directly.
        std::size_t hits = 0;
        IsometryEnumerator it(g->order(), n);
        while (auto iso = it.next()) hits += is_group_code_isomorphism(*iso, full, full);
        if (BigInt(hits) != expected) o.violate(g->label() + "^" + std::to_string(n) + " oracle count " + std::to_string(hits));
      }
      ++checks;
    }
  }

  std::size_t sums = 0;
  for (const auto& g : corpus::small_groups()) {
    const auto pool = corpus::indecomposable_pool(g);
    std::vector<BigInt> aut_of;
    for (const auto& p : pool) aut_of.push_back(aut_group(p.code).order);
    std::vector<PoolSum> plans;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i].code.length() <= 3) plans.push_back({g, {{i, 2}}});
      for (std::size_t j = i + 1; j < pool.size(); ++j)
        if (pool[i].code.length() + pool[j].code.length() <= 5) plans.push_back({g, {{i, 1}, {j, 1}}});
    }
    for (std::size_t i = 0; i + 1 < pool.size(); ++i)
      if (pool[i].code.length() * 2 + pool[i + 1].code.length() <= 7) plans.push_back({g, {{i, 2}, {i + 1, 1}}});
    plans.push_back({g, {{0, 3}}});
    for (const auto& plan : plans) {
      const Code sum = build_sum(pool, plan, nullptr);
      if (sum.size() > 4096) continue;
      const GroupCode c = GroupCode::from_code(sum);
      const Decomposition dec = decompose(c);
      const AutGroupReport r = aut_group(c, {}, &dec);
      BigInt expected = 1;
      for (auto [idx, alpha] : plan.types) {
        for (std::size_t a = 0; a < alpha; ++a) expected *= aut_of[idx];
        for (std::size_t a = 2; a <= alpha; ++a) expected *= a;
      }
      if (!r.complete || r.order != expected) o.violate("sum over " + g->label() + " order " + r.order.str() + " expected " + expected.str());
      for (const auto& phi : r.elements)
        if (!verify_block_preservation(c, dec.blocks, dec.isotype_of, phi)) {
          o.violate("automorphism breaks block structure");
          break;
        }
      ++sums;
    }
  }
  o.detail << checks << " full spaces and " << sums << " constructed sums match the product formula";
}

// Criterion 7.
void cyclic_structure_check(Outcome& o, const Options& opts) {
  Rng rng(opts.seed ^ 0xc1c1ull);
  std::vector<std::pair<std::string, GroupCode>> codes;
  std::size_t interleaved = 0;
  for (const auto& g : corpus::small_groups()) {
    for (std::size_t n = 1; n <= 4; ++n) codes.emplace_back(g->label() + "^" + std::to_string(n), full_space(g, n));
    for (const auto& p : corpus::indecomposable_pool(g)) {
      if (!is_cyclic(p.code)) continue;
      for (std::size_t l = 2; l <= 3; ++l) {
        if (p.code.length() * l > 9 || std::pow(double(p.code.size()), double(l)) > 4096) continue;
        const Interleaving il = interleave(p.code, l);
        std::vector<Code> parts(l, p.code);
        const GroupCode power = GroupCode::from_code(direct_sum(parts));
        if (!gc_isomorphic(power, il.code)) o.violate("interleave not isomorphic to the power");
        codes.emplace_back("interleave(" + p.name + "," + std::to_string(l) + ")", il.code);
        ++interleaved;
      }
    }
    for (std::size_t n = 2; n <= 8; ++n)
      for (int t = 0; t < 6; ++t) {
        GroupCode c = corpus::cyclic_closure(g, corpus::random_code(rng, g, n, 1).words().front());
        if (c.size() <= 4096) codes.emplace_back("random cyclic over " + g->label(), std::move(c));
      }
  }
  const std::vector<GroupCode> join_a{corpus::repetition(corpus::z(2), 2), corpus::repetition(corpus::z(3), 2)};
  codes.emplace_back("join(rep2,rep3)", join(join_a));
  const std::vector<GroupCode> join_b{corpus::even_weight3(), corpus::even_weight3()};
  codes.emplace_back("join(D,D)", join(join_b));

  std::size_t decomposable = 0, certified = 0;
  for (const auto& [name, c] : codes) {
    if (!is_cyclic(c)) {
      o.violate(name + " is not cyclic");
      continue;
    }
    try {
      const ComponentStructure s = cyclic_structure(c);
      if (s.multiplicity > 1) ++decomposable;
      if (!s.components_pairwise_isomorphic || !s.components_cyclic) o.violate(name + " component flags");
    } catch (const Error& e) {
      o.violate(name + ": " + e.what());
    }
    if (gcd_certificate(c)) {
      ++certified;
      if (!exhaustive_indecomposable(c)) o.violate(name + " certified but splits");
    }
  }
  // G^n with gcd(xi, n) != 1 is silent, and still decomposable.
  const GroupCode z2cube = full_space(corpus::z(2), 3);
  const bool silent = !gcd_certificate(z2cube).has_value();
  const bool splits = is_decomposable(z2cube).has_value();
  if (!silent || !splits) o.violate("Z/2^3 converse behaviour");
  o.detail << codes.size() << " cyclic codes (" << interleaved << " interleaved, " << decomposable << " decomposable, "
           << certified << " gcd-certified); Z/2^3: certificate " << (silent ? "absent" : "present") << ", "
           << (splits ? "decomposable" : "indecomposable");
}

// Criterion 8.
void mds_perfect_triviality(Outcome& o, const Options& opts) {
  Rng rng(opts.seed ^ 0x8888ull);
  std::vector<Code> codes{corpus::z4_example(), corpus::even_weight3(), corpus::hamming74(), corpus::ternary_hamming(),
                          corpus::simplex7()};
  for (const auto& g : corpus::small_groups()) {
    for (std::size_t n = 1; n <= 4; ++n) codes.push_back(full_space(g, n));
    for (std::size_t n = 1; n <= 9; n += 2) codes.push_back(corpus::repetition(g, n));
    for (const auto& p : corpus::indecomposable_pool(g)) codes.push_back(p.code);
    for (std::size_t n = 1; n <= 6; ++n)
      for (int t = 0; t < 10; ++t) {
        codes.push_back(corpus::random_code(rng, g, n, 12));
        GroupCode c = corpus::random_group_code(rng, g, n, 2);
        if (c.size() <= 4096) codes.push_back(std::move(c));
      }
  }
  std::size_t mds = 0, perfect = 0, nontrivial_mds = 0, nontrivial_perfect = 0, covered = 0;
  for (const auto& c : codes) {
    const ParameterReport p = parameters(c);
    const bool trivial = is_trivial(c);
    if (is_mds(c)) {
      ++mds;
      nontrivial_mds += !trivial;
      if (trivial != (p.min_distance == 1)) o.violate("MDS code with trivial != (d = 1)");
    }
    const bool perf = is_perfect(c);
    if (perf) {
      ++perfect;
      nontrivial_perfect += !trivial;
      if (trivial != (p.correction_capacity == 0)) o.violate("perfect code with trivial != (e = 0)");
    }
    if (opts.oracle && big_pow(c.q(), c.length()) <= kCoveringOracleCap) {
      if (is_perfect_by_covering(c) != perf) o.violate("covering oracle disagrees");
      ++covered;
    }
  }
  if (nontrivial_mds == 0 || nontrivial_perfect == 0) o.violate("corpus lacks non-trivial MDS or perfect codes");
  o.detail << codes.size() << " codes: " << mds << " MDS (" << nontrivial_mds << " non-trivial), " << perfect
           << " perfect (" << nontrivial_perfect << " non-trivial)";
  if (opts.oracle) o.detail << ", covering oracle on " << covered;
}

struct Entry {
  const char* name;
  double budget;
  void (*run)(Outcome&, const Options&);
};

const Entry kEntries[kCriterionCount] = {
    {"z4-projection-table", 1.0, z4_projection_table},
    {"interleaving-table", 1.0, interleaving_table},
    {"isometry-structure", 10.0, isometry_structure},
    {"indecomposability-certificates", 60.0, certificates_agree},
    {"unique-decomposition", 300.0, unique_decomposition},
    {"automorphism-structure", 300.0, automorphism_structure},
    {"cyclic-structure", 120.0, cyclic_structure_check},
    {"mds-perfect-triviality", 60.0, mds_perfect_triviality},
};

}  // namespace

CriterionResult run_criterion(int id, const Options& options) {
  if (id < 1 || id > kCriterionCount) throw Error(Errc::invalid_input, "no criterion " + std::to_string(id));
  const Entry& e = kEntries[id - 1];
  CriterionResult r{id, e.name, false, {}, 0.0, e.budget};
  Outcome o;
  const auto start = Clock::now();
  try {
    e.run(o, options);
  } catch (const std::exception& ex) {
    o.violate(std::string("exception: ") + ex.what());
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.detail = o.detail.str();
  if (o.violations > 0) r.detail += " (" + std::to_string(o.violations) + " violations)";
  r.pass = o.pass && r.seconds < r.budget_seconds;
  if (r.seconds >= r.budget_seconds) r.detail += " (over time budget)";
  return r;
}

std::vector<CriterionResult> run_all(const Options& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace groupcodes::selftest
