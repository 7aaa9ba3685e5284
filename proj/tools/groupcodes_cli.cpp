#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "groupcodes/classify.hpp"
#include "groupcodes/cyclic.hpp"
#include "groupcodes/decompose.hpp"
#include "groupcodes/errors.hpp"
#include "groupcodes/io.hpp"
#include "groupcodes/isomorphy.hpp"
#include "groupcodes/selftest.hpp"

namespace gc = groupcodes;
using gc::io::Json;

namespace {

enum Exit { kOk = 0, kNotIsomorphic = 1, kInputError = 2, kResourceLimit = 3 };

struct Globals {
  std::string format = "json";
  std::size_t max_partition_bits = 24;
  std::uint64_t max_search = gc::SearchLimits{}.max_nodes;
  std::uint64_t seed = gc::selftest::Options{}.seed;
  bool oracle = false;
  unsigned threads = 1;
  bool timing = false;

  gc::SearchLimits limits() const {
    gc::SearchLimits l;
    l.max_nodes = max_search;
    return l;
  }
  gc::DecomposeOptions decompose_options() const {
    gc::DecomposeOptions o;
    o.max_partition_bits = max_partition_bits;
    o.iso_limits = limits();
    return o;
  }
};

void render_text(const Json& j, const std::string& indent, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty() && !(v.is_array() && !v.front().is_structured())) {
        out << indent << k << ":\n";
        render_text(v, indent + "  ", out);
      } else {
        out << indent << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        out << indent << "-\n";
        render_text(v, indent + "  ", out);
      } else {
        out << indent << "- " << v.dump() << "\n";
      }
    }
  } else {
    out << indent << j.dump() << "\n";
  }
}

void emit(const Globals& g, const Json& j) {
  if (g.format == "text") {
    render_text(j, "", std::cout);
  } else {
    std::cout << gc::io::dump(j);
  }
  std::cout.flush();
}

class Timer {
 public:
  void lap(const std::string& phase) {
    const auto now = std::chrono::steady_clock::now();
    phases_[phase] = std::chrono::duration<double>(now - last_).count();
    last_ = now;
  }
  Json json() const { return phases_; }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
  Json phases_ = Json::object();
};

int cmd_analyze(const Globals& g, const std::string& path) {
  Timer timer;
  const gc::Code c = gc::io::read_code(path);
  timer.lap("parse");
  Json report;
  report["code"] = {{"q", c.q()}, {"length", c.length()}, {"size", c.size()}, {"group", c.is_group_code()}};
  report["parameters"] = gc::io::to_json(gc::parameters(c));
  const gc::Classification cls = gc::classify(c);
  report["classification"] = gc::io::to_json(cls);
  Json certs = Json::array();
  for (auto cert : gc::certificates(c)) certs.push_back(std::string(gc::to_string(cert)));
  report["certificates"] = certs;
  timer.lap("classify");

  int exit_code = kOk;
  Json limits = Json::array();
  try {
    const gc::Decomposition d = gc::decompose(c, g.decompose_options());
    report["indecomposable"] = d.blocks.size() == 1;
    report["decomposition"] = gc::io::to_json(d);
  } catch (const gc::Error& e) {
    if (e.code() != gc::Errc::resource_limit) throw;
    report["indecomposable"] = certs.empty() ? Json(nullptr) : Json(true);
    report["decomposition"] = nullptr;
    limits.push_back(e.what());
    exit_code = kResourceLimit;
  }
  timer.lap("decompose");
  try {
    report["cyclic"] = gc::io::to_json(gc::cyclic_report(c, g.decompose_options()));
  } catch (const gc::Error& e) {
    if (e.code() != gc::Errc::resource_limit) throw;
    gc::CyclicReport partial;
    partial.is_cyclic = gc::is_cyclic(c);
    partial.shift_orbit_sizes = gc::shift_orbit_sizes(c);
    if (auto grp = gc::GroupCode::view(c); grp && partial.is_cyclic) partial.gcd_certificate = gc::gcd_certificate(*grp);
    report["cyclic"] = gc::io::to_json(partial);
    limits.push_back(e.what());
    exit_code = kResourceLimit;
  }
  timer.lap("cyclic");

  if (g.oracle) {
    Json oracle;
    oracle["min_distance_pairwise"] = gc::min_distance_pairwise(c);
    if (gc::big_pow(c.q(), c.length()) <= gc::kCoveringOracleCap)
      oracle["perfect_by_covering"] = gc::is_perfect_by_covering(c);
    else
      oracle["perfect_by_covering"] = nullptr;
    report["oracle"] = oracle;
    timer.lap("oracle");
  }
  if (!limits.empty()) report["resource_limits"] = limits;
  if (g.timing) report["timing"] = timer.json();
  emit(g, report);
  return exit_code;
}

int cmd_decompose(const Globals& g, const std::string& path) {
  const gc::Code c = gc::io::read_code(path);
  try {
    emit(g, gc::io::to_json(gc::decompose(c, g.decompose_options())));
    return kOk;
  } catch (const gc::Error& e) {
    if (e.code() != gc::Errc::resource_limit) throw;
    std::cerr << "error: " << e.what() << "\n";
    Json certs = Json::array();
    for (auto cert : gc::certificates(c)) certs.push_back(std::string(gc::to_string(cert)));
    emit(g, {{"blocks", nullptr}, {"certificates", certs}, {"resource_limits", Json::array({e.what()})}});
    return kResourceLimit;
  }
}

int cmd_aut(const Globals& g, const std::string& path) {
  const gc::Code c = gc::io::read_code(path);
  auto grp = gc::GroupCode::view(c);
  if (!grp) throw gc::Error(gc::Errc::precondition, "aut requires a group code (\"group\": true)");
  std::optional<gc::Decomposition> d;
  Json limits = Json::array();
  try {
    d = gc::decompose(c, g.decompose_options());
  } catch (const gc::Error& e) {
    if (e.code() != gc::Errc::resource_limit) throw;
    limits.push_back(e.what());
  }
  const gc::AutGroupReport r = gc::aut_group(*grp, g.limits(), d ? &*d : nullptr);
  Json out = gc::io::to_json(r);
  if (!limits.empty()) out["resource_limits"] = limits;
  emit(g, out);
  return r.complete && limits.empty() ? kOk : kResourceLimit;
}

int cmd_iso(const Globals& g, const std::string& a, const std::string& b) {
  const gc::Code c = gc::io::read_code(a);
  const gc::Code d = gc::io::read_code(b);
  if (!(c.alphabet() == d.alphabet()))
    throw gc::Error(gc::Errc::incompatible_alphabets, "isomorphism requires identical alphabet groups");
  Json out;
  auto gc_c = gc::GroupCode::view(c);
  auto gc_d = gc::GroupCode::view(d);
  if (gc_c && gc_d) {
    out["category"] = "group";
    auto w = gc::gc_isomorphic(*gc_c, *gc_d, g.limits());
    out["isomorphic"] = w.has_value();
    out["witness"] = w ? gc::io::to_json(*w) : Json(nullptr);
  } else {
    out["category"] = "code";
    auto w = gc::code_isomorphic(c, d, g.limits());
    out["isomorphic"] = w.has_value();
    out["witness"] = w ? gc::io::to_json(*w) : Json(nullptr);
  }
  emit(g, out);
  return out["isomorphic"].get<bool>() ? kOk : kNotIsomorphic;
}

int cmd_interleave(const Globals& g, const std::string& path, std::size_t copies) {
  const gc::Code c = gc::io::read_code(path);
  auto grp = gc::GroupCode::view(c);
  if (!grp) throw gc::Error(gc::Errc::precondition, "interleave requires a group code (\"group\": true)");
  const gc::Interleaving il = gc::interleave(*grp, copies);
  std::vector<gc::Code> parts(copies, c);
  const gc::Code power = gc::direct_sum(parts);
  Json rows = Json::array();
  for (const auto& w : power.words()) {
    Json from = Json::array(), to = Json::array();
    for (auto s : w) from.push_back(static_cast<unsigned>(s));
    for (auto s : gc::apply_push(il.sigma, w)) to.push_back(static_cast<unsigned>(s));
    rows.push_back({{"from", from}, {"to", to}});
  }
  Json out;
  out["copies"] = copies;
  out["sigma"] = il.sigma.one_based();
  out["convention"] = "push";
  out["is_cyclic"] = gc::is_cyclic(il.code);
  out["rows"] = rows;
  out["code"] = gc::io::to_json(il.code);
  emit(g, out);
  return kOk;
}

int cmd_join(const Globals& g, const std::vector<std::string>& paths) {
  std::vector<gc::GroupCode> codes;
  for (const auto& p : paths) {
    const gc::Code c = gc::io::read_code(p);
    auto grp = gc::GroupCode::view(c);
    if (!grp) throw gc::Error(gc::Errc::precondition, p + ": join requires group codes");
    codes.push_back(*grp);
  }
  const gc::GroupCode j = gc::join(codes);
  Json out;
  out["is_cyclic"] = gc::is_cyclic(j);
  out["code"] = gc::io::to_json(j);
  emit(g, out);
  return kOk;
}

int cmd_selftest(const Globals& g, const std::vector<int>& only) {
  gc::selftest::Options opts;
  opts.seed = g.seed;
  opts.oracle = g.oracle;
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= gc::selftest::kCriterionCount; ++i) ids.push_back(i);
  Json results = Json::array();
  bool all = true;
  for (int id : ids) {
    const auto r = gc::selftest::run_criterion(id, opts);
    all = all && r.pass;
    if (g.format == "text") {
      std::printf("[%s] %d %-32s %7.3fs / %.0fs  %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds,
                  r.budget_seconds, r.detail.c_str());
      std::fflush(stdout);
    }
    results.push_back({{"id", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"detail", r.detail},
                       {"seconds", r.seconds},
                       {"budget_seconds", r.budget_seconds}});
  }
  if (g.format != "text") emit(g, {{"seed", g.seed}, {"oracle", g.oracle}, {"results", results}, {"pass", all}});
  return all ? kOk : 1;
}

int exit_for(const gc::Error& e) { return e.code() == gc::Errc::resource_limit ? kResourceLimit : kInputError; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codes over finite alphabets and group codes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-partition-bits", g.max_partition_bits, "Largest coordinate count for the subset search");
  app.add_option("--max-search", g.max_search, "Node cap for isomorphism and automorphism searches");
  app.add_option("--seed", g.seed, "Seed for randomized self-tests");
  app.add_flag("--oracle", g.oracle, "Run brute-force cross-checks");
  app.add_option("--threads", g.threads, "Worker threads (searches currently run on one)");
  app.add_flag("--timing", g.timing, "Add per-phase timings to the analyze report");

  std::string file, file2;
  std::size_t copies = 2;
  std::vector<std::string> files;
  std::vector<int> only;

  auto* analyze = app.add_subcommand("analyze", "Parameters, classification, decomposition and cyclic report");
  analyze->add_option("file", file, "Code JSON")->required();
  auto* decompose = app.add_subcommand("decompose", "Decompose into indecomposable components");
  decompose->add_option("file", file, "Code JSON")->required();
  auto* aut = app.add_subcommand("aut", "Automorphism group of a group code");
  aut->add_option("file", file, "Code JSON")->required();
  auto* iso = app.add_subcommand("iso", "Test two codes for isomorphism (exit 1 when not isomorphic)");
  iso->add_option("a", file, "First code")->required();
  iso->add_option("b", file2, "Second code")->required();
  auto* interleave = app.add_subcommand("interleave", "Interleave copies of a cyclic group code");
  interleave->add_option("file", file, "Code JSON")->required();
  interleave->add_option("--copies,-l", copies, "Number of copies")->check(CLI::PositiveNumber);
  auto* joincmd = app.add_subcommand("join", "Join cyclic group codes over the product alphabet");
  joincmd->add_option("files", files, "Code JSON files")->required();
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--only", only, "Criterion ids to run (comma-separated)")
      ->delimiter(',')
      ->check(CLI::Range(1, groupcodes::selftest::kCriterionCount));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(g, file);
    if (*decompose) return cmd_decompose(g, file);
    if (*aut) return cmd_aut(g, file);
    if (*iso) return cmd_iso(g, file, file2);
    if (*interleave) return cmd_interleave(g, file, copies);
    if (*joincmd) return cmd_join(g, files);
    if (*selftest) return cmd_selftest(g, only);
  } catch (const gc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
