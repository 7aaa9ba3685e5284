#include "groupcodes/io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "groupcodes/errors.hpp"

namespace groupcodes::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& reason) {
  throw Error(Errc::parse_error, path + ": " + reason);
}

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

std::size_t as_size(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) fail(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<Word> parse_words(const Json& j, std::size_t q, std::size_t n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of words");
  std::vector<Word> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string wp = path + "[" + std::to_string(i) + "]";
    const Json& w = j[i];
    if (!w.is_array()) fail(wp, "expected an array of symbols");
    if (w.size() != n) fail(wp, "has length " + std::to_string(w.size()) + ", expected " + std::to_string(n));
    std::vector<Element> symbols(n);
    for (std::size_t t = 0; t < n; ++t) {
      const std::size_t s = as_size(w[t], wp + "[" + std::to_string(t) + "]");
      if (s >= q) fail(wp + "[" + std::to_string(t) + "]", "symbol " + std::to_string(s) + " outside 0.." + std::to_string(q - 1));
      symbols[t] = static_cast<Element>(s);
    }
    out.emplace_back(std::move(symbols));
  }
  return out;
}

Json words_json(std::span<const Word> words) {
  Json arr = Json::array();
  for (const auto& w : words) {
    Json row = Json::array();
    for (Element s : w) row.push_back(static_cast<unsigned>(s));
    arr.push_back(std::move(row));
  }
  return arr;
}

}  // namespace

FiniteGroup parse_alphabet(const Json& j, const std::string& path) {
  const Json& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  const auto k = kind.get<std::string>();
  try {
    if (k == "cyclic") return cyclic_group(as_size(field(j, "modulus", path), path + ".modulus"));
    if (k == "product") {
      const Json& fs = field(j, "factors", path);
      if (!fs.is_array() || fs.empty()) fail(path + ".factors", "expected a non-empty array");
      std::vector<FiniteGroup> factors;
      for (std::size_t i = 0; i < fs.size(); ++i)
        factors.push_back(parse_alphabet(fs[i], path + ".factors[" + std::to_string(i) + "]"));
      return product_group(factors);
    }
    if (k == "table") {
      const std::size_t q = as_size(field(j, "order", path), path + ".order");
      const Json& t = field(j, "table", path);
      if (!t.is_array() || t.size() != q) fail(path + ".table", "expected " + std::to_string(q) + " rows");
      std::vector<std::vector<std::size_t>> rows(q);
      for (std::size_t a = 0; a < q; ++a) {
        const std::string rp = path + ".table[" + std::to_string(a) + "]";
        if (!t[a].is_array() || t[a].size() != q) fail(rp, "expected " + std::to_string(q) + " entries");
        for (std::size_t b = 0; b < q; ++b) rows[a].push_back(as_size(t[a][b], rp + "[" + std::to_string(b) + "]"));
      }
      std::string label = "table";
      if (auto it = j.find("label"); it != j.end() && it->is_string()) label = it->get<std::string>();
      return group_from_table(rows, label);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    fail(path, e.what());
  }
  fail(path + ".kind", "unknown alphabet kind '" + k + "'");
}

Json to_json(const FiniteGroup& g) {
  Json j;
  switch (g.kind()) {
    case FiniteGroup::Kind::cyclic:
      j["kind"] = "cyclic";
      j["modulus"] = g.order();
      break;
    case FiniteGroup::Kind::product: {
      j["kind"] = "product";
      Json fs = Json::array();
      for (const auto& f : g.factors()) fs.push_back(to_json(f));
      j["factors"] = std::move(fs);
      break;
    }
    case FiniteGroup::Kind::table:
      j["kind"] = "table";
      j["order"] = g.order();
      j["table"] = g.table_rows();
      j["label"] = g.label();
      break;
  }
  return j;
}

Code parse_code(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  auto alphabet = share(parse_alphabet(field(j, "alphabet", "$"), "$.alphabet"));
  const std::size_t n = as_size(field(j, "length", "$"), "$.length");
  if (n == 0) fail("$.length", "length must be positive");
  bool group = false;
  if (auto it = j.find("group"); it != j.end()) {
    if (!it->is_boolean()) fail("$.group", "expected a boolean");
    group = it->get<bool>();
  }
  const bool has_words = j.contains("codewords");
  const bool has_gens = j.contains("generators");
  if (has_words == has_gens) fail("$", "exactly one of 'codewords' or 'generators' is required");
  if (has_gens) {
    if (!group) fail("$.group", "'generators' requires \"group\": true");
    auto gens = parse_words(j["generators"], alphabet->order(), n, "$.generators");
    return GroupCode::generate(alphabet, n, gens);
  }
  auto words = parse_words(j["codewords"], alphabet->order(), n, "$.codewords");
  if (words.empty()) fail("$.codewords", "a code must contain at least one word");
  Code c = Code::from_words(alphabet, n, std::move(words));
  if (group) return GroupCode::from_code(c);
  return c;
}

Json to_json(const Code& c) {
  Json j;
  j["alphabet"] = to_json(c.alphabet());
  j["length"] = c.length();
  j["group"] = c.is_group_code();
  j["size"] = c.size();
  j["codewords"] = words_json(c.words());
  return j;
}

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover a line number from the byte offset.
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i)
      if (text[i] == '\n') ++line;
    fail(source + ":" + std::to_string(line), e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str(), path);
}

Code read_code(const std::string& path) {
  const Json j = read_file(path);
  try {
    return parse_code(j);
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw Error(Errc::parse_error, path + ": " + (e.what() + 13));
    throw;
  }
}

Json to_json(const Isometry& iso, Convention convention) {
  Json j;
  if (convention == Convention::push) {
    j["sigma"] = iso.equiv().inverse().one_based();
  } else {
    j["sigma"] = iso.equiv().one_based();
  }
  Json cfg = Json::array();
  for (const auto& m : iso.config().maps) {
    Json row = Json::array();
    for (Element e : m) row.push_back(static_cast<unsigned>(e));
    cfg.push_back(std::move(row));
  }
  j["config"] = std::move(cfg);
  j["convention"] = convention == Convention::pull ? "pull" : "push";
  return j;
}

Isometry parse_isometry(const Json& j, std::size_t q) {
  const Json& s = field(j, "sigma", "$");
  if (!s.is_array()) fail("$.sigma", "expected an array");
  std::vector<std::size_t> images;
  for (std::size_t i = 0; i < s.size(); ++i) images.push_back(as_size(s[i], "$.sigma[" + std::to_string(i) + "]"));
  const std::size_t n = images.size();
  Equivalence sigma;
  try {
    sigma = Equivalence::from_one_based(images);
  } catch (const Error& e) {
    fail("$.sigma", e.what());
  }
  Configuration config = Configuration::identity(q, n);
  if (auto it = j.find("config"); it != j.end()) {
    if (!it->is_array() || it->size() != n) fail("$.config", "expected " + std::to_string(n) + " maps");
    for (std::size_t i = 0; i < n; ++i) {
      const std::string mp = "$.config[" + std::to_string(i) + "]";
      if (!(*it)[i].is_array() || (*it)[i].size() != q) fail(mp, "expected " + std::to_string(q) + " images");
      for (std::size_t a = 0; a < q; ++a) {
        const std::size_t v = as_size((*it)[i][a], mp + "[" + std::to_string(a) + "]");
        if (v >= q) fail(mp, "image outside the alphabet");
        config.maps[i][a] = static_cast<Element>(v);
      }
    }
  }
  std::string convention = "pull";
  if (auto it = j.find("convention"); it != j.end() && it->is_string()) convention = it->get<std::string>();
  if (convention != "pull" && convention != "push") fail("$.convention", "expected 'pull' or 'push'");
  if (convention == "push") sigma = sigma.inverse();
  try {
    return Isometry(std::move(config), std::move(sigma));
  } catch (const Error& e) {
    fail("$", e.what());
  }
}

Json to_json(const GroupCodeIso& w) {
  Json j = to_json(w.iso);
  j["verified_hom"] = w.verified_hom;
  return j;
}

Json to_json(const BigInt& v) {
  if (v <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(v);
  return v.str();
}

Json to_json(const ParameterReport& p) {
  Json j;
  j["q"] = p.q;
  j["length"] = p.length;
  j["cardinality"] = p.cardinality;
  if (p.exact_dimension)
    j["dimension"] = *p.exact_dimension;
  else
    j["dimension"] = p.dimension;
  j["dimension_exact"] = p.exact_dimension.has_value();
  j["min_distance"] = p.min_distance;
  j["correction_capacity"] = p.correction_capacity;
  j["singleton_bound_holds"] = p.singleton_bound_holds;
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["trivial"] = c.is_trivial;
  j["degenerate"] = c.is_degenerate;
  Json deg = Json::array();
  for (auto i : c.degenerate_coordinates) deg.push_back(i + 1);
  j["degenerate_coordinates"] = std::move(deg);
  j["mds"] = c.is_mds;
  j["perfect"] = c.is_perfect;
  if (c.constant_weight) {
    Json cw;
    cw["center"] = words_json(std::span<const Word>(&c.constant_weight->center, 1))[0];
    cw["radius"] = c.constant_weight->radius;
    j["constant_weight"] = std::move(cw);
  } else {
    j["constant_weight"] = nullptr;
  }
  j["correction_capacity"] = c.correction_capacity;
  return j;
}

Json to_json(const Decomposition& d) {
  Json j;
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json row = Json::array();
    for (auto i : b) row.push_back(i + 1);
    blocks.push_back(std::move(row));
  }
  j["blocks"] = std::move(blocks);
  Json comps = Json::array();
  for (const auto& c : d.components) comps.push_back(to_json(c));
  j["components"] = std::move(comps);
  Json iso = Json::array();
  for (const auto& t : d.isotypes) iso.push_back({{"rep", t.representative}, {"alpha", t.multiplicity}});
  j["isotypes"] = std::move(iso);
  j["witness"] = to_json(d.witness);
  Json certs = Json::array();
  for (auto c : d.certificates) certs.push_back(std::string(to_string(c)));
  j["certificates"] = std::move(certs);
  return j;
}

Json to_json(const CyclicReport& r) {
  Json j;
  j["is_cyclic"] = r.is_cyclic;
  j["shift_orbit_sizes"] = r.shift_orbit_sizes;
  if (r.gcd_certificate)
    j["gcd_certificate"] = {{"xi", r.gcd_certificate->xi}, {"verdict", "indecomposable"}};
  else
    j["gcd_certificate"] = nullptr;
  if (r.component_structure) {
    const auto& s = *r.component_structure;
    j["component_structure"] = {{"component", to_json(s.representative)},
                                {"alpha", s.multiplicity},
                                {"components_pairwise_isomorphic", s.components_pairwise_isomorphic},
                                {"components_cyclic", s.components_cyclic}};
  } else {
    j["component_structure"] = nullptr;
  }
  return j;
}

Json to_json(const AutGroupReport& r) {
  Json j;
  j["order"] = to_json(r.order);
  j["complete"] = r.complete;
  j["closure_verified"] = r.closure_verified;
  Json gens = Json::array();
  for (const auto& g : r.generators) {
    Json w = to_json(g);
    w["verified_hom"] = true;
    gens.push_back(std::move(w));
  }
  j["generators"] = std::move(gens);
  Json st = Json::array();
  for (const auto& s : r.structure)
    st.push_back({{"isotype", s.isotype}, {"component_order", to_json(s.component_order)}, {"alpha", s.multiplicity}});
  j["structure"] = std::move(st);
  j["predicted_order"] = r.predicted_order ? to_json(*r.predicted_order) : Json(nullptr);
  j["element_count"] = r.elements.size();
  return j;
}

namespace {

// Indented like dump(2), but arrays of scalars stay on one line.
void write(const Json& j, std::size_t indent, std::string& out) {
  const bool flat = !j.is_structured() || j.empty() ||
                    (j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& v) { return v.is_structured(); }));
  if (flat) {
    if (!j.is_array()) {
      out += j.dump();
      return;
    }
    out += "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
    out += "]";
    return;
  }
  const std::string pad(indent + 2, ' ');
  const bool obj = j.is_object();
  out += obj ? "{\n" : "[\n";
  std::size_t i = 0;
  for (auto it = j.begin(); it != j.end(); ++it, ++i) {
    out += pad;
    if (obj) out += Json(it.key()).dump() + ": ";
    write(*it, indent + 2, out);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += std::string(indent, ' ') + (obj ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, 0, out);
  return out + "\n";
}

}  // namespace groupcodes::io
