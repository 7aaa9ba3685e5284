#pragma once

#include <string>

#include <json.hpp>

#include "groupcodes/classify.hpp"
#include "groupcodes/code.hpp"
#include "groupcodes/cyclic.hpp"
#include "groupcodes/decompose.hpp"
#include "groupcodes/isometry.hpp"
#include "groupcodes/isomorphy.hpp"

namespace groupcodes::io {

using Json = nlohmann::ordered_json;

// Parsing throws Error(Errc::parse_error, "<field path>: <reason>").

FiniteGroup parse_alphabet(const Json& j, const std::string& path = "alphabet");
Json to_json(const FiniteGroup& g);

/// {"alphabet", "length", "codewords"} or {"alphabet", "length", "generators",
/// "group": true}. Codewords with "group": true are checked for closure.
Code parse_code(const Json& j);
Json to_json(const Code& c);

Json parse_text(const std::string& text, const std::string& source);
Json read_file(const std::string& path);
Code read_code(const std::string& path);

enum class Convention { pull, push };

Json to_json(const Isometry& iso, Convention convention = Convention::pull);
/// Push witnesses are converted to the equivalent pull isometry.
Isometry parse_isometry(const Json& j, std::size_t q);

Json to_json(const GroupCodeIso& w);
Json to_json(const BigInt& v);
Json to_json(const ParameterReport& p);
Json to_json(const Classification& c);
Json to_json(const Decomposition& d);
Json to_json(const CyclicReport& r);
Json to_json(const AutGroupReport& r);

std::string dump(const Json& j);

}  // namespace groupcodes::io
