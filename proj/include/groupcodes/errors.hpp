#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace groupcodes {

enum class Errc {
  invalid_order,
  invalid_input,
  not_a_group,
  incompatible_words,
  incompatible_alphabets,
  invalid_index_set,
  closure_violation,
  precondition,
  resource_limit,
  theorem_violation,
  parse_error,
};

constexpr std::string_view to_string(Errc e) noexcept {
  switch (e) {
    case Errc::invalid_order: return "invalid-order";
    case Errc::invalid_input: return "invalid-input";
    case Errc::not_a_group: return "not-a-group";
    case Errc::incompatible_words: return "incompatible-words";
    case Errc::incompatible_alphabets: return "incompatible-alphabets";
    case Errc::invalid_index_set: return "invalid-index-set";
    case Errc::closure_violation: return "closure-violation";
    case Errc::precondition: return "precondition";
    case Errc::resource_limit: return "resource-limit";
    case Errc::theorem_violation: return "theorem-violation";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

/// Every failure raised by the library carries one of the `Errc` kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace groupcodes
