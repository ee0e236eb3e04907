#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobcx/oracle.hpp"

namespace frobcx {

struct InputDocument {
  int variables = 0;
  std::int64_t p = 0;
  std::optional<int> e_max;
  std::vector<std::vector<int>> generators;  // 0/1 entries

  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// JSON document: {"variables": n, "p": p, "e_max": optional, "generators": [[0|1,...],...]}.
InputDocument parse_document_json(const std::string& text);

/// Inline grammar: comma-separated products of variables, e.g. "x1*x5, x2*x5".
/// Repeated variables inside a generator are rejected as non-square-free;
/// errors carry the 1-based column. Without n the variable count is the
/// largest index mentioned.
std::vector<std::vector<int>> parse_inline_generators(const std::string& text,
                                                      std::optional<int> n);

/// Accepts either format (JSON when the first non-space character is '{').
/// p, n and e_max supplied here override or complete the document.
InputDocument parse_input(const std::string& text, std::optional<std::int64_t> p = {},
                          std::optional<int> n = {}, std::optional<int> e_max = {});

void validate_document(const InputDocument& doc);

nlohmann::json document_to_json(const InputDocument& doc);

SquareFreeIdeal document_ideal(const InputDocument& doc);

/// "x1*x3^2"; "1" for the unit monomial.
std::string monomial_text(const Monomial& m);

/// Exponents equal to q or q-1 printed as the tokens "q" and "q-1".
std::string monomial_text_symbolic(const Monomial& m, Exponent q);

struct CommandOptions {
  int e = 1;                 // Frobenius degree for colon/jq
  std::optional<int> e_max;  // overrides the document's e_max; default 5
  bool c0_one = false;       // generating-function constant term convention
  std::uint64_t seed = oracle::kDefaultSeed;  // verify without an ideal
  int count = 100;                            // verify random-suite size
};

struct CommandResult {
  nlohmann::json report;
  int exit_code = 0;
};

/// Commands: colon, jq, classify, complexity, support, genfun, verify.
/// verify runs the randomized cross-check suite when no ideal is given.
CommandResult run_command(const std::string& command,
                          const std::optional<InputDocument>& doc,
                          const CommandOptions& opt = {});

std::string render_text(const std::string& command, const nlohmann::json& report);

/// 1 for input-side errors, 2 for internal formula violations.
int exit_code_for(const std::exception& err);

nlohmann::json error_json(const std::exception& err);

}  // namespace frobcx
