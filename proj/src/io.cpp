#include "frobcx/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace frobcx {

InputDocument parse_document_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ParseError("input must be a JSON object");

  InputDocument doc;
  if (!j.contains("variables") || !j["variables"].is_number_integer())
    throw InputError("field 'variables' must be an integer");
  doc.variables = j["variables"].get<int>();
  if (j.contains("p")) {
    if (!j["p"].is_number_integer()) throw InputError("field 'p' must be an integer");
    doc.p = j["p"].get<std::int64_t>();
  }
  if (j.contains("e_max")) {
    if (!j["e_max"].is_number_integer()) throw InputError("field 'e_max' must be an integer");
    doc.e_max = j["e_max"].get<int>();
  }
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw InputError("field 'generators' must be a non-empty array");
  for (std::size_t g = 0; g < j["generators"].size(); ++g) {
    const auto& row = j["generators"][g];
    if (!row.is_array())
      throw InputError("generators[" + std::to_string(g) + "] must be an array");
    std::vector<int> exps;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!row[i].is_number_integer())
        throw InputError("generators[" + std::to_string(g) + "][" + std::to_string(i) +
                         "] must be an integer");
      exps.push_back(row[i].get<int>());
    }
    doc.generators.push_back(std::move(exps));
  }
  return doc;
}

std::vector<std::vector<int>> parse_inline_generators(const std::string& text,
                                                      std::optional<int> n_opt) {
  std::vector<std::vector<int>> supports;
  std::size_t i = 0;
  int max_index = 0;
  const auto at_col = [&](std::size_t pos) { return std::to_string(pos + 1); };
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i >= text.size()) throw ParseError("empty ideal text");
  while (true) {
    std::vector<int> vars;
    while (true) {
      skip_ws();
      if (i >= text.size() || text[i] != 'x')
        throw ParseError("expected a variable like x3 at column " + at_col(i));
      const std::size_t var_pos = i;
      ++i;
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a variable index at column " + at_col(i));
      long idx = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        idx = idx * 10 + (text[i] - '0');
        if (idx > 1'000'000)
          throw InputError("variable index too large at column " + at_col(var_pos));
        ++i;
      }
      if (idx == 0)
        throw InputError("variable index must be at least 1 at column " + at_col(var_pos));
      if (n_opt && idx > *n_opt)
        throw InputError("variable index " + std::to_string(idx) + " exceeds n = " +
                         std::to_string(*n_opt) + " at column " + at_col(var_pos));
      if (std::find(vars.begin(), vars.end(), static_cast<int>(idx)) != vars.end())
        throw NotSquareFreeError("repeated variable x" + std::to_string(idx) +
                                 " at column " + at_col(var_pos) +
                                 " makes the generator non-square-free");
      vars.push_back(static_cast<int>(idx));
      max_index = std::max(max_index, static_cast<int>(idx));
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    supports.push_back(std::move(vars));
    skip_ws();
    if (i >= text.size()) break;
    if (text[i] == ',') {
      ++i;
      skip_ws();
      if (i >= text.size()) throw ParseError("trailing comma at column " + at_col(i - 1));
      continue;
    }
    throw ParseError(std::string("unexpected character '") + text[i] + "' at column " +
                     at_col(i));
  }

  const int n = n_opt ? *n_opt : max_index;
  std::vector<std::vector<int>> rows;
  for (const auto& vars : supports) {
    std::vector<int> row(n, 0);
    for (int v : vars) row[v - 1] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

InputDocument parse_input(const std::string& text, std::optional<std::int64_t> p,
                          std::optional<int> n, std::optional<int> e_max) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  InputDocument doc;
  if (first != std::string::npos && text[first] == '{') {
    doc = parse_document_json(text);
    if (n && *n != doc.variables)
      throw InputError("n = " + std::to_string(*n) + " conflicts with the document's " +
                       "variables = " + std::to_string(doc.variables));
  } else {
    doc.generators = parse_inline_generators(text, n);
    doc.variables =
        n ? *n : (doc.generators.empty() ? 0 : static_cast<int>(doc.generators[0].size()));
  }
  if (p) doc.p = *p;
  if (e_max) doc.e_max = *e_max;
  validate_document(doc);
  return doc;
}

void validate_document(const InputDocument& doc) {
  if (doc.variables < 1)
    throw InputError("the ideal must involve at least one variable");
  if (!is_prime(doc.p))
    throw InputError("p is required and must be prime, got " + std::to_string(doc.p));
  if (doc.generators.empty()) throw InputError("at least one generator is required");
  for (std::size_t g = 0; g < doc.generators.size(); ++g) {
    if (static_cast<int>(doc.generators[g].size()) != doc.variables)
      throw InputError("generators[" + std::to_string(g) + "] has length " +
                       std::to_string(doc.generators[g].size()) + ", expected " +
                       std::to_string(doc.variables));
    for (std::size_t i = 0; i < doc.generators[g].size(); ++i)
      if (doc.generators[g][i] != 0 && doc.generators[g][i] != 1)
        throw InputError("generators[" + std::to_string(g) + "][" + std::to_string(i) +
                         "] must be 0 or 1");
  }
  if (doc.e_max && *doc.e_max < 1) throw InputError("e_max must be at least 1");
}

nlohmann::json document_to_json(const InputDocument& doc) {
  nlohmann::json j;
  j["variables"] = doc.variables;
  j["p"] = doc.p;
  if (doc.e_max) j["e_max"] = *doc.e_max;
  j["generators"] = doc.generators;
  return j;
}

SquareFreeIdeal document_ideal(const InputDocument& doc) {
  std::vector<Monomial> gens;
  for (const auto& row : doc.generators) {
    std::vector<Exponent> e(row.begin(), row.end());
    gens.push_back(Monomial(std::move(e)));
  }
  return SquareFreeIdeal(MonomialIdeal(doc.variables, std::move(gens)));
}

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.num_vars(); ++i) {
    const Exponent x = m.exponents[i];
    if (x == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (x != 1) s += "^" + std::to_string(x);
  }
  return s.empty() ? "1" : s;
}

std::string monomial_text_symbolic(const Monomial& m, Exponent q) {
  std::string s;
  for (int i = 0; i < m.num_vars(); ++i) {
    const Exponent x = m.exponents[i];
    if (x == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (x == q)
      s += "^q";
    else if (x == q - 1)
      s += "^(q-1)";
    else if (x != 1)
      s += "^" + std::to_string(x);
  }
  return s.empty() ? "1" : s;
}

namespace {

nlohmann::json one_based(const std::vector<int>& v) {
  nlohmann::json a = nlohmann::json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

nlohmann::json gens_json(const MonomialIdeal& A) {
  nlohmann::json a = nlohmann::json::array();
  for (const Monomial& g : A.gens()) a.push_back(g.exponents);
  return a;
}

nlohmann::json gens_symbolic_json(const MonomialIdeal& A, Exponent q) {
  nlohmann::json a = nlohmann::json::array();
  for (const Monomial& g : A.gens()) a.push_back(monomial_text_symbolic(g, q));
  return a;
}

nlohmann::json support_json(const SupportSet& S) {
  nlohmann::json gammas = nlohmann::json::array();
  for (const auto& g : S.gamma) gammas.push_back(one_based(g));
  return nlohmann::json{{"gamma", gammas}, {"minimal", S.is_minimal}};
}

std::string poly_text(const std::vector<std::int64_t>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    const std::int64_t c = coeffs[d];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const std::int64_t a = std::abs(c);
    if (d == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "T";
      if (d > 1) os << "^" << d;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace

CommandResult run_command(const std::string& command,
                          const std::optional<InputDocument>& doc,
                          const CommandOptions& opt) {
  nlohmann::json out;

  if (command == "verify") {
    oracle::SuiteOptions sopt;
    sopt.seed = opt.seed;
    sopt.instances = opt.count;
    oracle::SuiteReport rep;
    if (doc) {
      validate_document(*doc);
      cross_check_ideal(document_ideal(*doc), sopt, rep, "input ideal");
      rep.instances = 1;
      out["mode"] = "ideal";
    } else {
      rep = oracle::run_cross_checks(sopt);
      out["mode"] = "random";
      out["seed"] = rep.seed;
    }
    out["instances"] = rep.instances;
    out["passed"] = rep.passed();
    out["checks"] = nlohmann::json{{"colon", rep.colon_checks},
                                   {"le", rep.le_checks},
                                   {"mu", rep.mu_checks},
                                   {"stabilization", rep.theorem_checks},
                                   {"transport", rep.transport_checks},
                                   {"flat_extension", rep.flat_checks}};
    out["failures"] = rep.failures;
    return {out, rep.passed() ? 0 : 3};
  }

  if (!doc) throw InputError("command '" + command + "' requires an ideal");
  validate_document(*doc);
  const std::int64_t p = doc->p;
  const int e_max = opt.e_max ? *opt.e_max : doc->e_max.value_or(5);

  if (command == "colon" || command == "jq") {
    SquareFreeIdeal I = document_ideal(*doc);
    Restriction R = restrict_variables(I);
    Decomposition D = minimal_primes(R.ideal);
    const Exponent q = prime_power(p, opt.e);
    const MonomialIdeal K = colon_abz(R.ideal, D, q);
    out["ideal"] = document_to_json(*doc);
    out["p"] = p;
    out["e"] = opt.e;
    out["q"] = q;
    out["restricted_variables"] = one_based(R.kept);
    if (command == "colon") {
      out["generators"] = gens_json(K);
      out["generators_symbolic"] = gens_symbolic_json(K, q);
    } else {
      const MonomialIdeal Jq = extract_Jq(R.ideal, q, K);
      out["J_q"] = gens_json(Jq);
      out["J_q_symbolic"] = gens_symbolic_json(Jq, q);
      out["support_set"] = support_json(support_set(Jq));
    }
    return {out, 0};
  }

  if (command == "classify") {
    const Analysis A = analyze(document_ideal(*doc), p, 1);
    out["case"] = to_string(A.report.generation_case);
    out["principally_generated"] = principally_generated(A.report.generation_case);
    out["mu"] = A.report.mu;
    out["jp_zero"] = A.classification.jp_zero;
    out["jp_in_bracket_plus_full_product"] = A.classification.jp_in_bracket_plus_face;
    out["jp_in_full_product"] = A.classification.jp_in_face_power;
    out["restricted_variables"] = one_based(A.restriction.kept);
    return {out, 0};
  }

  if (command == "complexity") {
    const Analysis A = analyze(document_ideal(*doc), p, e_max);
    const GeneratingFunction G = generating_function(A.report.mu, e_max, opt.c0_one);
    out["case"] = to_string(A.report.generation_case);
    out["principally_generated"] = principally_generated(A.report.generation_case);
    out["mu"] = A.report.mu;
    out["c"] = A.report.c;
    out["k"] = A.report.k;
    if (A.report.complexity_minus_infinity)
      out["frobenius_complexity"] = "-inf";
    else
      out["frobenius_complexity"] = 0;
    out["genfun"] = nlohmann::json{{"numerator", G.numerator}, {"denominator", G.denominator}};
    out["J_p"] = gens_json(A.J_p);
    out["support_set"] = support_json(A.support);
    out["restricted_variables"] = one_based(A.restriction.kept);
    return {out, 0};
  }

  if (command == "support") {
    const Analysis A = analyze(document_ideal(*doc), p, 1);
    const nlohmann::json S = support_json(A.support);
    out["gamma"] = S["gamma"];
    out["minimal"] = S["minimal"];
    out["restricted_variables"] = one_based(A.restriction.kept);
    return {out, 0};
  }

  if (command == "genfun") {
    const Analysis A = analyze(document_ideal(*doc), p, 1);
    const GeneratingFunction G = generating_function(A.report.mu, e_max, opt.c0_one);
    out["mu"] = A.report.mu;
    out["numerator"] = G.numerator;
    out["denominator"] = G.denominator;
    out["coefficients"] = G.coefficients;
    out["c0_convention"] = opt.c0_one ? "one" : "zero";
    return {out, 0};
  }

  throw InputError("unknown command '" + command + "'");
}

std::string render_text(const std::string& command, const nlohmann::json& r) {
  std::ostringstream os;
  const auto list_strings = [&](const nlohmann::json& a) {
    for (const auto& s : a) os << "  " << s.get<std::string>() << "\n";
  };
  if (command == "colon") {
    os << "(I^[q] : I) at q = " << r["q"] << " (p = " << r["p"] << ", e = " << r["e"]
       << ")\n";
    list_strings(r["generators_symbolic"]);
    os << "restricted variables: " << r["restricted_variables"].dump() << "\n";
  } else if (command == "jq") {
    os << "J_q at q = " << r["q"] << " (p = " << r["p"] << ", e = " << r["e"] << ")\n";
    if (r["J_q"].empty()) os << "  0\n";
    list_strings(r["J_q_symbolic"]);
    os << "support set: " << r["support_set"]["gamma"].dump()
       << (r["support_set"]["minimal"].get<bool>() ? " (minimal)" : " (not minimal)")
       << "\n";
    os << "restricted variables: " << r["restricted_variables"].dump() << "\n";
  } else if (command == "classify") {
    os << "case " << r["case"].get<std::string>() << "\n";
    os << "principally generated: "
       << (r["principally_generated"].get<bool>() ? "yes" : "no") << "\n";
    os << "mu = " << r["mu"] << "\n";
    os << "J_p = 0: " << (r["jp_zero"].get<bool>() ? "yes" : "no") << "\n";
    os << "J_p inside I^[p] + ((x_1..x_n)^(p-1)): "
       << (r["jp_in_bracket_plus_full_product"].get<bool>() ? "yes" : "no") << "\n";
    os << "J_p inside ((x_1..x_n)^(p-1)): "
       << (r["jp_in_full_product"].get<bool>() ? "yes" : "no") << "\n";
  } else if (command == "complexity") {
    os << "case " << r["case"].get<std::string>() << " (principally generated: "
       << (r["principally_generated"].get<bool>() ? "yes" : "no") << ")\n";
    os << "mu = " << r["mu"] << "\n";
    os << "c = " << r["c"].dump() << "\n";
    os << "k = " << r["k"].dump() << "\n";
    os << "Frobenius complexity = "
       << (r["frobenius_complexity"].is_string() ? "-inf" : "0") << "\n";
    std::vector<std::int64_t> num = r["genfun"]["numerator"].get<std::vector<std::int64_t>>();
    std::vector<std::int64_t> den = r["genfun"]["denominator"].get<std::vector<std::int64_t>>();
    os << "G(T) = (" << poly_text(num) << ") / (" << poly_text(den) << ")\n";
    os << "J_p = " << r["J_p"].dump() << "\n";
    os << "support set: " << r["support_set"]["gamma"].dump()
       << (r["support_set"]["minimal"].get<bool>() ? " (minimal)" : " (not minimal)")
       << "\n";
    os << "restricted variables: " << r["restricted_variables"].dump() << "\n";
  } else if (command == "support") {
    os << "support set: " << r["gamma"].dump() << "\n";
    os << "minimal: " << (r["minimal"].get<bool>() ? "yes" : "no") << "\n";
  } else if (command == "genfun") {
    std::vector<std::int64_t> num = r["numerator"].get<std::vector<std::int64_t>>();
    std::vector<std::int64_t> den = r["denominator"].get<std::vector<std::int64_t>>();
    os << "G(T) = (" << poly_text(num) << ") / (" << poly_text(den) << ")\n";
    os << "coefficients: " << r["coefficients"].dump() << "\n";
  } else if (command == "verify") {
    os << (r["passed"].get<bool>() ? "all checks passed" : "CHECKS FAILED") << "\n";
    if (r.contains("seed")) os << "seed: " << r["seed"] << "\n";
    os << "instances: " << r["instances"] << "\n";
    os << "checks: " << r["checks"].dump() << "\n";
    for (const auto& f : r["failures"]) os << "  failure: " << f.get<std::string>() << "\n";
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

int exit_code_for(const std::exception& err) {
  if (dynamic_cast<const FormulaViolationError*>(&err) != nullptr) return 2;
  if (dynamic_cast<const Error*>(&err) != nullptr) return 1;
  return 2;
}

nlohmann::json error_json(const std::exception& err) {
  const auto kind = [&]() -> std::string {
    if (dynamic_cast<const FormulaViolationError*>(&err)) return "formula_violation";
    if (dynamic_cast<const NotSquareFreeError*>(&err)) return "not_square_free";
    if (dynamic_cast<const ZeroIdealError*>(&err)) return "zero_ideal";
    if (dynamic_cast<const UnitIdealError*>(&err)) return "unit_ideal";
    if (dynamic_cast<const ParseError*>(&err)) return "parse";
    if (dynamic_cast<const InputError*>(&err)) return "input";
    if (dynamic_cast<const PreconditionError*>(&err)) return "precondition";
    if (dynamic_cast<const OverflowError*>(&err)) return "overflow";
    if (dynamic_cast<const UndefinedColonError*>(&err)) return "undefined_colon";
    if (dynamic_cast<const ContextMismatchError*>(&err)) return "context_mismatch";
    return "internal";
  }();
  return nlohmann::json{{"error", {{"kind", kind}, {"message", err.what()}}}};
}

}  // namespace frobcx
