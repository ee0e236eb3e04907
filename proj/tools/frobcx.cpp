#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "frobcx/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact Frobenius algebra computations for Stanley-Reisner rings"};
  app.require_subcommand(1);

  std::string input_file;
  std::string ideal_text;
  std::string format = "json";
  std::string c0 = "zero";
  std::int64_t p = 0;
  int n = 0;
  int e_max = 0;
  int e = 1;
  int count = 100;
  std::uint64_t seed = frobcx::oracle::kDefaultSeed;

  const auto add_ideal_opts = [&](CLI::App* c) {
    c->add_option("--input", input_file, "read the ideal document (JSON) from this file");
    c->add_option("--ideal", ideal_text, "inline ideal text, e.g. \"x1*x2, x2*x5\"");
    c->add_option("--p", p, "prime characteristic");
    c->add_option("--n", n, "number of variables for inline input");
    c->add_option("--emax", e_max, "largest Frobenius degree e to compute");
    c->add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  CLI::App* colon = app.add_subcommand("colon", "generators of (I^[q] : I) for q = p^e");
  add_ideal_opts(colon);
  colon->add_option("--e", e, "Frobenius degree e, so q = p^e")->check(CLI::PositiveNumber);

  CLI::App* jq = app.add_subcommand("jq", "generators of J_q in degree e");
  add_ideal_opts(jq);
  jq->add_option("--e", e, "Frobenius degree e, so q = p^e")->check(CLI::PositiveNumber);

  add_ideal_opts(app.add_subcommand(
      "classify", "finite/infinite generation case of the Frobenius algebra"));

  CLI::App* complexity = app.add_subcommand(
      "complexity", "complexity sequence c_e, generation case, and generating function");
  add_ideal_opts(complexity);
  complexity
      ->add_option("--c0-convention", c0,
                   "constant term convention for the generating function: zero or one")
      ->check(CLI::IsMember({"zero", "one"}));

  add_ideal_opts(app.add_subcommand("support", "support sets of the J_p generators"));

  CLI::App* genfun =
      app.add_subcommand("genfun", "closed-form generating function of the c_e");
  add_ideal_opts(genfun);
  genfun
      ->add_option("--c0-convention", c0,
                   "constant term convention for the generating function: zero or one")
      ->check(CLI::IsMember({"zero", "one"}));

  CLI::App* verify =
      app.add_subcommand("verify", "cross-check fast paths against brute-force oracles");
  add_ideal_opts(verify);
  verify->add_option("--seed", seed, "random seed for generated instances");
  verify->add_option("--count", count, "number of random instances")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : 1;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();

  try {
    const bool has_input = sub->count("--input") > 0;
    const bool has_ideal = sub->count("--ideal") > 0;
    if (has_input && has_ideal)
      throw frobcx::InputError("give either --input or --ideal, not both");

    std::optional<std::string> text;
    if (has_input) {
      std::ifstream f(input_file);
      if (!f) throw frobcx::InputError("cannot read input file: " + input_file);
      std::ostringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    } else if (has_ideal) {
      text = ideal_text;
    }
    if (command != "verify" && !text)
      throw frobcx::InputError("command '" + command + "' requires --input or --ideal");

    std::optional<frobcx::InputDocument> doc;
    if (text) {
      doc = frobcx::parse_input(
          *text, sub->count("--p") ? std::optional<std::int64_t>(p) : std::nullopt,
          sub->count("--n") ? std::optional<int>(n) : std::nullopt,
          sub->count("--emax") ? std::optional<int>(e_max) : std::nullopt);
    }

    frobcx::CommandOptions opt;
    opt.e = e;
    if (sub->count("--emax") > 0) opt.e_max = e_max;
    opt.c0_one = (c0 == "one");
    opt.seed = seed;
    opt.count = count;

    const frobcx::CommandResult res = frobcx::run_command(command, doc, opt);
    if (format == "text")
      std::cout << frobcx::render_text(command, res.report);
    else
      std::cout << res.report.dump(2) << "\n";
    return res.exit_code;
  } catch (const std::exception& err) {
    if (format == "text")
      std::cerr << "error: " << err.what() << "\n";
    else
      std::cerr << frobcx::error_json(err).dump(2) << "\n";
    return frobcx::exit_code_for(err);
  }
}
