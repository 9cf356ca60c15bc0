#include "ramid/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "ramid/construct.hpp"
#include "ramid/enumerate.hpp"
#include "ramid/errors.hpp"
#include "ramid/families.hpp"
#include "ramid/identity.hpp"
#include "ramid/json_io.hpp"
#include "ramid/render.hpp"

namespace ramid::cli {

namespace {

// Raised after flag validation for failures that are the caller's fault.
struct UsageError : Error {
  using Error::Error;
};

Rational parse_flag(const std::string& flag, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

IntRange parse_range(const std::string& flag, const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--" + flag + " expects LO:HI, got '" + text + "'");
  const Rational lo = parse_flag(flag, text.substr(0, colon));
  const Rational hi = parse_flag(flag, text.substr(colon + 1));
  if (!lo.is_integer() || !hi.is_integer() || !lo.numerator().fits_slong_p() || !hi.numerator().fits_slong_p()) {
    throw UsageError("--" + flag + " bounds must be machine integers");
  }
  return {lo.numerator().get_si(), hi.numerator().get_si()};
}

std::string render_as(const AnyIdentity& id, const std::string& format) {
  return std::visit(
      [&](const auto& v) -> std::string {
        if (format == "latex") return render_latex(v);
        if (format == "text") return render_text(v);
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, IdentityTuple>) {
          return to_json_classified(v).dump();
        } else {
          return to_json(v).dump();
        }
      },
      id);
}

bool verifies(const AnyIdentity& id) {
  return std::visit(
      [](const auto& v) {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, IdentityTuple>) {
          return verify_tuple(v);
        } else {
          return verify_variation(v);
        }
      },
      id);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification, construction and enumeration of square-root product identities", "ramid"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "Check sqrt(t(1-1/A^2)(1-1/x^2)(1-1/y^2)(1-1/z^2)) = (1+1/x)(1+1/y)(1+1/z)");
  std::vector<std::string> verify_positional;
  std::string vt, vA, vx, vy, vz;
  verify->add_option("values", verify_positional, "t A x y z");
  verify->add_option("--t", vt);
  verify->add_option("--A", vA);
  verify->add_option("--x", vx);
  verify->add_option("--y", vy);
  verify->add_option("--z", vz);

  // solve
  auto* solve = app.add_subcommand("solve", "Build x, y from t, A, z, k");
  std::string st, sA, sz, sk;
  solve->add_option("--t", st)->required();
  solve->add_option("--A", sA)->required();
  solve->add_option("--z", sz)->required();
  solve->add_option("--k", sk)->required();

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive search for perfect identities");
  std::string cls = "super-perfect";
  bool primes_only = false;
  std::string out_file, summary_file;
  std::int64_t t_min = 2, t_max = 0;
  unsigned threads = 0;
  enumerate->add_option("--class", cls)->check(CLI::IsMember({"super-perfect", "perfect"}));
  enumerate->add_flag("--primes-only", primes_only);
  enumerate->add_option("--out", out_file, "JSON-lines output file (summary goes to stdout)");
  enumerate->add_option("--summary", summary_file, "Write the summary JSON to this file");
  enumerate->add_option("--t-min", t_min)->check(CLI::PositiveNumber);
  enumerate->add_option("--t-max", t_max)->check(CLI::NonNegativeNumber);
  enumerate->add_option("--threads", threads);

  // family
  auto* family = app.add_subcommand("family", "Generate a member of a parametric family");
  std::string family_name, fa, fk, fb, fn;
  std::string family_format = "json";
  family->add_option("name", family_name)->required()->check(CLI::IsMember(std::vector<std::string>(
                                                              family_names().begin(), family_names().end())));
  auto* opt_a = family->add_option("--a", fa);
  auto* opt_k = family->add_option("--k", fk);
  auto* opt_b = family->add_option("--b", fb);
  auto* opt_n = family->add_option("--n", fn);
  family->add_option("--format", family_format)->check(CLI::IsMember({"json", "latex", "text"}));

  // discover
  auto* disc = app.add_subcommand("discover", "Seeded random search for identities at fixed t");
  DiscoverOptions dopts;
  std::string dt = "2", dA, dz, dkn, dkd;
  disc->add_option("--seed", dopts.seed);
  disc->add_option("--trials", dopts.trials);
  disc->add_option("--t", dt);
  disc->add_option("--A-range", dA, "LO:HI");
  disc->add_option("--z-range", dz, "LO:HI");
  disc->add_option("--k-num-range", dkn, "LO:HI");
  disc->add_option("--k-den-range", dkd, "LO:HI");
  disc->add_option("--threads", dopts.threads);

  // render
  auto* render = app.add_subcommand("render", "Render identity JSON lines from standard input");
  std::string render_format = "latex";
  bool unchecked = false;
  render->add_option("--format", render_format)->check(CLI::IsMember({"latex", "text", "json"}));
  render->add_flag("--unchecked", unchecked, "Render even if the identity does not verify");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "ramid: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      const bool any_flag = !vt.empty() || !vA.empty() || !vx.empty() || !vy.empty() || !vz.empty();
      std::vector<std::string> values = verify_positional;
      if (any_flag) {
        if (!values.empty()) throw UsageError("verify: give either five positional values or --t/--A/--x/--y/--z");
        values = {vt, vA, vx, vy, vz};
        if (std::any_of(values.begin(), values.end(), [](const std::string& s) { return s.empty(); })) {
          throw UsageError("verify: --t, --A, --x, --y and --z are all required");
        }
      }
      if (values.size() != 5) throw UsageError("verify: expected t A x y z");
      const char* names[] = {"t", "A", "x", "y", "z"};
      std::vector<Rational> r;
      for (std::size_t i = 0; i < 5; ++i) r.push_back(parse_flag(names[i], values[i]));
      const IdentityTuple id{r[0], r[1], r[2], r[3], r[4]};
      const bool ok = verify_tuple(id);
      Json j = to_json(id, ok ? std::optional(classify(id)) : std::nullopt);
      j["verified"] = ok;
      out << j.dump() << "\n";
      return ok ? kExitOk : kExitFalse;
    }

    if (solve->parsed()) {
      const auto result =
          build_tuple(parse_flag("t", st), parse_flag("A", sA), parse_flag("z", sz), parse_flag("k", sk));
      out << to_json(result).dump() << "\n";
      return result.conditions.all() ? kExitOk : kExitFalse;
    }

    if (enumerate->parsed()) {
      EnumerationOptions opts;
      opts.t_min = t_min;
      opts.t_max = t_max;
      opts.threads = threads;
      EnumerationReport report = cls == "perfect" ? enumerate_perfect(opts) : enumerate_super_perfect(opts);
      if (primes_only) report = prime_filter(report);
      const Json summary = summary_json(report, cls, primes_only);
      auto write_lines = [&](std::ostream& os) {
        for (const auto& id : report.identities) os << to_json(id, classify(id)).dump() << "\n";
      };
      if (!out_file.empty()) {
        std::ofstream file(out_file);
        if (!file) throw UsageError("cannot open " + out_file + " for writing");
        write_lines(file);
        out << summary.dump() << "\n";
      } else {
        write_lines(out);
        err << summary.dump() << "\n";
      }
      if (!summary_file.empty()) {
        std::ofstream file(summary_file);
        if (!file) throw UsageError("cannot open " + summary_file + " for writing");
        file << summary.dump(2) << "\n";
      }
      return kExitOk;
    }

    if (family->parsed()) {
      FamilyParams params;
      for (auto [opt, key, text] : {std::tuple{opt_a, "a", &fa}, std::tuple{opt_k, "k", &fk},
                                    std::tuple{opt_b, "b", &fb}, std::tuple{opt_n, "n", &fn}}) {
        if (opt->count() > 0) params.emplace(key, parse_flag(key, *text));
      }
      out << render_as(make_family(family_name, params), family_format) << "\n";
      return kExitOk;
    }

    if (disc->parsed()) {
      dopts.t = parse_flag("t", dt);
      if (!dA.empty()) dopts.A = parse_range("A-range", dA);
      if (!dz.empty()) dopts.z = parse_range("z-range", dz);
      if (!dkn.empty()) dopts.k_numerator = parse_range("k-num-range", dkn);
      if (!dkd.empty()) dopts.k_denominator = parse_range("k-den-range", dkd);
      const auto found = discover(dopts);
      for (const auto& id : found) out << to_json(id, classify(id)).dump() << "\n";
      return found.empty() ? kExitFalse : kExitOk;
    }

    if (render->parsed()) {
      int status = kExitOk;
      std::string line;
      std::size_t line_no = 0;
      while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json j;
        try {
          j = Json::parse(line);
        } catch (const Json::parse_error& e) {
          throw UsageError("stdin line " + std::to_string(line_no) + ": " + e.what());
        }
        const AnyIdentity id = identity_from_json(j);
        if (!unchecked && !verifies(id)) {
          err << "ramid: line " << line_no << " does not verify (use --unchecked to render anyway)\n";
          status = kExitFalse;
          continue;
        }
        out << render_as(id, render_format) << "\n";
      }
      return status;
    }
  } catch (const UsageError& e) {
    err << "ramid: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    // Malformed numbers, unknown names, trivial or out-of-domain inputs.
    err << "ramid: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ramid::cli
