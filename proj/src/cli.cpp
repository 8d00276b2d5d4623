#include "permchar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "permchar/catalog.hpp"
#include "permchar/chartable.hpp"
#include "permchar/error.hpp"
#include "permchar/kernels.hpp"
#include "permchar/pchar.hpp"
#include "permchar/report.hpp"
#include "permchar/subgroups.hpp"
#include "permchar/verify.hpp"

namespace permchar::cli
{

namespace
{

struct Options
{
  std::string spec;
  std::string claim;
  std::string pi_text;
  std::vector<std::string> specs;
  bool json = false;
  bool conjecture = false;
  bool timing = false;
  std::uint64_t max_order = Group::kDefaultOrderBound;
  int workers = 1;
  std::string out_path;
  std::string log_path;
};

std::string dump(const nlohmann::json &j) { return j.dump(2) + "\n"; }

std::optional<PrimeSet> parse_pi(const std::string &text)
{
  if (text.empty())
    return std::nullopt;
  return PrimeSet::parse(text);
}

// Produces the output text and the exit code for a parsed command.
// `log` receives JSON lines for the verdict log.
int execute(const std::string &verb, const Options &o, std::string &text, std::string &log)
{
  const auto pi = parse_pi(o.pi_text);

  if (verb == "scan") {
    const auto specs = o.specs.empty() ? full_catalog() : o.specs;
    const ScanReport r = conjecture_scan(specs, o.workers, o.max_order);
    text = o.json ? dump(scan_json(r)) : scan_text(r);
    log = scan_log(r);
    return r.counterexamples ? kCounterexample : kOk;
  }

  const GroupPtr g = build_group(o.spec, o.max_order);
  if (verb == "table") {
    const CharacterTable &t = character_table(g);
    text = o.json ? dump(report::table_json(t)) : report::table_text(t);
    return kOk;
  }
  if (verb == "maximal") {
    const auto maximal = maximal_subgroups(g);
    text = o.json ? dump(report::maximal_json(g, maximal)) : report::maximal_text(g, maximal);
    return kOk;
  }
  if (verb == "pchars" || verb == "cdp" || verb == "monomial") {
    const bool monomial = verb == "monomial";
    const PCharReport r = pi ? p_pi_characters(g, *pi, monomial) : p_characters(g, monomial);
    if (verb == "pchars")
      text = o.json ? dump(report::pchars_json(r)) : report::pchars_text(r);
    else if (verb == "cdp")
      text = o.json ? dump(report::cdp_json(r)) : report::cdp_text(r);
    else
      text = o.json ? dump(report::monomial_json(r)) : report::monomial_text(r);
    return kOk;
  }
  if (verb == "verify") {
    Verdict v;
    if (o.claim == "a") {
      v = theorem_a(g);
    } else if (o.claim == "b" || o.claim == "c") {
      if (!pi)
        throw CLI::ValidationError("--pi", "verify " + o.claim + " needs --pi");
      v = o.claim == "b" ? theorem_b(g, *pi) : theorem_c(g, *pi);
    } else if (o.claim == "nilp") {
      v = nilpotency_criterion(g);
    } else {
      v = lemma_bijection(g);
    }
    text = o.json ? dump(verdict_json(v, o.timing)) : verdict_text(v, o.timing);
    log = verdict_json(v, o.timing).dump() + "\n";
    return v.outcome == Outcome::fails ? kCounterexample : kOk;
  }
  throw std::logic_error("unhandled verb " + verb);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"P-characters, character tables and monomiality of finite permutation groups",
               "permchar"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App *sub) {
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--max-order", o.max_order, "Largest group order accepted")
      ->check(CLI::PositiveNumber);
    sub->add_option("--workers", o.workers, "Worker threads (output is unaffected)")
      ->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out_path, "Write output to this file");
  };
  auto add_spec = [&](CLI::App *sub) {
    sub->add_option("spec", o.spec, "Group spec, e.g. alt:5, psl2:27, prod:sym:3,cyc:2")
      ->required();
  };
  auto add_pi = [&](CLI::App *sub) {
    sub->add_option("--pi", o.pi_text, "Comma-separated primes");
  };

  std::vector<CLI::App *> subs;
  auto *table = app.add_subcommand("table", "Character table");
  auto *maximal = app.add_subcommand("maximal", "Maximal subgroup classes");
  auto *pchars = app.add_subcommand("pchars", "P-character report");
  auto *cdp = app.add_subcommand("cdp", "Degree set of P-characters");
  auto *monomial = app.add_subcommand("monomial", "Monomiality of each P-character");
  auto *verify = app.add_subcommand("verify", "Check a theorem on a group");
  auto *scan = app.add_subcommand("scan", "Falsification scan over groups");
  for (auto *sub : {table, maximal, pchars, cdp, monomial, verify, scan})
    add_common(sub);
  for (auto *sub : {table, maximal, pchars, cdp, monomial})
    add_spec(sub);
  add_pi(pchars);
  add_pi(cdp);
  add_pi(monomial);

  verify->add_option("claim", o.claim, "a | b | c | nilp | lemma")
    ->required()
    ->check(CLI::IsMember({"a", "b", "c", "nilp", "lemma"}));
  add_spec(verify);
  add_pi(verify);
  verify->add_flag("--timing", o.timing, "Include wall time in the verdict");
  for (auto *sub : {verify, scan})
    sub->add_option("--log", o.log_path, "Append verdicts to this file as JSON lines");

  scan->add_flag("--conjecture", o.conjecture, "Scan for |cd_P(G)| <= 2 with G nonsolvable")
    ->required();
  scan->add_option("specs", o.specs, "Groups to scan (default: the full catalog)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::string verb;
  for (auto *sub : app.get_subcommands())
    verb = sub->get_name();
  kernels::set_threads(o.workers);

  std::string text;
  std::string log;
  int code = kOk;
  try {
    code = execute(verb, o, text, log);
  } catch (const EnumerationIncomplete &e) {
    err << "enumeration incomplete: " << e.what() << "\n";
    return kIncomplete;
  } catch (const BoundExceeded &e) {
    err << "bound exceeded: " << e.what() << "\n";
    return kIncomplete;
  } catch (const CLI::Error &e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  if (!o.log_path.empty()) {
    std::ofstream file(o.log_path, std::ios::binary | std::ios::app);
    if (!file) {
      err << "cannot write " << o.log_path << "\n";
      return kUsage;
    }
    file << log;
  }
  if (o.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "cannot write " << o.out_path << "\n";
      return kUsage;
    }
    file << text;
  }
  return code;
}

} // namespace permchar::cli
