#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "permchar/group.hpp"
#include "permchar/primes.hpp"

// Checks of the P-character theorems on concrete groups.
namespace permchar
{

enum class Outcome
{
  holds,
  fails,
  not_applicable,
};

std::string to_string(Outcome o);

struct Verdict
{
  std::string claim; // theorem_a, theorem_b, theorem_c, nilpotency, lemma_bijection
  std::string group;
  std::optional<PrimeSet> pi;
  Outcome outcome = Outcome::not_applicable;
  std::string reason; // one line, human readable
  nlohmann::json witness = nlohmann::json::object();
  double seconds = 0;

  bool holds() const { return outcome == Outcome::holds; }
};

// All P-characters monomial implies G solvable.
Verdict theorem_a(const GroupPtr &g);
// For pi-solvable G: all P_pi degrees are pi-numbers iff G has a normal
// pi-complement.
Verdict theorem_b(const GroupPtr &g, const PrimeSet &pi);
// For pi-separable G: Irr(G) made of P_pi-characters implies G is a
// pi-group; also checks O_pi'(G) <= Core_G(M) <= ker chi on every P_pi entry.
Verdict theorem_c(const GroupPtr &g, const PrimeSet &pi);
// G nilpotent iff cd_P(G) = {1}.
Verdict nilpotency_criterion(const GroupPtr &g);
// For solvable G = N x| H with N minimal normal and H maximal: constituents
// of (1_H)^G correspond to G-orbits on Irr(N), with chi(1) = |G : I_G(lambda)|
// and lambda extending to I_G(lambda).
Verdict lemma_bijection(const GroupPtr &g);

struct ScanResult
{
  std::string spec;
  bool ok = false; // false: quarantined with `error`
  std::string error;
  std::uint64_t order = 0;
  bool solvable = false;
  std::vector<std::uint64_t> cd_p;
  bool counterexample = false;
  nlohmann::json report; // full P-character report, counterexamples only
};

struct ScanReport
{
  std::vector<ScanResult> results; // in input order
  std::size_t scanned = 0;
  std::size_t candidates = 0; // |cd_P| <= 2
  std::size_t counterexamples = 0;
  std::size_t errors = 0;
};

// Falsification scan for "|cd_P(G)| <= 2 implies G solvable".
ScanReport conjecture_scan(const std::vector<std::string> &specs, int workers = 1,
                           std::uint64_t order_bound = Group::kDefaultOrderBound);

nlohmann::json verdict_json(const Verdict &v, bool with_timing = false);
std::string verdict_text(const Verdict &v, bool with_timing = false);
nlohmann::json scan_result_json(const ScanResult &s);
nlohmann::json scan_json(const ScanReport &r);
// JSON lines, one per scanned group in input order.
std::string scan_log(const ScanReport &r);
std::string scan_text(const ScanReport &r);

} // namespace permchar
