#include "permchar/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "permchar/catalog.hpp"
#include "permchar/chartable.hpp"
#include "permchar/pchar.hpp"
#include "permchar/report.hpp"
#include "permchar/structure.hpp"
#include "permchar/subgroups.hpp"

namespace permchar
{

using nlohmann::json;

std::string to_string(Outcome o)
{
  switch (o) {
  case Outcome::holds: return "holds";
  case Outcome::fails: return "fails";
  case Outcome::not_applicable: return "not_applicable";
  }
  return "unknown";
}

namespace
{

class Timer
{
public:
  double seconds() const
  {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Verdict start(const std::string &claim, const GroupPtr &g, std::optional<PrimeSet> pi = {})
{
  Verdict v;
  v.claim = claim;
  v.group = g->name();
  v.pi = std::move(pi);
  return v;
}

json row_json(const CharacterTable &t, std::size_t row)
{
  return {{"row", row}, {"degree", t.degree(row)}, {"values", report::values_json(t.row(row))}};
}

} // namespace

Verdict theorem_a(const GroupPtr &g)
{
  Timer timer;
  Verdict v = start("theorem_a", g);
  const PCharReport rep = p_characters(g, true);
  const CharacterTable &t = character_table(g);
  const SubgroupLattice &lattice = all_subgroups(g);
  const bool solvable = is_solvable(g);

  bool all_monomial = true;
  json chars = json::array();
  for (const auto &[row, w] : rep.monomial) {
    json c = row_json(t, row);
    c["monomial"] = w.has_value();
    if (w) {
      c["witness"] = report::witness_json(*w);
    } else {
      all_monomial = false;
      // The subgroup classes that were searched, so the claim can be rechecked.
      json searched = json::array();
      for (const auto &cls : lattice.classes()) {
        if (cls.representative.index() == t.degree(row))
          searched.push_back(report::subgroup_json(cls.representative));
      }
      c["index_degree_subgroups"] = searched;
    }
    chars.push_back(c);
  }
  v.witness = {{"solvable", solvable},
               {"all_p_characters_monomial", all_monomial},
               {"cd_p", rep.cd_p},
               {"p_characters", chars}};
  if (!all_monomial || solvable) {
    v.outcome = Outcome::holds;
    v.reason = solvable ? "G is solvable" : "G is not solvable and has a nonmonomial P-character";
  } else {
    v.outcome = Outcome::fails;
    v.reason = "every P-character is monomial but G is not solvable";
  }
  v.seconds = timer.seconds();
  return v;
}

Verdict theorem_b(const GroupPtr &g, const PrimeSet &pi)
{
  Timer timer;
  Verdict v = start("theorem_b", g, pi);
  if (!is_pi_solvable(g, pi)) {
    v.outcome = Outcome::not_applicable;
    v.reason = "G is not pi-solvable";
    v.seconds = timer.seconds();
    return v;
  }
  const PCharReport rep = p_pi_characters(g, pi);
  std::vector<std::uint64_t> bad;
  json offending = json::array();
  for (const auto &e : rep.entries) {
    for (const auto &c : e.constituents) {
      if (!pi.is_pi_number(c.degree)) {
        offending.push_back({{"row", c.row}, {"degree", c.degree}, {"maximal_index", e.index}});
        bad.push_back(c.degree);
      }
    }
  }
  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  const bool lhs = bad.empty();
  const NormalComplement nc = normal_pi_complement(g, pi);
  const bool rhs = nc.exists;
  v.witness = {{"degrees_are_pi_numbers", lhs},
               {"has_normal_pi_complement", rhs},
               {"p_pi_degrees", rep.cd_p},
               {"non_pi_degrees", bad},
               {"offending", offending},
               {"pi_prime_part", pi.complement_part_of(g->order())},
               {"pi_prime_generated", report::subgroup_json(nc.witness)}};
  v.outcome = lhs == rhs ? Outcome::holds : Outcome::fails;
  v.reason = std::string("degrees pi-numbers: ") + (lhs ? "true" : "false") +
             ", normal pi-complement: " + (rhs ? "true" : "false");
  v.seconds = timer.seconds();
  return v;
}

Verdict theorem_c(const GroupPtr &g, const PrimeSet &pi)
{
  Timer timer;
  Verdict v = start("theorem_c", g, pi);
  if (!is_pi_separable(g, pi)) {
    v.outcome = Outcome::not_applicable;
    v.reason = "G is not pi-separable";
    v.seconds = timer.seconds();
    return v;
  }
  const PCharReport rep = p_pi_characters(g, pi);
  const CharacterTable &t = character_table(g);
  const bool hypothesis = rep.irr_p.size() == t.size();
  const bool conclusion = pi.is_pi_number(g->order());

  const Subgroup o = o_pi_prime(g, pi);
  bool inclusions = true;
  json entries = json::array();
  std::map<std::size_t, Subgroup> kernels;
  for (const auto &e : rep.entries) {
    const Subgroup c = core(e.maximal);
    const Subgroup k = kernel(e.perm_char);
    const bool core_is_kernel = c == k;
    const bool o_in_core = c.contains(o);
    bool core_in_constituent_kernels = true;
    for (const auto &con : e.constituents) {
      auto it = kernels.find(con.row);
      if (it == kernels.end())
        it = kernels.emplace(con.row, kernel(t.row(con.row))).first;
      if (!it->second.contains(c))
        core_in_constituent_kernels = false;
    }
    inclusions = inclusions && core_is_kernel && o_in_core && core_in_constituent_kernels;
    entries.push_back({{"maximal", report::subgroup_json(e.maximal)},
                       {"core_order", c.order()},
                       {"core_equals_kernel_of_permutation_character", core_is_kernel},
                       {"o_pi_prime_in_core", o_in_core},
                       {"core_in_constituent_kernels", core_in_constituent_kernels}});
  }
  json missing = json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (!std::binary_search(rep.irr_p.begin(), rep.irr_p.end(), r))
      missing.push_back(row_json(t, r));
  }
  v.witness = {{"all_irreducibles_p_pi", hypothesis},
               {"pi_group", conclusion},
               {"o_pi_prime", report::subgroup_json(o)},
               {"entries", entries},
               {"rows_not_p_pi", missing}};
  const bool implication = !hypothesis || conclusion;
  v.outcome = implication && inclusions ? Outcome::holds : Outcome::fails;
  if (!implication)
    v.reason = "every irreducible is a P_pi-character but G is not a pi-group";
  else if (!inclusions)
    v.reason = "O_pi'(G) <= Core_G(M) <= ker chi fails for some entry";
  else
    v.reason = hypothesis ? "G is a pi-group" : "some irreducible is not a P_pi-character";
  v.seconds = timer.seconds();
  return v;
}

Verdict nilpotency_criterion(const GroupPtr &g)
{
  Timer timer;
  Verdict v = start("nilpotency", g);
  const PCharReport rep = p_characters(g);
  const bool nilpotent = is_nilpotent(g);
  const bool trivial_degrees = rep.cd_p == std::vector<std::uint64_t>{1};
  v.witness = {{"nilpotent", nilpotent}, {"cd_p", rep.cd_p}};
  v.outcome = nilpotent == trivial_degrees ? Outcome::holds : Outcome::fails;
  v.reason = std::string(nilpotent ? "nilpotent" : "not nilpotent") + ", cd_P = " +
             report::degree_set_text(rep.cd_p);
  v.seconds = timer.seconds();
  return v;
}

namespace
{

// lambda^x for x in G, as a class function of n.as_group().
ClassFunction conjugate_character(const Subgroup &n, const ClassFunction &lambda, Elem x)
{
  const Group &g = *n.ambient();
  const GroupPtr local = n.as_group();
  std::vector<Cyclo> values(local->num_classes());
  const Elem xinv = g.elements().inverse(x);
  for (std::size_t c = 0; c < values.size(); ++c) {
    const Elem rep = n.to_ambient(local->classes()[c].representative);
    values[c] = lambda.at(n.to_local(g.elements().conj(rep, xinv)));
  }
  return {local, std::move(values)};
}

} // namespace

Verdict lemma_bijection(const GroupPtr &g)
{
  Timer timer;
  Verdict v = start("lemma_bijection", g);
  if (!is_solvable(g)) {
    v.outcome = Outcome::not_applicable;
    v.reason = "G is not solvable";
    v.seconds = timer.seconds();
    return v;
  }
  const auto decompositions = complement_decompositions(g);
  if (decompositions.empty()) {
    v.outcome = Outcome::not_applicable;
    v.reason = "no decomposition G = N x| H with N minimal normal and H maximal";
    v.seconds = timer.seconds();
    return v;
  }
  const CharacterTable &t = character_table(g);
  bool all_ok = true;
  json list = json::array();
  for (const auto &[n, h] : decompositions) {
    const GroupPtr local = n.as_group();
    const auto irr_n = linear_characters(n); // N is elementary abelian here
    const std::size_t count = irr_n.size();

    // G-orbits on Irr(N).
    std::vector<std::size_t> orbit_of(count, count);
    std::vector<std::vector<std::size_t>> orbits;
    for (std::size_t s = 0; s < count; ++s) {
      if (orbit_of[s] != count)
        continue;
      std::vector<std::size_t> orbit{s};
      orbit_of[s] = orbits.size();
      for (std::size_t k = 0; k < orbit.size(); ++k) {
        for (Elem x : g->generator_elems()) {
          const ClassFunction image = conjugate_character(n, irr_n[orbit[k]], x);
          auto it = std::find(irr_n.begin(), irr_n.end(), image);
          const auto idx = static_cast<std::size_t>(it - irr_n.begin());
          if (idx == count)
            throw std::logic_error("conjugate of a linear character is not linear");
          if (orbit_of[idx] == count) {
            orbit_of[idx] = orbits.size();
            orbit.push_back(idx);
          }
        }
      }
      orbits.push_back(std::move(orbit));
    }

    const ClassFunction psi = permutation_character(h);
    const auto mult = t.decompose(psi);
    bool ok = true;
    std::set<std::size_t> hit;
    json constituents = json::array();
    for (std::size_t r = 0; r < t.size(); ++r) {
      if (mult[r].is_zero())
        continue;
      const ClassFunction chi_n = restrict_to(t.row(r), n);
      std::set<std::size_t> support_orbits;
      std::vector<std::size_t> support;
      for (std::size_t s = 0; s < count; ++s) {
        if (!inner_product(chi_n, irr_n[s]).is_zero()) {
          support.push_back(s);
          support_orbits.insert(orbit_of[s]);
        }
      }
      const bool single_orbit = support_orbits.size() == 1 &&
                                support.size() == orbits[*support_orbits.begin()].size();
      json c = {{"row", r}, {"degree", t.degree(r)}, {"single_orbit", single_orbit}};
      if (!single_orbit) {
        ok = false;
        constituents.push_back(c);
        continue;
      }
      const std::size_t orbit = *support_orbits.begin();
      if (!hit.insert(orbit).second)
        ok = false;
      const std::size_t s = orbits[orbit].front();
      const Subgroup inertia = inertia_group(n, irr_n[s]);
      const bool degree_ok = t.degree(r) == inertia.index();

      // Extension of lambda to a linear character of the inertia group.
      std::optional<ClassFunction> extension;
      for (auto &mu : linear_characters(inertia)) {
        bool restricts = true;
        for (Elem e : n.elements()) {
          if (!(mu.at(inertia.to_local(e)) == irr_n[s].at(n.to_local(e)))) {
            restricts = false;
            break;
          }
        }
        if (restricts) {
          extension = std::move(mu);
          break;
        }
      }
      ok = ok && degree_ok && extension.has_value();
      c["orbit_size"] = orbits[orbit].size();
      c["lambda"] = report::values_json(irr_n[s]);
      c["inertia_group"] = report::subgroup_json(inertia);
      c["degree_equals_inertia_index"] = degree_ok;
      c["extension"] = extension ? report::values_json(*extension) : json(nullptr);
      constituents.push_back(c);
    }
    const bool bijective = hit.size() == orbits.size();
    ok = ok && bijective;
    all_ok = all_ok && ok;
    list.push_back({{"normal", report::subgroup_json(n)},
                    {"complement", report::subgroup_json(h)},
                    {"orbits", orbits.size()},
                    {"constituents", constituents},
                    {"bijective", bijective},
                    {"holds", ok}});
  }
  v.witness = {{"decompositions", list}};
  v.outcome = all_ok ? Outcome::holds : Outcome::fails;
  v.reason = all_ok ? "constituents match G-orbits on Irr(N) for every decomposition"
                    : "some decomposition violates the correspondence";
  v.seconds = timer.seconds();
  return v;
}

ScanReport conjecture_scan(const std::vector<std::string> &specs, int workers,
                           std::uint64_t order_bound)
{
  ScanReport out;
  out.results.resize(specs.size());
  const int threads = std::max(1, workers);
  const auto count = static_cast<std::int64_t>(specs.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    ScanResult &r = out.results[i];
    r.spec = specs[i];
    try {
      const GroupPtr g = build_group(specs[i], order_bound);
      const PCharReport rep = p_characters(g);
      r.order = g->order();
      r.solvable = is_solvable(g);
      r.cd_p = rep.cd_p;
      r.counterexample = rep.cd_p.size() <= 2 && !r.solvable;
      if (r.counterexample)
        r.report = report::pchars_json(rep);
      r.ok = true;
    } catch (const std::exception &e) {
      r.ok = false;
      r.error = e.what();
    }
  }
  for (const auto &r : out.results) {
    if (!r.ok) {
      ++out.errors;
      continue;
    }
    ++out.scanned;
    if (r.cd_p.size() <= 2)
      ++out.candidates;
    if (r.counterexample)
      ++out.counterexamples;
  }
  return out;
}

json verdict_json(const Verdict &v, bool with_timing)
{
  json out = {{"claim", v.claim},
              {"group", v.group},
              {"outcome", to_string(v.outcome)},
              {"holds", v.holds()},
              {"reason", v.reason},
              {"witness", v.witness}};
  out["pi"] = v.pi ? json(v.pi->primes()) : json(nullptr);
  if (with_timing)
    out["seconds"] = v.seconds;
  return out;
}

std::string verdict_text(const Verdict &v, bool with_timing)
{
  std::ostringstream os;
  os << v.claim << " " << v.group;
  if (v.pi)
    os << " pi={" << v.pi->to_string() << "}";
  os << ": " << to_string(v.outcome) << " (" << v.reason << ")";
  if (with_timing)
    os << " [" << v.seconds << " s]";
  os << "\n";
  return os.str();
}

json scan_result_json(const ScanResult &s)
{
  json e = {{"group", s.spec}, {"ok", s.ok}};
  if (s.ok) {
    e["order"] = s.order;
    e["solvable"] = s.solvable;
    e["cd_p"] = s.cd_p;
    e["counterexample"] = s.counterexample;
    if (s.counterexample)
      e["report"] = s.report;
  } else {
    e["error"] = s.error;
  }
  return e;
}

json scan_json(const ScanReport &r)
{
  json results = json::array();
  for (const auto &s : r.results)
    results.push_back(scan_result_json(s));
  return {{"claim", "cd_p_at_most_two_implies_solvable"},
          {"scanned", r.scanned},
          {"candidates", r.candidates},
          {"counterexamples", r.counterexamples},
          {"errors", r.errors},
          {"results", results}};
}

std::string scan_log(const ScanReport &r)
{
  std::string out;
  for (const auto &s : r.results)
    out += scan_result_json(s).dump() + "\n";
  return out;
}

std::string scan_text(const ScanReport &r)
{
  std::ostringstream os;
  for (const auto &s : r.results) {
    if (!s.ok) {
      os << s.spec << ": error: " << s.error << "\n";
      continue;
    }
    os << s.spec << ": order " << s.order << " cd_P " << report::degree_set_text(s.cd_p)
       << (s.solvable ? " solvable" : " nonsolvable");
    if (s.counterexample)
      os << " COUNTEREXAMPLE";
    os << "\n";
  }
  os << "scanned " << r.scanned << " groups, " << r.candidates << " with |cd_P| <= 2, "
     << r.counterexamples << " counterexamples, " << r.errors << " errors\n";
  if (r.counterexamples == 0)
    os << "no counterexample among " << r.scanned << " groups\n";
  return os.str();
}

} // namespace permchar
