#include "dpl/cli.hpp"

#include "dpl/double_points.hpp"
#include "dpl/error.hpp"
#include "dpl/euler_graph.hpp"
#include "dpl/interval_maps.hpp"
#include "dpl/space_forms.hpp"
#include "dpl/surgery.hpp"

#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>

namespace dpl::cli {

namespace {

constexpr std::size_t kMaxViolations = 50;

// A property returns an empty string on success, otherwise a description.
using Property = std::function<std::string(std::uint64_t seed, int index)>;

std::optional<TransverseArc> random_regular_arc(const PLCircleMap& f, std::uint64_t seed) {
  std::mt19937_64 engine(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Rational lo(static_cast<long>(engine() % 97), 97);
    const Rational hi = lo + Rational(1 + static_cast<long>(engine() % 96), 97);
    if (f.is_regular_value(Angle(lo)) && f.is_regular_value(Angle(hi))) return TransverseArc(lo, hi);
  }
  return std::nullopt;
}

PLCircleMap case_map(std::uint64_t seed) { return random_map(seed, 12, 5); }

std::string normalization(std::uint64_t seed, int) {
  const PLCircleMap f = case_map(seed);
  return PLCircleMap::make(f.breakpoints(), f.degree()) == f ? "" : "re-normalizing changed the map";
}

std::string count_identity(std::uint64_t seed, int) {
  const PLCircleMap f = case_map(seed);
  auto arc = random_regular_arc(f, seed);
  if (!arc) return "";
  const PreimageClassification cls = classify_preimage(f, *arc);
  if (cls.positive - cls.negative != f.degree()) return "p - m differs from the degree";
  const std::vector<std::int64_t> sums = fiber_sign_sums(f, cls, interior_regular_level(f, *arc));
  std::int64_t total = 0;
  for (std::int64_t s : sums) total += s < 0 ? -s : s;
  if (2 * cls.negative + f.degree() != total) return "2m + deg differs from the fiber sign sum";
  return "";
}

std::string tau_pairing(std::uint64_t seed, int) {
  const DoublePointCurve curve = sigma(case_map(seed));
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    const SigmaComponent& s = curve.components[c];
    if (curve.components[s.tau].tau != c) return "tau is not an involution on components";
    if (s.p1_degree != curve.components[s.tau].p2_degree) return "p1 of C differs from p2 of tau C";
  }
  return "";
}

std::string theorem2_analog(std::uint64_t seed, int) {
  const PLCircleMap f = case_map(seed);
  const DoublePointCurve curve = sigma(f);
  for (const SigmaComponent& s : curve.components) {
    const bool ok = (0 <= s.p1_degree && s.p1_degree < f.degree()) || (s.p1_degree == 0 && f.degree() == 0);
    if (!ok) return "p1 degree " + std::to_string(s.p1_degree) + " out of range for degree " + std::to_string(f.degree());
  }
  return "";
}

std::string termination(std::uint64_t seed, int) {
  const PLCircleMap f = case_map(seed);
  auto arc = random_regular_arc(f, seed);
  if (!arc) return "";
  const UnfoldResult u = eliminate_negative_arcs(f, *arc);
  for (std::size_t i = 1; i < u.trace.size(); ++i) {
    if (u.trace[i].negative >= u.trace[i - 1].negative) return "negative count did not decrease";
  }
  const UnfoldStep& last = u.trace.back();
  if (last.negative != 0 || last.positive != f.degree()) return "final arc still has negative arcs";
  return "";
}

std::string lemma4(std::uint64_t seed, int) {
  const PLCircleMap f = case_map(seed);
  auto arc = random_regular_arc(f, seed);
  if (!arc) return "";
  const UnfoldResult u = eliminate_negative_arcs(f, *arc);
  return lemma4_verify(f, u.arc, sigma(f)).all_equal ? "" : "p1 degree differs from the pair count";
}

std::string proposition4(std::uint64_t seed, int) {
  return proposition4_check(sigma(case_map(seed))).violation ? "compact quotient fails to lift through an arc" : "";
}

std::string realizability(std::uint64_t seed, int index) {
  const std::int64_t degrees[] = {-1, 0, 1, 2, -2, 3};
  const std::int64_t d = degrees[index % 6];
  const RealizabilityReport r = realizability_report(sigma(random_map_with_degree(seed, 8, d)));
  if (d >= -1 && d <= 1) {
    if (r.criterion_pass && (r.agreement || r.notes.empty())) return "low-degree discrepancy not flagged";
  } else if (!r.agreement && !r.witness) {
    return "disagreement without an odd tau-invariant witness";
  }
  return "";
}

std::string lemma1(std::uint64_t seed, int) {
  return lemma1_check(random_interval_pair(seed, 4)).connected ? "" : "corner component does not reach (1,1)";
}

std::string euler(std::uint64_t seed, int index) {
  const EulerGraph g = random_euler_graph(seed, 1 + static_cast<std::size_t>(index % 12));
  for (const auto& comp : g.components()) {
    if (count_circuits(g, comp, eulerian_resolution(g, comp)) != 1) return "resolution gives several circuits";
  }
  return "";
}

std::string surgery(std::uint64_t seed, int) {
  std::mt19937_64 engine(seed);
  const std::int64_t c_in = 1 + static_cast<std::int64_t>(engine() % 8);
  const std::int64_t c_out = 1 + static_cast<std::int64_t>(engine() % 8);
  const std::int64_t n = static_cast<std::int64_t>(engine() % 20);
  const std::int64_t gap = c_in > c_out ? c_in - c_out : c_out - c_in;
  // Oracle: the fewest band moves k with n - k orientable moves covering the gap with matching parity.
  std::optional<std::int64_t> fewest;
  for (std::int64_t k = 0; k <= n && !fewest; ++k) {
    if (n - k >= gap && (n - k - gap) % 2 == 0) fewest = k;
  }
  try {
    const SurgeryParity p = surgery_parity(c_in, c_out, n);
    if (!fewest) return "accepted an infeasible count";
    if (p.min_nonorientable != *fewest || p.orientable_only_feasible != (*fewest == 0)) return "parity mismatch";
  } catch (const Error& e) {
    if (fewest) return std::string("rejected a feasible count: ") + e.what();
  }
  return "";
}

std::string sweep(std::uint64_t seed, int) {
  const Movie m = validate_movie(random_movie(seed, 20));
  embedding_certificate(m, assign_disks(m));
  return "";
}

std::string dcover(std::uint64_t, int index) {
  return dcover_consistency(2 + index % 11).agree ? "" : "cover census differs from the group model";
}

}  // namespace

Report cmd_selftest(int cases, std::uint64_t seed, const std::string& echo) {
  if (cases < 1) throw Error(ErrorKind::BadParameter, "need at least one case");
  const std::vector<std::pair<const char*, Property>> properties{
      {"circle_maps.normalization_idempotent", normalization},
      {"circle_maps.preimage_count_identities", count_identity},
      {"double_points.tau_pairing", tau_pairing},
      {"double_points.projection_degree_bound", theorem2_analog},
      {"double_points.lift_or_cover", proposition4},
      {"double_points.realizability_ledger", realizability},
      {"unfolding.termination", termination},
      {"unfolding.pair_count_identity", lemma4},
      {"space_forms.interval_square_connectivity", lemma1},
      {"space_forms.eulerian_resolution", euler},
      {"space_forms.surgery_parity", surgery},
      {"space_forms.cover_model", dcover},
      {"sweeps.embedding_certificate", sweep},
  };
  Report r{echo, sha256_hex("selftest " + std::to_string(cases) + " " + std::to_string(seed)), {}, {}, false};
  Json tally = Json::array();
  Json violations = Json::array();
  std::size_t total_failed = 0;
  for (std::size_t p = 0; p < properties.size(); ++p) {
    std::size_t passed = 0;
    for (int i = 0; i < cases; ++i) {
      const std::uint64_t case_seed = seed * 1000003ULL + static_cast<std::uint64_t>(i) * 7919ULL + p;
      std::string problem;
      try {
        problem = properties[p].second(case_seed, i);
      } catch (const std::exception& e) {
        problem = std::string("exception: ") + e.what();
      }
      if (problem.empty()) {
        ++passed;
      } else {
        ++total_failed;
        if (violations.size() < kMaxViolations) {
          violations.push_back({{"property", properties[p].first}, {"case", i}, {"seed", case_seed}, {"detail", problem}});
        }
      }
    }
    tally.push_back({{"name", properties[p].first}, {"checked", cases}, {"passed", passed}});
  }
  r.result["cases"] = cases;
  r.result["seed"] = seed;
  r.result["properties"] = tally;
  r.result["violations"] = violations;
  r.violation = total_failed > 0;
  std::ostringstream s;
  s << properties.size() << " properties x " << cases << " cases (seed " << seed << "): "
    << (total_failed == 0 ? "all pass" : std::to_string(total_failed) + " violation(s)");
  r.summary = s.str();
  return r;
}

}  // namespace dpl::cli
