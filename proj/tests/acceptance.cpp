// Acceptance suite: one PASS/FAIL line per criterion.  Limits are pinned here.
#include "dpl/cli.hpp"
#include "dpl/double_points.hpp"
#include "dpl/euler_graph.hpp"
#include "dpl/planar_curve.hpp"
#include "dpl/space_forms.hpp"
#include "dpl/surgery.hpp"
#include "dpl/sweeps.hpp"
#include "dpl/unfolding.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace dpl;

namespace {

constexpr double kCensusSeconds = 1.0;
constexpr double kTerminationSeconds = 60.0;
constexpr double kEulerSeconds = 30.0;
constexpr double kSweepSeconds = 30.0;

constexpr int kTerminationMaps = 1000;
constexpr int kTerminationMaxFolds = 40;
constexpr int kMaxDegree = 5;
constexpr int kIdentityMaps = 500;
constexpr int kIdentityMaxFolds = 20;
constexpr int kLiftMaps = 1000;
constexpr std::size_t kExhaustiveVertices = 6;
constexpr int kRandomGraphs = 100;
constexpr std::size_t kRandomGraphMaxVertices = 12;
constexpr int kMovies = 200;
constexpr int kMovieMaxEvents = 20;
constexpr int kCertificateSamples = 10;
constexpr int kLedgerSeeds = 500;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::optional<TransverseArc> regular_arc(const PLCircleMap& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  for (int k = 0; k < 50; ++k) {
    Rational lo(static_cast<long>(rng() % 1009), 1009);
    Rational hi = lo + Rational(1 + static_cast<long>(rng() % 1008), 1009);
    lo.canonicalize();
    hi.canonicalize();
    if (f.is_regular_value(Angle(lo)) && f.is_regular_value(Angle(hi))) return TransverseArc(lo, hi);
  }
  return std::nullopt;
}

Outcome c1() {
  Outcome o;
  for (std::int64_t d = 2; d <= 12; ++d) {
    const DoublePointCurve c = sigma(covering_map(d));
    const CoverSigmaModel m = cover_sigma_model(build_group(GroupFamily::Cyclic, d));
    std::size_t inv = 0;
    bool p1 = true;
    for (std::size_t i = 0; i < c.components.size(); ++i) {
      inv += c.tau_invariant(i);
      p1 = p1 && c.components[i].compact && c.components[i].p1_degree == 1;
    }
    const bool ok = c.components.size() == static_cast<std::size_t>(d - 1) && inv == (d % 2 == 0 ? 1u : 0u) && p1 &&
                    m.components.size() == c.components.size() && m.invariant_count == inv;
    if (!ok) {
      o.pass = false;
      o.detail += "d=" + std::to_string(d) + " mismatch; ";
    }
  }
  if (o.pass) o.detail = "d = 2..12 match the cyclic model";
  return o;
}

Outcome c2() {
  Outcome o;
  const FiniteGroup q8 = build_group(GroupFamily::BinaryDihedral, 2);
  const FiniteGroup i120 = build_group(GroupFamily::BinaryIcosahedral);
  const FiniteGroup z3 = build_group(GroupFamily::Cyclic, 3);
  const FiniteGroup z4 = build_group(GroupFamily::Cyclic, 4);
  o.pass = q8.order() == 8 && !cover_realizable(q8) && hopf_of_cover(q8) == 1 && i120.order() == 120 &&
           !cover_realizable(i120) && hopf_of_cover(i120) == 1 && cover_realizable(z3) && hopf_of_cover(z3) == 0 &&
           theorem4_verdict(z4) && !theorem4_verdict(std::nullopt);
  o.detail = "Q8 (false,1), 2I (false,1), Z3 (true,0), Z4 verdict true, infinite false";
  return o;
}

Outcome c3() {
  Outcome o;
  int ran = 0, skipped = 0, max_steps = 0;
  for (int s = 0; s < kTerminationMaps; ++s) {
    const std::uint64_t seed = 3000000 + static_cast<std::uint64_t>(s);
    const PLCircleMap f = random_map(seed, kTerminationMaxFolds, kMaxDegree);
    auto arc = regular_arc(f, seed);
    if (!arc) {
      ++skipped;
      continue;
    }
    const UnfoldResult u = eliminate_negative_arcs(f, *arc);
    bool ok = u.trace.back().negative == 0 && u.trace.back().positive == f.degree();
    for (std::size_t i = 1; i < u.trace.size(); ++i) ok = ok && u.trace[i].negative < u.trace[i - 1].negative;
    const PreimageClassification check = classify_preimage(f, u.arc);
    ok = ok && check.negative == 0 && check.positive == f.degree();
    if (!ok) {
      o.pass = false;
      o.detail += "seed " + std::to_string(seed) + " failed; ";
    }
    max_steps = std::max(max_steps, static_cast<int>(u.trace.size()) - 1);
    ++ran;
  }
  if (skipped > 0) {
    o.pass = false;
    o.detail += std::to_string(skipped) + " maps without a regular arc; ";
  }
  o.detail += std::to_string(ran) + " maps, longest trace " + std::to_string(max_steps) + " steps";
  return o;
}

Outcome c4_c5(bool lemma4_part) {
  Outcome o;
  std::size_t components = 0;
  for (int s = 0; s < kIdentityMaps; ++s) {
    const std::uint64_t seed = 4000000 + static_cast<std::uint64_t>(s);
    const PLCircleMap f = random_map(seed, kIdentityMaxFolds, kMaxDegree);
    const DoublePointCurve curve = sigma(f);
    components += curve.components.size();
    if (lemma4_part) {
      auto arc = regular_arc(f, seed);
      if (!arc) {
        o.pass = false;
        o.detail += "seed " + std::to_string(seed) + " has no regular arc; ";
        continue;
      }
      const UnfoldResult u = eliminate_negative_arcs(f, *arc);
      if (!lemma4_verify(f, u.arc, curve).all_equal) {
        o.pass = false;
        o.detail += "seed " + std::to_string(seed) + " pair count differs; ";
      }
    } else {
      for (const SigmaComponent& c : curve.components) {
        const bool ok = (0 <= c.p1_degree && c.p1_degree < f.degree()) || (c.p1_degree == 0 && f.degree() == 0);
        if (!ok) {
          o.pass = false;
          o.detail += "seed " + std::to_string(seed) + " p1=" + std::to_string(c.p1_degree) + "; ";
        }
      }
    }
  }
  o.detail += std::to_string(kIdentityMaps) + " maps, " + std::to_string(components) + " components";
  return o;
}

Outcome c6() {
  Outcome o;
  std::size_t compact = 0;
  for (int s = 0; s < kLiftMaps; ++s) {
    const std::uint64_t seed = 6000000 + static_cast<std::uint64_t>(s);
    const DoublePointCurve curve = sigma(random_map(seed, kIdentityMaxFolds, kMaxDegree));
    const Proposition4Report r = proposition4_check(curve);
    for (const Proposition4Entry& e : r.entries) compact += e.compact;
    if (r.violation) {
      o.pass = false;
      o.detail += "seed " + std::to_string(seed) + "; ";
    }
  }
  o.detail += std::to_string(kLiftMaps) + " maps, " + std::to_string(compact) + " compact quotient components";
  return o;
}

Outcome c7() {
  Outcome o;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= kExhaustiveVertices; ++n) {
    for (const EulerGraph& g : all_euler_graphs(n)) {
      ++graphs;
      for (const auto& comp : g.components()) {
        const Resolution r = eulerian_resolution(g, comp);
        const auto all = brute_force_single_circuit(g, comp);
        bool listed = false;
        for (const Resolution& b : all) {
          bool same = true;
          for (std::size_t v : comp) same = same && b[v] == r[v];
          listed = listed || same;
        }
        if (count_circuits(g, comp, r) != 1 || !listed) {
          o.pass = false;
          o.detail = "exhaustive failure at V=" + std::to_string(n) + "; ";
        }
      }
    }
  }
  for (int s = 0; s < kRandomGraphs; ++s) {
    const EulerGraph g = random_euler_graph(7000000 + static_cast<std::uint64_t>(s),
                                            1 + static_cast<std::size_t>(s) % kRandomGraphMaxVertices);
    Resolution all(g.vertex_count(), false);
    for (const auto& comp : g.components()) {
      const Resolution r = eulerian_resolution(g, comp);
      for (std::size_t v : comp) all[v] = r[v];
    }
    std::vector<std::size_t> succ(g.edges().size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      const std::size_t v = g.edges()[e].second;
      succ[e] = (g.in_edges(v).first == e) != all[v] ? g.out_edges(v).first : g.out_edges(v).second;
    }
    if (oracle::circuits(g.edges(), succ) != g.components().size()) {
      o.pass = false;
      o.detail += "random graph " + std::to_string(s) + "; ";
    }
  }
  o.detail += std::to_string(graphs) + " exhaustive graphs, " + std::to_string(kRandomGraphs) + " random";
  return o;
}

Outcome c8() {
  Outcome o;
  const SurgeryParity p = surgery_parity(4, 12, 15);
  const CensusReport c = example6_census(validate_movie(cli::parse_movie(cli::read_file(cli::example6_path()))));
  o.pass = !p.orientable_only_feasible && p.min_nonorientable == 1 && c.initial_components == 4 && c.surgeries == 15 &&
           c.final_components == 12;
  std::ostringstream s;
  s << "parity (" << (p.orientable_only_feasible ? "true" : "false") << ", " << p.min_nonorientable
    << "), bundled census (" << c.initial_components << ", " << c.surgeries << ", " << c.final_components << ")";
  o.detail = s.str();
  return o;
}

Outcome c9() {
  Outcome o;
  const std::vector<PlanePoint> figure8{{0, 0}, {2, 2}, {2, 0}, {0, 2}};
  o.pass = planar_curve_hopf(figure8).parity == 1;
  for (std::int64_t d = 2; d <= 12; ++d) {
    const bool even = d % 2 == 0;
    const DcoverConsistency c = dcover_consistency(d);
    o.pass = o.pass && hopf_invariant(sigma(covering_map(d))) == (even ? 1 : 0) && c.agree && c.hopf_sigma == c.hopf_model;
  }
  o.detail = "figure-8 parity 1; covers d = 2..12 agree with the group model";
  return o;
}

Outcome c10() {
  Outcome o;
  std::size_t checks = 0;
  for (int s = 0; s < kMovies; ++s) {
    const std::uint64_t seed = 10000000 + static_cast<std::uint64_t>(s);
    try {
      const Movie m = validate_movie(random_movie(seed, kMovieMaxEvents));
      checks += embedding_certificate(m, assign_disks(m), kCertificateSamples).pair_checks;
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail += "seed " + std::to_string(seed) + ": " + e.what() + "; ";
    }
  }
  o.detail += std::to_string(kMovies) + " movies, " + std::to_string(checks) + " exact pair checks";
  return o;
}

Outcome c11() {
  Outcome o;
  std::size_t flagged = 0, low = 0, disagreements = 0, witnessed = 0;
  for (int s = 0; s < kLedgerSeeds; ++s) {
    const std::uint64_t seed = 11000000 + static_cast<std::uint64_t>(s);
    const std::int64_t d = s % 3 - 1;
    const RealizabilityReport r = realizability_report(sigma(random_map_with_degree(seed, 12, d)));
    ++low;
    if (r.criterion_pass) {
      if (r.agreement || r.notes.empty()) {
        o.pass = false;
        o.detail += "unflagged seed " + std::to_string(seed) + "; ";
      } else {
        ++flagged;
      }
    }
  }
  for (int s = 0; s < kLedgerSeeds; ++s) {
    const std::uint64_t seed = 11500000 + static_cast<std::uint64_t>(s);
    const std::int64_t magnitude = 2 + (s / 2) % 4;
    const std::int64_t d = s % 2 == 0 ? magnitude : -magnitude;
    const DoublePointCurve curve = sigma(random_map_with_degree(seed, 12, d));
    const RealizabilityReport r = realizability_report(curve);
    if (r.agreement) continue;
    ++disagreements;
    const bool witness = r.witness && curve.tau_invariant(*r.witness) && curve.components[*r.witness].compact &&
                         curve.components[*r.witness].p1_degree % 2 != 0;
    if (witness) {
      if (++witnessed <= 12) std::printf("  ledger: seed %llu degree %lld, witness component %zu (p1 %lld)\n",
                  static_cast<unsigned long long>(seed), static_cast<long long>(d), *r.witness,
                  static_cast<long long>(curve.components[*r.witness].p1_degree));
    } else {
      o.pass = false;
      o.detail += "unwitnessed disagreement at seed " + std::to_string(seed) + "; ";
    }
  }
  o.detail += std::to_string(flagged) + "/" + std::to_string(low) + " low-degree maps flagged; " +
              std::to_string(disagreements) + " high-degree disagreements, " + std::to_string(witnessed) +
              " with odd invariant witness";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double limit;  // seconds; 0 = none
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, kCensusSeconds, c1},
      {2, 0, c2},
      {3, kTerminationSeconds, c3},
      {4, 0, [] { return c4_c5(true); }},
      {5, 0, [] { return c4_c5(false); }},
      {6, 0, c6},
      {7, kEulerSeconds, c7},
      {8, 0, c8},
      {9, 0, c9},
      {10, kSweepSeconds, c10},
      {11, 0, c11},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && seconds >= c.limit) {
      o.pass = false;
      o.detail += "; over the " + std::to_string(static_cast<int>(c.limit)) + " s limit";
    }
    failures += !o.pass;
    std::printf("%s criterion %d: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
