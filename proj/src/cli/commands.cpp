#include "dpl/cli.hpp"

#include "dpl/double_points.hpp"
#include "dpl/error.hpp"
#include "dpl/space_forms.hpp"

#include <sstream>

namespace dpl::cli {

namespace {

Json arc_json(const TransverseArc& arc) { return Json::array({fraction(arc.low()), fraction(arc.high())}); }

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json optional_fraction(const std::optional<Rational>& v) { return v ? fraction(*v) : Json(nullptr); }

Json map_json(const PLCircleMap& f) {
  Json j;
  j["degree"] = f.degree();
  j["breakpoints"] = Json::array();
  for (const Breakpoint& b : f.breakpoints()) j["breakpoints"].push_back({fraction(b.x), fraction(b.lift)});
  j["fold_vertices"] = f.fold_vertices();
  j["fold_values"] = Json::array();
  for (const Rational& v : f.fold_values()) j["fold_values"].push_back(fraction(v));
  return j;
}

Json sigma_json(const DoublePointCurve& curve) {
  Json comps = Json::array();
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    const SigmaComponent& s = curve.components[c];
    Json j;
    j["index"] = c;
    j["kind"] = s.compact ? "circle" : "arc";
    j["tau"] = s.tau;
    j["tau_invariant"] = curve.tau_invariant(c);
    j["p1_degree"] = s.p1_degree;
    j["p2_degree"] = s.p2_degree;
    j["target_winding"] = s.target_winding;
    j["image_span"] = fraction(s.image_span);
    j["edges"] = s.edges.size();
    j["end_folds"] = s.compact ? Json(nullptr)
                               : Json::array({optional_json(s.end_folds[0]), optional_json(s.end_folds[1])});
    comps.push_back(j);
  }
  Json quotients = Json::array();
  for (const QuotientComponent& q : curve.quotients) {
    Json j;
    j["members"] = q.members;
    j["compact"] = q.compact;
    j["cover_trivial"] = q.cover_trivial;
    j["maps_through_arc"] = q.maps_through_arc;
    quotients.push_back(j);
  }
  Json closures = Json::array();
  for (const ClosureComponent& cl : curve.closures) {
    Json j;
    j["members"] = cl.members;
    j["diagonal_crossings"] = cl.diagonal_crossings;
    j["orientation_reversals"] = cl.orientation_reversals;
    j["orientable"] = cl.orientable;
    closures.push_back(j);
  }
  Json j;
  j["components"] = comps;
  j["quotients"] = quotients;
  j["closures"] = closures;
  return j;
}

Json realizability_json(const RealizabilityReport& r) {
  Json j;
  j["criterion_pass"] = r.criterion_pass;
  j["witness"] = optional_json(r.witness);
  j["classical_pass"] = r.classical_pass;
  j["agreement"] = r.agreement;
  j["notes"] = r.notes;
  return j;
}

const char* pass(bool b) { return b ? "pass" : "fail"; }

Json group_json(const FiniteGroup& g) {
  const CoverSigmaModel model = cover_sigma_model(g);
  Json j;
  j["family"] = std::string(to_string(g.family));
  j["parameter"] = g.parameter;
  j["order"] = g.order();
  j["involutions"] = involution_count(g);
  j["realizable"] = cover_realizable(g);
  j["hopf"] = hopf_of_cover(g);
  j["theorem4_verdict"] = theorem4_verdict(g);
  j["sigma_model_components"] = model.components.size();
  j["sigma_model_invariant"] = model.invariant_count;
  return j;
}

Report group_report(const std::optional<FiniteGroup>& g, bool infinite, int dimension, const std::string& digest,
                    const std::string& echo) {
  Report r{echo, digest, {}, {}, false};
  r.result["dimension"] = dimension;
  if (dimension == 7) {
    r.result["evaluated"] = false;
    r.result["refusal"] = dimension7_refusal();
    r.result["group"] = nullptr;
    r.summary = "dimension 7 not evaluated: " + dimension7_refusal();
    return r;
  }
  if (dimension != 3) throw Error(ErrorKind::BadParameter, "only dimensions 3 and 7 are recognized");
  r.result["evaluated"] = true;
  r.result["refusal"] = nullptr;
  if (infinite) {
    Json j;
    j["family"] = "infinite";
    j["order"] = nullptr;
    j["realizable"] = false;
    j["theorem4_verdict"] = theorem4_verdict(std::nullopt);
    r.result["group"] = j;
    r.summary = "infinite fundamental group: realizable false, theorem 4 verdict false";
    return r;
  }
  r.result["group"] = group_json(*g);
  std::ostringstream s;
  s << to_string(g->family) << " group of order " << g->order() << ": " << involution_count(*g)
    << " involution(s), realizable " << (cover_realizable(*g) ? "true" : "false") << ", hopf " << hopf_of_cover(*g)
    << ", theorem 4 verdict " << (theorem4_verdict(*g) ? "true" : "false");
  r.summary = s.str();
  return r;
}

}  // namespace

Report cmd_analyze(const std::string& map_text, const std::string& echo) {
  const PLCircleMap f = parse_map(map_text);
  const DoublePointCurve curve = sigma(f);
  const RealizabilityReport real = realizability_report(curve);
  const Proposition4Report prop4 = proposition4_check(curve);
  Report r{echo, sha256_hex(map_text), {}, {}, prop4.violation};
  r.result["map"] = map_json(f);
  r.result["sigma"] = sigma_json(curve);
  const int h = hopf_invariant(curve);
  r.result["hopf"] = h;
  Json bits = Json::array();
  for (const ControlledBit& b : controlled_hopf(curve)) bits.push_back({{"quotient", b.quotient}, {"bit", b.bit}});
  r.result["controlled_hopf"] = bits;
  r.result["realizability"] = realizability_json(real);
  r.result["proposition4_violation"] = prop4.violation;

  std::size_t invariant = 0, compact = 0;
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    invariant += curve.tau_invariant(c);
    compact += curve.components[c].compact;
  }
  std::ostringstream s;
  s << "degree " << f.degree() << ", " << f.fold_vertices().size() << " folds; " << curve.components.size()
    << " double-point components (" << compact << " circles, " << invariant << " tau-invariant); h = " << h
    << "; criterion " << pass(real.criterion_pass) << ", classical " << pass(real.classical_pass)
    << (real.agreement ? ", agree" : ", disagree");
  if (!real.notes.empty()) s << "\n" << real.notes;
  r.summary = s.str();
  return r;
}

Report cmd_unfold(const std::string& map_text, const Rational& a, const Rational& b, const UnfoldOptions& options,
                  const std::string& echo) {
  const PLCircleMap f = parse_map(map_text);
  const TransverseArc j0(a, b);
  const UnfoldResult u = eliminate_negative_arcs(f, j0, options);
  Report r{echo, sha256_hex(map_text), {}, {}, false};
  static const char* kModes[] = {"plain", "open-subset", "regular-value"};
  r.result["mode"] = kModes[static_cast<int>(options.mode)];
  r.result["side"] = options.mode == UnfoldMode::OpenSubset ? Json(options.side == ArcSide::Low ? "low" : "high")
                                                            : Json(nullptr);
  r.result["z"] = optional_fraction(options.z);
  r.result["initial_arc"] = arc_json(j0);
  r.result["final_arc"] = arc_json(u.arc);
  Json trace = Json::array();
  bool decreasing = true;
  for (std::size_t i = 0; i < u.trace.size(); ++i) {
    const UnfoldStep& st = u.trace[i];
    // The regular-value pass appends a final step with m already 0.
    const bool appended = options.mode == UnfoldMode::RegularValue && i + 1 == u.trace.size() && st.negative == 0 &&
                          i > 0 && u.trace[i - 1].negative == 0;
    if (i > 0 && !appended) decreasing = decreasing && st.negative < u.trace[i - 1].negative;
    Json j;
    j["arc"] = arc_json(st.arc);
    j["positive"] = st.positive;
    j["negative"] = st.negative;
    j["witness_start"] = optional_fraction(st.witness_start);
    j["witness_partner_end"] = optional_fraction(st.witness_partner_end);
    j["extended"] = st.extended ? Json(*st.extended == ArcSide::Low ? "low" : "high") : Json(nullptr);
    trace.push_back(j);
  }
  r.result["trace"] = trace;

  const PreimageClassification cls = classify_preimage(f, u.arc);
  Json v;
  v["positive"] = cls.positive;
  v["negative"] = cls.negative;
  v["degree"] = f.degree();
  v["negative_free"] = cls.negative == 0 && cls.positive == f.degree();
  v["strictly_decreasing"] = decreasing;
  const Lemma4Report l4 = lemma4_verify(f, u.arc, sigma(f));
  Json entries = Json::array();
  for (const Lemma4Entry& e : l4.entries) {
    entries.push_back({{"component", e.component}, {"p1_degree", e.p1_degree}, {"pair_count", e.pair_count}});
  }
  v["lemma4"] = {{"all_equal", l4.all_equal}, {"entries", entries}};
  bool z_ok = true;
  if (options.mode == UnfoldMode::RegularValue) {
    for (const ArcComponent& c : cls.components) {
      if (component_meets_level(f, c, *options.z) && c.kind != ArcKind::Positive && c.kind != ArcKind::Circle) {
        z_ok = false;
      }
    }
    v["z_components_positive_or_circle"] = z_ok;
  } else {
    v["z_components_positive_or_circle"] = nullptr;
  }
  r.result["verification"] = v;
  r.violation = cls.negative != 0 || !decreasing || !l4.all_equal || !z_ok;

  std::ostringstream s;
  s << "final arc [" << to_string(u.arc.low()) << ", " << to_string(u.arc.high()) << "] after "
    << u.trace.size() - 1 << " step(s); p = " << cls.positive << ", m = " << cls.negative << "; lemma 4 "
    << pass(l4.all_equal);
  r.summary = s.str();
  return r;
}

Report cmd_hopf(const std::string& polygon_text, const std::string& echo) {
  const std::vector<PlanePoint> poly = parse_polygon(polygon_text);
  const PlanarHopfReport h = planar_curve_hopf(poly);
  Report r{echo, sha256_hex(polygon_text), {}, {}, false};
  r.result["vertices"] = poly.size();
  r.result["crossings"] = h.crossings;
  r.result["parity"] = h.parity;
  r.summary = std::to_string(h.crossings) + " crossing(s); h = " + std::to_string(h.parity);
  return r;
}

Report cmd_group_family(const std::string& family, std::int64_t parameter, int dimension, const std::string& echo) {
  const std::string digest = sha256_hex("group " + family + " " + std::to_string(parameter));
  if (dimension == 7) return group_report(std::nullopt, false, 7, digest, echo);
  if (family == "infinite") return group_report(std::nullopt, true, dimension, digest, echo);
  return group_report(build_group(parse_family(family), parameter), false, dimension, digest, echo);
}

Report cmd_group_file(const std::string& group_text, int dimension, const std::string& echo) {
  Json j;
  try {
    j = Json::parse(group_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  const std::string digest = sha256_hex(group_text);
  if (j.is_object() && j.contains("table")) {
    std::vector<std::vector<std::size_t>> table;
    try {
      table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorKind::ParseError, "table must be an array of arrays of non-negative integers");
    }
    if (dimension == 7) return group_report(std::nullopt, false, 7, digest, echo);
    return group_report(group_from_table(std::move(table)), false, dimension, digest, echo);
  }
  if (j.is_object() && j.contains("family") && j.at("family").is_string()) {
    std::int64_t parameter = 0;
    if (j.contains("parameter")) {
      if (!j.at("parameter").is_number_integer()) throw Error(ErrorKind::ParseError, "parameter must be an integer");
      parameter = j.at("parameter").get<std::int64_t>();
    }
    const std::string family = j.at("family").get<std::string>();
    if (dimension == 7) return group_report(std::nullopt, false, 7, digest, echo);
    if (family == "infinite") return group_report(std::nullopt, true, dimension, digest, echo);
    return group_report(build_group(parse_family(family), parameter), false, dimension, digest, echo);
  }
  throw Error(ErrorKind::ParseError, "group file needs \"table\" or \"family\"");
}

Report cmd_dcover_check(std::int64_t min_degree, std::int64_t max_degree, const std::string& echo) {
  if (min_degree < 2 || max_degree < min_degree) {
    throw Error(ErrorKind::BadParameter, "degrees must satisfy 2 <= min <= max");
  }
  Report r{echo, sha256_hex("dcover-check " + std::to_string(min_degree) + " " + std::to_string(max_degree)), {}, {},
           false};
  Json entries = Json::array();
  std::size_t agreeing = 0;
  for (std::int64_t d = min_degree; d <= max_degree; ++d) {
    const DcoverConsistency c = dcover_consistency(d);
    Json j;
    j["degree"] = c.degree;
    j["sigma_components"] = c.sigma_components;
    j["model_components"] = c.model_components;
    j["sigma_invariant"] = c.sigma_invariant;
    j["model_invariant"] = c.model_invariant;
    j["all_p1_one"] = c.all_p1_one;
    j["hopf_sigma"] = c.hopf_sigma;
    j["hopf_model"] = c.hopf_model;
    j["pairing_matches"] = c.pairing_matches;
    j["agree"] = c.agree;
    entries.push_back(j);
    agreeing += c.agree;
    r.violation = r.violation || !c.agree;
  }
  r.result["entries"] = entries;
  r.summary = std::to_string(agreeing) + " of " + std::to_string(max_degree - min_degree + 1) +
              " cover degrees agree with the cyclic-group model";
  return r;
}

Report cmd_sweep(const std::string& movie_text, int samples, const std::string& echo) {
  const RawMovie raw = parse_movie(movie_text);
  const Movie movie = validate_movie(raw);
  Report r{echo, sha256_hex(movie_text), {}, {}, false};
  r.result["labels"] = movie.names;
  r.result["events"] = movie.events.size();

  const DiskPlacement placement = assign_disks(movie);
  Json intervals = Json::array();
  for (std::size_t k = 0; k < placement.tracks.size(); ++k) {
    Json tracks = Json::array();
    for (const auto& [label, keys] : placement.tracks[k]) {
      Json frames = Json::array();
      for (const Keyframe& f : keys) {
        frames.push_back({fraction(f.s), fraction(f.x), fraction(f.y), fraction(f.r)});
      }
      tracks.push_back({{"label", movie.names[label]}, {"keyframes", frames}});
    }
    intervals.push_back({{"from", fraction(placement.times[k])}, {"to", fraction(placement.times[k + 1])},
                         {"tracks", tracks}});
  }
  r.result["placement"] = intervals;

  Json cert;
  try {
    const CertificateReport c = embedding_certificate(movie, placement, samples);
    cert["passed"] = true;
    cert["checked_times"] = c.checked_times.size();
    cert["pair_checks"] = c.pair_checks;
    cert["failure"] = nullptr;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CertificateFailure) throw;
    cert["passed"] = false;
    cert["checked_times"] = nullptr;
    cert["pair_checks"] = nullptr;
    cert["failure"] = e.what();
    r.violation = true;
  }
  cert["samples_per_interval"] = samples;
  r.result["certificate"] = cert;

  const CensusReport census = example6_census(movie);
  Json c;
  c["initial_components"] = census.initial_components;
  c["surgeries"] = census.surgeries;
  c["final_components"] = census.final_components;
  c["band_moves"] = census.band_moves;
  c["slice_counts"] = census.slice_counts;
  c["counts_match"] = census.counts_match;
  c["orientable_only_feasible"] = census.orientable_only_feasible;
  c["min_nonorientable"] = census.min_nonorientable;
  c["deviations"] = census.deviations;
  r.result["census"] = c;

  std::ostringstream s;
  s << movie.events.size() << " events; certificate " << pass(cert["passed"].get<bool>()) << "; census ("
    << census.initial_components << ", " << census.surgeries << ", " << census.final_components
    << "), at least " << census.min_nonorientable << " non-orientable surgery";
  for (const std::string& d : census.deviations) s << "\n" << d;
  if (!cert["failure"].is_null()) s << "\n" << cert["failure"].get<std::string>();
  r.summary = s.str();
  return r;
}

}  // namespace dpl::cli
