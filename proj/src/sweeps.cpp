#include "dpl/sweeps.hpp"

#include "dpl/error.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace dpl {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Birth: return "birth";
    case EventKind::Death: return "death";
    case EventKind::Merge: return "merge";
    case EventKind::Split: return "split";
    case EventKind::Isolated: return "isolated";
    case EventKind::Band: return "band";
  }
  return "birth";
}

EventKind parse_event_kind(std::string_view name) {
  for (EventKind k : {EventKind::Birth, EventKind::Death, EventKind::Merge, EventKind::Split, EventKind::Isolated,
                      EventKind::Band}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorKind::ParseError, "unknown event kind \"" + std::string(name) + "\"");
}

namespace {

enum class LabelState { Unborn, Live, Dead };

std::size_t arity(EventKind k) {
  switch (k) {
    case EventKind::Merge:
    case EventKind::Split: return 3;
    default: return 1;
  }
}

}  // namespace

Movie validate_movie(const RawMovie& raw) {
  Movie m;
  std::map<std::string, std::size_t> id;
  std::vector<LabelState> state;
  auto lookup = [&](const std::string& name) {
    auto [it, fresh] = id.emplace(name, m.names.size());
    if (fresh) {
      m.names.push_back(name);
      state.push_back(LabelState::Unborn);
    }
    return it->second;
  };
  auto where = [](std::size_t e) { return "event " + std::to_string(e) + ": "; };
  auto born = [&](std::size_t l, const std::string& ctx) {
    if (state[l] != LabelState::Unborn) throw Error(ErrorKind::DoubleBirth, ctx + "label " + m.names[l] + " is born twice");
    state[l] = LabelState::Live;
  };
  auto consume = [&](std::size_t l, const std::string& ctx) {
    if (state[l] != LabelState::Live) throw Error(ErrorKind::DanglingLabel, ctx + "label " + m.names[l] + " is not alive");
    state[l] = LabelState::Dead;
  };

  for (const std::string& name : raw.initial) {
    std::size_t l = lookup(name);
    born(l, "initial population: ");
    m.initial.push_back(l);
  }
  for (std::size_t e = 0; e < raw.events.size(); ++e) {
    const RawEvent& ev = raw.events[e];
    const std::string ctx = where(e);
    if (ev.t <= 0 || ev.t >= 1) throw Error(ErrorKind::EventOrderViolation, ctx + "time must lie in (0,1)");
    if (e > 0 && !(raw.events[e - 1].t < ev.t)) {
      throw Error(ErrorKind::EventOrderViolation, ctx + "times must increase strictly");
    }
    if (ev.labels.size() != arity(ev.kind)) {
      throw Error(ErrorKind::BadParameter, ctx + std::string(to_string(ev.kind)) + " takes " +
                                               std::to_string(arity(ev.kind)) + " labels");
    }
    std::vector<std::size_t> l;
    for (const std::string& name : ev.labels) l.push_back(lookup(name));
    MovieEvent out{ev.t, ev.kind, {}, {}, {}};
    switch (ev.kind) {
      case EventKind::Birth:
        born(l[0], ctx);
        out.products = {l[0]};
        break;
      case EventKind::Death:
        consume(l[0], ctx);
        out.participants = {l[0]};
        break;
      case EventKind::Isolated:
        born(l[0], ctx);
        state[l[0]] = LabelState::Dead;
        out.transient = {l[0]};
        break;
      case EventKind::Band:
        consume(l[0], ctx);
        state[l[0]] = LabelState::Live;
        out.participants = {l[0]};
        out.products = {l[0]};
        break;
      case EventKind::Merge:
        if (l[0] == l[1]) throw Error(ErrorKind::DanglingLabel, ctx + "merge needs two distinct circles");
        consume(l[0], ctx);
        consume(l[1], ctx);
        born(l[2], ctx);
        out.participants = {l[0], l[1]};
        out.products = {l[2]};
        break;
      case EventKind::Split:
        consume(l[0], ctx);
        born(l[1], ctx);
        born(l[2], ctx);
        out.participants = {l[0]};
        out.products = {l[1], l[2]};
        break;
    }
    m.events.push_back(std::move(out));
  }
  for (std::size_t l = 0; l < state.size(); ++l) {
    if (state[l] == LabelState::Live) m.final_population.push_back(l);
  }
  return m;
}

std::size_t population_at(const Movie& movie, const Rational& t) {
  std::int64_t n = static_cast<std::int64_t>(movie.initial.size());
  for (const MovieEvent& e : movie.events) {
    if (e.t == t) throw Error(ErrorKind::BadParameter, "population is not defined at an event time");
    if (e.t < t) n += static_cast<std::int64_t>(e.products.size()) - static_cast<std::int64_t>(e.participants.size());
  }
  return static_cast<std::size_t>(n);
}

Disk DiskPlacement::disk_at(std::size_t interval, std::size_t label, const Rational& s) const {
  const std::vector<Keyframe>& k = tracks.at(interval).at(label);
  if (s <= k.front().s) return {k.front().x, k.front().y, k.front().r};
  for (std::size_t i = 1; i < k.size(); ++i) {
    if (s <= k[i].s) {
      const Rational u = (s - k[i - 1].s) / (k[i].s - k[i - 1].s);
      auto mix = [&](const Rational& a, const Rational& b) { return Rational(a + u * (b - a)); };
      return {mix(k[i - 1].x, k[i].x), mix(k[i - 1].y, k[i].y), mix(k[i - 1].r, k[i].r)};
    }
  }
  return {k.back().x, k.back().y, k.back().r};
}

namespace {

const Rational kRest(2, 5);
const Rational kPair(1, 4);

// Where the q-th of n parties of an event sits at the event time.
Rational contact_x(const Rational& column, std::size_t q, std::size_t n) {
  if (n == 1) return column;
  return q == 0 ? Rational(column - kPair) : Rational(column + kPair);
}

}  // namespace

DiskPlacement assign_disks(const Movie& movie) {
  DiskPlacement p;
  const std::size_t events = movie.events.size();
  p.times.push_back(0);
  for (const MovieEvent& e : movie.events) p.times.push_back(e.t);
  p.times.push_back(1);
  p.tracks.resize(events + 1);

  const Rational labels(static_cast<long>(movie.names.size()));
  auto slot = [](std::size_t l) { return Rational(static_cast<long>(l)); };
  auto column = [&](std::size_t e) { return Rational(labels + static_cast<long>(e)); };

  std::set<std::size_t> live(movie.initial.begin(), movie.initial.end());
  for (std::size_t k = 0; k <= events; ++k) {
    const MovieEvent* before = k > 0 ? &movie.events[k - 1] : nullptr;
    const MovieEvent* after = k < events ? &movie.events[k] : nullptr;
    for (std::size_t l : live) {
      const Rational s = slot(l);
      std::vector<Keyframe> track;
      auto product = before ? std::find(before->products.begin(), before->products.end(), l)
                            : std::vector<std::size_t>::const_iterator{};
      if (before && product != before->products.end()) {
        const std::size_t n = before->products.size();
        const std::size_t q = static_cast<std::size_t>(product - before->products.begin());
        const Rational x0 = contact_x(column(k - 1), q, n);
        const Rational lane = -Rational(static_cast<long>(1 + q));
        const Rational r0 = n == 1 ? Rational(0) : kPair;
        const Rational r1 = n == 1 ? kRest : kPair;
        track.push_back({Rational(0), x0, Rational(0), r0});
        track.push_back({Rational(1, 6), x0, lane, r1});
        track.push_back({Rational(2, 6), s, lane, kRest});
      } else {
        track.push_back({Rational(0), s, Rational(0), kRest});
      }
      track.push_back({Rational(1, 2), s, Rational(0), kRest});
      auto part = after ? std::find(after->participants.begin(), after->participants.end(), l)
                        : std::vector<std::size_t>::const_iterator{};
      if (after && part != after->participants.end()) {
        const std::size_t n = after->participants.size();
        const std::size_t q = static_cast<std::size_t>(part - after->participants.begin());
        const Rational x1 = contact_x(column(k), q, n);
        const Rational lane(static_cast<long>(1 + q));
        const Rational r1 = n == 1 ? kRest : kPair;
        const Rational r2 = n == 1 ? Rational(0) : kPair;
        track.push_back({Rational(4, 6), s, lane, kRest});
        track.push_back({Rational(5, 6), x1, lane, r1});
        track.push_back({Rational(1), x1, Rational(0), r2});
      } else {
        track.push_back({Rational(1), s, Rational(0), kRest});
      }
      p.tracks[k].emplace(l, std::move(track));
    }
    if (after) {
      for (std::size_t l : after->participants) live.erase(l);
      for (std::size_t l : after->products) live.insert(l);
    }
  }
  return p;
}

namespace {

Rational gap2(const Disk& a, const Disk& b) { return (a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y); }

[[noreturn]] void fail(const Movie& m, const Rational& t, std::size_t a, std::size_t b, const std::string& why) {
  throw Error(ErrorKind::CertificateFailure,
              "t = " + to_string(t) + ": labels " + m.names[a] + " and " + m.names[b] + " " + why);
}

}  // namespace

CertificateReport embedding_certificate(const Movie& movie, const DiskPlacement& p, int samples) {
  if (samples < 1) throw Error(ErrorKind::BadParameter, "need at least one sample per interval");
  if (p.tracks.size() != movie.events.size() + 1) {
    throw Error(ErrorKind::CertificateFailure, "placement does not match the movie's interval count");
  }
  CertificateReport report;
  for (std::size_t k = 0; k < p.tracks.size(); ++k) {
    const Rational t0 = p.times[k], t1 = p.times[k + 1];
    for (int i = 1; i <= samples; ++i) {
      const Rational s(i, samples + 1);
      const Rational t = t0 + s * (t1 - t0);
      std::vector<std::pair<std::size_t, Disk>> disks;
      for (const auto& [label, track] : p.tracks[k]) {
        (void)track;
        disks.emplace_back(label, p.disk_at(k, label, s));
        if (disks.back().second.r <= 0) fail(movie, t, label, label, "has a degenerate disk");
      }
      for (std::size_t a = 0; a < disks.size(); ++a) {
        for (std::size_t b = a + 1; b < disks.size(); ++b) {
          const Rational rr = disks[a].second.r + disks[b].second.r;
          ++report.pair_checks;
          if (!(gap2(disks[a].second, disks[b].second) > rr * rr)) {
            fail(movie, t, disks[a].first, disks[b].first, "have intersecting disks");
          }
        }
      }
      report.checked_times.push_back(t);
    }
    if (k + 1 == p.tracks.size()) break;

    // Event between interval k and k+1.
    const MovieEvent& e = movie.events[k];
    const Rational& t = e.t;
    std::set<std::size_t> involved(e.participants.begin(), e.participants.end());
    involved.insert(e.products.begin(), e.products.end());
    involved.insert(e.transient.begin(), e.transient.end());
    std::map<std::size_t, Disk> at;
    for (const auto& [label, track] : p.tracks[k]) {
      (void)track;
      at.emplace(label, p.disk_at(k, label, Rational(1)));
    }
    for (const auto& [label, track] : p.tracks[k + 1]) {
      (void)track;
      Disk d = p.disk_at(k + 1, label, Rational(0));
      auto it = at.find(label);
      if (it != at.end()) {
        if (it->second.x != d.x || it->second.y != d.y || it->second.r != d.r) {
          fail(movie, t, label, label, "jumps across the event");
        }
      } else {
        at.emplace(label, d);
      }
    }
    const Rational column(static_cast<long>(movie.names.size() + k));
    for (std::size_t l : e.transient) at.emplace(l, Disk{column, Rational(0), Rational(0)});
    for (auto a = at.begin(); a != at.end(); ++a) {
      for (auto b = std::next(a); b != at.end(); ++b) {
        const Rational rr = a->second.r + b->second.r;
        const Rational g = gap2(a->second, b->second);
        ++report.pair_checks;
        const bool touching_ok = involved.count(a->first) && involved.count(b->first);
        if (touching_ok ? g < rr * rr : !(g > rr * rr)) {
          fail(movie, t, a->first, b->first, touching_ok ? "overlap at their event" : "touch at an event");
        }
      }
    }
    report.checked_times.push_back(t);
  }
  return report;
}

RawMovie random_movie(std::uint64_t seed, int max_events) {
  if (max_events < 1) throw Error(ErrorKind::InfeasibleParameters, "a movie needs room for one event");
  std::mt19937_64 engine(seed ^ 0xbf58476d1ce4e5b9ULL);
  auto below = [&](std::size_t n) { return static_cast<std::size_t>(engine() % n); };
  RawMovie m;
  std::size_t counter = 0;
  auto fresh = [&] { return "c" + std::to_string(counter++); };
  std::vector<std::string> live;
  for (std::size_t i = below(4); i > 0; --i) {
    live.push_back(fresh());
    m.initial.push_back(live.back());
  }
  const std::size_t n = 1 + below(static_cast<std::size_t>(max_events));
  auto take = [&] {
    std::size_t i = below(live.size());
    std::string l = live[i];
    live.erase(live.begin() + static_cast<long>(i));
    return l;
  };
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<EventKind> options{EventKind::Birth, EventKind::Isolated};
    if (!live.empty()) options.insert(options.end(), {EventKind::Death, EventKind::Split, EventKind::Band});
    if (live.size() >= 2) options.push_back(EventKind::Merge);
    RawEvent ev{Rational(static_cast<long>(e + 1), static_cast<long>(n + 1)), options[below(options.size())], {}};
    ev.t.canonicalize();
    switch (ev.kind) {
      case EventKind::Birth:
        ev.labels = {fresh()};
        live.push_back(ev.labels[0]);
        break;
      case EventKind::Isolated: ev.labels = {fresh()}; break;
      case EventKind::Death: ev.labels = {take()}; break;
      case EventKind::Band:
        ev.labels = {live[below(live.size())]};
        break;
      case EventKind::Split: {
        std::string c = take();
        ev.labels = {c, fresh(), fresh()};
        live.push_back(ev.labels[1]);
        live.push_back(ev.labels[2]);
        break;
      }
      case EventKind::Merge: {
        std::string a = take();
        std::string b = take();
        ev.labels = {a, b, fresh()};
        live.push_back(ev.labels[2]);
        break;
      }
    }
    m.events.push_back(std::move(ev));
  }
  return m;
}

RawMovie example6_movie() {
  // Three edges of five surgeries each; the third edge carries the single
  // band move that the parity count forces.
  const std::vector<std::pair<EventKind, std::vector<std::string>>> script{
      {EventKind::Split, {"A", "A1", "A2"}},  {EventKind::Split, {"B", "B1", "B2"}},
      {EventKind::Split, {"A1", "A3", "A4"}}, {EventKind::Merge, {"A3", "B1", "E1"}},
      {EventKind::Split, {"C", "C1", "C2"}},

      {EventKind::Split, {"D", "D1", "D2"}},  {EventKind::Split, {"A2", "A5", "A6"}},
      {EventKind::Split, {"B2", "B3", "B4"}}, {EventKind::Merge, {"A5", "C1", "E2"}},
      {EventKind::Split, {"D1", "D3", "D4"}},

      {EventKind::Split, {"C2", "C3", "C4"}}, {EventKind::Split, {"E1", "E3", "E4"}},
      {EventKind::Band, {"A4"}},              {EventKind::Split, {"E2", "E5", "E6"}},
      {EventKind::Merge, {"D2", "B3", "E7"}},
  };
  RawMovie m;
  m.initial = {"A", "B", "C", "D"};
  for (std::size_t i = 0; i < script.size(); ++i) {
    Rational t(static_cast<long>(i + 1), 16);
    t.canonicalize();
    m.events.push_back({t, script[i].first, script[i].second});
  }
  return m;
}

CensusReport example6_census(const Movie& movie) {
  CensusReport r;
  r.initial_components = movie.initial.size();
  std::size_t live = r.initial_components;
  for (const MovieEvent& e : movie.events) {
    if (e.kind == EventKind::Merge || e.kind == EventKind::Split || e.kind == EventKind::Band) ++r.surgeries;
    if (e.kind == EventKind::Band) ++r.band_moves;
    live = live + e.products.size() - e.participants.size();
    r.slice_counts.push_back(live);
  }
  r.final_components = movie.final_population.size();
  if (live != r.final_components) r.deviations.push_back("slice counts disagree with the final population");
  r.counts_match = r.initial_components == 4 && r.surgeries == 15 && r.final_components == 12;
  if (r.initial_components != 4) {
    r.deviations.push_back("initial component count " + std::to_string(r.initial_components) + " differs from 4");
  }
  if (r.surgeries != 15) r.deviations.push_back("surgery count " + std::to_string(r.surgeries) + " differs from 15");
  if (r.final_components != 12) {
    r.deviations.push_back("final component count " + std::to_string(r.final_components) + " differs from 12");
  }
  try {
    SurgeryParity p = surgery_parity(static_cast<std::int64_t>(std::max<std::size_t>(r.initial_components, 1)),
                                     static_cast<std::int64_t>(std::max<std::size_t>(r.final_components, 1)),
                                     static_cast<std::int64_t>(r.surgeries));
    r.orientable_only_feasible = p.orientable_only_feasible;
    r.min_nonorientable = p.min_nonorientable;
    if (p.orientable_only_feasible) {
      r.deviations.push_back("orientable-only surgery is feasible, so no non-orientable surgery is forced");
    }
    if (static_cast<std::int64_t>(r.band_moves) < p.min_nonorientable) {
      r.deviations.push_back("script has fewer band moves than the parity bound requires");
    }
  } catch (const Error& e) {
    r.deviations.push_back(std::string("surgery parity: ") + e.what());
  }
  return r;
}

}  // namespace dpl
