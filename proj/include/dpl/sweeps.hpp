#ifndef DPL_SWEEPS_HPP
#define DPL_SWEEPS_HPP

#include "dpl/rational.hpp"
#include "dpl/surgery.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dpl {

/// Label lists per kind: birth [a], death [a], merge [a, b, c] (a, b -> c),
/// split [c, a, b] (c -> a, b), isolated [a] (point born and dying at t),
/// band [a] (non-orientable band move on one circle; the count is unchanged).
enum class EventKind { Birth, Death, Merge, Split, Isolated, Band };

std::string_view to_string(EventKind kind);
EventKind parse_event_kind(std::string_view name);

struct RawEvent {
  Rational t;
  EventKind kind;
  std::vector<std::string> labels;
};

struct RawMovie {
  std::vector<std::string> initial;
  std::vector<RawEvent> events;
};

struct MovieEvent {
  Rational t;
  EventKind kind;
  std::vector<std::size_t> participants;  // labels alive before t that the event consumes
  std::vector<std::size_t> products;      // labels alive after t that the event creates
  std::vector<std::size_t> transient;     // isolated points, present only at t
};

/// Labels renumbered 0, 1, ... in order of first appearance.
struct Movie {
  std::vector<std::string> names;
  std::vector<std::size_t> initial;
  std::vector<MovieEvent> events;
  std::vector<std::size_t> final_population;
};

/// Throws EventOrderViolation, DanglingLabel or DoubleBirth.
Movie validate_movie(const RawMovie& raw);

/// Live circles strictly between events; t must not be an event time.
std::size_t population_at(const Movie& movie, const Rational& t);

struct Keyframe {
  Rational s;  // position within the interval, in [0,1]
  Rational x, y, r;
};

struct Disk {
  Rational x, y, r;
};

/// Interval k runs from time(k) to time(k+1), with time(0) = 0 and
/// time(events+1) = 1.  Every label alive in the open interval has a
/// piecewise-linear keyframe track.
struct DiskPlacement {
  std::vector<Rational> times;
  std::vector<std::map<std::size_t, std::vector<Keyframe>>> tracks;

  Disk disk_at(std::size_t interval, std::size_t label, const Rational& s) const;
};

/// Static slot per label on the row y = 0, with motion lanes above and below
/// for travel to and from the event points.
DiskPlacement assign_disks(const Movie& movie);

struct CertificateReport {
  std::vector<Rational> checked_times;
  std::size_t pair_checks = 0;
};

/// Exact disjointness at `samples` interior times per interval and at every
/// event time, where only the event's own participants and products may
/// touch.  Throws CertificateFailure naming the time and label pair.
CertificateReport embedding_certificate(const Movie& movie, const DiskPlacement& placement, int samples = 10);

/// Random valid movie with at most max_events events.
RawMovie random_movie(std::uint64_t seed, int max_events);

/// Bundled level-set script: four circles, fifteen surgeries along three
/// edges, twelve circles at the end.
RawMovie example6_movie();

struct CensusReport {
  std::size_t initial_components = 0;
  std::size_t surgeries = 0;
  std::size_t final_components = 0;
  std::size_t band_moves = 0;
  std::vector<std::size_t> slice_counts;  // live circles after each event
  bool counts_match = false;  // (4, 15, 12)
  bool orientable_only_feasible = false;
  std::int64_t min_nonorientable = 0;
  std::vector<std::string> deviations;
};

CensusReport example6_census(const Movie& movie);

}  // namespace dpl

#endif  // DPL_SWEEPS_HPP
