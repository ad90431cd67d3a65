#ifndef DPL_CLI_HPP
#define DPL_CLI_HPP

#include "dpl/circle_map.hpp"
#include "dpl/planar_curve.hpp"
#include "dpl/sweeps.hpp"
#include "dpl/unfolding.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace dpl::cli {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "dpl 0.1.0";

struct Report {
  std::string command;       // echo of the invocation, without the program name
  std::string input_digest;  // sha256 of the input bytes, hex
  Json result;
  std::string summary;
  bool violation = false;  // exit code 1
};

Json to_json(const Report& report);

std::string sha256_hex(std::string_view bytes);
std::string read_file(const std::string& path);

Json fraction(const Rational& r);

// File formats.  All of these throw Error(ParseError, ...) on malformed input
// and let the library's own validation errors through.
PLCircleMap parse_map(std::string_view text);
std::vector<PlanePoint> parse_polygon(std::string_view text);
RawMovie parse_movie(std::string_view text);
Json movie_to_json(const RawMovie& movie);

// Commands.  `echo` becomes Report::command; input errors propagate as Error.
Report cmd_analyze(const std::string& map_text, const std::string& echo);
Report cmd_unfold(const std::string& map_text, const Rational& a, const Rational& b, const UnfoldOptions& options,
                  const std::string& echo);
Report cmd_hopf(const std::string& polygon_text, const std::string& echo);
Report cmd_group_family(const std::string& family, std::int64_t parameter, int dimension, const std::string& echo);
Report cmd_group_file(const std::string& group_text, int dimension, const std::string& echo);
Report cmd_dcover_check(std::int64_t min_degree, std::int64_t max_degree, const std::string& echo);
Report cmd_sweep(const std::string& movie_text, int samples, const std::string& echo);
Report cmd_selftest(int cases, std::uint64_t seed, const std::string& echo);

/// Path of the bundled movie transcribed from the six-slice example.
std::string example6_path();

/// Full command-line entry point; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpl::cli

#endif  // DPL_CLI_HPP
