#include "dpl/cli.hpp"

#include "dpl/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

namespace dpl::cli {

namespace {

Json diagnostic(const std::string& echo, std::string_view kind, const std::string& message) {
  Json j;
  j["command"] = echo;
  j["error"] = {{"kind", std::string(kind)}, {"message", message}};
  j["version"] = std::string(kVersion);
  return j;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("DPL_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, std::string("DPL_SEED is not an unsigned integer: ") + env);
    }
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::string echo;
  for (const std::string& a : args) echo += (echo.empty() ? "" : " ") + a;

  CLI::App app{"Double points of piecewise-linear circle maps", "dpl"};
  app.require_subcommand(1);
  std::string format = "text";
  std::string out_path;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "also write the JSON report here");
  app.set_version_flag("--version", std::string(kVersion));

  std::string file;
  auto* analyze = app.add_subcommand("analyze", "double-point census of a map file");
  analyze->add_option("map", file, "map file")->required();

  std::vector<std::string> arc;
  std::string mode = "plain", side = "low", z;
  auto* unfold = app.add_subcommand("unfold", "grow an arc until its preimage has no negative arcs");
  unfold->add_option("map", file, "map file")->required();
  unfold->add_option("--arc", arc, "arc endpoints a b as lift values")->expected(2)->required();
  unfold->add_option("--mode", mode)->check(CLI::IsMember({"plain", "open-subset", "regular-value"}));
  unfold->add_option("--side", side, "end that may move in open-subset mode")->check(CLI::IsMember({"low", "high"}));
  unfold->add_option("--z", z, "regular value inside the arc (regular-value mode)");

  auto* hopf = app.add_subcommand("hopf", "crossing parity of a closed plane polygon");
  hopf->add_option("polygon", file, "polygon file")->required();

  std::string family, table;
  std::int64_t parameter = 0;
  int dimension = 3;
  auto* group = app.add_subcommand("group", "verdicts for a space-form fundamental group");
  auto* fam = group->add_option("--family", family);
  group->add_option("--parameter", parameter);
  auto* tab = group->add_option("--table", table, "group file with a table or a family");
  fam->excludes(tab);
  group->add_option("--dimension", dimension, "3, or 7 for the documented refusal");

  std::int64_t dmin = 2, dmax = 12;
  auto* dcover = app.add_subcommand("dcover-check", "compare circle covers with the cyclic-group model");
  dcover->add_option("--min", dmin);
  dcover->add_option("--max", dmax);

  bool example6 = false;
  int samples = 10;
  auto* sweep = app.add_subcommand("sweep", "disk placement, certificate and census of a movie");
  auto* movie_opt = sweep->add_option("movie", file, "movie file");
  sweep->add_flag("--example6", example6, "use the bundled six-slice movie")->excludes(movie_opt);
  sweep->add_option("--samples", samples, "certificate samples per interval");

  int cases = 200;
  std::optional<std::uint64_t> seed;
  auto* selftest = app.add_subcommand("selftest", "run the property suite on seeded random instances");
  selftest->add_option("--cases", cases);
  selftest->add_option("--seed", seed);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << diagnostic(echo, "UsageError", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    Report report;
    if (analyze->parsed()) {
      report = cmd_analyze(read_file(file), echo);
    } else if (unfold->parsed()) {
      UnfoldOptions options;
      options.mode = mode == "plain" ? UnfoldMode::Plain : mode == "open-subset" ? UnfoldMode::OpenSubset
                                                                                 : UnfoldMode::RegularValue;
      options.side = side == "low" ? ArcSide::Low : ArcSide::High;
      if (!z.empty()) options.z = parse_rational(z);
      report = cmd_unfold(read_file(file), parse_rational(arc[0]), parse_rational(arc[1]), options, echo);
    } else if (hopf->parsed()) {
      report = cmd_hopf(read_file(file), echo);
    } else if (group->parsed()) {
      if (!table.empty()) {
        report = cmd_group_file(read_file(table), dimension, echo);
      } else if (!family.empty()) {
        report = cmd_group_family(family, parameter, dimension, echo);
      } else {
        throw Error(ErrorKind::BadParameter, "group needs --family or --table");
      }
    } else if (dcover->parsed()) {
      report = cmd_dcover_check(dmin, dmax, echo);
    } else if (sweep->parsed()) {
      if (!example6 && file.empty()) throw Error(ErrorKind::BadParameter, "sweep needs a movie file or --example6");
      report = cmd_sweep(read_file(example6 ? example6_path() : file), samples, echo);
    } else {
      report = cmd_selftest(cases, seed ? *seed : default_seed(), echo);
    }
    const std::string json = to_json(report).dump(2) + "\n";
    if (!out_path.empty()) write_file(out_path, json);
    out << (format == "json" ? json : report.summary + "\n");
    return report.violation ? 1 : 0;
  } catch (const Error& e) {
    const std::string json = diagnostic(echo, to_string(e.kind()), e.what()).dump(2) + "\n";
    err << json;
    if (!out_path.empty()) {
      try {
        write_file(out_path, json);
      } catch (const Error&) {
      }
    }
    return 2;
  } catch (const std::exception& e) {
    err << diagnostic(echo, "InternalError", e.what()).dump(2) << "\n";
    return 1;
  }
}

}  // namespace dpl::cli
