#include "dpl/cli.hpp"

#include "dpl/error.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <sstream>

namespace dpl::cli {

Json to_json(const Report& report) {
  Json j;
  j["command"] = report.command;
  j["input_digest"] = report.input_digest;
  j["result"] = report.result;
  j["summary"] = report.summary;
  j["version"] = std::string(kVersion);
  return j;
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 15];
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json fraction(const Rational& r) { return to_string(r); }

std::string example6_path() { return std::string(DPL_DATA_DIR) + "/example6_movie.json"; }

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Rational rational_field(const Json& j, const std::string& where) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, where + ": rationals must be fraction strings");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, where + ": " + e.what());
  }
}

std::vector<std::pair<Rational, Rational>> rational_pairs(const Json& list, const std::string& what) {
  if (!list.is_array()) throw Error(ErrorKind::ParseError, what + " must be an array");
  std::vector<std::pair<Rational, Rational>> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = what + "[" + std::to_string(i) + "]";
    if (!list[i].is_array() || list[i].size() != 2) throw Error(ErrorKind::ParseError, where + " must be a pair");
    out.emplace_back(rational_field(list[i][0], where), rational_field(list[i][1], where));
  }
  return out;
}

}  // namespace

PLCircleMap parse_map(std::string_view text) {
  const Json j = parse_json(text);
  const Json& degree = field(j, "degree");
  if (!degree.is_number_integer()) throw Error(ErrorKind::ParseError, "degree must be an integer");
  std::vector<Breakpoint> v;
  for (auto& [x, lift] : rational_pairs(field(j, "breakpoints"), "breakpoints")) v.push_back({x, lift});
  return PLCircleMap::make(std::move(v), degree.get<std::int64_t>());
}

std::vector<PlanePoint> parse_polygon(std::string_view text) {
  const Json j = parse_json(text);
  std::vector<PlanePoint> out;
  for (auto& [x, y] : rational_pairs(field(j, "vertices"), "vertices")) out.push_back({x, y});
  return out;
}

RawMovie parse_movie(std::string_view text) {
  const Json j = parse_json(text);
  RawMovie m;
  auto labels = [](const Json& list, const std::string& where) {
    if (!list.is_array()) throw Error(ErrorKind::ParseError, where + " must be an array of labels");
    std::vector<std::string> out;
    for (const Json& l : list) {
      if (!l.is_string()) throw Error(ErrorKind::ParseError, where + ": labels are strings");
      out.push_back(l.get<std::string>());
    }
    return out;
  };
  if (j.is_object() && j.contains("initial")) m.initial = labels(j.at("initial"), "initial");
  const Json& events = field(j, "events");
  if (!events.is_array()) throw Error(ErrorKind::ParseError, "events must be an array");
  for (std::size_t i = 0; i < events.size(); ++i) {
    const std::string where = "events[" + std::to_string(i) + "]";
    const Json& e = events[i];
    const Json& kind = field(e, "kind");
    if (!kind.is_string()) throw Error(ErrorKind::ParseError, where + ": kind must be a string");
    m.events.push_back({rational_field(field(e, "t"), where), parse_event_kind(kind.get<std::string>()),
                        labels(field(e, "labels"), where + ".labels")});
  }
  return m;
}

Json movie_to_json(const RawMovie& movie) {
  Json j;
  j["initial"] = movie.initial;
  j["events"] = Json::array();
  for (const RawEvent& e : movie.events) {
    Json ev;
    ev["t"] = fraction(e.t);
    ev["kind"] = std::string(to_string(e.kind));
    ev["labels"] = e.labels;
    j["events"].push_back(ev);
  }
  return j;
}

}  // namespace dpl::cli
