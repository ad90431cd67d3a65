#include "dpl/rational.hpp"

#include "dpl/error.hpp"

#include <cctype>

namespace dpl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonIncreasingDomain: return "NonIncreasingDomain";
    case ErrorKind::ZeroSlopeSegment: return "ZeroSlopeSegment";
    case ErrorKind::DuplicateVertexValue: return "DuplicateVertexValue";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::EndpointNotRegular: return "EndpointNotRegular";
    case ErrorKind::NoOppositeArc: return "NoOppositeArc";
    case ErrorKind::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorKind::DegeneratePosition: return "DegeneratePosition";
    case ErrorKind::Infeasible: return "Infeasible";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::InvalidTable: return "InvalidTable";
    case ErrorKind::DanglingLabel: return "DanglingLabel";
    case ErrorKind::DoubleBirth: return "DoubleBirth";
    case ErrorKind::EventOrderViolation: return "EventOrderViolation";
    case ErrorKind::CertificateFailure: return "CertificateFailure";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::ParseError, "malformed fraction \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::int64_t floor_int(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

std::int64_t ceil_int(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q.get_si();
}

Rational frac(const Rational& value) { return value - Rational(floor_int(value)); }

}  // namespace dpl
