#include "dpl/space_forms.hpp"

#include "dpl/double_points.hpp"
#include "dpl/error.hpp"
#include "dpl/todd_coxeter.hpp"

#include <random>

namespace dpl {

std::string_view to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::Cyclic: return "cyclic";
    case GroupFamily::BinaryDihedral: return "binary_dihedral";
    case GroupFamily::BinaryTetrahedral: return "binary_tetrahedral";
    case GroupFamily::BinaryOctahedral: return "binary_octahedral";
    case GroupFamily::BinaryIcosahedral: return "binary_icosahedral";
    case GroupFamily::Table: return "table";
  }
  return "table";
}

GroupFamily parse_family(std::string_view name) {
  for (GroupFamily f : {GroupFamily::Cyclic, GroupFamily::BinaryDihedral, GroupFamily::BinaryTetrahedral,
                        GroupFamily::BinaryOctahedral, GroupFamily::BinaryIcosahedral}) {
    if (to_string(f) == name) return f;
  }
  throw Error(ErrorKind::BadParameter, "unknown group family \"" + std::string(name) + "\"");
}

std::size_t FiniteGroup::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < order(); ++b) {
    if (table[a][b] == 0) return b;
  }
  throw Error(ErrorKind::InvalidTable, "element without inverse");
}

std::vector<std::size_t> FiniteGroup::involutions() const {
  std::vector<std::size_t> out;
  for (std::size_t g = 1; g < order(); ++g) {
    if (table[g][g] == 0) out.push_back(g);
  }
  return out;
}

namespace {

Word power(int letter, std::int64_t n) { return Word(static_cast<std::size_t>(n), letter); }

Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x ^= 1;
  return out;
}

// <s, t | (st)^l = s^m = t^n>
std::vector<Word> polyhedral(std::int64_t l, std::int64_t m, std::int64_t n) {
  Word st;
  for (std::int64_t i = 0; i < l; ++i) st = concat(st, {0, 2});
  const Word sm = power(0, m);
  const Word tn = power(2, n);
  return {concat(st, inverse_word(sm)), concat(sm, inverse_word(tn))};
}

// Multiplication from the right-regular action: a * b applies b's word to a.
std::vector<std::vector<std::size_t>> multiplication(const std::vector<std::vector<std::size_t>>& action) {
  const std::size_t n = action.size();
  const std::size_t columns = action.empty() ? 0 : action[0].size();
  std::vector<Word> word(n);
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (std::size_t x = 0; x < columns; ++x) {
      const std::size_t t = action[queue[i]][x];
      if (!seen[t]) {
        seen[t] = true;
        word[t] = concat(word[queue[i]], {static_cast<int>(x)});
        queue.push_back(t);
      }
    }
  }
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t c = a;
      for (int x : word[b]) c = action[c][x];
      table[a][b] = c;
    }
  }
  return table;
}

std::string check_table(const std::vector<std::vector<std::size_t>>& t) {
  const std::size_t n = t.size();
  if (n == 0) return "empty table";
  for (const auto& row : t) {
    if (row.size() != n) return "table is not square";
    std::vector<bool> hit(n, false);
    for (std::size_t v : row) {
      if (v >= n) return "entry out of range";
      if (hit[v]) return "row repeats an entry";
      hit[v] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<bool> hit(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      if (hit[t[r][c]]) return "column repeats an entry";
      hit[t[r][c]] = true;
    }
  }
  std::size_t e = n;
  for (std::size_t a = 0; a < n && e == n; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) ok = t[a][b] == b && t[b][a] == b;
    if (ok) e = a;
  }
  if (e == n) return "no identity element";
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) { return t[t[a][b]][c] == t[a][t[b][c]]; };
  if (n <= 48) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (!assoc(a, b, c)) return "not associative";
        }
      }
    }
  } else {
    std::mt19937_64 engine(0x243f6a8885a308d3ULL);
    for (int k = 0; k < 10000; ++k) {
      if (!assoc(engine() % n, engine() % n, engine() % n)) return "not associative";
    }
  }
  return {};
}

}  // namespace

bool is_group_table(const std::vector<std::vector<std::size_t>>& table) { return check_table(table).empty(); }

FiniteGroup group_from_table(std::vector<std::vector<std::size_t>> table) {
  std::string problem = check_table(table);
  if (!problem.empty()) throw Error(ErrorKind::InvalidTable, problem);
  const std::size_t n = table.size();
  std::size_t e = 0;
  while (table[e][0] != 0 || table[e][e] != e) ++e;
  // Relabel so the identity is 0 (swap e and 0).
  auto relabel = [&](std::size_t x) { return x == e ? 0 : x == 0 ? e : x; };
  std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) out[relabel(a)][relabel(b)] = relabel(table[a][b]);
  }
  FiniteGroup g;
  g.family = GroupFamily::Table;
  g.parameter = static_cast<std::int64_t>(n);
  g.table = std::move(out);
  return g;
}

FiniteGroup build_group(GroupFamily family, std::int64_t parameter) {
  int generators = 2;
  std::vector<Word> relators;
  switch (family) {
    case GroupFamily::Cyclic:
      if (parameter < 1) throw Error(ErrorKind::BadParameter, "cyclic groups need order >= 1");
      generators = 1;
      relators = {power(0, parameter)};
      break;
    case GroupFamily::BinaryDihedral:
      if (parameter < 1) throw Error(ErrorKind::BadParameter, "binary dihedral groups need n >= 1");
      relators = polyhedral(2, 2, parameter);
      break;
    case GroupFamily::BinaryTetrahedral: relators = polyhedral(2, 3, 3); break;
    case GroupFamily::BinaryOctahedral: relators = polyhedral(2, 3, 4); break;
    case GroupFamily::BinaryIcosahedral: relators = polyhedral(2, 3, 5); break;
    case GroupFamily::Table: throw Error(ErrorKind::BadParameter, "table groups come from group_from_table");
  }
  FiniteGroup g;
  g.family = family;
  g.parameter = family == GroupFamily::Cyclic || family == GroupFamily::BinaryDihedral ? parameter : 0;
  g.table = multiplication(enumerate_cosets(generators, relators));
  std::string problem = check_table(g.table);
  if (!problem.empty()) throw std::logic_error("generated table failed validation: " + problem);
  return g;
}

std::size_t involution_count(const FiniteGroup& g) { return g.involutions().size(); }

CoverSigmaModel cover_sigma_model(const FiniteGroup& g) {
  CoverSigmaModel m;
  for (std::size_t e = 1; e < g.order(); ++e) {
    const bool inv = g.multiply(e, e) == 0;
    m.components.push_back({e, g.inverse(e), inv, 1});
    m.invariant_count += inv;
  }
  return m;
}

bool cover_realizable(const FiniteGroup& g) { return g.order() % 2 == 1; }

int hopf_of_cover(const FiniteGroup& g) { return static_cast<int>(involution_count(g) % 2); }

bool theorem4_verdict(const std::optional<FiniteGroup>& pi1) { return pi1 && pi1->order() % 2 == 0; }

DcoverConsistency dcover_consistency(std::int64_t d) {
  if (d < 2) throw Error(ErrorKind::BadParameter, "cover degree must be at least 2");
  DcoverConsistency r;
  r.degree = d;
  const DoublePointCurve curve = sigma(covering_map(d));
  const FiniteGroup group = build_group(GroupFamily::Cyclic, d);
  const CoverSigmaModel model = cover_sigma_model(group);

  r.sigma_components = curve.components.size();
  r.model_components = model.components.size();
  r.all_p1_one = true;
  for (std::size_t c = 0; c < curve.components.size(); ++c) {
    r.sigma_invariant += curve.tau_invariant(c);
    r.all_p1_one = r.all_p1_one && curve.components[c].compact && curve.components[c].p1_degree == 1;
  }
  r.model_invariant = model.invariant_count;
  r.hopf_sigma = hopf_invariant(curve);
  r.hopf_model = hopf_of_cover(group);

  // Component through (0, j/d) corresponds to a^j, where a is the generator.
  r.pairing_matches = r.sigma_components == r.model_components;
  std::vector<std::size_t> power_of(static_cast<std::size_t>(d));
  std::vector<std::size_t> component_of_power(static_cast<std::size_t>(d));
  // Element 1 is the generator in breadth-first numbering (column 0 from the identity).
  std::size_t a = 0;
  for (std::int64_t j = 0; j < d; ++j) {
    power_of[j] = a;
    a = group.multiply(a, 1);
  }
  for (std::int64_t j = 1; j < d && r.pairing_matches; ++j) {
    auto c = component_of(curve, Rational(0), Rational(j, d));
    if (!c) {
      r.pairing_matches = false;
      break;
    }
    component_of_power[j] = *c;
  }
  for (std::int64_t j = 1; j < d && r.pairing_matches; ++j) {
    const bool sigma_pair = curve.components[component_of_power[j]].tau == component_of_power[d - j];
    const bool model_pair = group.inverse(power_of[j]) == power_of[d - j];
    r.pairing_matches = sigma_pair && model_pair;
  }
  r.agree = r.sigma_components == r.model_components && r.sigma_invariant == r.model_invariant && r.all_p1_one &&
            r.hopf_sigma == r.hopf_model && r.pairing_matches;
  return r;
}

std::string dimension7_refusal() {
  return "seven-dimensional targets such as S^7/(Z/4) are not evaluated: the relevant obstruction depends on "
         "stable normal bundle data, not on the order-2 census that drives the three-dimensional verdicts";
}

}  // namespace dpl
