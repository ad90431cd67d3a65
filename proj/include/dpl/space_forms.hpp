#ifndef DPL_SPACE_FORMS_HPP
#define DPL_SPACE_FORMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpl {

enum class GroupFamily { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral, Table };

std::string_view to_string(GroupFamily family);
/// Accepts the names used in group files: "cyclic", "binary_dihedral", ...
GroupFamily parse_family(std::string_view name);

/// Finite group as a validated multiplication table; element 0 is the identity.
struct FiniteGroup {
  GroupFamily family = GroupFamily::Table;
  std::int64_t parameter = 0;
  std::vector<std::vector<std::size_t>> table;

  std::size_t order() const { return table.size(); }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table[a][b]; }
  std::size_t inverse(std::size_t a) const;
  std::vector<std::size_t> involutions() const;
};

/// Cyclic groups take n >= 1 and binary dihedral groups n >= 1 (order 4n);
/// the three exceptional families ignore the parameter.  Throws BadParameter.
FiniteGroup build_group(GroupFamily family, std::int64_t parameter = 0);

/// Validation gate for user tables: square, Latin, two-sided identity,
/// associativity (every triple up to order 48, otherwise 10^4 seeded random
/// triples).  The table is relabelled so the identity is element 0.  Throws
/// InvalidTable.
FiniteGroup group_from_table(std::vector<std::vector<std::size_t>> table);

/// Same associativity and identity checks, returning false instead of throwing.
bool is_group_table(const std::vector<std::vector<std::size_t>>& table);

std::size_t involution_count(const FiniteGroup& g);

struct CoverComponent {
  std::size_t element;  // g != 1; component {(x, g x)}
  std::size_t tau;      // g^{-1}, whose component is the swapped one
  bool tau_invariant;   // g^2 = 1
  int projection_degree;
};
struct CoverSigmaModel {
  std::vector<CoverComponent> components;
  std::size_t invariant_count = 0;
};

CoverSigmaModel cover_sigma_model(const FiniteGroup& g);
bool cover_realizable(const FiniteGroup& g);
int hopf_of_cover(const FiniteGroup& g);
/// nullopt stands for an infinite fundamental group.
bool theorem4_verdict(const std::optional<FiniteGroup>& pi1);

struct DcoverConsistency {
  std::int64_t degree = 0;
  std::size_t sigma_components = 0;
  std::size_t model_components = 0;
  std::size_t sigma_invariant = 0;
  std::size_t model_invariant = 0;
  bool all_p1_one = false;
  int hopf_sigma = 0;
  int hopf_model = 0;
  bool pairing_matches = false;
  bool agree = false;
};

/// Compares the circle d-cover's double-point curve with the cyclic-group model.
DcoverConsistency dcover_consistency(std::int64_t d);

/// Why seven-dimensional quotients are not evaluated.
std::string dimension7_refusal();

}  // namespace dpl

#endif  // DPL_SPACE_FORMS_HPP
