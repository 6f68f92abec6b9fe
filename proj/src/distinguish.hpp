#pragma once

#include "catalog.hpp"
#include "grading.hpp"
#include "homotopy.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace g2x {

/// Per-degree groups plus cup-power divisibility data: power_indices[j] is
/// the index of the subgroup generated by g^j inside the free part of
/// degree 2j, g a chosen Z-generator of degree-2 cohomology. nullopt means
/// infinite index (g^j torsion/zero in a nonzero group, or free rank >= 2).
/// Only defined when the degree-2 group is Z.
struct InvariantVector {
    std::vector<FGAbelianGroup> groups;
    bool has_power_indices = false;
    std::map<int, std::optional<Int>> power_indices;
};

InvariantVector invariants_of(const GradedRing& r);

/// Degreewise group equality through max(top_a, top_b), zero groups above
/// either ring's bound. Returns first mismatching degree on failure.
std::pair<bool, std::optional<int>> groups_equal(const GradedRing& a, const GradedRing& b);

/// Generator images in B, one per generator of A, inducing a degreewise
/// isomorphism that kills all of A's relations.
struct IsoWitness {
    std::vector<RingElement> images;
};

class SearchLimitExceeded : public std::runtime_error {
public:
    explicit SearchLimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive search over degree-respecting generator images with
/// coordinates bounded by coeff_bound; deterministic enumeration
/// (0, 1, -1, 2, -2, ... per coordinate), first witness returned.
/// nullopt means no witness within the bound, NOT non-isomorphism.
/// Throws SearchLimitExceeded when the assignment space exceeds `ceiling`.
std::optional<IsoWitness> isomorphism_search(const GradedRing& a, const GradedRing& b,
                                             int coeff_bound,
                                             std::uint64_t ceiling = 20'000'000);

/// Machine check of a witness: all relations map to zero and every induced
/// degreewise map is an isomorphism.
bool check_witness(const GradedRing& a, const GradedRing& b, const IsoWitness& w,
                   std::string* why = nullptr);

struct ComparisonReport {
    std::string space_a, space_b;
    bool groups_equal = false;
    std::optional<int> first_group_mismatch;
    bool has_power_indices = false;
    std::map<int, std::optional<Int>> power_indices_a, power_indices_b;
    std::optional<int> power_index_first_difference;
    std::optional<int> pi_first_difference;
    PiTable pi_a, pi_b;
    int iso_bound = 0;
    bool iso_search_ran = false;
    std::optional<bool> iso_witness_found;
    std::string verdict;
};

/// Combines group tables, cup-power indices and homotopy tables (deduced
/// through the catalog fibrations) into a verdict:
///   "cohomology-equal, not homotopy-equivalent"  when the groups agree but
///       a power index or a homotopy group differs;
///   "cohomology groups differ"                   on a group mismatch;
///   "indistinguishable by this tool"             otherwise.
ComparisonReport full_report(const SpaceId& a, const SpaceId& b, int max_pi_level,
                             int iso_bound = 2);

/// Homotopy table of a catalog space, deduced through its catalog fibration
/// when one exists (CP and the Grassmannians), else the stored table.
PiTable pi_table_for(const SpaceId& s, int max_level);

}  // namespace g2x
