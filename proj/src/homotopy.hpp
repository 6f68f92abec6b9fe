#pragma once

#include "abelian.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2x {

/// One homotopy-group slot: a known abelian group or no information.
struct PiEntry {
    std::optional<FGAbelianGroup> known;
    std::string note;  // e.g. "= pi_j(S^11)" on annotated unknowns

    static PiEntry unknown(std::string note = "") { return {std::nullopt, std::move(note)}; }
    static PiEntry of(FGAbelianGroup g) { return {std::move(g), ""}; }
    bool is_known() const { return known.has_value(); }
    bool is_known_zero() const { return known && known->is_trivial(); }
    bool operator==(const PiEntry& rhs) const { return known == rhs.known; }
};

/// Homotopy groups indexed from level 0. Only abelian (or trivial) pi_1 is
/// supported; inputs flagged nonabelian are rejected at construction.
class PiTable {
public:
    PiTable() = default;
    explicit PiTable(std::vector<PiEntry> entries, bool pi1_nonabelian = false);

    std::size_t size() const { return entries_.size(); }
    int max_level() const { return static_cast<int>(entries_.size()) - 1; }
    const PiEntry& at(int level) const;
    void set(int level, PiEntry e);

    /// Paper-style tuple: "(0,0,Z,0,0,Z_2)"; '?' for unknowns.
    std::string to_string() const;

    bool operator==(const PiTable& rhs) const { return entries_ == rhs.entries_; }

private:
    std::vector<PiEntry> entries_;
};

/// "Z", "Z_2", "Z^2+Z_2", "0" — tuple-style group rendering.
std::string pi_group_to_string(const FGAbelianGroup& g);

/// Base homotopy groups deduced from the long exact sequence of a fibration
/// F -> E -> B, only where flanking zeros force a unique answer:
///   (i)  pi_k(F) = pi_{k-1}(F) = 0 known and pi_k(E) known  => pi_k(B) = pi_k(E)
///   (ii) pi_k(E) = pi_{k-1}(E) = 0 known and pi_{k-1}(F) known
///                                            => pi_k(B) = pi_{k-1}(F)
/// Anything else is Unknown; level 0 is the trivial group (connected base).
/// Throws if the input tables do not cover 0..max_level.
PiTable les_base(const PiTable& fiber, const PiTable& total, int max_level);

/// Homotopy of CP_n determined by the sphere S^{2n+1}: 0 below 2, Z at 2,
/// 0 for 2 < j < 2n+1, Z at 2n+1, and annotated Unknown above.
PiTable cp_homotopy_from_sphere(int n, int max_level);

/// Smallest level where both tables are known and disagree. Unknown never
/// witnesses a difference.
std::optional<int> first_difference(const PiTable& a, const PiTable& b);

}  // namespace g2x
