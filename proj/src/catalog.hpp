#pragma once

#include "grading.hpp"
#include "homotopy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace g2x {

/// Raised by the space/fibration parsers for malformed specs and
/// out-of-range parameters; the CLI maps it to the usage exit code.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class SpaceKind { CP, GrassOdd, GrassEven, StiefelOdd, StiefelEven, Sphere, S2xS2 };

/// CP(n) is CP_n; GrassOdd(k) is G2+R^{2k+1}; GrassEven(k) is G2+R^{2k};
/// StiefelOdd(k) is V2R^{2k+1}; StiefelEven(k) is V2R^{2k}. k >= 2 throughout
/// (k = 1 degenerates to spheres, covered by Sphere/CP(1)).
struct SpaceId {
    SpaceKind kind = SpaceKind::CP;
    int param = 1;
    bool operator==(const SpaceId&) const = default;
    std::string to_string() const;  // grammar form: cp:5, g2+:7, v2:8, s:11, s2xs2
};

enum class Variant { Corrected, Verbatim };

std::string variant_name(Variant v);

/// Grammar: cp:<n> | g2+:<n> | v2:<n> | s:<n> | s2xs2, optional suffix
/// @verbatim or @corrected (default corrected).
SpaceId parse_space(const std::string& text);
std::pair<SpaceId, Variant> parse_space_spec(const std::string& text,
                                             Variant default_variant = Variant::Corrected);

struct RelationInfo {
    enum class Provenance { Verbatim, Corrected } provenance = Provenance::Verbatim;
    std::string justification;  // empty for verbatim relations
};

struct SpaceData {
    SpaceId id;
    Variant variant = Variant::Corrected;
    RingPresentation presentation;
    std::vector<RelationInfo> relation_info;  // parallel to presentation.relations
    int dimension = 0;
    bool simply_connected = false;
    std::vector<std::string> notes;  // discrepancy and naming notes
};

SpaceData space_data(const SpaceId& s, Variant variant = Variant::Corrected);
RingPresentation presentation_of(const SpaceId& s, Variant variant = Variant::Corrected);
int dimension_of(const SpaceId& s);
bool simply_connected(const SpaceId& s);

/// Computes the catalog ring at its dimension; `extra_degrees` raises the
/// computation bound (used by truncation checks).
GradedRing ring_of(const SpaceId& s, Variant variant = Variant::Corrected, int extra_degrees = 0);

/// Additive cohomology table indexed 0..dimension. Equals the computed ring
/// groups for every entry except StiefelEven, where the stored table
/// overrides the presentation's top degree (see notes_for).
std::vector<FGAbelianGroup> additive_groups_of(const SpaceId& s, Variant variant = Variant::Corrected);

/// Reference Betti numbers (free ranks by degree, 0..dimension) where the
/// catalog pins them independently of the presentations.
std::optional<std::vector<std::size_t>> reference_betti(const SpaceId& s);

/// Known low-degree homotopy: spheres and Stiefel manifolds by connectivity;
/// everything else only levels 0 and (when simply connected) 1.
PiTable homotopy_table_of(const SpaceId& s, int max_level);

/// Generator of the top cohomology group. When the degree-2 group is Z the
/// sign is normalized so that the (top/2)-th cup power of the degree-2
/// generator reduces to a positive multiple of the orientation; otherwise
/// the first basis vector is taken. Errors when the top group is not Z.
RingElement orientation_of(const SpaceId& s, const GradedRing& ring);

std::vector<std::string> notes_for(const SpaceId& s, Variant variant);

struct Fibration {
    std::string name;
    SpaceId fiber, total, base;
};

/// hopf:<n>  S^1 -> S^{2n+1} -> CP_n
Fibration hopf_fibration(int n);
/// grassfib:<n>  S^1 -> V2R^n -> G2+R^n (n >= 4)
Fibration grassmann_fibration(int n);
Fibration parse_fibration(const std::string& text);
/// The catalog fibration with the given base (CP or Grassmannian).
Fibration fibration_over(const SpaceId& base);

}  // namespace g2x
