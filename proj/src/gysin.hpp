#pragma once

#include "abelian.hpp"
#include "grading.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace g2x {

/// Two-row cohomological spectral sequence page for a circle bundle:
/// rows q = 0, 1, columns p = 0..top_p. E2 carries basis labels (monomials
/// on q = 0, a*monomial on q = 1); the limit page carries groups only.
struct SSEntry {
    FGAbelianGroup group;
    std::vector<std::string> labels;  // one per free/torsion coordinate; may be empty
};

struct SSPage {
    enum class Index { E2, EInf };
    Index index = Index::E2;
    int top_p = 0;
    std::array<std::vector<SSEntry>, 2> rows;  // rows[q][p]

    const SSEntry& at(int p, int q) const;
    /// Plain-text table in the two-row layout (q = 1 on top, column indices
    /// underneath).
    std::string to_text() const;
};

SSPage build_e2(const GradedRing& base);

/// d2 on the q = 1 row: under E^{p,1} = a*H^p(B), the differential is cup
/// product with the Euler class, d2(a*x) = e*x; the q = 0 row maps out of
/// the band.
class Differential {
public:
    Differential(std::vector<PresentedHom> maps);
    int top_p() const { return static_cast<int>(maps_.size()) - 1; }
    const PresentedHom& at(int p) const;

private:
    std::vector<PresentedHom> maps_;
};

Differential d2_from_euler(const GradedRing& base, const RingElement& euler);

/// E3 = Einf for a two-row sequence: Einf^{p,0} = coker(d2^{p-2,1}),
/// Einf^{p,1} = ker(d2^{p,1}).
SSPage take_limit(const SSPage& e2, const Differential& d);

/// One total degree of the filtration: 0 -> sub -> H^n(E) -> quot -> 0 with
/// sub = Einf^{n,0} and quot = Einf^{n-1,1}. Resolved when either side
/// vanishes or the quotient is free (the extension splits); otherwise all
/// candidate extensions are listed.
struct FiltrationAssembly {
    int total_degree = 0;
    FGAbelianGroup sub, quot;
    bool resolved = false;
    FGAbelianGroup value;                    // meaningful when resolved
    std::vector<FGAbelianGroup> candidates;  // meaningful when !resolved
};

std::vector<FiltrationAssembly> assemble_total(const SSPage& limit);

/// Isomorphism classes of abelian extensions 0 -> sub -> G -> quot -> 0,
/// deduplicated, deterministic order.
std::vector<FGAbelianGroup> extensions_of(const FGAbelianGroup& quot, const FGAbelianGroup& sub);

enum class Verdict { Match, Mismatch, AmbiguousConsistent };

struct DegreeVerdict {
    int degree = 0;
    Verdict verdict = Verdict::Match;
    FGAbelianGroup expected;
    std::string computed;  // group or candidate list rendering
};

struct GysinReport {
    std::vector<DegreeVerdict> degrees;
    bool all_match = false;
};

/// Compares the assembled total-space cohomology with an expected table
/// indexed 0..top_p+1. Ambiguous degrees count as consistent iff the
/// expected group is among the candidates.
GysinReport verify_total(const SSPage& limit, const std::vector<FGAbelianGroup>& expected);

enum class D2Kind { Iso, InjectiveWithCokernel, Zero, Unconstrained };

struct D2Slot {
    D2Kind kind = D2Kind::Unconstrained;
    FGAbelianGroup cokernel;  // meaningful for InjectiveWithCokernel
};

struct D2Profile {
    std::vector<D2Slot> slots;  // indexed by p
    std::optional<int> contradiction_degree;
    std::string contradiction_note;
};

/// Inverse problem: which kernel/cokernel of d2^{p,1} are forced by the
/// two-row degeneration against the given total-space groups. `base` is
/// indexed 0..P, `total` 0..P+1. Infeasible inputs surface as a
/// contradiction at the first failing degree.
D2Profile required_d2_profile(const std::vector<FGAbelianGroup>& base,
                              const std::vector<FGAbelianGroup>& total);

std::string d2_kind_name(D2Kind k);

}  // namespace g2x
