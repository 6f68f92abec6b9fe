#pragma once

#include "abelian.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace g2x {

struct GeneratorSpec {
    std::string name;
    int degree = 1;
    bool operator==(const GeneratorSpec&) const = default;
};

/// Exponent vector aligned with a presentation's generator list.
using Exponents = std::vector<int>;

int monomial_degree(const Exponents& e, const std::vector<GeneratorSpec>& gens);
/// Declaration-ordered rendering: "1", "x2^3*x6", ...
std::string monomial_to_string(const Exponents& e, const std::vector<GeneratorSpec>& gens);
/// Does some odd-degree generator appear with exponent >= 2? Such a
/// monomial is 2-torsion in the free graded-commutative ring.
bool has_odd_square(const Exponents& e, const std::vector<GeneratorSpec>& gens);
/// Koszul sign picked up when the product of two declaration-ordered
/// monomials is rewritten in declaration order.
int koszul_sign(const Exponents& a, const Exponents& b, const std::vector<GeneratorSpec>& gens);

/// Integer polynomial: finite map monomial -> nonzero coefficient.
class PolynomialExpr {
public:
    PolynomialExpr() = default;
    static PolynomialExpr monomial(const Exponents& e, Int coeff = 1);

    void add_term(const Exponents& e, const Int& coeff);
    const std::map<Exponents, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    std::set<int> degrees(const std::vector<GeneratorSpec>& gens) const;
    /// Engaged degree when homogeneous and nonzero.
    std::optional<int> homogeneous_degree(const std::vector<GeneratorSpec>& gens) const;

    PolynomialExpr operator+(const PolynomialExpr& rhs) const;
    PolynomialExpr operator-() const;
    PolynomialExpr scaled(const Int& c) const;

    std::string to_string(const std::vector<GeneratorSpec>& gens) const;

private:
    std::map<Exponents, Int> terms_;
};

/// Graded-commutative product with Koszul signs.
PolynomialExpr multiply(const PolynomialExpr& a, const PolynomialExpr& b,
                        const std::vector<GeneratorSpec>& gens);

struct RingPresentation {
    std::vector<GeneratorSpec> generators;
    std::vector<PolynomialExpr> relations;
    int top_degree = 0;

    /// Unique names, degrees >= 1, exponent vectors the right length.
    void check_valid() const;
    std::size_t generator_index(const std::string& name) const;
};

struct HomogeneityViolation {
    std::size_t relation_index = 0;
    std::set<int> degrees;
    std::string relation_text;
};

/// Empty iff every relation is homogeneous. Zero relations are vacuously
/// homogeneous.
std::vector<HomogeneityViolation> validate_homogeneous(const RingPresentation& p);

/// Advisory findings that do not block computation; currently: an
/// odd-degree generator with no relation mentioning its square (its square
/// is then a surviving 2-torsion class, which is usually unintended).
std::vector<std::string> lint_presentation(const RingPresentation& p);

/// Text format, one item per line:
///   gen <name> <degree>
///   rel <polynomial>         e.g.  rel x2^3 - 2*x6
///   top <d>
/// '#' starts a comment.
RingPresentation parse_presentation(const std::string& text);
std::string render_presentation(const RingPresentation& p);
PolynomialExpr parse_polynomial(const std::string& text, const std::vector<GeneratorSpec>& gens);

/// Element of a computed ring: canonical coordinates in one degree's basis
/// (free coordinates first, then torsion coordinates reduced mod d).
struct RingElement {
    int degree = 0;
    std::vector<Int> coords;
    std::uint64_t ring_id = 0;
    bool operator==(const RingElement&) const = default;
};

/// A finite-dimensional graded-commutative ring computed from a
/// presentation: per-degree groups, monomial bases with a reduction map,
/// and cup products. Immutable after compute().
class GradedRing {
public:
    struct DegreeSlot {
        FGAbelianGroup group;
        std::vector<Exponents> monomials;       ///< graded-lex order; column space
        std::vector<std::string> basis_labels;  ///< one per canonical coordinate
        std::vector<PolynomialExpr> basis_lifts;
        QuotientPresentation quotient;
    };

    int top_degree() const { return top_; }
    const std::vector<GeneratorSpec>& generators() const { return pres_.generators; }
    const RingPresentation& presentation() const { return pres_; }
    std::uint64_t id() const { return id_; }

    const DegreeSlot& slot(int degree) const;
    /// Trivial group above top_degree.
    FGAbelianGroup group(int degree) const;

    RingElement zero(int degree) const;
    RingElement basis_element(int degree, std::size_t i) const;
    RingElement generator_class(std::size_t gen_index) const;
    RingElement monomial_class(const Exponents& e) const;

    /// Canonical coordinates of a homogeneous polynomial's residue class.
    /// Degrees above top_degree reduce to zero by convention.
    RingElement normal_form(const PolynomialExpr& e) const;

    RingElement cup(const RingElement& a, const RingElement& b) const;
    RingElement power(const RingElement& a, int n) const;
    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement negate(const RingElement& a) const;
    RingElement scale(const RingElement& a, const Int& c) const;
    bool is_zero_element(const RingElement& a) const;

    /// Coefficient of a top-degree class on the orientation generator.
    /// The orientation's degree group must be infinite cyclic and the
    /// orientation a generator of it.
    Int integrate(const RingElement& a, const RingElement& orientation) const;

    std::vector<std::size_t> poincare_series() const;
    std::vector<std::vector<Int>> torsion_profile() const;

    std::string element_to_string(const RingElement& a) const;

    friend GradedRing compute(const RingPresentation& p);

private:
    void require_element(const RingElement& a) const;
    std::vector<Int> expand(const PolynomialExpr& e, int degree) const;

    RingPresentation pres_;
    int top_ = 0;
    std::vector<DegreeSlot> slots_;
    std::uint64_t id_ = 0;
};

/// Computes the ring degreewise: in each degree the group is the span of
/// that degree's monomials modulo the degree slice of the two-sided ideal,
/// both handled by Smith normal form. Throws on inhomogeneous presentations.
GradedRing compute(const RingPresentation& p);

/// All monomials of the given degree over the generators, graded-lex order
/// (exponent vectors descending lexicographically in declaration order).
std::vector<Exponents> monomials_of_degree(int degree, const std::vector<GeneratorSpec>& gens);

}  // namespace g2x
