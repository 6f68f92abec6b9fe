#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace g2x {

/// Exact arbitrary-precision integer. No floating point appears anywhere in
/// the engine; intermediate entries of a Smith reduction can outgrow any
/// fixed-width type even when the inputs are tiny.
using Int = boost::multiprecision::cpp_int;

/// Dense row-major matrix of exact integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c);
    const Int& at(std::size_t r, std::size_t c) const;

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    IntMatrix transpose() const;
    bool is_zero() const;
    bool is_diagonal() const;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    /// row[dst] += f * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& f);
    /// col[dst] += f * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& f);

    /// Exact determinant by fraction-free (Bareiss) elimination. Square only.
    Int determinant() const;

    std::vector<Int> column(std::size_t j) const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

/// [a | b], matching row counts.
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v);

struct SNFResult {
    IntMatrix u;      ///< unimodular row factor
    IntMatrix d;      ///< diagonal, non-negative, divisibility chain
    IntMatrix v;      ///< unimodular column factor
    IntMatrix u_inv;  ///< inverse of u, tracked during the reduction
    IntMatrix v_inv;  ///< inverse of v
    std::size_t rank = 0;
};

/// U * M * V = D exactly. Pivoting is pinned (smallest nonzero absolute
/// value, row-major tie-break) so the factors are deterministic for a given
/// input. Total on all integer matrices, including empty ones.
SNFResult smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group in invariant-factor canonical form:
/// Z^free_rank + Z/d1 + Z/d2 + ... with 2 <= d1 | d2 | ...
/// Equality is structural; two values are equal iff the groups are isomorphic.
class FGAbelianGroup {
public:
    FGAbelianGroup() = default;  // the trivial group

    static FGAbelianGroup free_group(std::size_t rank);
    /// n == 0 gives Z, |n| == 1 gives the trivial group, else Z/|n|.
    static FGAbelianGroup cyclic(const Int& n);
    /// Canonicalizes an arbitrary torsion list (entries != 0; 1s dropped,
    /// factors folded into a divisibility chain).
    static FGAbelianGroup make(std::size_t free_rank, std::vector<Int> torsion);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }

    bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const { return free_rank_ == 0; }
    /// Order of the group when finite.
    std::optional<Int> order() const;

    /// Number of generators in the fixed presentation: free generators
    /// first, then one generator per torsion factor in chain order.
    std::size_t generator_count() const { return free_rank_ + torsion_.size(); }
    /// Order of the i-th generator; 0 encodes infinite order.
    Int generator_order(std::size_t i) const;

    bool operator==(const FGAbelianGroup& rhs) const = default;

    /// "0", "Z", "Z^2", "Z + Z/2", "Z/2 + Z/4", ...
    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> torsion_;
};

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b);

/// Relation matrix of the fixed presentation of g: generator_count() rows,
/// one column d_j * e_{free_rank + j} per torsion factor.
IntMatrix relation_matrix(const FGAbelianGroup& g);

/// Z^ambient modulo the column lattice of a relation matrix, carrying
/// canonical coordinates for the quotient: free coordinates first, then
/// torsion coordinates reduced into [0, d).
class QuotientPresentation {
public:
    QuotientPresentation() = default;
    QuotientPresentation(std::size_t ambient, const IntMatrix& relations);

    const FGAbelianGroup& group() const { return group_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t coord_count() const { return coord_rows_.size(); }

    /// Canonical coordinates of a vector's class.
    std::vector<Int> reduce(const std::vector<Int>& v) const;
    /// A representative in Z^ambient reducing to the unit vector e_coord.
    std::vector<Int> lift(std::size_t coord) const;
    /// Replaces the coordinate by its negative (used to normalize basis
    /// representatives); keeps reduce/lift consistent.
    void flip_coordinate_sign(std::size_t coord);

private:
    std::size_t ambient_ = 0;
    FGAbelianGroup group_;
    std::vector<std::size_t> coord_rows_;  // row indices into u_: free rows then torsion rows
    std::vector<Int> moduli_;              // 0 for free coordinates, d >= 2 for torsion
    IntMatrix u_, u_inv_;
};

/// Does the column lattice of `gens` contain x?
bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& x);
/// Column-lattice equality via mutual containment.
bool lattice_equal(const IntMatrix& a, const IntMatrix& b);

/// Homomorphism between finitely generated abelian groups, given by a matrix
/// on the fixed generators (target generators index rows). Construction
/// checks well-definedness: a generator of finite order d must map to an
/// element killed by d.
class PresentedHom {
public:
    PresentedHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix);

    static PresentedHom zero(const FGAbelianGroup& source, const FGAbelianGroup& target);
    static PresentedHom identity(const FGAbelianGroup& g);

    const FGAbelianGroup& source() const { return source_; }
    const FGAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

private:
    FGAbelianGroup source_, target_;
    IntMatrix matrix_;
};

FGAbelianGroup cokernel(const PresentedHom& f);
FGAbelianGroup kernel(const PresentedHom& f);
FGAbelianGroup image(const PresentedHom& f);

/// Generators, as columns in Z^{gen_count(middle)}, of the sublattice
/// representing the kernel of f inside its source.
IntMatrix kernel_lattice(const PresentedHom& f);

/// image(f) == kernel(g) as subgroups of target(f) = source(g).
/// Throws if the composition interface does not match.
bool is_exact_at(const PresentedHom& f, const PresentedHom& g);

}  // namespace g2x
