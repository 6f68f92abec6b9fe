#include "abelian.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace g2x {

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        std::size_t j = 0;
        for (long long x : row) m.at(i, j++) = x;
        ++i;
    }
    return m;
}

Int& IntMatrix::at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
    return a_[r * cols_ + c];
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
    return a_[r * cols_ + c];
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::operator*: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += x * rhs.at(k, j);
        }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && at(i, j) != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) at(dst, c) += f * at(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += f * at(r, src);
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix::determinant: not square");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && a.at(r, k) == 0) ++r;
            if (r == n) return 0;
            a.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
    std::vector<Int> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
    IntMatrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

std::vector<Int> mat_vec(const IntMatrix& m, const std::vector<Int>& v) {
    if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<Int> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0 && v[j] != 0) out[i] += m.at(i, j) * v[j];
    return out;
}

// ----------------------------------------------------------------- SNF

SNFResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SNFResult r;
    r.d = m;
    r.u = IntMatrix::identity(rows);
    r.u_inv = IntMatrix::identity(rows);
    r.v = IntMatrix::identity(cols);
    r.v_inv = IntMatrix::identity(cols);
    IntMatrix& d = r.d;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        d.swap_rows(i, j);
        r.u.swap_rows(i, j);
        r.u_inv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        d.swap_cols(i, j);
        r.v.swap_cols(i, j);
        r.v_inv.swap_rows(i, j);
    };
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        d.add_row_multiple(dst, src, f);
        r.u.add_row_multiple(dst, src, f);
        r.u_inv.add_col_multiple(src, dst, -f);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& f) {
        if (f == 0) return;
        d.add_col_multiple(dst, src, f);
        r.v.add_col_multiple(dst, src, f);
        r.v_inv.add_row_multiple(src, dst, -f);
    };
    auto row_negate = [&](std::size_t i) {
        d.negate_row(i);
        r.u.negate_row(i);
        r.u_inv.negate_col(i);
    };

    const std::size_t nmin = std::min(rows, cols);
    for (std::size_t k = 0; k < nmin; ++k) {
        bool have = false;
        std::size_t pr = k, pc = k;
        Int best;
        auto find_pivot = [&]() {
            have = false;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j) {
                    const Int& x = d.at(i, j);
                    if (x == 0) continue;
                    Int ax = abs(x);
                    if (!have || ax < best) {
                        have = true;
                        best = ax;
                        pr = i;
                        pc = j;
                    }
                }
        };
        for (;;) {
            find_pivot();
            if (!have) break;  // remaining submatrix is zero
            row_swap(k, pr);
            col_swap(k, pc);
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (d.at(i, k) != 0) {
                    Int q = d.at(i, k) / d.at(k, k);
                    row_axpy(i, k, -q);
                    if (d.at(i, k) != 0) clean = false;
                }
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (d.at(k, j) != 0) {
                    Int q = d.at(k, j) / d.at(k, k);
                    col_axpy(j, k, -q);
                    if (d.at(k, j) != 0) clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide everything that remains
            bool divides = true;
            for (std::size_t i = k + 1; i < rows && divides; ++i)
                for (std::size_t j = k + 1; j < cols && divides; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        row_axpy(k, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (!have) break;
        if (d.at(k, k) < 0) row_negate(k);
    }

    std::size_t rank = 0;
    for (std::size_t i = 0; i < nmin; ++i)
        if (d.at(i, i) != 0) ++rank;
    r.rank = rank;
    return r;
}

// ---------------------------------------------------------- FGAbelianGroup

FGAbelianGroup FGAbelianGroup::free_group(std::size_t rank) {
    FGAbelianGroup g;
    g.free_rank_ = rank;
    return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(const Int& n) {
    FGAbelianGroup g;
    if (n == 0) {
        g.free_rank_ = 1;
    } else {
        Int d = abs(n);
        if (d >= 2) g.torsion_.push_back(d);
    }
    return g;
}

FGAbelianGroup FGAbelianGroup::make(std::size_t free_rank, std::vector<Int> torsion) {
    FGAbelianGroup g;
    g.free_rank_ = free_rank;
    std::vector<Int> entries;
    for (Int& t : torsion) {
        if (t == 0) throw std::invalid_argument("FGAbelianGroup::make: zero torsion entry");
        Int d = abs(t);
        if (d >= 2) entries.push_back(std::move(d));
    }
    if (entries.empty()) return g;
    bool chain = true;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (entries[i + 1] % entries[i] != 0) {
            chain = false;
            break;
        }
    if (chain) {
        g.torsion_ = std::move(entries);
        return g;
    }
    IntMatrix diag(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) diag.at(i, i) = entries[i];
    SNFResult s = smith_normal_form(diag);
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (s.d.at(i, i) >= 2) g.torsion_.push_back(s.d.at(i, i));
    return g;
}

std::optional<Int> FGAbelianGroup::order() const {
    if (free_rank_ != 0) return std::nullopt;
    Int n = 1;
    for (const Int& d : torsion_) n *= d;
    return n;
}

Int FGAbelianGroup::generator_order(std::size_t i) const {
    if (i < free_rank_) return 0;
    return torsion_.at(i - free_rank_);
}

std::string FGAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ == 1) {
        os << "Z";
        first = false;
    } else if (free_rank_ >= 2) {
        os << "Z^" << free_rank_;
        first = false;
    }
    for (const Int& d : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FGAbelianGroup direct_sum(const FGAbelianGroup& a, const FGAbelianGroup& b) {
    std::vector<Int> tor = a.torsion();
    tor.insert(tor.end(), b.torsion().begin(), b.torsion().end());
    return FGAbelianGroup::make(a.free_rank() + b.free_rank(), std::move(tor));
}

IntMatrix relation_matrix(const FGAbelianGroup& g) {
    IntMatrix m(g.generator_count(), g.torsion().size());
    for (std::size_t j = 0; j < g.torsion().size(); ++j) m.at(g.free_rank() + j, j) = g.torsion()[j];
    return m;
}

// --------------------------------------------------- QuotientPresentation

QuotientPresentation::QuotientPresentation(std::size_t ambient, const IntMatrix& relations)
    : ambient_(ambient) {
    if (relations.rows() != ambient)
        throw std::invalid_argument("QuotientPresentation: relation row count != ambient rank");
    SNFResult s = smith_normal_form(relations);
    u_ = std::move(s.u);
    u_inv_ = std::move(s.u_inv);
    std::vector<std::size_t> free_rows, torsion_rows;
    for (std::size_t i = s.rank; i < ambient; ++i) free_rows.push_back(i);
    for (std::size_t i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) >= 2) torsion_rows.push_back(i);
    std::vector<Int> tor;
    for (std::size_t i : torsion_rows) tor.push_back(s.d.at(i, i));
    group_ = FGAbelianGroup::make(free_rows.size(), tor);
    coord_rows_ = free_rows;
    coord_rows_.insert(coord_rows_.end(), torsion_rows.begin(), torsion_rows.end());
    moduli_.assign(free_rows.size(), Int(0));
    for (std::size_t i : torsion_rows) moduli_.push_back(s.d.at(i, i));
}

std::vector<Int> QuotientPresentation::reduce(const std::vector<Int>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("QuotientPresentation::reduce: size mismatch");
    std::vector<Int> out(coord_rows_.size());
    for (std::size_t c = 0; c < coord_rows_.size(); ++c) {
        Int y = 0;
        const std::size_t row = coord_rows_[c];
        for (std::size_t j = 0; j < ambient_; ++j)
            if (v[j] != 0) y += u_.at(row, j) * v[j];
        if (moduli_[c] != 0) {
            y %= moduli_[c];
            if (y < 0) y += moduli_[c];
        }
        out[c] = std::move(y);
    }
    return out;
}

std::vector<Int> QuotientPresentation::lift(std::size_t coord) const {
    return u_inv_.column(coord_rows_.at(coord));
}

void QuotientPresentation::flip_coordinate_sign(std::size_t coord) {
    const std::size_t row = coord_rows_.at(coord);
    u_.negate_row(row);
    u_inv_.negate_col(row);
}

// ----------------------------------------------------------- lattices

bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& x) {
    if (gens.rows() != x.size()) throw std::invalid_argument("lattice_contains: size mismatch");
    SNFResult s = smith_normal_form(gens);
    std::vector<Int> y = mat_vec(s.u, x);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < s.rank) {
            if (y[i] % s.d.at(i, i) != 0) return false;
        } else if (y[i] != 0) {
            return false;
        }
    }
    return true;
}

namespace {

bool lattice_contains_all(const IntMatrix& gens, const IntMatrix& vectors) {
    SNFResult s = smith_normal_form(gens);
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
        std::vector<Int> y = mat_vec(s.u, vectors.column(j));
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (i < s.rank) {
                if (y[i] % s.d.at(i, i) != 0) return false;
            } else if (y[i] != 0) {
                return false;
            }
        }
    }
    return true;
}

FGAbelianGroup quotient_group(std::size_t ambient, const IntMatrix& relations) {
    return QuotientPresentation(ambient, relations).group();
}

}  // namespace

bool lattice_equal(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("lattice_equal: ambient mismatch");
    return lattice_contains_all(a, b) && lattice_contains_all(b, a);
}

// --------------------------------------------------------- PresentedHom

PresentedHom::PresentedHom(FGAbelianGroup source, FGAbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.generator_count() || matrix_.cols() != source_.generator_count())
        throw std::invalid_argument("PresentedHom: matrix shape does not match generator counts");
    // well-definedness: d * f(gen) must vanish for a generator of order d
    for (std::size_t j = 0; j < source_.generator_count(); ++j) {
        const Int dj = source_.generator_order(j);
        if (dj == 0) continue;
        for (std::size_t i = 0; i < target_.generator_count(); ++i) {
            const Int v = dj * matrix_.at(i, j);
            const Int di = target_.generator_order(i);
            if (di == 0) {
                if (v != 0)
                    throw std::invalid_argument(
                        "PresentedHom: torsion generator mapped to infinite-order element");
            } else if (v % di != 0) {
                throw std::invalid_argument("PresentedHom: map does not respect generator orders");
            }
        }
    }
}

PresentedHom PresentedHom::zero(const FGAbelianGroup& source, const FGAbelianGroup& target) {
    return PresentedHom(source, target, IntMatrix(target.generator_count(), source.generator_count()));
}

PresentedHom PresentedHom::identity(const FGAbelianGroup& g) {
    return PresentedHom(g, g, IntMatrix::identity(g.generator_count()));
}

FGAbelianGroup cokernel(const PresentedHom& f) {
    const IntMatrix combined = hstack(f.matrix(), relation_matrix(f.target()));
    return quotient_group(f.target().generator_count(), combined);
}

IntMatrix kernel_lattice(const PresentedHom& f) {
    const std::size_t n = f.source().generator_count();
    const IntMatrix rb = relation_matrix(f.target());
    const IntMatrix w = hstack(f.matrix(), rb);
    SNFResult s = smith_normal_form(w);
    // kernel of w is spanned by the columns of V past the rank; their top n
    // entries generate the preimage lattice {x : f(x) in col(rb)}
    const std::size_t nk = w.cols() - s.rank;
    IntMatrix g(n, nk);
    for (std::size_t c = 0; c < nk; ++c)
        for (std::size_t i = 0; i < n; ++i) g.at(i, c) = s.v.at(i, s.rank + c);
    return g;
}

FGAbelianGroup kernel(const PresentedHom& f) {
    const IntMatrix g = kernel_lattice(f);
    SNFResult sg = smith_normal_form(g);
    const std::size_t rho = sg.rank;
    // coordinates of the source relation columns in the lattice basis
    // {d_i * (u_inv column i)}
    const IntMatrix ra = relation_matrix(f.source());
    IntMatrix c(rho, ra.cols());
    for (std::size_t j = 0; j < ra.cols(); ++j) {
        std::vector<Int> y = mat_vec(sg.u, ra.column(j));
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (i < rho) {
                const Int& di = sg.d.at(i, i);
                if (y[i] % di != 0)
                    throw std::logic_error("kernel: source relation escapes the preimage lattice");
                c.at(i, j) = y[i] / di;
            } else if (y[i] != 0) {
                throw std::logic_error("kernel: source relation escapes the preimage lattice");
            }
        }
    }
    return quotient_group(rho, c);
}

FGAbelianGroup image(const PresentedHom& f) {
    // image(f) = source / kernel = Z^n / preimage-lattice
    return quotient_group(f.source().generator_count(), kernel_lattice(f));
}

bool is_exact_at(const PresentedHom& f, const PresentedHom& g) {
    if (!(f.target() == g.source()))
        throw std::invalid_argument("is_exact_at: target(f) != source(g)");
    const IntMatrix im = hstack(f.matrix(), relation_matrix(f.target()));
    const IntMatrix ker = kernel_lattice(g);
    return lattice_equal(im, ker);
}

}  // namespace g2x
