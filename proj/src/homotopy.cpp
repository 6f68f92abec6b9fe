#include "homotopy.hpp"

#include <sstream>
#include <stdexcept>

namespace g2x {

PiTable::PiTable(std::vector<PiEntry> entries, bool pi1_nonabelian) : entries_(std::move(entries)) {
    if (pi1_nonabelian)
        throw std::invalid_argument("PiTable: nonabelian pi_1 is out of scope for this engine");
}

const PiEntry& PiTable::at(int level) const {
    if (level < 0 || static_cast<std::size_t>(level) >= entries_.size())
        throw std::out_of_range("PiTable::at: level out of range");
    return entries_[static_cast<std::size_t>(level)];
}

void PiTable::set(int level, PiEntry e) {
    if (level < 0) throw std::out_of_range("PiTable::set");
    if (static_cast<std::size_t>(level) >= entries_.size())
        entries_.resize(static_cast<std::size_t>(level) + 1);
    entries_[static_cast<std::size_t>(level)] = std::move(e);
}

std::string PiTable::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) os << ",";
        os << (entries_[i].known ? pi_group_to_string(*entries_[i].known) : "?");
    }
    os << ")";
    return os.str();
}

std::string pi_group_to_string(const FGAbelianGroup& g) {
    if (g.is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (g.free_rank() == 1) {
        os << "Z";
        first = false;
    } else if (g.free_rank() >= 2) {
        os << "Z^" << g.free_rank();
        first = false;
    }
    for (const Int& d : g.torsion()) {
        if (!first) os << "+";
        os << "Z_" << d;
        first = false;
    }
    return os.str();
}

PiTable les_base(const PiTable& fiber, const PiTable& total, int max_level) {
    if (max_level < 0) throw std::invalid_argument("les_base: negative max_level");
    if (fiber.max_level() < max_level || total.max_level() < max_level)
        throw std::invalid_argument("les_base: input tables too short for the requested range");
    PiTable out;
    out.set(0, PiEntry::of(FGAbelianGroup()));  // connected base
    for (int k = 1; k <= max_level; ++k) {
        const PiEntry& fk = fiber.at(k);
        const PiEntry& fk1 = fiber.at(k - 1);
        const PiEntry& ek = total.at(k);
        const PiEntry& ek1 = total.at(k - 1);
        if (fk.is_known_zero() && fk1.is_known_zero() && ek.is_known()) {
            out.set(k, PiEntry::of(*ek.known));
        } else if (ek.is_known_zero() && ek1.is_known_zero() && fk1.is_known()) {
            out.set(k, PiEntry::of(*fk1.known));
        } else {
            out.set(k, PiEntry::unknown());
        }
    }
    return out;
}

PiTable cp_homotopy_from_sphere(int n, int max_level) {
    if (n < 1) throw std::invalid_argument("cp_homotopy_from_sphere: n must be >= 1");
    PiTable out;
    const int sphere = 2 * n + 1;
    for (int j = 0; j <= max_level; ++j) {
        if (j < 2) {
            out.set(j, PiEntry::of(FGAbelianGroup()));
        } else if (j == 2) {
            out.set(j, PiEntry::of(FGAbelianGroup::free_group(1)));
        } else if (j < sphere) {
            out.set(j, PiEntry::of(FGAbelianGroup()));
        } else if (j == sphere) {
            out.set(j, PiEntry::of(FGAbelianGroup::free_group(1)));
        } else {
            out.set(j, PiEntry::unknown("= pi_" + std::to_string(j) + "(S^" + std::to_string(sphere) + ")"));
        }
    }
    return out;
}

std::optional<int> first_difference(const PiTable& a, const PiTable& b) {
    const int top = std::min(a.max_level(), b.max_level());
    for (int k = 0; k <= top; ++k) {
        const PiEntry& x = a.at(k);
        const PiEntry& y = b.at(k);
        if (x.is_known() && y.is_known() && !(*x.known == *y.known)) return k;
    }
    return std::nullopt;
}

}  // namespace g2x
