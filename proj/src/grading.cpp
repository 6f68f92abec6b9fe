#include "grading.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace g2x {

// ------------------------------------------------------------- monomials

int monomial_degree(const Exponents& e, const std::vector<GeneratorSpec>& gens) {
    if (e.size() != gens.size()) throw std::invalid_argument("monomial_degree: arity mismatch");
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * gens[i].degree;
    return d;
}

std::string monomial_to_string(const Exponents& e, const std::vector<GeneratorSpec>& gens) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << gens[i].name;
        if (e[i] > 1) os << "^" << e[i];
        any = true;
    }
    return any ? os.str() : "1";
}

bool has_odd_square(const Exponents& e, const std::vector<GeneratorSpec>& gens) {
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] >= 2 && gens[i].degree % 2 != 0) return true;
    return false;
}

int koszul_sign(const Exponents& a, const Exponents& b, const std::vector<GeneratorSpec>& gens) {
    // moving each odd factor of a past the odd factors of b that precede it
    // in declaration order
    long swaps = 0;
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] == 0 || gens[i].degree % 2 == 0) continue;
        for (std::size_t j = 0; j < i; ++j) {
            if (b[j] == 0 || gens[j].degree % 2 == 0) continue;
            swaps += static_cast<long>(a[i]) * b[j];
        }
    }
    return swaps % 2 == 0 ? 1 : -1;
}

// --------------------------------------------------------- PolynomialExpr

PolynomialExpr PolynomialExpr::monomial(const Exponents& e, Int coeff) {
    PolynomialExpr p;
    p.add_term(e, coeff);
    return p;
}

void PolynomialExpr::add_term(const Exponents& e, const Int& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

std::set<int> PolynomialExpr::degrees(const std::vector<GeneratorSpec>& gens) const {
    std::set<int> out;
    for (const auto& [e, c] : terms_) out.insert(monomial_degree(e, gens));
    return out;
}

std::optional<int> PolynomialExpr::homogeneous_degree(const std::vector<GeneratorSpec>& gens) const {
    std::set<int> ds = degrees(gens);
    if (ds.size() != 1) return std::nullopt;
    return *ds.begin();
}

PolynomialExpr PolynomialExpr::operator+(const PolynomialExpr& rhs) const {
    PolynomialExpr out = *this;
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

PolynomialExpr PolynomialExpr::operator-() const { return scaled(Int(-1)); }

PolynomialExpr PolynomialExpr::scaled(const Int& c) const {
    PolynomialExpr out;
    if (c == 0) return out;
    for (const auto& [e, k] : terms_) out.terms_.emplace(e, k * c);
    return out;
}

std::string PolynomialExpr::to_string(const std::vector<GeneratorSpec>& gens) const {
    if (terms_.empty()) return "0";
    // degree ascending, graded-lex descending within a degree
    std::vector<const std::pair<const Exponents, Int>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
        int da = monomial_degree(a->first, gens), db = monomial_degree(b->first, gens);
        if (da != db) return da < db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : order) {
        const Int& c = t->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int ac = abs(c);
        const std::string mono = monomial_to_string(t->first, gens);
        if (mono == "1") {
            os << ac;
        } else {
            if (ac != 1) os << ac << "*";
            os << mono;
        }
        first = false;
    }
    return os.str();
}

PolynomialExpr multiply(const PolynomialExpr& a, const PolynomialExpr& b,
                        const std::vector<GeneratorSpec>& gens) {
    PolynomialExpr out;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            const int sign = koszul_sign(ea, eb, gens);
            out.add_term(e, ca * cb * sign);
        }
    }
    return out;
}

// ------------------------------------------------------- RingPresentation

void RingPresentation::check_valid() const {
    for (const auto& g : generators) {
        if (g.degree < 1) throw std::invalid_argument("generator degree must be >= 1: " + g.name);
        if (g.name.empty()) throw std::invalid_argument("empty generator name");
    }
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (std::size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i].name == generators[j].name)
                throw std::invalid_argument("duplicate generator name: " + generators[i].name);
    for (const auto& r : relations)
        for (const auto& [e, c] : r.terms())
            if (e.size() != generators.size())
                throw std::invalid_argument("relation exponent arity mismatch");
    if (top_degree < 0) throw std::invalid_argument("top degree must be >= 0");
}

std::size_t RingPresentation::generator_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i].name == name) return i;
    throw std::invalid_argument("unknown generator: " + name);
}

std::vector<HomogeneityViolation> validate_homogeneous(const RingPresentation& p) {
    std::vector<HomogeneityViolation> out;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
        std::set<int> ds = p.relations[i].degrees(p.generators);
        if (ds.size() > 1)
            out.push_back({i, ds, p.relations[i].to_string(p.generators)});
    }
    return out;
}

std::vector<std::string> lint_presentation(const RingPresentation& p) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        if (p.generators[i].degree % 2 == 0) continue;
        if (2 * p.generators[i].degree > p.top_degree) continue;  // square is out of range anyway
        bool mentioned = false;
        for (const auto& r : p.relations) {
            for (const auto& [e, c] : r.terms())
                if (e[i] >= 2) {
                    mentioned = true;
                    break;
                }
            if (mentioned) break;
        }
        if (!mentioned)
            out.push_back("odd-degree generator " + p.generators[i].name +
                          " has no relation constraining its square; the square survives as a"
                          " 2-torsion class");
    }
    return out;
}

// -------------------------------------------------------------- parsing

namespace {

struct Token {
    enum Kind { Integer, Ident, Plus, Minus, Star, Caret, End } kind;
    Int value;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Integer, Int(s.substr(i, j - i)), s.substr(i, j - i)});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, 0, s.substr(i, j - i)});
            i = j;
        } else if (c == '+') {
            out.push_back({Token::Plus, 0, "+"});
            ++i;
        } else if (c == '-') {
            out.push_back({Token::Minus, 0, "-"});
            ++i;
        } else if (c == '*') {
            out.push_back({Token::Star, 0, "*"});
            ++i;
        } else if (c == '^') {
            out.push_back({Token::Caret, 0, "^"});
            ++i;
        } else {
            throw std::invalid_argument(std::string("unexpected character '") + c + "' in polynomial");
        }
    }
    out.push_back({Token::End, 0, ""});
    return out;
}

}  // namespace

PolynomialExpr parse_polynomial(const std::string& text, const std::vector<GeneratorSpec>& gens) {
    const std::vector<Token> toks = tokenize(text);
    std::size_t pos = 0;
    PolynomialExpr poly;
    bool expect_term = true;
    Int sign = 1;
    while (toks[pos].kind != Token::End) {
        if (toks[pos].kind == Token::Plus || toks[pos].kind == Token::Minus) {
            sign = (toks[pos].kind == Token::Minus) ? -sign : sign;
            ++pos;
            expect_term = true;
            continue;
        }
        if (!expect_term) throw std::invalid_argument("missing '+' or '-' between terms");
        Int coeff = sign;
        Exponents e(gens.size(), 0);
        bool saw_factor = false;
        for (;;) {
            if (toks[pos].kind == Token::Integer) {
                coeff *= toks[pos].value;
                ++pos;
                saw_factor = true;
            } else if (toks[pos].kind == Token::Ident) {
                std::size_t gi;
                try {
                    gi = [&] {
                        for (std::size_t k = 0; k < gens.size(); ++k)
                            if (gens[k].name == toks[pos].text) return k;
                        throw std::invalid_argument("unknown generator: " + toks[pos].text);
                    }();
                } catch (...) {
                    throw;
                }
                ++pos;
                int exp = 1;
                if (toks[pos].kind == Token::Caret) {
                    ++pos;
                    if (toks[pos].kind != Token::Integer)
                        throw std::invalid_argument("'^' must be followed by an integer");
                    exp = static_cast<int>(toks[pos].value);
                    if (exp < 0) throw std::invalid_argument("negative exponent");
                    ++pos;
                }
                e[gi] += exp;
                saw_factor = true;
            } else if (toks[pos].kind == Token::Star) {
                ++pos;
            } else {
                break;
            }
        }
        if (!saw_factor) throw std::invalid_argument("empty term in polynomial");
        poly.add_term(e, coeff);
        sign = 1;
        expect_term = false;
    }
    return poly;
}

RingPresentation parse_presentation(const std::string& text) {
    RingPresentation p;
    std::vector<std::pair<std::size_t, std::string>> pending_rels;  // line no, text
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool saw_top = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "gen") {
            GeneratorSpec g;
            if (!(ls >> g.name >> g.degree))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'gen <name> <degree>'");
            p.generators.push_back(g);
        } else if (word == "rel") {
            std::string rest;
            std::getline(ls, rest);
            pending_rels.emplace_back(lineno, rest);
        } else if (word == "top") {
            if (!(ls >> p.top_degree))
                throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 'top <degree>'");
            saw_top = true;
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown directive '" + word + "'");
        }
    }
    if (!saw_top) throw std::invalid_argument("presentation is missing a 'top <degree>' line");
    for (const auto& [ln, rtext] : pending_rels) {
        try {
            p.relations.push_back(parse_polynomial(rtext, p.generators));
        } catch (const std::exception& ex) {
            throw std::invalid_argument("line " + std::to_string(ln) + ": " + ex.what());
        }
    }
    p.check_valid();
    return p;
}

std::string render_presentation(const RingPresentation& p) {
    std::ostringstream os;
    for (const auto& g : p.generators) os << "gen " << g.name << " " << g.degree << "\n";
    for (const auto& r : p.relations) os << "rel " << r.to_string(p.generators) << "\n";
    os << "top " << p.top_degree << "\n";
    return os.str();
}

// ----------------------------------------------------------- enumeration

namespace {

void enumerate_rec(int remaining, std::size_t gi, const std::vector<GeneratorSpec>& gens,
                   Exponents& cur, std::vector<Exponents>& out) {
    if (gi == gens.size()) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const int d = gens[gi].degree;
    for (int e = remaining / d; e >= 0; --e) {
        cur[gi] = e;
        enumerate_rec(remaining - e * d, gi + 1, gens, cur, out);
    }
    cur[gi] = 0;
}

}  // namespace

std::vector<Exponents> monomials_of_degree(int degree, const std::vector<GeneratorSpec>& gens) {
    std::vector<Exponents> out;
    if (degree < 0) return out;
    Exponents cur(gens.size(), 0);
    enumerate_rec(degree, 0, gens, cur, out);
    return out;
}

// -------------------------------------------------------------- compute

namespace {
std::atomic<std::uint64_t> g_next_ring_id{1};

/// Scan order for basis representatives: fewest generator factors first,
/// then graded-lex. Picks x_{2k} over x2*x_{2k-2} when both represent the
/// same class.
std::vector<std::size_t> label_scan_order(const std::vector<Exponents>& monos) {
    std::vector<std::size_t> order(monos.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        long fa = 0, fb = 0;
        for (int x : monos[a]) fa += x;
        for (int x : monos[b]) fb += x;
        if (fa != fb) return fa < fb;
        return monos[a] > monos[b];
    });
    return order;
}
}  // namespace

const GradedRing::DegreeSlot& GradedRing::slot(int degree) const {
    if (degree < 0 || degree > top_) throw std::out_of_range("GradedRing::slot: degree out of range");
    return slots_[static_cast<std::size_t>(degree)];
}

FGAbelianGroup GradedRing::group(int degree) const {
    if (degree < 0 || degree > top_) return FGAbelianGroup();
    return slots_[static_cast<std::size_t>(degree)].group;
}

RingElement GradedRing::zero(int degree) const {
    RingElement e;
    e.degree = degree;
    e.ring_id = id_;
    if (degree >= 0 && degree <= top_)
        e.coords.assign(slots_[static_cast<std::size_t>(degree)].quotient.coord_count(), Int(0));
    return e;
}

RingElement GradedRing::basis_element(int degree, std::size_t i) const {
    RingElement e = zero(degree);
    e.coords.at(i) = 1;
    return e;
}

RingElement GradedRing::generator_class(std::size_t gen_index) const {
    Exponents e(pres_.generators.size(), 0);
    e.at(gen_index) = 1;
    return monomial_class(e);
}

RingElement GradedRing::monomial_class(const Exponents& e) const {
    return normal_form(PolynomialExpr::monomial(e));
}

void GradedRing::require_element(const RingElement& a) const {
    if (a.ring_id != id_) throw std::invalid_argument("ring element belongs to a different ring");
}

std::vector<Int> GradedRing::expand(const PolynomialExpr& e, int degree) const {
    const DegreeSlot& s = slots_[static_cast<std::size_t>(degree)];
    std::vector<Int> v(s.monomials.size());
    for (const auto& [mono, c] : e.terms()) {
        auto it = std::lower_bound(s.monomials.begin(), s.monomials.end(), mono,
                                   [](const Exponents& a, const Exponents& b) { return a > b; });
        if (it == s.monomials.end() || *it != mono)
            throw std::logic_error("expand: monomial missing from degree slot");
        v[static_cast<std::size_t>(it - s.monomials.begin())] += c;
    }
    return v;
}

RingElement GradedRing::normal_form(const PolynomialExpr& e) const {
    if (e.is_zero()) return zero(0);
    const auto deg = e.homogeneous_degree(pres_.generators);
    if (!deg) throw std::domain_error("normal_form: inhomogeneous polynomial");
    if (*deg > top_) return zero(*deg);
    RingElement out;
    out.degree = *deg;
    out.ring_id = id_;
    out.coords = slots_[static_cast<std::size_t>(*deg)].quotient.reduce(expand(e, *deg));
    return out;
}

RingElement GradedRing::cup(const RingElement& a, const RingElement& b) const {
    require_element(a);
    require_element(b);
    const int d = a.degree + b.degree;
    if (d > top_ || a.degree > top_ || b.degree > top_) return zero(d);
    PolynomialExpr prod;
    const DegreeSlot& sa = slots_[static_cast<std::size_t>(a.degree)];
    const DegreeSlot& sb = slots_[static_cast<std::size_t>(b.degree)];
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < b.coords.size(); ++j) {
            if (b.coords[j] == 0) continue;
            prod = prod + multiply(sa.basis_lifts[i], sb.basis_lifts[j], pres_.generators)
                              .scaled(a.coords[i] * b.coords[j]);
        }
    }
    if (prod.is_zero()) return zero(d);
    RingElement out;
    out.degree = d;
    out.ring_id = id_;
    out.coords = slots_[static_cast<std::size_t>(d)].quotient.reduce(expand(prod, d));
    return out;
}

RingElement GradedRing::power(const RingElement& a, int n) const {
    require_element(a);
    if (n < 0) throw std::invalid_argument("power: negative exponent");
    if (n == 0) {
        Exponents one(pres_.generators.size(), 0);
        return monomial_class(one);
    }
    RingElement out = a;
    for (int i = 1; i < n; ++i) out = cup(out, a);
    return out;
}

RingElement GradedRing::add(const RingElement& a, const RingElement& b) const {
    require_element(a);
    require_element(b);
    if (a.degree != b.degree) throw std::invalid_argument("add: degree mismatch");
    if (a.degree > top_) return zero(a.degree);
    RingElement out = zero(a.degree);
    const DegreeSlot& s = slots_[static_cast<std::size_t>(a.degree)];
    const auto& tor = s.group.torsion();
    const std::size_t free = s.group.free_rank();
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        Int y = a.coords[i] + b.coords[i];
        if (i >= free) {
            const Int& m = tor[i - free];
            y %= m;
            if (y < 0) y += m;
        }
        out.coords[i] = std::move(y);
    }
    return out;
}

RingElement GradedRing::negate(const RingElement& a) const { return scale(a, Int(-1)); }

RingElement GradedRing::scale(const RingElement& a, const Int& c) const {
    require_element(a);
    if (a.degree > top_) return zero(a.degree);
    RingElement out = zero(a.degree);
    const DegreeSlot& s = slots_[static_cast<std::size_t>(a.degree)];
    const auto& tor = s.group.torsion();
    const std::size_t free = s.group.free_rank();
    for (std::size_t i = 0; i < out.coords.size(); ++i) {
        Int y = a.coords[i] * c;
        if (i >= free) {
            const Int& m = tor[i - free];
            y %= m;
            if (y < 0) y += m;
        }
        out.coords[i] = std::move(y);
    }
    return out;
}

bool GradedRing::is_zero_element(const RingElement& a) const {
    require_element(a);
    return std::all_of(a.coords.begin(), a.coords.end(), [](const Int& x) { return x == 0; });
}

Int GradedRing::integrate(const RingElement& a, const RingElement& orientation) const {
    require_element(a);
    require_element(orientation);
    if (a.degree != orientation.degree)
        throw std::domain_error("integrate: class degree differs from the orientation degree");
    const FGAbelianGroup g = group(orientation.degree);
    if (g.free_rank() != 1 || !g.torsion().empty())
        throw std::domain_error("integrate: top group is not infinite cyclic");
    const Int& s = orientation.coords.at(0);
    if (s != 1 && s != -1) throw std::domain_error("integrate: orientation is not a generator");
    return a.coords.at(0) * s;
}

std::vector<std::size_t> GradedRing::poincare_series() const {
    std::vector<std::size_t> out;
    out.reserve(slots_.size());
    for (const auto& s : slots_) out.push_back(s.group.free_rank());
    return out;
}

std::vector<std::vector<Int>> GradedRing::torsion_profile() const {
    std::vector<std::vector<Int>> out;
    out.reserve(slots_.size());
    for (const auto& s : slots_) out.push_back(s.group.torsion());
    return out;
}

std::string GradedRing::element_to_string(const RingElement& a) const {
    require_element(a);
    if (a.degree > top_ || is_zero_element(a)) return "0";
    const DegreeSlot& s = slots_[static_cast<std::size_t>(a.degree)];
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.coords.size(); ++i) {
        if (a.coords[i] == 0) continue;
        const Int& c = a.coords[i];
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int ac = abs(c);
        if (ac != 1) os << ac << "*";
        os << "[" << s.basis_labels[i] << "]";
        first = false;
    }
    return os.str();
}

GradedRing compute(const RingPresentation& p) {
    p.check_valid();
    {
        const auto viol = validate_homogeneous(p);
        if (!viol.empty())
            throw std::domain_error("inhomogeneous presentation: relation '" +
                                    viol.front().relation_text + "' mixes degrees");
    }
    GradedRing r;
    r.pres_ = p;
    r.top_ = p.top_degree;
    r.id_ = g_next_ring_id.fetch_add(1);
    const auto& gens = p.generators;

    std::vector<std::optional<int>> rel_degree(p.relations.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i)
        rel_degree[i] = p.relations[i].homogeneous_degree(gens);

    r.slots_.resize(static_cast<std::size_t>(p.top_degree) + 1);
    for (int d = 0; d <= p.top_degree; ++d) {
        GradedRing::DegreeSlot& s = r.slots_[static_cast<std::size_t>(d)];
        s.monomials = monomials_of_degree(d, gens);
        const std::size_t n = s.monomials.size();

        std::map<Exponents, std::size_t, std::greater<Exponents>> index;
        for (std::size_t i = 0; i < n; ++i) index.emplace(s.monomials[i], i);

        std::vector<std::vector<Int>> cols;
        // a monomial with an odd generator squared is 2-torsion in the free
        // graded-commutative ring; record that structurally
        for (std::size_t i = 0; i < n; ++i) {
            if (has_odd_square(s.monomials[i], gens)) {
                std::vector<Int> col(n);
                col[i] = 2;
                cols.push_back(std::move(col));
            }
        }
        // degree-d slice of the two-sided ideal: monomial * relation
        for (std::size_t ri = 0; ri < p.relations.size(); ++ri) {
            if (!rel_degree[ri]) continue;  // zero relation
            const int rd = *rel_degree[ri];
            if (rd > d) continue;
            for (const Exponents& m : monomials_of_degree(d - rd, gens)) {
                const PolynomialExpr prod =
                    multiply(PolynomialExpr::monomial(m), p.relations[ri], gens);
                if (prod.is_zero()) continue;
                std::vector<Int> col(n);
                for (const auto& [mono, c] : prod.terms()) col[index.at(mono)] += c;
                cols.push_back(std::move(col));
            }
        }
        IntMatrix rel(n, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < n; ++i) rel.at(i, j) = cols[j][i];
        s.quotient = QuotientPresentation(n, rel);
        s.group = s.quotient.group();

        // pick a representative monomial per canonical coordinate, sign-fixed
        // to +1; fall back to the quotient's own lift when no single monomial
        // represents the coordinate
        const std::size_t nc = s.quotient.coord_count();
        const auto scan = label_scan_order(s.monomials);
        s.basis_labels.resize(nc);
        s.basis_lifts.resize(nc);
        std::vector<std::vector<Int>> reductions(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Int> unit(n);
            unit[i] = 1;
            reductions[i] = s.quotient.reduce(unit);
        }
        const auto& tor = s.group.torsion();
        const std::size_t free = s.group.free_rank();
        for (std::size_t c = 0; c < nc; ++c) {
            bool found = false;
            for (std::size_t oi : scan) {
                const auto& red = reductions[oi];
                bool unit = true;
                int sign = 0;
                for (std::size_t k = 0; k < nc && unit; ++k) {
                    if (k == c) {
                        if (red[k] == 1) sign = 1;
                        else if (k < free && red[k] == -1) sign = -1;
                        else if (k >= free && tor[k - free] > 2 && red[k] == tor[k - free] - 1) sign = -1;
                        else unit = false;
                    } else if (red[k] != 0) {
                        unit = false;
                    }
                }
                if (unit && sign != 0) {
                    if (sign < 0) {
                        s.quotient.flip_coordinate_sign(c);
                        for (std::size_t i = 0; i < n; ++i) {
                            std::vector<Int> u2(n);
                            u2[i] = 1;
                            reductions[i] = s.quotient.reduce(u2);
                        }
                    }
                    s.basis_labels[c] = monomial_to_string(s.monomials[oi], gens);
                    s.basis_lifts[c] = PolynomialExpr::monomial(s.monomials[oi]);
                    found = true;
                    break;
                }
            }
            if (!found) {
                const std::vector<Int> lift = s.quotient.lift(c);
                PolynomialExpr lp;
                for (std::size_t i = 0; i < n; ++i)
                    if (lift[i] != 0) lp.add_term(s.monomials[i], lift[i]);
                s.basis_lifts[c] = lp;
                s.basis_labels[c] = "(" + lp.to_string(gens) + ")";
            }
        }
    }
    return r;
}

}  // namespace g2x
