#include "catalog.hpp"

#include <sstream>
#include <stdexcept>

namespace g2x {

namespace {

constexpr int kMaxParam = 64;

void require_param(bool ok, const std::string& what) {
    if (!ok) throw ParseError("parameter out of range: " + what);
}

Exponents mono(std::size_t arity, std::initializer_list<std::pair<std::size_t, int>> entries) {
    Exponents e(arity, 0);
    for (const auto& [i, p] : entries) e[i] = p;
    return e;
}

PolynomialExpr poly(std::initializer_list<std::pair<Exponents, long long>> terms) {
    PolynomialExpr p;
    for (const auto& [e, c] : terms) p.add_term(e, Int(c));
    return p;
}

std::string xname(int degree) { return "x" + std::to_string(degree); }
std::string yname(int degree) { return "y" + std::to_string(degree); }

int minus_one_pow(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

std::string SpaceId::to_string() const {
    switch (kind) {
        case SpaceKind::CP: return "cp:" + std::to_string(param);
        case SpaceKind::GrassOdd: return "g2+:" + std::to_string(2 * param + 1);
        case SpaceKind::GrassEven: return "g2+:" + std::to_string(2 * param);
        case SpaceKind::StiefelOdd: return "v2:" + std::to_string(2 * param + 1);
        case SpaceKind::StiefelEven: return "v2:" + std::to_string(2 * param);
        case SpaceKind::Sphere: return "s:" + std::to_string(param);
        case SpaceKind::S2xS2: return "s2xs2";
    }
    return "?";
}

std::string variant_name(Variant v) { return v == Variant::Corrected ? "corrected" : "verbatim"; }

SpaceId parse_space(const std::string& text) {
    if (text == "s2xs2") return {SpaceKind::S2xS2, 0};
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("malformed space spec: " + text);
    const std::string head = text.substr(0, colon);
    const std::string tail = text.substr(colon + 1);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(tail, &used);
        if (used != tail.size()) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError("malformed space parameter: " + text);
    }
    require_param(n >= 1 && n <= kMaxParam, text);
    if (head == "cp") return {SpaceKind::CP, n};
    if (head == "s") return {SpaceKind::Sphere, n};
    if (head == "g2+") {
        require_param(n >= 4, text + " (needs n >= 4; g2+:3 is the 2-sphere, use s:2)");
        return n % 2 == 1 ? SpaceId{SpaceKind::GrassOdd, (n - 1) / 2}
                          : SpaceId{SpaceKind::GrassEven, n / 2};
    }
    if (head == "v2") {
        require_param(n >= 4, text + " (needs n >= 4)");
        return n % 2 == 1 ? SpaceId{SpaceKind::StiefelOdd, (n - 1) / 2}
                          : SpaceId{SpaceKind::StiefelEven, n / 2};
    }
    throw ParseError("unknown space family: " + head);
}

std::pair<SpaceId, Variant> parse_space_spec(const std::string& text, Variant default_variant) {
    std::string body = text;
    Variant v = default_variant;
    if (const auto at = text.find('@'); at != std::string::npos) {
        body = text.substr(0, at);
        const std::string tag = text.substr(at + 1);
        if (tag == "verbatim") v = Variant::Verbatim;
        else if (tag == "corrected") v = Variant::Corrected;
        else throw ParseError("unknown variant: @" + tag);
    }
    return {parse_space(body), v};
}

int dimension_of(const SpaceId& s) {
    switch (s.kind) {
        case SpaceKind::CP: return 2 * s.param;
        case SpaceKind::GrassOdd: return 4 * s.param - 2;
        case SpaceKind::GrassEven: return 4 * s.param - 4;
        case SpaceKind::StiefelOdd: return 4 * s.param - 1;
        case SpaceKind::StiefelEven: return 4 * s.param - 3;
        case SpaceKind::Sphere: return s.param;
        case SpaceKind::S2xS2: return 4;
    }
    return 0;
}

bool simply_connected(const SpaceId& s) {
    if (s.kind == SpaceKind::Sphere) return s.param >= 2;
    return true;
}

namespace {

SpaceData grass_even_data(int k, Variant variant) {
    SpaceData d;
    d.id = {SpaceKind::GrassEven, k};
    d.variant = variant;
    d.dimension = 4 * k - 4;
    d.simply_connected = true;

    RingPresentation& p = d.presentation;
    const std::string eu = k == 2 ? "u2" : xname(2 * k - 2);
    const std::string ev = k == 2 ? "v2" : yname(2 * k - 2);
    p.generators = {{"x2", 2}, {eu, 2 * k - 2}, {ev, 2 * k - 2}, {xname(2 * k), 2 * k}};
    p.top_degree = d.dimension;
    const std::size_t A = 4;  // arity
    const int sk = minus_one_pow(k);

    const auto r_sum = poly({{mono(A, {{1, 1}}), 1}, {mono(A, {{2, 1}}), 1}, {mono(A, {{0, k - 1}}), sk}});
    const auto r_usq = poly({{mono(A, {{1, 2}}), 2}, {mono(A, {{0, 2 * k - 2}}), -1}});
    const auto r_eu = poly({{mono(A, {{0, 1}, {1, 1}}), 2}, {mono(A, {{0, k}}), sk}});
    const auto r_vsq_bad = poly({{mono(A, {{2, 2}}), 2}, {mono(A, {{0, 2 * k - 1}}), -1}});
    const auto r_vsq = poly({{mono(A, {{2, 2}}), 2}, {mono(A, {{0, 2 * k - 2}}), -1}});
    const auto r_uv = poly({{mono(A, {{1, 1}, {2, 1}}), 1}});
    const auto r_wsq = poly({{mono(A, {{3, 2}}), 1}});
    const auto r_etop = poly({{mono(A, {{0, 2 * k - 1}}), 1}});
    const auto r_pin_w = poly({{mono(A, {{0, 1}, {1, 1}}), 1}, {mono(A, {{3, 1}}), sk}});

    using Prov = RelationInfo::Provenance;
    if (variant == Variant::Verbatim) {
        p.relations = {r_sum, r_usq, r_eu, r_vsq_bad, r_uv, r_wsq, r_etop};
        d.relation_info.assign(7, {Prov::Verbatim, ""});
    } else if (k >= 3) {
        p.relations = {r_sum, r_usq, r_eu, r_vsq, r_uv, r_pin_w};
        d.relation_info = {
            {Prov::Verbatim, ""},
            {Prov::Verbatim, ""},
            {Prov::Verbatim, ""},
            {Prov::Corrected,
             "exponent 2k-1 replaced by 2k-2: the printed form mixes degrees " +
                 std::to_string(4 * k - 4) + " and " + std::to_string(4 * k - 2) +
                 "; the homogeneous form follows from the other mid-degree relations"},
            {Prov::Verbatim, ""},
            {Prov::Corrected,
             "added: pins " + xname(2 * k) + " to x2*" + eu +
                 ", forced by rank 1 in degree " + std::to_string(2 * k)},
        };
        d.notes.push_back(
            "relations " + xname(2 * k) + "^2 and x2^" + std::to_string(2 * k - 1) +
            " from the verbatim list are omitted: both lie above the dimension and are implied "
            "(truncation check confirms every class above degree " +
            std::to_string(4 * k - 4) + " vanishes)");
    } else {  // k == 2, corrected
        const auto r_usq_k2 = poly({{mono(A, {{1, 2}}), 1}});
        const auto r_vsq_k2 = poly({{mono(A, {{2, 2}}), 1}});
        p.relations = {r_sum, r_eu, r_pin_w, r_usq_k2, r_vsq_k2};
        d.relation_info = {
            {Prov::Verbatim, ""},
            {Prov::Verbatim, ""},
            {Prov::Corrected, "added: pins x4 to x2*u2, forced by rank 1 in degree 4"},
            {Prov::Corrected,
             "k=2 special: the mid-degree squares vanish; the generic relations 2u2^2 = x2^2, "
             "2v2^2 = x2^2 and u2*v2 = 0 are inconsistent with a rank-2 even intersection "
             "pairing (the mid-degree product generates the top degree)"},
            {Prov::Corrected, "k=2 special: see u2^2"},
        };
        d.notes.push_back(
            "k=2 naming: the two mid-degree generators are called u2/v2 because x2 is taken by "
            "the degree-2 generator");
        d.notes.push_back(
            "k=2 corrected: omits 2u2^2-x2^2, 2v2^2-x2^2 and u2*v2 from the generic list; with "
            "them the degree-2 pairing would be odd definite, which no rank-2 even pairing "
            "(1,0,2,0,1 Betti table with u2*v2 generating the top) admits");
    }
    if (variant == Variant::Verbatim)
        d.notes.push_back("verbatim variant: fails degree validation; kept for reference");
    return d;
}

SpaceData build_space_data(const SpaceId& s, Variant variant) {
    SpaceData d;
    d.id = s;
    d.variant = variant;
    d.dimension = dimension_of(s);
    d.simply_connected = simply_connected(s);
    RingPresentation& p = d.presentation;
    using Prov = RelationInfo::Provenance;

    switch (s.kind) {
        case SpaceKind::CP: {
            const int n = s.param;
            p.generators = {{"x2", 2}};
            p.relations = {poly({{mono(1, {{0, n + 1}}), 1}})};
            p.top_degree = 2 * n;
            d.relation_info.assign(1, {Prov::Verbatim, ""});
            break;
        }
        case SpaceKind::Sphere: {
            const int n = s.param;
            p.generators = {{xname(n), n}};
            p.relations = {poly({{mono(1, {{0, 2}}), 1}})};
            p.top_degree = n;
            d.relation_info.assign(1, {Prov::Verbatim, ""});
            break;
        }
        case SpaceKind::S2xS2: {
            p.generators = {{"x2", 2}, {"y2", 2}};
            p.relations = {poly({{mono(2, {{0, 2}}), 1}}), poly({{mono(2, {{1, 2}}), 1}})};
            p.top_degree = 4;
            d.relation_info.assign(2, {Prov::Verbatim, ""});
            break;
        }
        case SpaceKind::GrassOdd: {
            const int k = s.param;
            p.generators = {{"x2", 2}, {xname(2 * k), 2 * k}};
            p.relations = {
                poly({{mono(2, {{0, k}}), 1}, {mono(2, {{1, 1}}), -2}}),  // x2^k - 2 x_{2k}
                poly({{mono(2, {{1, 2}}), 1}}),                           // x_{2k}^2
            };
            p.top_degree = 4 * k - 2;
            d.relation_info.assign(2, {Prov::Verbatim, ""});
            break;
        }
        case SpaceKind::StiefelOdd: {
            const int k = s.param;
            p.generators = {{xname(2 * k), 2 * k}, {xname(4 * k - 1), 4 * k - 1}};
            p.relations = {
                poly({{mono(2, {{0, 2}}), 1}}),           // x_{2k}^2
                poly({{mono(2, {{1, 2}}), 1}}),           // x_{4k-1}^2
                poly({{mono(2, {{0, 1}}), 2}}),           // 2 x_{2k}
                poly({{mono(2, {{0, 1}, {1, 1}}), 1}}),   // x_{2k} x_{4k-1}
            };
            p.top_degree = 4 * k - 1;
            d.relation_info.assign(4, {Prov::Verbatim, ""});
            break;
        }
        case SpaceKind::StiefelEven: {
            const int k = s.param;
            p.generators = {{xname(2 * k - 2), 2 * k - 2}, {xname(2 * k - 1), 2 * k - 1}};
            p.relations = {
                poly({{mono(2, {{0, 2}}), 1}}),
                poly({{mono(2, {{1, 2}}), 1}}),
                poly({{mono(2, {{0, 1}, {1, 1}}), 1}}),
            };
            p.top_degree = 4 * k - 3;
            d.relation_info.assign(3, {Prov::Verbatim, ""});
            d.notes.push_back(
                "the product relation " + xname(2 * k - 2) + "*" + xname(2 * k - 1) +
                " is unverified: it forces H^" + std::to_string(4 * k - 3) +
                " = 0, while the additive table used by the spectral-sequence engine carries Z "
                "there (closed orientable manifold); additive_groups_of overrides the computed "
                "ring in the top degree");
            d.notes.push_back(
                "degree-label discrepancy: the filtration argument consumes the top group H^" +
                std::to_string(4 * k - 3) + "(V), sometimes quoted with degree label " +
                std::to_string(4 * k - 4) + "; recorded here, not silently altered");
            break;
        }
        case SpaceKind::GrassEven:
            return grass_even_data(s.param, variant);
    }
    return d;
}

void require_catalog_bounds(const SpaceId& s) {
    switch (s.kind) {
        case SpaceKind::CP:
        case SpaceKind::Sphere:
            require_param(s.param >= 1 && s.param <= kMaxParam, s.to_string());
            break;
        case SpaceKind::S2xS2: break;
        default: require_param(s.param >= 2 && s.param <= kMaxParam, s.to_string());
    }
}

}  // namespace

SpaceData space_data(const SpaceId& s, Variant variant) {
    require_catalog_bounds(s);
    return build_space_data(s, variant);
}

RingPresentation presentation_of(const SpaceId& s, Variant variant) {
    return space_data(s, variant).presentation;
}

GradedRing ring_of(const SpaceId& s, Variant variant, int extra_degrees) {
    RingPresentation p = presentation_of(s, variant);
    p.top_degree += extra_degrees;
    return compute(p);
}

std::vector<FGAbelianGroup> additive_groups_of(const SpaceId& s, Variant variant) {
    const int dim = dimension_of(s);
    if (s.kind == SpaceKind::StiefelEven) {
        const int k = s.param;
        std::vector<FGAbelianGroup> out(static_cast<std::size_t>(dim) + 1);
        out[0] = FGAbelianGroup::free_group(1);
        out[static_cast<std::size_t>(2 * k - 2)] = FGAbelianGroup::free_group(1);
        out[static_cast<std::size_t>(2 * k - 1)] = FGAbelianGroup::free_group(1);
        out[static_cast<std::size_t>(4 * k - 3)] = FGAbelianGroup::free_group(1);
        return out;
    }
    const GradedRing r = ring_of(s, variant);
    std::vector<FGAbelianGroup> out;
    out.reserve(static_cast<std::size_t>(dim) + 1);
    for (int d = 0; d <= dim; ++d) out.push_back(r.group(d));
    return out;
}

std::optional<std::vector<std::size_t>> reference_betti(const SpaceId& s) {
    const int dim = dimension_of(s);
    std::vector<std::size_t> b(static_cast<std::size_t>(dim) + 1, 0);
    switch (s.kind) {
        case SpaceKind::CP:
        case SpaceKind::GrassOdd:
            for (int d = 0; d <= dim; d += 2) b[static_cast<std::size_t>(d)] = 1;
            return b;
        case SpaceKind::GrassEven: {
            for (int d = 0; d <= dim; d += 2) b[static_cast<std::size_t>(d)] = 1;
            b[static_cast<std::size_t>(2 * s.param - 2)] = 2;
            return b;
        }
        case SpaceKind::S2xS2:
            b[0] = 1;
            b[2] = 2;
            b[4] = 1;
            return b;
        case SpaceKind::Sphere:
            b[0] = 1;
            b[static_cast<std::size_t>(dim)] += 1;
            return b;
        case SpaceKind::StiefelOdd:
            b[0] = 1;
            b[static_cast<std::size_t>(dim)] = 1;
            return b;
        case SpaceKind::StiefelEven:
            b[0] = 1;
            b[static_cast<std::size_t>(2 * s.param - 2)] = 1;
            b[static_cast<std::size_t>(2 * s.param - 1)] = 1;
            b[static_cast<std::size_t>(dim)] = 1;
            return b;
    }
    return std::nullopt;
}

PiTable homotopy_table_of(const SpaceId& s, int max_level) {
    require_catalog_bounds(s);
    if (max_level < 0) throw std::invalid_argument("homotopy_table_of: negative max_level");
    PiTable t;
    const FGAbelianGroup zero;
    const FGAbelianGroup z = FGAbelianGroup::free_group(1);
    const FGAbelianGroup z2 = FGAbelianGroup::cyclic(2);
    for (int lv = 0; lv <= max_level; ++lv) t.set(lv, PiEntry::unknown());
    t.set(0, PiEntry::of(zero));
    switch (s.kind) {
        case SpaceKind::Sphere: {
            const int n = s.param;
            for (int lv = 1; lv <= max_level; ++lv) {
                if (lv < n) t.set(lv, PiEntry::of(zero));
                else if (lv == n) t.set(lv, PiEntry::of(z));
                else if (n == 1) t.set(lv, PiEntry::of(zero));  // circle
            }
            break;
        }
        case SpaceKind::StiefelOdd: {
            const int k = s.param;
            for (int lv = 1; lv <= max_level && lv <= 2 * k - 2; ++lv) t.set(lv, PiEntry::of(zero));
            if (2 * k - 1 <= max_level) t.set(2 * k - 1, PiEntry::of(z2));
            break;
        }
        case SpaceKind::StiefelEven: {
            const int k = s.param;
            for (int lv = 1; lv <= max_level && lv <= 2 * k - 3; ++lv) t.set(lv, PiEntry::of(zero));
            if (2 * k - 2 <= max_level) t.set(2 * k - 2, PiEntry::of(z));
            break;
        }
        default:
            if (simply_connected(s) && max_level >= 1) t.set(1, PiEntry::of(zero));
            break;
    }
    return t;
}

RingElement orientation_of(const SpaceId& s, const GradedRing& ring) {
    const int top = dimension_of(s);
    const FGAbelianGroup g = ring.group(top);
    if (g.free_rank() != 1 || !g.torsion().empty())
        throw std::domain_error("orientation_of: top cohomology group of " + s.to_string() +
                                " is not infinite cyclic");
    RingElement base = ring.basis_element(top, 0);
    const FGAbelianGroup deg2 = ring.group(2);
    if (deg2.free_rank() == 1 && deg2.torsion().empty() && top % 2 == 0 && top >= 2) {
        const RingElement g2 = ring.basis_element(2, 0);
        const RingElement pw = ring.power(g2, top / 2);
        if (pw.coords.at(0) < 0) return ring.negate(base);
    }
    return base;
}

std::vector<std::string> notes_for(const SpaceId& s, Variant variant) {
    return space_data(s, variant).notes;
}

Fibration hopf_fibration(int n) {
    require_param(n >= 1 && n <= kMaxParam, "hopf:" + std::to_string(n));
    return {"hopf:" + std::to_string(n),
            {SpaceKind::Sphere, 1},
            {SpaceKind::Sphere, 2 * n + 1},
            {SpaceKind::CP, n}};
}

Fibration grassmann_fibration(int n) {
    require_param(n >= 4 && n <= kMaxParam, "grassfib:" + std::to_string(n));
    const SpaceId total = n % 2 == 1 ? SpaceId{SpaceKind::StiefelOdd, (n - 1) / 2}
                                     : SpaceId{SpaceKind::StiefelEven, n / 2};
    const SpaceId base = n % 2 == 1 ? SpaceId{SpaceKind::GrassOdd, (n - 1) / 2}
                                    : SpaceId{SpaceKind::GrassEven, n / 2};
    return {"grassfib:" + std::to_string(n), {SpaceKind::Sphere, 1}, total, base};
}

Fibration parse_fibration(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("malformed fibration spec: " + text);
    const std::string head = text.substr(0, colon);
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1) throw std::invalid_argument("");
    } catch (...) {
        throw ParseError("malformed fibration parameter: " + text);
    }
    if (head == "hopf") return hopf_fibration(n);
    if (head == "grassfib") return grassmann_fibration(n);
    throw ParseError("unknown fibration family: " + head);
}

Fibration fibration_over(const SpaceId& base) {
    switch (base.kind) {
        case SpaceKind::CP: return hopf_fibration(base.param);
        case SpaceKind::GrassOdd: return grassmann_fibration(2 * base.param + 1);
        case SpaceKind::GrassEven: return grassmann_fibration(2 * base.param);
        default:
            throw std::domain_error("no catalog fibration over " + base.to_string());
    }
}

}  // namespace g2x
