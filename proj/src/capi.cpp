#include "g2x/g2x.h"

#include "catalog.hpp"
#include "distinguish.hpp"
#include "report.hpp"

#include <string>

struct g2x_space {
    g2x::SpaceId id;
    g2x::Variant variant;
    std::string spec;
};

struct g2x_report {
    std::string text;
    std::string json_text;
    bool ok = true;
};

namespace {

thread_local std::string t_last_error;

g2x_status set_error(g2x_status s, const char* what) {
    t_last_error = what;
    return s;
}

template <typename Fn>
g2x_status guarded(g2x_report** out, Fn&& fn) {
    if (out == nullptr) return set_error(G2X_ERR_INTERNAL, "null output handle");
    *out = nullptr;
    try {
        g2x::report::CommandResult res = fn();
        auto* rep = new g2x_report{std::move(res.text), res.doc.dump(2), res.ok};
        *out = rep;
        return G2X_OK;
    } catch (const g2x::ParseError& ex) {
        return set_error(G2X_ERR_PARSE, ex.what());
    } catch (const g2x::SearchLimitExceeded& ex) {
        return set_error(G2X_ERR_LIMIT, ex.what());
    } catch (const std::invalid_argument& ex) {
        return set_error(G2X_ERR_PARSE, ex.what());
    } catch (const std::domain_error& ex) {
        return set_error(G2X_ERR_DOMAIN, ex.what());
    } catch (const std::exception& ex) {
        return set_error(G2X_ERR_INTERNAL, ex.what());
    }
}

std::string spec_of(const g2x_space* s) {
    return s->id.to_string() + "@" + g2x::variant_name(s->variant);
}

}  // namespace

extern "C" {

const char* g2x_version(void) {
    static const std::string v = g2x::report::tool_version();
    return v.c_str();
}

const char* g2x_last_error(void) { return t_last_error.c_str(); }

g2x_status g2x_space_parse(const char* spec, g2x_space** out) {
    if (out == nullptr) return set_error(G2X_ERR_INTERNAL, "null output handle");
    *out = nullptr;
    if (spec == nullptr) return set_error(G2X_ERR_PARSE, "null space spec");
    try {
        const auto [id, variant] = g2x::parse_space_spec(spec);
        *out = new g2x_space{id, variant, spec};
        return G2X_OK;
    } catch (const std::exception& ex) {
        return set_error(G2X_ERR_PARSE, ex.what());
    }
}

void g2x_space_free(g2x_space* s) { delete s; }

g2x_status g2x_cohomology(const g2x_space* s, g2x_report** out) {
    if (s == nullptr) return set_error(G2X_ERR_PARSE, "null space handle");
    return guarded(out, [&] { return g2x::report::cohomology(spec_of(s), s->variant); });
}

g2x_status g2x_ring(const g2x_space* s, g2x_report** out) {
    if (s == nullptr) return set_error(G2X_ERR_PARSE, "null space handle");
    return guarded(out, [&] { return g2x::report::ring_info(spec_of(s), s->variant); });
}

g2x_status g2x_ring_from_text(const char* presentation, g2x_report** out) {
    if (presentation == nullptr) return set_error(G2X_ERR_PARSE, "null presentation text");
    return guarded(out, [&] { return g2x::report::ring_from_text(presentation); });
}

g2x_status g2x_validate_text(const char* presentation, g2x_report** out) {
    if (presentation == nullptr) return set_error(G2X_ERR_PARSE, "null presentation text");
    return guarded(out, [&] { return g2x::report::validate_text(presentation); });
}

g2x_status g2x_gysin(const g2x_space* total, const g2x_space* base, const char* mode,
                     int print_pages, g2x_report** out) {
    if (total == nullptr || base == nullptr) return set_error(G2X_ERR_PARSE, "null space handle");
    const std::string mode_s = mode == nullptr ? "verify" : mode;
    return guarded(out, [&] {
        return g2x::report::gysin_command(spec_of(total), spec_of(base), mode_s, print_pages != 0,
                                          base->variant);
    });
}

g2x_status g2x_homotopy(const char* fibration, int max_level, g2x_report** out) {
    if (fibration == nullptr) return set_error(G2X_ERR_PARSE, "null fibration spec");
    return guarded(out, [&] { return g2x::report::homotopy_command(fibration, max_level); });
}

g2x_status g2x_compare(const g2x_space* a, const g2x_space* b, int iso_bound, int max_pi_level,
                       g2x_report** out) {
    if (a == nullptr || b == nullptr) return set_error(G2X_ERR_PARSE, "null space handle");
    return guarded(out, [&] {
        return g2x::report::compare_command(spec_of(a), spec_of(b), iso_bound, max_pi_level,
                                            g2x::Variant::Corrected);
    });
}

g2x_status g2x_validate(const g2x_space* s, g2x_report** out) {
    if (s == nullptr) return set_error(G2X_ERR_PARSE, "null space handle");
    return guarded(out, [&] { return g2x::report::validate_command(spec_of(s), s->variant); });
}

g2x_status g2x_verification_suite(int k_min, int k_max, const char* variant, g2x_report** out) {
    const std::string v = variant == nullptr ? "corrected" : variant;
    if (v != "corrected" && v != "verbatim")
        return set_error(G2X_ERR_PARSE, "unknown variant (use corrected or verbatim)");
    return guarded(out, [&] {
        return g2x::report::verification_suite(
            k_min, k_max, v == "verbatim" ? g2x::Variant::Verbatim : g2x::Variant::Corrected);
    });
}

const char* g2x_report_text(const g2x_report* r) { return r == nullptr ? "" : r->text.c_str(); }
const char* g2x_report_json(const g2x_report* r) {
    return r == nullptr ? "" : r->json_text.c_str();
}
int g2x_report_ok(const g2x_report* r) { return (r != nullptr && r->ok) ? 1 : 0; }
void g2x_report_free(g2x_report* r) { delete r; }

}  // extern "C"
