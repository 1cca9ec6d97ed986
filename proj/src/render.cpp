#include "render.hpp"

#include <sstream>

namespace galois {

namespace {

std::string locus_text(const BranchOrbit& o) {
    switch (o.kind) {
        case LocusKind::AtZero: return "T = 0";
        case LocusKind::AtInfinity: return "T = infinity";
        case LocusKind::Finite: break;
    }
    if (o.locus.degree() == 1)
        return "T = " + rat_to_string(-o.locus.coeff(0));
    return "roots of " + o.locus.str();
}

template <typename T, typename Fmt>
void append_capped_list(std::ostringstream& out, const std::vector<T>& rows,
                        std::size_t cap, Fmt fmt) {
    for (std::size_t i = 0; i < rows.size() && i < cap; ++i) {
        if (i) out << ", ";
        out << fmt(rows[i]);
    }
    if (rows.size() > cap) out << ", ... (" << rows.size() << " total)";
}

std::string census_prime(const PrimeDivisorReport& r) { return std::to_string(r.prime); }

std::string census_excluded(const PrimeDivisorReport& r) {
    std::string s = std::to_string(r.prime);
    if (!r.reason.empty()) s += " (" + r.reason + ")";
    return s;
}

}  // namespace

std::string render_text(const Verdict& v) { return v.str(); }

std::string render_text(const CriterionReport& r) { return r.str(); }

std::string render_text(const CaseReport& r) { return r.str(); }

std::string render_text(const ExtensionDescriptor& e) {
    std::ostringstream out;
    out << "extension: " << (e.label.empty() ? "(unlabeled)" : e.label) << "\n";
    out << "  group: " << group_name(e.group);
    try {
        out << " (order " << group_order(e.group).get_str() << ")";
    } catch (const Error&) {
        out << " (order unknown)";
    }
    out << "\n";
    out << "  field: " << field_kind_name(e.field.kind) << "\n";
    out << "  branch orbits (" << branch_point_count(e) << " geometric points):\n";
    for (const BranchOrbit& o : e.orbits) {
        out << "    " << locus_text(o) << ": class " << o.cls.str()
            << ", ramification " << o.ramification_index;
        if (o.rational && o.locus.degree() != 1 && o.kind == LocusKind::Finite)
            out << ", rational";
        out << "\n";
    }
    if (e.schematic_loci)
        out << "  loci are schematic: only classes, indices and the orbit "
               "degrees are claimed\n";
    else {
        MPolys m = m_polys(e);
        out << "  branch polynomial m = " << m.m.str()
            << ", reciprocal form m* = " << m.m_star.str() << "\n";
    }
    try {
        GenusBound g = genus_lower_bound(e);
        if (g.g_min > 0) out << "  genus bound: g >= " << g.g_min.get_str() << "\n";
    } catch (const Error&) {
    }
    if (e.defining_poly)
        out << "  defining polynomial: " << e.defining_poly->str() << "\n";
    return out.str();
}

std::string render_text(const SpecializationResult& s) {
    std::ostringstream out;
    out << "specialization at t0 = " << rat_to_string(s.t0) << "\n";
    out << "  P(t0, Y) = " << s.specialized.str("Y") << "\n";
    out << "  separable: " << (s.separable ? "yes" : "no") << "\n";
    if (s.quadratic_kernel)
        out << "  quadratic field: Q(sqrt(" << s.quadratic_kernel->get_str() << "))\n";
    if (s.group_tag) out << "  galois group: " << galois_tag_name(*s.group_tag) << "\n";
    if (s.totally_real)
        out << "  totally real: " << (*s.totally_real ? "yes" : "no") << "\n";
    if (s.census) {
        out << "  factor degree patterns mod p <= " << s.census->bound << " ("
            << s.census->primes_used << " usable primes):\n";
        for (const auto& [pattern, count] : s.census->counts) {
            out << "    [";
            for (std::size_t i = 0; i < pattern.size(); ++i) {
                if (i) out << " ";
                out << pattern[i];
            }
            out << "] x " << count << "\n";
        }
    }
    return out.str();
}

std::string render_text(const PrimeCensus& c) {
    std::ostringstream out;
    constexpr std::size_t kCap = 25;
    out << "prime divisors (" << c.divisors.size() << "): ";
    append_capped_list(out, c.divisors, kCap, census_prime);
    out << "\n";
    out << "non-divisors (" << c.non_divisors.size() << "): ";
    append_capped_list(out, c.non_divisors, kCap, census_prime);
    out << "\n";
    if (!c.excluded.empty()) {
        out << "excluded (" << c.excluded.size() << "): ";
        append_capped_list(out, c.excluded, kCap, census_excluded);
        out << "\n";
    }
    return out.str();
}

std::string render_text(const PermGroup& g) {
    std::ostringstream out;
    out << "group " << (g.name().empty() ? "(unnamed)" : g.name()) << ": degree "
        << g.degree() << ", order " << g.order() << "\n";
    out << "  classes (" << g.classes().size() << "):\n";
    for (const auto& c : g.classes()) {
        out << "    " << c.name << ": element order " << c.element_order << ", size "
            << c.member_ids.size() << ", representative " << c.rep.str() << "\n";
    }
    return out.str();
}

}  // namespace galois
