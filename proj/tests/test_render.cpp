#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../src/render.hpp"

using namespace galois;

namespace {
bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}
}  // namespace

TEST_CASE("descriptor rendering") {
    std::string t = render_text(builder_trinomial(5, 2, 1, 2));
    CHECK(has(t, "group: S5"));
    CHECK(has(t, "order 120"));
    CHECK(has(t, "field: Q"));
    CHECK(has(t, "T = 0"));
    CHECK(has(t, "T = infinity"));
    CHECK(has(t, "[2^1 3^1]"));
    CHECK(has(t, "ramification 6"));
    CHECK(has(t, "defining polynomial"));
    CHECK(has(t, "branch polynomial m = "));
    CHECK_FALSE(has(t, "genus bound"));  // r = 3 leaves the bound vacuous

    std::string s = render_text(builder_quadratic_sqrt(
        RatPoly::from_coeffs({Rat(6), Rat(0), Rat(-5), Rat(0), Rat(1)})));
    CHECK(has(s, "group: S2"));
    CHECK(has(s, "4 geometric points"));
    CHECK(has(s, "genus bound: g >= 1"));
}

TEST_CASE("schematic descriptor rendering skips the branch polynomial") {
    ExtensionDescriptor e;
    e.label = "schematic";
    e.group.kind = GroupRef::Kind::Abstract;
    e.group.name = "M";
    e.group.class_orders = {{"2A", Int(2)}};
    e.field = make_field(FieldKind::RationalsQ);
    e.schematic_loci = true;
    BranchOrbit o;
    o.kind = LocusKind::Finite;
    o.locus = RatPoly::variable();
    o.cls.kind = ClassRef::Kind::Abstract;
    o.cls.name = "2A";
    o.ramification_index = 2;
    e.orbits = {o};
    validate_descriptor(e);
    std::string t = render_text(e);
    CHECK(has(t, "order unknown"));
    CHECK(has(t, "loci are schematic"));
    CHECK_FALSE(has(t, "branch polynomial"));
}

TEST_CASE("specialization rendering") {
    auto e = builder_quadratic_sqrt(RatPoly::variable());
    std::string t = render_text(specialize(e, Rat(2)));
    CHECK(has(t, "t0 = 2"));
    CHECK(has(t, "Y^2 - 2"));
    CHECK(has(t, "separable: yes"));
    CHECK(has(t, "Q(sqrt(2))"));

    auto tri = builder_trinomial(5, 2, 1, 2);
    std::string t5 = render_text(specialize(tri, Rat(3)));
    CHECK(has(t5, "factor degree patterns"));
    CHECK(has(t5, "usable primes"));
    CHECK(has(t5, "] x "));
}

TEST_CASE("census rendering caps long lists") {
    PrimeCensus c = prime_divisor_census(cyclotomic(5), 10000);
    std::string t = render_text(c);
    CHECK(has(t, "prime divisors ("));
    CHECK(has(t, "non-divisors ("
               ));
    CHECK(has(t, "... ("));
    CHECK(has(t, "5"));

    PrimeCensus small = prime_divisor_census(cyclotomic(5), 30);
    std::string ts = render_text(small);
    CHECK_FALSE(has(ts, "... ("));
}

TEST_CASE("group rendering") {
    std::string t = render_text(symmetric_group(4));
    CHECK(has(t, "degree 4"));
    CHECK(has(t, "order 24"));
    CHECK(has(t, "classes (5)"));
    CHECK(has(t, "2A"));
    CHECK(has(t, "size 6"));
}

TEST_CASE("report wrappers delegate to the built-in printers") {
    auto rep = eval_cor61(builder_quadratic_sqrt(
        RatPoly::from_coeffs({Rat(6), Rat(0), Rat(-5), Rat(0), Rat(1)})));
    CHECK(render_text(rep) == rep.str());
    CHECK(has(render_text(rep), "(COR61-1)"));
    CHECK(render_text(rep.overall) == rep.overall.str());

    CaseReport cr = run_case_study("cor77");
    CHECK(render_text(cr) == cr.str());
}
