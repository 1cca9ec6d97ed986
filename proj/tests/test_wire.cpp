#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "../src/wire.hpp"

using namespace galois;

namespace {

Json reemit(const Json& j) { return descriptor_to_json(descriptor_from_json(j)); }

void check_descriptor_roundtrip(const ExtensionDescriptor& e) {
    CAPTURE(e.label);
    Json j = descriptor_to_json(e);
    Json j2 = reemit(j);
    CHECK(j == j2);
}

}  // namespace

TEST_CASE("polynomial wire format") {
    Json j = Json::parse(R"(["-2","0","1"])");
    RatPoly p = poly_from_json(j);
    CHECK(p == RatPoly::from_coeffs({Rat(-2), Rat(0), Rat(1)}));
    CHECK(poly_to_json(p) == j);

    CHECK(poly_from_json(Json::parse("[1,0,-2]")) ==
          RatPoly::from_coeffs({Rat(1), Rat(0), Rat(-2)}));

    Json half = Json::parse(R"(["1/2","1"])");
    RatPoly q = poly_from_json(half);
    CHECK(q.coeff(0) == Rat(1, 2));
    CHECK(poly_to_json(q) == half);

    CHECK(poly_to_json(RatPoly()) == Json::parse(R"(["0"])"));
    CHECK(poly_from_json(Json::parse(R"(["0"])")).is_zero());
    CHECK(poly_from_json(Json::array()).is_zero());

    CHECK_THROWS_AS(poly_from_json(Json::parse(R"(["x"])")), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse("[0.5]")), ParseError);
    CHECK_THROWS_AS(poly_from_json(Json::parse(R"({"a":1})")), ParseError);
}

TEST_CASE("group wire format round-trips") {
    GroupRef s5;
    s5.kind = GroupRef::Kind::Sn;
    s5.n = 5;
    Json j = group_to_json(s5);
    CHECK(j == Json::parse(R"({"kind":"Sn","n":5})"));
    GroupRef back = group_from_json(j);
    CHECK(back.kind == GroupRef::Kind::Sn);
    CHECK(back.n == 5);

    GroupRef a7;
    a7.kind = GroupRef::Kind::An;
    a7.n = 7;
    CHECK(group_to_json(group_from_json(group_to_json(a7))) == group_to_json(a7));

    GroupRef psl;
    psl.kind = GroupRef::Kind::Psl2;
    psl.n = 7;
    Json jp = group_to_json(psl);
    CHECK(jp == Json::parse(R"({"kind":"psl2","p":7})"));
    CHECK(group_from_json(jp).kind == GroupRef::Kind::Psl2);

    GroupRef ex;
    ex.kind = GroupRef::Kind::Explicit;
    ex.degree = 3;
    ex.name = "Z/3";
    ex.generators = {Perm::from_images({1, 2, 0})};
    Json je = group_to_json(ex);
    CHECK(je["kind"] == "perm");
    CHECK(je["generators"][0] == Json::parse("[1,2,0]"));
    GroupRef exb = group_from_json(je);
    CHECK(exb.kind == GroupRef::Kind::Explicit);
    CHECK(exb.degree == 3);
    CHECK(exb.generators.size() == 1);
    CHECK(exb.generators[0] == ex.generators[0]);
    CHECK(group_to_json(exb) == je);

    GroupRef ab;
    ab.kind = GroupRef::Kind::Abstract;
    ab.name = "B";
    ab.class_orders = {{"2C", Int(2)}, {"3A", Int(3)}, {"55A", Int(55)}};
    ab.order = Int("4154781481226426191177580544000000");
    Json ja = group_to_json(ab);
    CHECK(ja["class_orders"] == Json::parse(R"({"2C":2,"3A":3,"55A":55})"));
    GroupRef abb = group_from_json(ja);
    CHECK(abb.class_orders.at("55A") == Int(55));
    CHECK(*abb.order == *ab.order);
    CHECK(group_to_json(abb) == ja);

    // the published wire example parses as-is
    GroupRef lit = group_from_json(
        Json::parse(R"({"kind":"perm","degree":3,"generators":[[1,2,0],[1,0,2]]})"));
    CHECK(lit.generators.size() == 2);

    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"frobenius"})")), ParseError);
    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"kind":"Sn"})")), ParseError);
    CHECK_THROWS_AS(
        group_from_json(Json::parse(R"({"kind":"perm","degree":3,"generators":[[0,0,1]]})")),
        ParseError);
}

TEST_CASE("class wire format round-trips") {
    ClassRef ct;
    ct.kind = ClassRef::Kind::CycleType;
    ct.cycles = CycleType::from_lengths({2, 3});
    Json j = class_to_json(ct);
    CHECK(j["kind"] == "cycle_type");
    ClassRef back = class_from_json(j);
    CHECK(back.cycles == ct.cycles);
    CHECK(class_to_json(back) == j);

    ClassRef at;
    at.kind = ClassRef::Kind::AnType;
    at.cycles = CycleType::from_lengths({7});
    at.split_tag = 1;
    Json ja = class_to_json(at);
    CHECK(ja["split_tag"] == 1);
    ClassRef atb = class_from_json(ja);
    CHECK(atb.split_tag == 1);
    CHECK(class_to_json(atb) == ja);

    ClassRef ab;
    ab.kind = ClassRef::Kind::Abstract;
    ab.name = "19A";
    ab.order = Int(19);
    Json jb = class_to_json(ab);
    ClassRef abb = class_from_json(jb);
    CHECK(abb.name == "19A");
    CHECK(abb.order == Int(19));
    CHECK(class_to_json(abb) == jb);

    ClassRef ex;
    ex.kind = ClassRef::Kind::Explicit;
    ex.representative = Perm::from_images({1, 0, 2});
    ex.name = "2A";
    Json je = class_to_json(ex);
    ClassRef exb = class_from_json(je);
    CHECK(*exb.representative == *ex.representative);
    CHECK(class_to_json(exb) == je);

    CHECK_THROWS_AS(class_from_json(Json::parse(R"({"kind":"an_type","cycles":[7],"split_tag":3})")),
                    ParseError);
    CHECK_THROWS_AS(class_from_json(Json::parse(R"({"kind":"nope"})")), ParseError);
    CHECK_THROWS_AS(class_from_json(Json::parse(R"({"kind":"cycle_type","cycles":[]})")),
                    ParseError);
}

TEST_CASE("field wire format") {
    FieldInfo q = make_field(FieldKind::RationalsQ);
    CHECK(field_to_json(q) == Json::parse(R"({"kind":"Q"})"));
    CHECK(field_from_json(Json::parse(R"({"kind":"Q"})")).kind == FieldKind::RationalsQ);

    FieldInfo ah = field_from_json(Json::parse(R"({"kind":"abstract_hilbertian"})"));
    CHECK(ah.hilbertian);
    CHECK_FALSE(ah.infinite_prime_divisors);

    FieldInfo ad = field_from_json(Json::parse(
        R"({"kind":"abstract_dedekind","hilbertian":true,"infinite_prime_divisors":true})"));
    CHECK(ad.hilbertian);
    CHECK(ad.infinite_prime_divisors);
    CHECK(field_to_json(ad)["hilbertian"] == true);

    CHECK_THROWS_AS(field_from_json(Json::parse(R"({"kind":"R"})")), ParseError);
    CHECK_THROWS_AS(
        field_from_json(Json::parse(R"({"kind":"abstract_hilbertian","hilbertian":false})")),
        ParseError);
}

TEST_CASE("builder descriptors survive the wire") {
    check_descriptor_roundtrip(builder_quadratic_sqrt(RatPoly::variable()));
    check_descriptor_roundtrip(builder_trinomial(5, 2, 1, 2));
    check_descriptor_roundtrip(builder_trinomial(7, 2, 2, 3));
    check_descriptor_roundtrip(builder_cyclic_cyclotomic(5));
    check_descriptor_roundtrip(
        builder_quadratic_sqrt(RatPoly::from_coeffs({Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)})));
    check_descriptor_roundtrip(
        builder_morse(RatPoly::from_coeffs({Rat(0), Rat(1), Rat(0), Rat(1)})));
}

TEST_CASE("manual descriptors survive the wire") {
    // abstract group, abstract classes, schematic loci
    ExtensionDescriptor e;
    e.label = "abstract pair";
    e.group.kind = GroupRef::Kind::Abstract;
    e.group.name = "J2";
    e.group.class_orders = {{"5A", Int(5)}, {"5B", Int(5)}, {"7A", Int(7)}};
    e.field = make_field(FieldKind::RationalsQ);
    e.schematic_loci = true;
    BranchOrbit o1;
    o1.kind = LocusKind::Finite;
    o1.locus = RatPoly::variable();
    o1.cls.kind = ClassRef::Kind::Abstract;
    o1.cls.name = "7A";
    o1.ramification_index = 7;
    BranchOrbit o2;
    o2.kind = LocusKind::Finite;
    o2.locus = RatPoly::from_coeffs({Rat(-2), Rat(0), Rat(1)});
    o2.cls.kind = ClassRef::Kind::Abstract;
    o2.cls.name = "5A";
    o2.ramification_index = 5;
    e.orbits = {o1, o2};
    validate_descriptor(e);
    check_descriptor_roundtrip(e);

    // An group with split-class vocabulary
    ExtensionDescriptor a;
    a.label = "mestre-style";
    a.group.kind = GroupRef::Kind::An;
    a.group.n = 7;
    a.field = make_field(FieldKind::RationalsQ);
    a.schematic_loci = true;
    for (int i = 0; i < 3; ++i) {
        BranchOrbit o;
        o.kind = LocusKind::Finite;
        o.locus = RatPoly::from_coeffs({Rat(-1 - i), Rat(1)});
        o.cls.kind = ClassRef::Kind::AnType;
        o.cls.cycles = CycleType::from_lengths({1, 1, 1, 1, 3});
        o.cls.split_tag = 0;
        o.ramification_index = 3;
        a.orbits.push_back(o);
    }
    validate_descriptor(a);
    check_descriptor_roundtrip(a);

    // psl2 group with named classes
    ExtensionDescriptor p;
    p.label = "psl2(7) rigid";
    p.group.kind = GroupRef::Kind::Psl2;
    p.group.n = 7;
    p.field = make_field(FieldKind::RationalsQ);
    p.schematic_loci = true;
    const char* names[] = {"2A", "3A", "7A"};
    const int orders[] = {2, 3, 7};
    for (int i = 0; i < 3; ++i) {
        BranchOrbit o;
        o.kind = LocusKind::Finite;
        o.locus = RatPoly::from_coeffs({Rat(-1 - i), Rat(1)});
        o.cls.kind = ClassRef::Kind::Abstract;
        o.cls.name = names[i];
        o.ramification_index = orders[i];
        p.orbits.push_back(o);
    }
    validate_descriptor(p);
    check_descriptor_roundtrip(p);
}

TEST_CASE("descriptor parses from hand-written wire text") {
    Json j = Json::parse(R"({
        "label": "sqrt(2) constant-free",
        "group": {"kind": "Sn", "n": 2},
        "field": {"kind": "Q"},
        "orbits": [
            {"locus": ["-2","0","1"],
             "class": {"kind": "cycle_type", "cycles": [2]},
             "ramification_index": 2,
             "rational": true}
        ]
    })");
    ExtensionDescriptor e = descriptor_from_json(j);
    CHECK(e.orbits.size() == 1);
    // the asserted flag is ignored; a degree-2 locus is not a rational point
    CHECK_FALSE(e.orbits[0].rational);
    CHECK(e.orbits[0].kind == LocusKind::Finite);
    CHECK(e.label == "sqrt(2) constant-free");
    CHECK_FALSE(e.schematic_loci);

    Json zero_inf = Json::parse(R"({
        "group": {"kind": "Sn", "n": 3},
        "field": {"kind": "Q"},
        "orbits": [
            {"locus": "zero", "class": {"kind": "cycle_type", "cycles": [1,2]},
             "ramification_index": 2},
            {"locus": "infinity", "class": {"kind": "cycle_type", "cycles": [3]},
             "ramification_index": 3},
            {"locus": ["1","1"], "class": {"kind": "cycle_type", "cycles": [1,2]},
             "ramification_index": 2}
        ]
    })");
    ExtensionDescriptor s3 = descriptor_from_json(zero_inf);
    CHECK(s3.orbits[0].kind == LocusKind::AtZero);
    CHECK(s3.orbits[0].rational);
    CHECK(s3.orbits[1].kind == LocusKind::AtInfinity);
    CHECK(s3.orbits[2].rational);
    check_descriptor_roundtrip(s3);

    CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"group":{"kind":"Sn","n":3}})")),
                    ParseError);
    // shape is fine but the mathematics is not: ramification must match order
    Json bad_ram = Json::parse(R"({
        "group": {"kind": "Sn", "n": 3},
        "field": {"kind": "Q"},
        "orbits": [
            {"locus": ["0","1"], "class": {"kind": "cycle_type", "cycles": [1,2]},
             "ramification_index": 5}
        ]
    })");
    CHECK_THROWS_AS(descriptor_from_json(bad_ram), DomainError);
    Json bad_locus = Json::parse(R"({
        "group": {"kind": "Sn", "n": 2},
        "field": {"kind": "Q"},
        "orbits": [
            {"locus": "somewhere", "class": {"kind": "cycle_type", "cycles": [2]},
             "ramification_index": 2}
        ]
    })");
    CHECK_THROWS_AS(descriptor_from_json(bad_locus), ParseError);
}

TEST_CASE("non-monic loci normalize before re-emit") {
    Json j = Json::parse(R"({
        "group": {"kind": "Sn", "n": 2},
        "field": {"kind": "Q"},
        "orbits": [
            {"locus": ["-4","0","2"],
             "class": {"kind": "cycle_type", "cycles": [2]},
             "ramification_index": 2}
        ]
    })");
    ExtensionDescriptor e = descriptor_from_json(j);
    CHECK(e.orbits[0].locus == RatPoly::from_coeffs({Rat(-2), Rat(0), Rat(1)}));
    CHECK(descriptor_to_json(e)["orbits"][0]["locus"] == Json::parse(R"(["-2","0","1"])"));
}

TEST_CASE("defining polynomial round-trips") {
    ExtensionDescriptor e = builder_trinomial(5, 2, 1, 2);
    REQUIRE(e.defining_poly.has_value());
    Json j = descriptor_to_json(e);
    REQUIRE(j.contains("defining_poly"));
    ExtensionDescriptor back = descriptor_from_json(j);
    REQUIRE(back.defining_poly.has_value());
    CHECK(back.defining_poly->degree_y() == 5);
    for (int i = 0; i <= 5; ++i)
        CHECK(back.defining_poly->coeff(i) == e.defining_poly->coeff(i));
}

TEST_CASE("verdict and report serialization") {
    Json est = verdict_to_json(Verdict::established("both checks pass"));
    CHECK(est["kind"] == "Established");
    CHECK(est["detail"] == "both checks pass");
    CHECK_FALSE(est.contains("witnesses"));

    Json sup = verdict_to_json(Verdict::supported(10000, {3, 7, 13}, "sampled"));
    CHECK(sup["kind"] == "EmpiricallySupported");
    CHECK(sup["prime_bound"] == 10000);
    CHECK(sup["witness_count"] == 3);
    CHECK(sup["witnesses"] == Json::parse("[3,7,13]"));

    ExtensionDescriptor sq =
        builder_quadratic_sqrt(RatPoly::from_coeffs({Rat(6), Rat(0), Rat(-5), Rat(0), Rat(1)}));
    CriterionReport r = eval_cor61(sq);
    Json jr = report_to_json(r);
    CHECK(jr["criterion"] == "COR61");
    CHECK(jr["overall"]["kind"] == "Established");
    REQUIRE(jr["conditions"].is_array());
    REQUIRE(jr["conditions"].size() >= 1);
    CHECK(jr["conditions"][0].contains("condition"));
    CHECK(jr["conditions"][0]["verdict"].contains("kind"));
    CHECK(jr["trace"].is_array());
}

TEST_CASE("case report serialization") {
    CaseReport r = run_case_study("cor77");
    Json j = case_report_to_json(r);
    CHECK(j["id"] == "cor77");
    CHECK(j["conclusion"]["kind"] == "Established");
    bool has_ic2 = false;
    for (const auto& rep : j["reports"])
        if (rep["criterion"] == "IC2") has_ic2 = true;
    CHECK(has_ic2);
    CHECK(j["certificates"].is_array());
    CHECK(j["params"].is_array());
}

TEST_CASE("specialization serialization") {
    ExtensionDescriptor e = builder_quadratic_sqrt(RatPoly::variable());
    SpecializationResult s = specialize(e, Rat(2));
    Json j = specialization_to_json(s);
    CHECK(j["t0"] == "2");
    CHECK(j["separable"] == true);
    CHECK(j["specialized"] == Json::parse(R"(["-2","0","1"])"));
    CHECK(j["quadratic_kernel"] == "2");

    ExtensionDescriptor tri = builder_trinomial(5, 2, 1, 2);
    SpecializationResult s5 = specialize(tri, Rat(3));
    Json j5 = specialization_to_json(s5);
    REQUIRE(j5.contains("census"));
    CHECK(j5["census"]["bound"] == 300);
    CHECK(j5["census"]["patterns"].is_array());
    CHECK(j5["census"]["patterns"].size() >= 1);
    CHECK(j5["census"]["patterns"][0].contains("pattern"));
    CHECK(j5["census"]["patterns"][0].contains("count"));
}

TEST_CASE("prime census serialization") {
    PrimeCensus c = prime_divisor_census(cyclotomic(5), 100);
    Json j = census_to_json(c);
    REQUIRE(j["divisors"].is_array());
    bool saw5 = false, saw11 = false;
    for (const auto& row : j["divisors"]) {
        CHECK(row["verdict"] == "divisor");
        if (row["prime"] == 5) saw5 = true;
        if (row["prime"] == 11) {
            saw11 = true;
            CHECK(row.contains("witness"));
        }
    }
    CHECK(saw5);
    CHECK(saw11);
    for (const auto& row : j["non_divisors"]) CHECK(row["verdict"] == "non_divisor");
}

TEST_CASE("group info serialization") {
    PermGroup s4 = symmetric_group(4);
    Json j = group_info_to_json(s4);
    CHECK(j["degree"] == 4);
    CHECK(j["order"] == 24);
    CHECK(j["classes"].size() == 5);
    for (const auto& c : j["classes"]) {
        CHECK(c.contains("name"));
        CHECK(c.contains("element_order"));
        CHECK(c.contains("size"));
    }
}

TEST_CASE("json_from_arg reads inline text and files") {
    Json inl = json_from_arg(R"({"kind":"Sn","n":5})");
    CHECK(inl["n"] == 5);

    const char* path = "/tmp/wire_arg_test.json";
    {
        std::ofstream out(path);
        out << R"({"kind":"An","n":7})";
    }
    Json fromfile = json_from_arg(path);
    CHECK(fromfile["kind"] == "An");

    CHECK_THROWS_AS(json_from_arg("{not json"), ParseError);
    CHECK_THROWS_AS(json_from_arg("/tmp/definitely_missing_wire_file.json"), ParseError);
}

TEST_CASE("genus bound serialization") {
    ExtensionDescriptor tri = builder_trinomial(5, 2, 1, 2);
    Json j = genus_to_json(genus_lower_bound(tri));
    CHECK(j.contains("two_g"));
    CHECK(j.contains("g_min"));
}
