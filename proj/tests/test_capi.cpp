#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <string>

#include "../include/galois_param.h"

using Json = nlohmann::json;

namespace {

struct Out {
    char* s = nullptr;
    ~Out() { gp_string_free(s); }
    std::string str() const { return s ? s : ""; }
    Json json() const { return Json::parse(str()); }
};

}  // namespace

TEST_CASE("version string") {
    REQUIRE(gp_version() != nullptr);
    CHECK(std::string(gp_version()).find('.') != std::string::npos);
}

TEST_CASE("build: trinomial with derived exponents") {
    Out o;
    REQUIRE(gp_build("trinomial", R"({"n":5,"m":2})", 0, &o.s) == GP_OK);
    Json j = o.json();
    CHECK(j["group"] == Json::parse(R"({"kind":"Sn","n":5})"));
    CHECK(j.contains("defining_poly"));

    Out t;
    REQUIRE(gp_build("trinomial", R"({"n":5,"m":2,"q":1,"s":2})", 1, &t.s) == GP_OK);
    CHECK(t.str().find("group: S5") != std::string::npos);

    Out bad;
    CHECK(gp_build("trinomial", R"({"n":6,"m":2})", 0, &bad.s) == GP_ERR_DOMAIN);
    CHECK(bad.json()["error"]["message"].get<std::string>().find("gcd") !=
          std::string::npos);
}

TEST_CASE("build: sqrt, morse, cyclotomic, manual") {
    Out sq;
    REQUIRE(gp_build("sqrt", R"({"radicand":["0","1"]})", 0, &sq.s) == GP_OK);
    CHECK(sq.json()["group"]["n"] == 2);

    Out mo;
    REQUIRE(gp_build("morse", R"({"poly":["0","1","0","1"]})", 0, &mo.s) == GP_OK);
    CHECK(mo.json()["group"] == Json::parse(R"({"kind":"Sn","n":3})"));

    Out cy;
    REQUIRE(gp_build("cyclotomic", R"({"n":5})", 0, &cy.s) == GP_OK);
    CHECK(cy.json()["group"]["kind"] == "perm");

    // manual: feed a built descriptor back through the manual entrance
    Out manual;
    REQUIRE(gp_build("manual", sq.str().c_str(), 0, &manual.s) == GP_OK);
    CHECK(manual.json() == sq.json());

    Out bad;
    CHECK(gp_build("heptagon", "{}", 0, &bad.s) == GP_ERR_PARSE);
    CHECK(bad.json()["error"]["code"] == GP_ERR_PARSE);
}

TEST_CASE("specialize: clean point and branch point") {
    Out desc;
    REQUIRE(gp_build("sqrt", R"({"radicand":["0","1"]})", 0, &desc.s) == GP_OK);

    Out good;
    REQUIRE(gp_specialize(desc.s, "2", 0, 0, &good.s) == GP_OK);
    Json j = good.json();
    CHECK(j["separable"] == true);
    CHECK(j["quadratic_kernel"] == "2");

    Out branch;
    REQUIRE(gp_specialize(desc.s, "0", 0, 0, &branch.s) == GP_OK);
    CHECK(branch.json()["separable"] == false);
    CHECK(branch.json().contains("reason"));

    Out text;
    REQUIRE(gp_specialize(desc.s, "1/4", 0, 1, &text.s) == GP_OK);
    CHECK(text.str().find("t0 = 1/4") != std::string::npos);

    Out bad;
    CHECK(gp_specialize(desc.s, "zebra", 0, 0, &bad.s) == GP_ERR_PARSE);
}

TEST_CASE("check: ramvar and ic1") {
    Out cyc, sq, tri, mo;
    REQUIRE(gp_build("cyclotomic", R"({"n":5})", 0, &cyc.s) == GP_OK);
    REQUIRE(gp_build("sqrt", R"({"radicand":["0","1"]})", 0, &sq.s) == GP_OK);
    REQUIRE(gp_build("trinomial", R"({"n":5,"m":2})", 0, &tri.s) == GP_OK);
    REQUIRE(gp_build("morse", R"({"poly":["0","1","0","0","0","1"]})", 0, &mo.s) == GP_OK);

    Out rv;
    int verdict = -1;
    REQUIRE(gp_check("ramvar", cyc.s, sq.s, 0, 0, 0, &rv.s, &verdict) == GP_OK);
    CHECK(verdict == GP_VERDICT_ESTABLISHED);
    Json j = rv.json();
    CHECK(j["criterion"] == "RAMVAR");
    CHECK(j["overall"]["kind"] == "Established");

    Out ic;
    verdict = -1;
    REQUIRE(gp_check("ic1", tri.s, mo.s, 0, 0, 0, &ic.s, &verdict) == GP_OK);
    CHECK(verdict == GP_VERDICT_ESTABLISHED);
    CHECK(ic.json()["criterion"] == "IC1");

    Out text;
    REQUIRE(gp_check("ic1", tri.s, mo.s, 0, 0, 1, &text.s, nullptr) == GP_OK);
    CHECK(text.str().find("(IC1-1)") != std::string::npos);

    Out bad;
    CHECK(gp_check("ic9", tri.s, mo.s, 0, 0, 0, &bad.s, nullptr) == GP_ERR_PARSE);
}

TEST_CASE("check: bph carries witnesses") {
    Out sq, phi;
    REQUIRE(gp_build("sqrt", R"({"radicand":["0","1"]})", 0, &sq.s) == GP_OK);
    REQUIRE(gp_build("sqrt", R"({"radicand":["1","1","1","1","1"]})", 0, &phi.s) == GP_OK);
    Out rep;
    int verdict = -1;
    REQUIRE(gp_check("bph", sq.s, phi.s, 1000, 10, 0, &rep.s, &verdict) == GP_OK);
    CHECK(verdict == GP_VERDICT_SUPPORTED);
    Json j = rep.json();
    CHECK(j["overall"]["kind"] == "EmpiricallySupported");
    CHECK(j["overall"]["prime_bound"] == 1000);
    CHECK(j["overall"]["witnesses"].size() >= 10);
}

TEST_CASE("case runner") {
    Out ids;
    REQUIRE(gp_case_ids(&ids.s) == GP_OK);
    Json idlist = ids.json();
    CHECK(idlist.is_array());
    CHECK(idlist.size() == 13);
    bool has31 = false;
    for (const auto& id : idlist)
        if (id == "prop31") has31 = true;
    CHECK(has31);

    Out cor77;
    int verdict = -1;
    REQUIRE(gp_case("cor77", nullptr, 0, &cor77.s, &verdict) == GP_OK);
    CHECK(verdict == GP_VERDICT_ESTABLISHED);
    CHECK(cor77.json()["id"] == "cor77");

    Out refuted;
    verdict = -1;
    REQUIRE(gp_case("prop31", R"(["1","0","1"])", 1, &refuted.s, &verdict) == GP_OK);
    CHECK(verdict == GP_VERDICT_REFUTED);
    CHECK(refuted.str().find("conclusion:") != std::string::npos);

    Out numeric;
    REQUIRE(gp_case("prop31", "[1,0,1]", 0, &numeric.s, &verdict) == GP_OK);
    CHECK(verdict == GP_VERDICT_REFUTED);

    Out bad;
    CHECK(gp_case("cor999", nullptr, 0, &bad.s, nullptr) == GP_ERR_DOMAIN);
    Out badp;
    CHECK(gp_case("prop31", R"({"a":1})", 0, &badp.s, nullptr) == GP_ERR_PARSE);
}

TEST_CASE("group info by name and by wire") {
    Out s4;
    REQUIRE(gp_group_info("S4", 0, &s4.s) == GP_OK);
    Json j = s4.json();
    CHECK(j["order"] == 24);
    CHECK(j["classes"].size() == 5);

    Out psl;
    REQUIRE(gp_group_info("PSL2(7)", 0, &psl.s) == GP_OK);
    CHECK(psl.json()["order"] == 168);
    Out psl2;
    REQUIRE(gp_group_info("psl2_5", 0, &psl2.s) == GP_OK);
    CHECK(psl2.json()["order"] == 60);

    Out v4;
    REQUIRE(gp_group_info("V4", 1, &v4.s) == GP_OK);
    CHECK(v4.str().find("order 4") != std::string::npos);

    Out z6;
    REQUIRE(gp_group_info("Z/6", 0, &z6.s) == GP_OK);
    CHECK(z6.json()["order"] == 6);

    Out wire;
    REQUIRE(gp_group_info(R"({"kind":"An","n":5})", 0, &wire.s) == GP_OK);
    CHECK(wire.json()["order"] == 60);

    Out bad;
    CHECK(gp_group_info("Q8", 0, &bad.s) == GP_ERR_PARSE);
}

TEST_CASE("prime census") {
    Out c;
    REQUIRE(gp_primes(R"(["1","1","1","1","1"])", 100, 0, &c.s) == GP_OK);
    Json j = c.json();
    bool saw5 = false, saw11 = false;
    for (const auto& row : j["divisors"]) {
        if (row["prime"] == 5) saw5 = true;
        if (row["prime"] == 11) saw11 = true;
    }
    CHECK(saw5);
    CHECK(saw11);

    Out text;
    REQUIRE(gp_primes(R"(["1","1","1","1","1"])", 100, 1, &text.s) == GP_OK);
    CHECK(text.str().find("prime divisors") != std::string::npos);

    Out bad;
    CHECK(gp_primes(R"(["x"])", 100, 0, &bad.s) == GP_ERR_PARSE);
}

TEST_CASE("null arguments are parse errors, not crashes") {
    Out o;
    CHECK(gp_build(nullptr, "{}", 0, &o.s) == GP_ERR_PARSE);
    Out o2;
    CHECK(gp_check("ic1", nullptr, nullptr, 0, 0, 0, &o2.s, nullptr) == GP_ERR_PARSE);
    Out o3;
    CHECK(gp_specialize(nullptr, "2", 0, 0, &o3.s) == GP_ERR_PARSE);
    // a null out pointer is tolerated everywhere
    CHECK(gp_case_ids(nullptr) == GP_OK);
}

TEST_CASE("cap errors surface with their own code") {
    Out o;
    int rc = gp_group_info("S13", 0, &o.s);
    CHECK(rc == GP_ERR_CAP);
    CHECK(o.json()["error"]["code"] == GP_ERR_CAP);
}
