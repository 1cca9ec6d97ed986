#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "groups.hpp"

using namespace galois;

namespace {

Perm rnd_perm(std::mt19937_64& rng, int n) {
    std::vector<int> im(static_cast<size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    std::shuffle(im.begin(), im.end(), rng);
    return Perm::from_images(std::move(im));
}

// brute-force conjugacy inside an enumerated group
bool conjugate_brute(const PermGroup& g, const Perm& a, const Perm& b) {
    for (const Perm& x : g.elements())
        if (x * a * x.inverse() == b) return true;
    return false;
}

// oracle: a class set is g-complete iff no proper subgroup meets every class
bool g_complete_oracle(const PermGroup& g, const std::vector<int>& cls) {
    for (const auto& sub : enumerate_subgroups(g)) {
        if (static_cast<long>(sub.size()) == g.order()) continue;
        std::set<int> in(sub.begin(), sub.end());
        bool meets_all = true;
        for (int cid : cls) {
            bool meets = false;
            for (int id : g.classes()[static_cast<size_t>(cid)].member_ids)
                if (in.count(id)) {
                    meets = true;
                    break;
                }
            if (!meets) {
                meets_all = false;
                break;
            }
        }
        if (meets_all) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("permutation basics") {
    Perm id5 = Perm::identity(5);
    CHECK(id5.is_identity());
    CHECK(CycleType::of(id5).str() == "[1^5]");
    Perm c5 = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
    CHECK(CycleType::of(c5).str() == "[5^1]");
    Perm mixed = Perm::from_cycles(5, {{0, 1}, {2, 3, 4}});
    CHECK(CycleType::of(mixed).lengths == std::vector<int>{2, 3});
    CHECK(mixed.order() == 6);
    CHECK_FALSE(mixed.is_even());
    CHECK(c5.is_even());
    CHECK((c5 * c5.inverse()).is_identity());
    CHECK(c5.power(5).is_identity());
    CHECK(c5.power(-1) == c5.inverse());
    CHECK(mixed.str() == "(0 1)(2 3 4)");
    CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), DomainError);
    CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 1}, {1, 2}}), DomainError);
    // composition convention: (p*q)(i) = p(q(i))
    Perm t01 = Perm::from_cycles(3, {{0, 1}});
    Perm t12 = Perm::from_cycles(3, {{1, 2}});
    CHECK((t01 * t12).apply(1) == t01.apply(t12.apply(1)));
}

TEST_CASE("cycle type power formula against explicit powers") {
    CHECK(cycle_type_power(CycleType::from_lengths({5}), 2) ==
          CycleType::from_lengths({5}));
    CHECK(cycle_type_power(CycleType::from_lengths({2, 3}), 2) ==
          CycleType::from_lengths({1, 1, 3}));
    CHECK(cycle_type_power(CycleType::from_lengths({2, 3}), 3) ==
          CycleType::from_lengths({1, 1, 1, 2}));
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> degree(1, 10), exponent(1, 12);
    for (int trial = 0; trial < 500; ++trial) {
        int n = degree(rng);
        Perm g = rnd_perm(rng, n);
        long a = exponent(rng);
        CHECK(cycle_type_power(CycleType::of(g), a) == CycleType::of(g.power(a)));
    }
}

TEST_CASE("group enumeration and caps") {
    CHECK(symmetric_group(3).order() == 6);
    CHECK(symmetric_group(5).order() == 120);
    CHECK(alternating_group(5).order() == 60);
    PermGroup a5 = PermGroup::from_generators(
        5, {Perm::from_cycles(5, {{0, 1, 2, 3, 4}}), Perm::from_cycles(5, {{2, 3, 4}})});
    CHECK(a5.order() == 60);
    CHECK(cyclic_group(6).order() == 6);
    CHECK(dihedral_group(4).order() == 8);
    CHECK(klein_four_group().order() == 4);
    CHECK_THROWS_AS(symmetric_group(8), CapError);  // 40320 over the default cap
    CHECK(symmetric_group(7).order() == 5040);
}

TEST_CASE("conjugacy classes: sizes, names, membership") {
    PermGroup s3 = symmetric_group(3);
    std::multiset<size_t> sizes;
    for (const auto& c : s3.classes()) sizes.insert(c.member_ids.size());
    CHECK(sizes == std::multiset<size_t>{1, 2, 3});

    PermGroup a4 = alternating_group(4);
    std::multiset<size_t> a4sizes;
    for (const auto& c : a4.classes()) a4sizes.insert(c.member_ids.size());
    CHECK(a4sizes == std::multiset<size_t>{1, 3, 4, 4});

    PermGroup v4 = klein_four_group();
    CHECK(v4.classes().size() == 4);
    for (const auto& c : v4.classes()) CHECK(c.member_ids.size() == 1);

    PermGroup a5 = alternating_group(5);
    std::vector<std::string> names;
    for (const auto& c : a5.classes()) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"1A", "2A", "3A", "5A", "5B"});
    long total = 0;
    for (const auto& c : a5.classes()) {
        total += static_cast<long>(c.member_ids.size());
        CHECK(a5.order() % static_cast<long>(c.member_ids.size()) == 0);
        for (int id : c.member_ids)
            CHECK(a5.elements()[static_cast<size_t>(id)].order() == c.element_order);
    }
    CHECK(total == a5.order());
    CHECK(a5.class_index_by_name("5B") >= 0);
    CHECK(a5.class_index_by_name("7A") == -1);
}

TEST_CASE("A5 split pair: a 5-cycle and its square") {
    PermGroup a5 = alternating_group(5);
    Perm c5 = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
    int c1 = a5.class_of(c5), c2 = a5.class_of(c5.power(2));
    CHECK(c1 != c2);
    CHECK(a5.classes()[static_cast<size_t>(c1)].element_order == 5);
    CHECK(a5.classes()[static_cast<size_t>(c2)].element_order == 5);
    CHECK_FALSE(conjugate_in_An(c5, c5.power(2)));
    CHECK(conjugate_in_An(c5, c5.inverse()));
    CHECK(conjugate_in_An(c5, c5));
}

TEST_CASE("split rule: odd pairwise-distinct lengths") {
    CHECK(an_class_splits(CycleType::from_lengths({5})));
    CHECK_FALSE(an_class_splits(CycleType::from_lengths({1, 1, 3})));
    CHECK(an_class_splits(CycleType::from_lengths({1, 3, 5})));
    CHECK_FALSE(an_class_splits(CycleType::from_lengths({2, 2})));
    CHECK_FALSE(an_class_splits(CycleType::from_lengths({3, 3})));
    CHECK_FALSE(an_class_splits(CycleType::from_lengths({1, 1})));  // identity never splits
    CHECK_THROWS_AS(an_class_splits(CycleType::from_lengths({1, 2})), DomainError);
}

TEST_CASE("split rule agrees with explicit A_n conjugacy for n <= 8") {
    // enumerate even cycle types of degree n via partitions
    for (int n = 3; n <= 8; ++n) {
        std::vector<std::vector<int>> parts;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int remaining, int maxpart) -> void {
            if (remaining == 0) {
                parts.push_back(cur);
                return;
            }
            for (int p = std::min(remaining, maxpart); p >= 1; --p) {
                cur.push_back(p);
                self(self, remaining - p, p);
                cur.pop_back();
            }
        };
        rec(rec, n, n);
        for (const auto& part : parts) {
            CycleType ct = CycleType::from_lengths(part);
            if (!ct.even()) continue;
            Perm g = canonical_of_type(ct);
            Perm tau = Perm::from_cycles(n, {{0, 1}});
            Perm conj = tau * g * tau.inverse();
            // split <=> the odd-conjugate falls in the other A_n class
            bool nontrivial = g.order() > 1;
            if (nontrivial)
                CHECK(an_class_splits(ct) == !conjugate_in_An(g, conj));
        }
    }
}

TEST_CASE("conjugate_in_An against brute force") {
    for (int n : {4, 5}) {
        PermGroup an = alternating_group(n);
        for (const Perm& a : an.elements())
            for (const Perm& b : an.elements()) {
                if (CycleType::of(a) != CycleType::of(b)) continue;
                CHECK(conjugate_in_An(a, b) == conjugate_brute(an, a, b));
            }
    }
    PermGroup a6 = alternating_group(6);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<size_t> pick(0, a6.elements().size() - 1);
    int done = 0;
    while (done < 400) {
        const Perm& a = a6.elements()[pick(rng)];
        const Perm& b = a6.elements()[pick(rng)];
        if (CycleType::of(a) != CycleType::of(b)) continue;
        CHECK(conjugate_in_An(a, b) == conjugate_brute(a6, a, b));
        ++done;
    }
}

TEST_CASE("an_class_of tags split classes against the canonical rep") {
    Perm c5 = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
    AnClass k1 = an_class_of(c5);
    CHECK(k1.split_tag == 1);
    AnClass k2 = an_class_of(c5.power(2));
    CHECK(k2.split_tag == 2);
    AnClass k3 = an_class_of(Perm::from_cycles(5, {{0, 1, 2}}));
    CHECK(k3.split_tag == 0);  // [1^2 3] does not split
}

TEST_CASE("power closure of the S5 trinomial classes") {
    PermGroup s5 = symmetric_group(5);
    auto find = [&](std::vector<int> lens) {
        return s5.class_of(canonical_of_type(CycleType::from_lengths(std::move(lens))));
    };
    std::vector<int> triple{find({2, 3}), find({5}), find({1, 1, 1, 2})};
    auto closure = power_closure_indices(s5, triple);
    CHECK(closure.size() == 5);
    std::set<int> in(closure.begin(), closure.end());
    CHECK(in.count(find({2, 3})));
    CHECK(in.count(find({1, 1, 3})));
    CHECK(in.count(find({1, 1, 1, 2})));
    CHECK(in.count(find({5})));
    CHECK(in.count(find({1, 1, 1, 1, 1})));
    CHECK_FALSE(in.count(find({1, 4})));
    CHECK_FALSE(in.count(find({1, 2, 2})));

    // type-level closure agrees without enumeration
    auto types = sn_power_closure({CycleType::from_lengths({2, 3}),
                                   CycleType::from_lengths({5}),
                                   CycleType::from_lengths({1, 1, 1, 2})});
    CHECK(types.size() == 5);
    CHECK(std::count(types.begin(), types.end(), CycleType::from_lengths({1, 4})) == 0);

    // closure always contains inputs and identity
    auto single = power_closure_indices(s5, {find({1, 4})});
    std::set<int> sin(single.begin(), single.end());
    CHECK(sin.count(find({1, 4})));
    CHECK(sin.count(find({1, 1, 1, 1, 1})));
    CHECK(sin.count(find({1, 1, 1, 2})) == 0);
    CHECK(sin.count(find({1, 2, 2})));
}

TEST_CASE("rational class sets") {
    PermGroup a5 = alternating_group(5);
    int c5a = a5.class_index_by_name("5A");
    int c5b = a5.class_index_by_name("5B");
    CHECK_FALSE(is_rational_class_set(a5, {c5a}));
    CHECK(is_rational_class_set(a5, {c5a, c5b}));
    std::vector<int> all;
    for (size_t i = 0; i < a5.classes().size(); ++i) all.push_back(static_cast<int>(i));
    CHECK(is_rational_class_set(a5, all));
    PermGroup s5 = symmetric_group(5);
    for (size_t i = 0; i < s5.classes().size(); ++i)
        CHECK(is_rational_class_set(s5, {static_cast<int>(i)}));
    PermGroup z5 = cyclic_group(5);
    Perm g = z5.generators()[0];
    CHECK_FALSE(is_rational_class_set(z5, {z5.class_of(g)}));
}

TEST_CASE("g-completeness agrees with the subgroup oracle on the zoo") {
    std::vector<PermGroup> zoo;
    zoo.push_back(symmetric_group(3));
    zoo.push_back(dihedral_group(4));
    zoo.push_back(alternating_group(4));
    zoo.push_back(symmetric_group(4));
    zoo.push_back(cyclic_group(6));
    for (const PermGroup& g : zoo) {
        int nc = static_cast<int>(g.classes().size());
        for (int mask = 0; mask < (1 << nc); ++mask) {
            std::vector<int> cls;
            for (int i = 0; i < nc; ++i)
                if (mask & (1 << i)) cls.push_back(i);
            GCompleteResult res = is_g_complete(g, cls);
            CHECK(res.complete == g_complete_oracle(g, cls));
            if (!res.complete && !cls.empty()) {
                // witness must be a non-generating tuple hitting the classes
                REQUIRE(res.witness.size() == cls.size());
                for (size_t i = 0; i < cls.size(); ++i)
                    CHECK(g.class_of(res.witness[i]) == cls[i]);
                CHECK(static_cast<long>(g.closure_of(res.witness).size()) < g.order());
            }
        }
    }
}

TEST_CASE("trinomial class triples are g-complete in S5 and S7") {
    PermGroup s5 = symmetric_group(5);
    auto f5 = [&](std::vector<int> l) {
        return s5.class_of(canonical_of_type(CycleType::from_lengths(std::move(l))));
    };
    CHECK(is_g_complete(s5, {f5({2, 3}), f5({5}), f5({1, 1, 1, 2})}).complete);
    CHECK_FALSE(is_g_complete(s5, {f5({1, 1, 1, 2})}).complete);

    PermGroup s7 = symmetric_group(7);
    auto f7 = [&](std::vector<int> l) {
        return s7.class_of(canonical_of_type(CycleType::from_lengths(std::move(l))));
    };
    CHECK(is_g_complete(s7, {f7({2, 5}), f7({7}), f7({1, 1, 1, 1, 1, 2})}).complete);
}

TEST_CASE("subgroup enumeration on known lattices") {
    CHECK(enumerate_subgroups(symmetric_group(3)).size() == 6);
    CHECK(enumerate_subgroups(klein_four_group()).size() == 5);
    CHECK(enumerate_subgroups(alternating_group(4)).size() == 10);
    CHECK(enumerate_subgroups(symmetric_group(4)).size() == 30);
    auto z6 = enumerate_subgroups(cyclic_group(6));
    CHECK(z6.size() == 4);  // one per divisor
}

TEST_CASE("class-set search: witnesses and cyclic prime-power refusals") {
    auto check_witness = [](const PermGroup& g) {
        auto w = find_class_set_cor53(g);
        REQUIRE(w.has_value());
        // revalidate: union generates, excluded class outside the closure
        std::vector<Perm> seed;
        for (int cid : w->generating_class_ids)
            for (int id : g.classes()[static_cast<size_t>(cid)].member_ids)
                seed.push_back(g.elements()[static_cast<size_t>(id)]);
        CHECK(static_cast<long>(g.closure_of(seed).size()) == g.order());
        auto closure = power_closure_indices(g, w->generating_class_ids);
        CHECK(std::count(closure.begin(), closure.end(), w->excluded_class_id) == 0);
    };
    check_witness(klein_four_group());
    check_witness(symmetric_group(4));
    check_witness(alternating_group(5));
    check_witness(dihedral_group(4));
    check_witness(cyclic_group(6));

    CHECK_FALSE(find_class_set_cor53(cyclic_group(2)).has_value());
    CHECK_FALSE(find_class_set_cor53(cyclic_group(3)).has_value());
    CHECK_FALSE(find_class_set_cor53(cyclic_group(4)).has_value());
    CHECK_FALSE(find_class_set_cor53(cyclic_group(8)).has_value());
    CHECK_FALSE(find_class_set_cor53(cyclic_group(9)).has_value());
}

TEST_CASE("Klein four witness matches the two-generator picture") {
    PermGroup v4 = klein_four_group();
    auto w = find_class_set_cor53(v4);
    REQUIRE(w.has_value());
    CHECK(w->generating_class_ids.size() == 2);
    CHECK(w->excluded_class_id >= 0);
}

TEST_CASE("real tuple construction verifies on even-order groups") {
    for (int kind = 0; kind < 6; ++kind) {
        PermGroup g = [&] {
            switch (kind) {
                case 0: return cyclic_group(2);
                case 1: return symmetric_group(3);
                case 2: return dihedral_group(4);
                case 3: return alternating_group(4);
                case 4: return symmetric_group(4);
                default: return cyclic_group(6);
            }
        }();
        RealTupleReport rep = real_tuple_construction(g);
        CHECK(rep.ok());
        CHECK(rep.tuple.size() % 4 == 3);  // 4r-1
        CHECK(rep.tuple[0].order() == 2);
    }
    RealTupleReport z2 = real_tuple_construction(cyclic_group(2));
    CHECK(z2.tuple.size() == 3);
    CHECK_THROWS_AS(real_tuple_construction(cyclic_group(3)), DomainError);
    RealTupleReport a5 = real_tuple_construction(alternating_group(5));
    CHECK(a5.ok());
}

TEST_CASE("PSL2 groups over small primes") {
    PermGroup p5 = psl2_group(5);
    CHECK(p5.order() == 60);
    CHECK(p5.classes().size() == 5);  // matches A5
    PermGroup p7 = psl2_group(7);
    CHECK(p7.order() == 168);
    CHECK(p7.class_index_by_name("7A") >= 0);
    CHECK(p7.class_index_by_name("7B") >= 0);
    PermGroup p11 = psl2_group(11);
    CHECK(p11.order() == 660);
    PermGroup p13 = psl2_group(13);
    CHECK(p13.order() == 1092);
    CHECK(p13.classes().size() == 9);
    CHECK(p13.class_index_by_name("13B") >= 0);
    CHECK_THROWS_AS(psl2_group(9), DomainError);
    CHECK_THROWS_AS(psl2_group(17), DomainError);
}

TEST_CASE("PSL2 closure facts behind the modular-curve comparisons") {
    // p=5: order-3 class escapes the closure of {2A, 5A, 5B}
    PermGroup p5 = psl2_group(5);
    auto by = [](const PermGroup& g, const std::string& n) {
        int i = g.class_index_by_name(n);
        REQUIRE(i >= 0);
        return i;
    };
    auto closure5 = power_closure_indices(
        p5, {by(p5, "2A"), by(p5, "5A"), by(p5, "5B")});
    std::set<int> in5(closure5.begin(), closure5.end());
    CHECK_FALSE(in5.count(by(p5, "3A")));

    // p=7: order-2 class escapes the closure of {3A, 7A, 7B}
    PermGroup p7 = psl2_group(7);
    auto closure7 = power_closure_indices(
        p7, {by(p7, "3A"), by(p7, "7A"), by(p7, "7B")});
    std::set<int> in7(closure7.begin(), closure7.end());
    CHECK_FALSE(in7.count(by(p7, "2A")));
    CHECK(in7.count(by(p7, "7B")));

    // p=11, 13: order-3 class escapes {2A, pA, pB}
    for (std::uint64_t p : {11ull, 13ull}) {
        PermGroup g = psl2_group(p);
        auto closure = power_closure_indices(
            g, {by(g, "2A"), by(g, std::to_string(p) + "A"), by(g, std::to_string(p) + "B")});
        std::set<int> in(closure.begin(), closure.end());
        CHECK_FALSE(in.count(by(g, "3A")));
    }
}
