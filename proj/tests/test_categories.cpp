#include <catch2/catch_amalgamated.hpp>

#include "eqg/categories.hpp"

using namespace eqg;

namespace {

std::vector<Partition> members(const CategorySpec& spec, const ColorWord& lo) {
    return enumerate_partitions({}, lo, predicate(spec));
}

size_t count(const CategorySpec& spec, const ColorWord& lo) { return members(spec, lo).size(); }

}  // namespace

TEST_CASE("basic membership counts on uncolored words") {
    CHECK(count({CatKind::P}, uncolored(4)) == 15);
    CHECK(count({CatKind::Peven}, uncolored(4)) == 4);   // 3 pairings + one block
    CHECK(count({CatKind::P2}, uncolored(4)) == 3);
    CHECK(count({CatKind::P12}, uncolored(4)) == 10);    // involutions of 4 points
    CHECK(count({CatKind::NC}, uncolored(4)) == 14);
    CHECK(count({CatKind::NC2}, uncolored(4)) == 2);
    CHECK(count({CatKind::NC12}, uncolored(3)) == 4);
    CHECK(count({CatKind::P12prime}, uncolored(3)) == 0);  // odd point count
    CHECK(count({CatKind::NCeven}, uncolored(4)) == 3);
}

TEST_CASE("matching pairings join opposite colors") {
    // on the alternating word of 2k lower points there are k! matchings
    CHECK(count({CatKind::MatchP2}, alternating(4)) == 2);
    CHECK(count({CatKind::MatchP2}, alternating(6)) == 6);
    // all-white words admit no matching pairing
    CHECK(count({CatKind::MatchP2}, uncolored(4)) == 0);
    // noncrossing matchings on the alternating word: Catalan
    CHECK(count({CatKind::MatchNC2}, alternating(6)) == 5);
}

TEST_CASE("mod-s weighted block conditions") {
    CategorySpec ps1{CatKind::Ps};
    ps1.s = 1;
    CHECK(count(ps1, uncolored(4)) == 15);  // s = 1 is no condition
    CategorySpec ps2{CatKind::Ps};
    ps2.s = 2;
    // uncolored word: every leg weighs +1, so blocks must have even size
    CHECK(count(ps2, uncolored(4)) == count({CatKind::Peven}, uncolored(4)));
    CategorySpec psinf{CatKind::Ps};
    psinf.s = kInf;
    CHECK(count(psinf, alternating(4)) == count({CatKind::MatchPeven}, alternating(4)));
    CHECK(count(psinf, uncolored(2)) == 0);
    CategorySpec ncs2{CatKind::NCs};
    ncs2.s = 2;
    CHECK(count(ncs2, uncolored(4)) == count({CatKind::NCeven}, uncolored(4)));
}

TEST_CASE("two-parameter pairing families: inclusion direction") {
    // P2^(s) is contained in P2^(r) whenever r divides s, on every word
    auto check_incl = [](int r, int s) {
        CategorySpec cr{CatKind::MatchP2String}, cs{CatKind::MatchP2String};
        cr.r = r;
        cs.r = s;
        for (int n : {2, 4, 6}) {
            for (const auto& w : {alternating(n), uncolored(n)}) {
                for (const auto& p : enumerate_partitions({}, w, predicate(cs)))
                    CHECK(contains(cr, p));
            }
        }
    };
    check_incl(1, 2);
    check_incl(1, 3);
    check_incl(2, 4);
    check_incl(3, 3);
    // infinity (exact zero) sits below every finite modulus
    CategorySpec circ{CatKind::MatchP2Circ};
    for (int r : {1, 2, 3}) {
        CategorySpec cr{CatKind::MatchP2String};
        cr.r = r;
        for (const auto& p : members(circ, alternating(6))) CHECK(contains(cr, p));
    }
    // r = 1 recovers all matching pairings
    CategorySpec c1{CatKind::MatchP2String};
    c1.r = 1;
    CHECK(count(c1, alternating(6)) == count({CatKind::MatchP2}, alternating(6)));
}

TEST_CASE("cosemigroup family anchors") {
    // C = all residues mod 1: no constraint beyond P2^(infinity)
    CategorySpec all{CatKind::MatchP2Cosemigroup};
    all.residues = {0};
    all.modulus = 1;
    CategorySpec circ{CatKind::MatchP2Circ};
    for (int n : {2, 4, 6})
        CHECK(count(all, alternating(n)) == count(circ, alternating(n)));
    // C = empty: no crossings allowed
    CategorySpec none{CatKind::MatchP2Cosemigroup};
    none.modulus = 0;
    for (int n : {4, 6}) {
        auto got = members(none, alternating(n));
        for (const auto& p : got) CHECK(is_noncrossing(p));
        CHECK(got.size() == count({CatKind::MatchNC2}, alternating(n)));
    }
    // monotone in C
    CategorySpec zero{CatKind::MatchP2Cosemigroup};
    zero.residues = {0};
    zero.modulus = 0;
    for (int n : {4, 6}) {
        for (const auto& p : members(none, alternating(n))) CHECK(contains(zero, p));
        for (const auto& p : members(zero, alternating(n))) CHECK(contains(all, p));
    }
}

TEST_CASE("balanced and locally balanced conditions") {
    // s = 2 balance is automatic for even partitions
    CategorySpec bal2{CatKind::PevenBalanced};
    bal2.s = 2;
    for (int n : {2, 4, 6})
        CHECK(count(bal2, uncolored(n)) == count({CatKind::Peven}, uncolored(n)));
    // exact balance = PevenStar
    CategorySpec balinf{CatKind::PevenBalanced};
    balinf.s = kInf;
    for (int n : {4, 6})
        CHECK(count(balinf, uncolored(n)) == count({CatKind::PevenStar}, uncolored(n)));
    // the 3-cycle pairing is balanced but not locally balanced
    Partition threecycle = kernel({}, {1, 2, 3, 1, 2, 3}, {}, uncolored(6));
    CHECK(contains({CatKind::PevenStar}, threecycle));
    CHECK_FALSE(contains({CatKind::PevenInfty}, threecycle));
    // the crossing pairing is not balanced
    Partition cross = kernel({}, {1, 2, 1, 2}, {}, uncolored(4));
    CHECK_FALSE(contains({CatKind::PevenStar}, cross));
    CHECK(contains({CatKind::Peven}, cross));
    // one block of four is in everything even
    Partition block4 = kernel({}, {1, 1, 1, 1}, {}, uncolored(4));
    CHECK(contains({CatKind::PevenInfty}, block4));
    CHECK(contains({CatKind::PevenStar}, block4));
}

TEST_CASE("signature characterization matches the locally balanced test") {
    for (int n : {2, 4, 6}) {
        for (const auto& p : enumerate_partitions({}, uncolored(n), {})) {
            if (!is_even(p)) continue;
            CHECK(contains({CatKind::PevenInfty}, p) == peven_infty_by_signature(p));
        }
        // and on a split word
        for (const auto& p : enumerate_partitions(uncolored(n / 2), uncolored(n / 2), {})) {
            if (!is_even(p)) continue;
            CHECK(contains({CatKind::PevenInfty}, p) == peven_infty_by_signature(p));
        }
    }
}

TEST_CASE("P2Star: pairings balanced in the circular alternating labels") {
    CHECK(contains({CatKind::P2Star}, kernel({}, {1, 2, 3, 1, 2, 3}, {}, uncolored(6))));
    CHECK_FALSE(contains({CatKind::P2Star}, kernel({}, {1, 2, 1, 2}, {}, uncolored(4))));
    // P2Star = PevenStar intersect P2
    for (int n : {4, 6}) {
        for (const auto& p : enumerate_partitions({}, uncolored(n), {})) {
            bool expect = is_pairing(p) && contains({CatKind::PevenStar}, p);
            CHECK(contains({CatKind::P2Star}, p) == expect);
        }
    }
}

TEST_CASE("global-modulus pairings") {
    CategorySpec r1{CatKind::P2GlobalMod};
    r1.r = 1;
    for (int n : {2, 4})
        CHECK(count(r1, alternating(n)) == count({CatKind::P2}, alternating(n)));
    CategorySpec rinf{CatKind::P2GlobalMod};
    rinf.r = kInf;
    // on a word with nonzero total weight no pairing qualifies
    CHECK(count(rinf, word_parse("oooo")) == 0);
    CHECK(count(rinf, alternating(4)) == count({CatKind::P2}, alternating(4)));
}

TEST_CASE("alternating-color noncrossing blocks") {
    CategorySpec spec{CatKind::NCevenAlternating};
    // on the alternating word, pair blocks always alternate
    CHECK(count(spec, alternating(4)) >= 2);
    for (const auto& p : members(spec, alternating(6))) {
        CHECK(is_noncrossing(p));
        CHECK(is_even(p));
    }
    // a white-white pair cannot alternate
    CHECK(count(spec, word_parse("oo")) == 0);
    CHECK(count(spec, word_parse("ob")) == 1);
}

TEST_CASE("category axiom audit") {
    for (const auto& spec : shipped_specs()) {
        auto rep = audit_axioms(spec, 4);
        INFO(category_name(spec) << ": " << rep.counterexample);
        CHECK(rep.passed);
    }
    for (CatKind k : {CatKind::P, CatKind::Peven, CatKind::NC2, CatKind::MatchP2,
                      CatKind::PevenInfty, CatKind::NCevenAlternating}) {
        auto rep = audit_axioms({k}, 6);
        INFO(category_name({k}) << ": " << rep.counterexample);
        CHECK(rep.passed);
    }
    CategorySpec ps3{CatKind::Ps};
    ps3.s = 3;
    auto rep = audit_axioms(ps3, 6);
    INFO(rep.counterexample);
    CHECK(rep.passed);
}

TEST_CASE("uniformity: block deletion stability") {
    for (CatKind k : {CatKind::P, CatKind::Peven, CatKind::P2, CatKind::P12, CatKind::NC,
                      CatKind::NCeven, CatKind::NC2, CatKind::NC12, CatKind::MatchP2,
                      CatKind::MatchPeven}) {
        auto rep = is_uniform({k}, 6);
        INFO(category_name({k}) << ": " << rep.counterexample);
        CHECK(rep.passed);
    }
    // the starred / parity-position families are not uniform
    CHECK_FALSE(is_uniform({CatKind::PevenStar}, 6).passed);
    CHECK_FALSE(is_uniform({CatKind::P12prime}, 4).passed);
}

TEST_CASE("bounded generation: diamond categories") {
    // r = 1: pi_1 = ker(11/11) generates at least the double semicircles
    auto cl = generate({diamond_generator(1)}, 6, 6);
    CHECK(cl.count(semicircle(Color::white)) == 1);
    Partition block4 = kernel({1, 1}, {1, 1}, uncolored(2), uncolored(2));
    CHECK(cl.count(block4) == 1);
    // membership through the spec interface
    CategorySpec d1{CatKind::Diamond};
    d1.r = 1;
    CHECK(contains(d1, block4));
    CHECK(contains(d1, identity_partition(uncolored(1))));
}

TEST_CASE("category name round trip") {
    for (const auto& spec : shipped_specs()) {
        CHECK(parse_category(category_name(spec)) == spec);
    }
    CategorySpec d3{CatKind::Diamond};
    d3.r = 3;
    CHECK(parse_category("diamond:3") == d3);
    CHECK(parse_category("ncs:4").s == 4);
    CHECK(parse_category("p2r:3").r == 3);
    CHECK(parse_category("p2c:0/4").modulus == 4);
    CHECK(parse_category("peveninf").kind == CatKind::PevenInfty);
    CHECK_THROWS_AS(parse_category("nope"), std::invalid_argument);
    CHECK_THROWS_AS(parse_category("p:3"), std::invalid_argument);
}
