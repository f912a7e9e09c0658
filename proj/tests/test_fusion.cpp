#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eqg/fusion.hpp"

using namespace eqg;

namespace {

FusionElement one(const FusionRing& ring, const Label& l) {
    FusionElement e{ring, {}};
    e.add(l);
    return e;
}

bool elements_equal(const FusionElement& a, const FusionElement& b) {
    return a.ring == b.ring && a.terms == b.terms;
}

Int catalan(int k) { return binomial(2 * k, k) / (k + 1); }

}  // namespace

TEST_CASE("on_plus fusion rule") {
    FusionRing ring{FusionRing::Kind::on_plus};
    auto r11 = fuse(ring, {1}, {1});
    CHECK(r11.terms == std::map<Label, Int>{{{0}, 1}, {{2}, 1}});
    auto r23 = fuse(ring, {2}, {3});
    CHECK(r23.terms == std::map<Label, Int>{{{1}, 1}, {{3}, 1}, {{5}, 1}});
    // the trivial object is a unit
    auto u = fuse(ring, {0}, {4});
    CHECK(u.terms == std::map<Label, Int>{{{4}, 1}});
}

TEST_CASE("un_plus fusion rule") {
    FusionRing ring{FusionRing::Kind::un_plus};
    // a (x) a admits no cancellation
    auto aa = fuse(ring, {0}, {0});
    CHECK(aa.terms == std::map<Label, Int>{{{0, 0}, 1}});
    // a (x) a-bar = r_ab + 1: the full suffix cancels
    auto cancel = fuse(ring, {0}, conjugate_label(ring, {0}));
    CHECK(cancel.terms == std::map<Label, Int>{{{0, 1}, 1}, {{}, 1}});
    // ab (x) ab = abab (the conjugate of ab is ab, suffix matches need b... a)
    auto sq = fuse(ring, {0, 1}, {0, 1});
    CHECK(sq.terms.count({0, 1, 0, 1}) == 1);
    // obob trivial multiplicity 2 (the defining relation of the free unitary dual)
    CHECK(trivial_multiplicity(ring, {0, 1, 0, 1}) == 2);
    CHECK(trivial_multiplicity(ring, {0, 1}) == 1);
    CHECK(trivial_multiplicity(ring, {0, 0}) == 0);
}

TEST_CASE("hs_plus fusion rule") {
    FusionRing ring{FusionRing::Kind::hs_plus, 3};
    // a_1 (x) a_2 = a_1 a_2 + a_0 + (p (x) q with empty p, q -> trivial)
    auto f = fuse(ring, {1}, {2});
    CHECK(f.terms == std::map<Label, Int>{{{1, 2}, 1}, {{0}, 1}, {{}, 1}});
    auto g = fuse(ring, {1}, {1});
    CHECK(g.terms == std::map<Label, Int>{{{1, 1}, 1}, {{2}, 1}});
    // empty label is a unit
    auto u = fuse(ring, {}, {1, 2});
    CHECK(u.terms == std::map<Label, Int>{{{1, 2}, 1}});
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(11);
    auto random_label = [&](const FusionRing& ring) {
        int len = (int)(rng() % 4);
        Label l;
        if (ring.kind == FusionRing::Kind::on_plus) return Label{(int)(rng() % 5)};
        for (int i = 0; i < len; ++i) {
            if (ring.kind == FusionRing::Kind::un_plus) l.push_back((int)(rng() % 2));
            else l.push_back(ring.s > 0 ? (int)(rng() % ring.s) : (int)(rng() % 7) - 3);
        }
        return l;
    };
    std::vector<FusionRing> rings = {{FusionRing::Kind::on_plus},
                                     {FusionRing::Kind::un_plus},
                                     {FusionRing::Kind::hs_plus, 2},
                                     {FusionRing::Kind::hs_plus, 3},
                                     {FusionRing::Kind::hs_plus, 0}};
    for (const auto& ring : rings) {
        for (int trial = 0; trial < 40; ++trial) {
            Label a = random_label(ring), b = random_label(ring), c = random_label(ring);
            auto lhs = fuse_elements(fuse(ring, a, b), one(ring, c));
            auto rhs = fuse_elements(one(ring, a), fuse(ring, b, c));
            INFO("trial " << trial);
            CHECK(elements_equal(lhs, rhs));
        }
    }
}

TEST_CASE("conjugation is an involution and fixes the trivial multiplicity") {
    std::vector<FusionRing> rings = {{FusionRing::Kind::un_plus},
                                     {FusionRing::Kind::hs_plus, 4},
                                     {FusionRing::Kind::hs_plus, 0}};
    std::mt19937_64 rng(13);
    for (const auto& ring : rings) {
        for (int trial = 0; trial < 20; ++trial) {
            Label l;
            int len = (int)(rng() % 5);
            for (int i = 0; i < len; ++i) {
                if (ring.kind == FusionRing::Kind::un_plus) l.push_back((int)(rng() % 2));
                else l.push_back(ring.s > 0 ? (int)(rng() % ring.s) : (int)(rng() % 9) - 4);
            }
            CHECK(conjugate_label(ring, conjugate_label(ring, l)) == l);
            // r_x (x) r_{x bar} always contains the trivial object exactly once
            auto f = fuse(ring, l, conjugate_label(ring, l));
            CHECK(f.terms[trivial_label(ring)] == 1);
        }
    }
}

TEST_CASE("trivial multiplicities of tensor powers of the fundamental") {
    FusionRing on{FusionRing::Kind::on_plus};
    // even powers: Catalan numbers; odd powers: zero
    for (int k = 1; k <= 8; ++k) {
        std::vector<int> letters(2 * k, 0);
        CHECK(trivial_multiplicity(on, letters) == catalan(k));
        std::vector<int> odd(2 * k - 1, 0);
        CHECK(trivial_multiplicity(on, odd) == 0);
    }
    // hs_plus(s): the count of noncrossing partitions with block sums = 0 mod s
    for (int s : {1, 2, 3}) {
        FusionRing hs{FusionRing::Kind::hs_plus, s};
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 8; ++trial) {
            int k = 1 + (int)(rng() % 5);
            std::vector<int> letters;
            for (int i = 0; i < k; ++i) letters.push_back((int)(rng() % s));
            CHECK(trivial_multiplicity(hs, letters) == ncs_count(letters, s));
        }
    }
    // hs_plus(1) power 4 with all letters 0: full noncrossing count 14
    FusionRing hs1{FusionRing::Kind::hs_plus, 1};
    CHECK(trivial_multiplicity(hs1, {0, 0, 0, 0}) == 14);
}

TEST_CASE("dimension additivity") {
    FusionRing on{FusionRing::Kind::on_plus};
    FusionRing un{FusionRing::Kind::un_plus};
    for (Int N : {Int(2), Int(3), Int(4)}) {
        for (int k = 1; k <= 8; ++k) {
            // on_plus: sum of multiplicities times dims over u^k = N^k
            std::vector<int> letters(k, 0);
            FusionElement e = decompose_power(on, letters);
            Int total = 0;
            for (const auto& [lab, mult] : e.terms) total += mult * dim_on(lab[0], N);
            CHECK(total == int_pow(N, k));
        }
        for (int k = 1; k <= 6; ++k) {
            // un_plus: alternating word u (x) u-bar (x) ...
            std::vector<int> letters;
            for (int i = 0; i < k; ++i) letters.push_back(i % 2);
            FusionElement e = decompose_power(un, letters);
            Int total = 0;
            for (const auto& [lab, mult] : e.terms) total += mult * dim_un(lab, N);
            CHECK(total == int_pow(N, k));
        }
    }
    CHECK(dim_on(0, 3) == 1);
    CHECK(dim_on(1, 3) == 3);
    CHECK(dim_on(2, 3) == 8);
    CHECK(dim_un({0}, 3) == 3);
    CHECK(dim_un({0, 1}, 3) == 8);  // u u-bar minus the trivial part
}

TEST_CASE("label validation") {
    FusionRing on{FusionRing::Kind::on_plus};
    CHECK_THROWS_AS(fuse(on, {0, 1}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(fuse(on, {-1}, {1}), std::invalid_argument);
    FusionRing un{FusionRing::Kind::un_plus};
    CHECK_THROWS_AS(fuse(un, {2}, {0}), std::invalid_argument);
    FusionRing hs{FusionRing::Kind::hs_plus, 3};
    CHECK_THROWS_AS(fuse(hs, {3}, {0}), std::invalid_argument);
}
