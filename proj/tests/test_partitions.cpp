#include <catch2/catch_amalgamated.hpp>

#include "eqg/partition.hpp"

using namespace eqg;

namespace {
Partition lower_kernel(const std::vector<int>& ids) {
    return kernel({}, ids, {}, uncolored((int)ids.size()));
}
}  // namespace

TEST_CASE("color words parse and print") {
    CHECK(word_str(word_parse("obo")) == "obo");
    CHECK(word_parse("").empty());
    CHECK_THROWS_AS(word_parse("ox"), std::invalid_argument);
    CHECK(word_complement(word_parse("ob")) == word_parse("bo"));
}

TEST_CASE("canonical form is restricted growth") {
    Partition a = lower_kernel({7, 3, 7, 3});
    Partition b = lower_kernel({0, 1, 0, 1});
    CHECK(a == b);
    CHECK(a.rgs == std::vector<int>{0, 1, 0, 1});
    CHECK(a.num_blocks() == 2);
}

TEST_CASE("enumeration counts: Bell, Catalan, double factorial") {
    CHECK(enumerate_partitions({}, uncolored(1), {}).size() == 1);
    CHECK(enumerate_partitions({}, uncolored(4), {}).size() == 15);
    CHECK(enumerate_partitions({}, uncolored(5), {}).size() == 52);
    CHECK(enumerate_partitions({}, uncolored(6), {}).size() == 203);
    auto nc = [](const Partition& p) { return is_noncrossing(p); };
    CHECK(enumerate_partitions({}, uncolored(4), nc).size() == 14);
    CHECK(enumerate_partitions({}, uncolored(6), nc).size() == 132);
    auto pair = [](const Partition& p) { return is_pairing(p); };
    CHECK(enumerate_partitions({}, uncolored(6), pair).size() == 15);
    CHECK(enumerate_partitions({}, uncolored(8), pair).size() == 105);
    auto ncpair = [&](const Partition& p) { return is_pairing(p) && is_noncrossing(p); };
    CHECK(enumerate_partitions({}, uncolored(8), ncpair).size() == 14);
    // two-row split does not change the count, only the row labels
    CHECK(enumerate_partitions(uncolored(2), uncolored(2), {}).size() == 15);
}

TEST_CASE("enumeration bound guard") {
    CHECK_THROWS_AS(enumerate_partitions({}, uncolored(17), {}), std::invalid_argument);
    CHECK_NOTHROW(enumerate_partitions({}, uncolored(5), {}, 5));
}

TEST_CASE("lattice operations") {
    Partition fine = lower_kernel({0, 1, 2, 3});
    Partition cross = lower_kernel({0, 1, 0, 1});
    Partition nest = lower_kernel({0, 1, 1, 0});
    Partition one = lower_kernel({0, 0, 0, 0});
    CHECK(leq(fine, cross));
    CHECK(leq(cross, one));
    CHECK_FALSE(leq(cross, nest));
    CHECK(join(cross, nest) == one);
    CHECK(meet(cross, nest) == fine);
    CHECK(join(fine, cross) == cross);
    CHECK(distance(fine, one) == Rat(3, 2));
    CHECK(distance(cross, cross) == 0);
}

TEST_CASE("interval and Moebius function") {
    Partition fine = lower_kernel({0, 1, 2});
    Partition one = lower_kernel({0, 0, 0});
    auto iv = interval(fine, one);
    CHECK(iv.size() == 5);  // all of P(3)
    CHECK(mobius(fine, one) == 2);
    CHECK(mobius(fine, fine) == 1);
    Partition two = lower_kernel({0, 0, 1});
    CHECK(mobius(fine, two) == -1);
    CHECK(mobius(two, one) == -1);
    // P(4): mu(0, 1) = -6
    CHECK(mobius(lower_kernel({0, 1, 2, 3}), lower_kernel({0, 0, 0, 0})) == -6);
}

TEST_CASE("tensor, involution, rotation") {
    Partition a = identity_partition(word_parse("o"));
    Partition b = semicircle(Color::white);
    Partition t = tensor(a, b);
    CHECK(t.k() == 1);
    CHECK(t.l() == 3);
    CHECK(t.num_blocks() == 2);
    CHECK(involute(involute(t)) == t);
    CHECK(involute(t).k() == 3);
    CHECK(involute(t).upper == word_complement(t.lower));
    // rotation round trip
    Partition r = rotate(t, RotateDir::left);
    CHECK(rotate(r, RotateDir::right) == t);
    // flatten moves everything to the bottom row
    Partition f = flatten(involute(t));
    CHECK(f.k() == 0);
    CHECK(f.points() == t.points());
}

TEST_CASE("composition counts removed loops") {
    // cap over cup: the two middle points close into a circle
    Partition cup(uncolored(2), {}, {0, 0});   // P(2,0)
    Partition cap({}, uncolored(2), {0, 0});   // P(0,2)
    auto res = compose(cap, cup);
    CHECK(res.loops == 1);
    CHECK(res.result.points() == 0);
    // the other stacking order has an empty middle row: no loop
    auto side = compose(cup, cap);
    CHECK(side.loops == 0);
    CHECK(side.result.points() == 4);
    // identity composed with identity: no loops
    Partition id2 = identity_partition(uncolored(2));
    auto res2 = compose(id2, id2);
    CHECK(res2.loops == 0);
    CHECK(res2.result == id2);
    // color mismatch rejected
    Partition idw = identity_partition(word_parse("o"));
    Partition idb = identity_partition(word_parse("b"));
    CHECK_THROWS_AS(compose(idw, idb), std::invalid_argument);
}

TEST_CASE("kernel of index tuples") {
    Partition k = kernel({}, {4, 7, 4, 9}, {}, uncolored(4));
    CHECK(k == lower_kernel({0, 1, 0, 2}));
    Partition two_row = kernel({1, 2}, {2, 1}, uncolored(2), uncolored(2));
    CHECK(two_row.num_blocks() == 2);
    CHECK(two_row.rgs == std::vector<int>{0, 1, 1, 0});
}

TEST_CASE("noncrossing respects the circular order across rows") {
    // the swap wiring crosses even on the circle; the identity is planar
    Partition p(uncolored(2), uncolored(2), {0, 1, 1, 0});
    CHECK_FALSE(is_noncrossing(p));
    Partition q(uncolored(2), uncolored(2), {0, 1, 0, 1});
    CHECK(is_noncrossing(q));
    Partition cross = lower_kernel({0, 1, 0, 1});
    CHECK_FALSE(is_noncrossing(cross));
}

TEST_CASE("parity and block size predicates") {
    CHECK(is_even(lower_kernel({0, 0, 1, 1})));
    CHECK_FALSE(is_even(lower_kernel({0, 0, 1})));
    CHECK(is_pairing(lower_kernel({0, 1, 1, 0})));
    CHECK_FALSE(is_pairing(lower_kernel({0, 0, 0, 1})));
}

TEST_CASE("signature values") {
    // crossing pairing: one crossing, signature -1
    CHECK(signature(lower_kernel({0, 1, 0, 1})) == -1);
    CHECK(signature(lower_kernel({0, 1, 1, 0})) == 1);
    CHECK(signature(lower_kernel({0, 0})) == 1);
    CHECK(signature(lower_kernel({0, 0, 0, 0})) == 1);
    // 3-cycle pairing on 6 points: crossing count 3, odd
    CHECK(signature(lower_kernel({0, 1, 2, 0, 1, 2})) == -1);
    // two-row: the permutation partition from a 3-cycle read across rows
    Partition perm = kernel({1, 2, 3}, {2, 3, 1}, uncolored(3), uncolored(3));
    CHECK(signature(perm) == (pairing_crossings(perm) % 2 ? -1 : 1));
    CHECK_THROWS_AS(signature(lower_kernel({0, 0, 0})), std::invalid_argument);
}

TEST_CASE("signature equals crossing parity on all pairings of 6 and 8 points") {
    for (int n : {6, 8}) {
        for (const auto& p : enumerate_partitions(
                 {}, uncolored(n), [](const Partition& q) { return is_pairing(q); })) {
            CHECK(signature(p) == (pairing_crossings(p) % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("fattening is a bijection NC(k) -> NC2(2k)") {
    for (int k : {1, 2, 3, 4, 5}) {
        auto ncs = enumerate_partitions(
            {}, uncolored(k), [](const Partition& p) { return is_noncrossing(p); });
        std::set<Partition> images;
        for (const auto& p : ncs) {
            Partition f = fatten(p);
            CHECK(f.points() == 2 * k);
            CHECK(is_pairing(f));
            CHECK(is_noncrossing(f));
            CHECK(shrink(f) == p);
            images.insert(f);
        }
        CHECK(images.size() == ncs.size());
        auto nc2 = enumerate_partitions({}, uncolored(2 * k), [](const Partition& p) {
            return is_pairing(p) && is_noncrossing(p);
        });
        CHECK(images.size() == nc2.size());
    }
}

TEST_CASE("block structure accessors") {
    Partition p(uncolored(1), uncolored(3), {0, 1, 0, 1});
    auto blocks = p.blocks();
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == std::vector<int>{0, 2});
    CHECK(blocks[1] == std::vector<int>{1, 3});
    CHECK(p.k() == 1);
    CHECK(p.l() == 3);
}
