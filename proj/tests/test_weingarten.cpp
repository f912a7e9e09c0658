#include <catch2/catch_amalgamated.hpp>

#include "eqg/weingarten.hpp"

using namespace eqg;

namespace {

std::vector<Partition> basis_of(CatKind kind, int k) {
    return category_basis({kind}, {}, uncolored(k));
}

bool is_identity(const QMatrix& m) {
    for (int a = 0; a < m.rows(); ++a)
        for (int b = 0; b < m.cols(); ++b)
            if (m(a, b) != (a == b ? 1 : 0)) return false;
    return true;
}

QMatrix mul(const QMatrix& a, const QMatrix& b) {
    QMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Rat s = 0;
            for (int t = 0; t < a.cols(); ++t) s += a(i, t) * b(t, j);
            out(i, j) = s;
        }
    return out;
}

}  // namespace

TEST_CASE("gram matrix anchors") {
    auto b = basis_of(CatKind::P, 2);  // two partitions: 1|2 and 12
    REQUIRE(b.size() == 2);
    IMatrix g = gram_int(b, 3);
    // diagonal N^2 resp. N, off-diagonal N (join is the one-block partition)
    std::multiset<Int> vals{g(0, 0), g(0, 1), g(1, 0), g(1, 1)};
    CHECK(vals == std::multiset<Int>{9, 3, 3, 3});
}

TEST_CASE("gram factorization G = A L with triangular factors") {
    for (int k : {2, 3, 4}) {
        auto b = basis_of(CatKind::P, k);
        for (Int N : {Int(3), Int(5)}) {
            auto f = gram_factorization(b, N);
            CHECK(mul(f.A, f.L) == gram(b, N));
            // A is 0/1 with unit diagonal
            for (int a = 0; a < (int)b.size(); ++a) {
                CHECK(f.A(a, a) == 1);
                for (int c = 0; c < (int)b.size(); ++c)
                    CHECK((f.A(a, c) == 0 || f.A(a, c) == 1));
            }
            // det G = product of the diagonal of L = prod falling(N,|pi|)
            Int expect = 1;
            for (const auto& p : b) expect *= falling(N, p.num_blocks());
            CHECK(gram_det(b, N) == expect);
        }
    }
}

TEST_CASE("weingarten inverts the gram matrix") {
    for (CatKind kind : {CatKind::P, CatKind::P2, CatKind::NC, CatKind::NC2, CatKind::Peven}) {
        for (int k : {2, 4}) {
            auto b = basis_of(kind, k);
            if (b.empty()) continue;
            Int N = 7;
            CHECK(is_identity(mul(weingarten(b, N), gram(b, N))));
        }
    }
}

TEST_CASE("singular gram: exception and quasi-inverse") {
    auto b = basis_of(CatKind::P, 2);
    CHECK_THROWS_AS(weingarten(b, 1), SingularGram);
    QMatrix w = weingarten(b, 1, true);
    QMatrix g = gram(b, 1);
    CHECK(mul(mul(g, w), g) == g);
}

TEST_CASE("integrate agrees with the symmetric group formula") {
    for (int k : {1, 2, 3}) {
        auto b = basis_of(CatKind::P, k);
        for (Int N : {Int(3), Int(4)}) {
            MultiIndex i(k, 0), j(k, 0);
            auto next = [&](MultiIndex& m) {
                for (int p = k - 1; p >= 0; --p) {
                    if (++m[p] < N.get_si()) return true;
                    m[p] = 0;
                }
                return false;
            };
            do {
                MultiIndex jj(k, 0);
                do {
                    CHECK(integrate(b, i, jj, N) == sn_integral(i, jj, N));
                } while (next(jj));
            } while (next(i));
        }
    }
}

TEST_CASE("sn integral values") {
    CHECK(sn_integral({0}, {0}, 3) == Rat(1, 3));
    CHECK(sn_integral({0}, {1}, 3) == Rat(1, 3));  // only the kernels matter
    CHECK(sn_integral({0, 1}, {0, 1}, 3) == Rat(1, 6));
    CHECK(sn_integral({0, 1}, {2, 0}, 3) == Rat(1, 6));
    CHECK(sn_integral({0, 0}, {0, 1}, 3) == 0);    // mismatched kernels
    CHECK(sn_integral({0, 1}, {0, 1}, 1) == 0);    // N below the block count
}

TEST_CASE("orthogonal group second moment") {
    // int u11^2 over O_N = 1/N
    auto b = category_basis({CatKind::P2}, {}, uncolored(2));
    for (Int N : {Int(3), Int(4), Int(7)})
        CHECK(integrate(b, {0, 0}, {0, 0}, N) == Rat(1, N));
}

TEST_CASE("truncated moments and fixed point dimensions") {
    // chi_s of S_N at k=1: E[#fixed points among the first s] = s/N
    auto b1 = basis_of(CatKind::P, 1);
    CHECK(truncated_moment(b1, 5, 2) == Rat(2, 5));
    // s = N gives the full character; its moment is the fixed space dimension
    for (CatKind kind : {CatKind::P, CatKind::P2, CatKind::Peven}) {
        for (int k : {2, 3, 4}) {
            auto b = basis_of(kind, k);
            if (b.empty()) continue;
            Int N = k + 2;  // large enough for linear independence
            Rat m = truncated_moment(b, N, N);
            CHECK(m == Rat((long)b.size()));
            CHECK(fix_space_dim(b, N) == (int)b.size());
        }
    }
    // below the threshold the rank drops
    CHECK(fix_space_dim(basis_of(CatKind::P, 3), 1) < 5);
}

TEST_CASE("asymptotic moments count diagrams") {
    CHECK(asymptotic_moment({CatKind::P}, uncolored(4)) == 15);
    CHECK(asymptotic_moment({CatKind::NC2}, uncolored(6)) == 5);
    CHECK(asymptotic_moment({CatKind::P2}, uncolored(5)) == 0);
}

TEST_CASE("closed-form determinants match the bareiss computation") {
    const char* families[] = {"sn", "on", "onplus", "snplus", "bn", "bnplus"};
    for (const char* fam : families) {
        for (int k = 1; k <= 4; ++k) {
            auto b = det_formula_basis(fam, k);
            for (Int N : {Int(5), Int(7)}) {
                INFO(fam << " k=" << k << " N=" << N.get_str());
                CHECK(det_formula(fam, k, N) == gram_det(b, N));
            }
        }
    }
}

TEST_CASE("determinant anchor values") {
    // pairings on 4 points under the one-parameter deformation N^2(N^2-1)
    auto nc2 = det_formula_basis("onplus", 4);
    for (Int N : {Int(2), Int(5)})
        CHECK(gram_det(nc2, N) == N * N * (N * N - 1));
    // noncrossing partitions of 3 points: N^5 (N-1)^4 (N-2)
    auto nc3 = det_formula_basis("snplus", 3);
    for (Int N : {Int(3), Int(5)}) {
        Int e = int_pow(N, 5) * int_pow(N - 1, 4) * (N - 2);
        CHECK(gram_det(nc3, N) == e);
    }
}

TEST_CASE("fattening identity for gram matrices") {
    CHECK(gram_fatten_check(2, 3));
    CHECK(gram_fatten_check(3, 2));
    CHECK(gram_fatten_check(4, 3));
}

TEST_CASE("large-N expansion of the weingarten function") {
    auto b = basis_of(CatKind::P, 2);
    // leading coefficients are the mobius function for comparable pairs
    for (int a = 0; a < (int)b.size(); ++a)
        for (int c = 0; c < (int)b.size(); ++c) {
            auto ex = weingarten_expansion(b, a, c, 6);
            if (leq(b[a], b[c])) {
                REQUIRE(ex.count(0) == 1);
                CHECK(ex.at(0) == mobius(b[a], b[c]));
            }
            CHECK(weingarten_expansion_check(b, a, c, 8, 50));
        }
    // P(3): K0 = mu on all comparable pairs
    auto b3 = basis_of(CatKind::P, 3);
    for (int a = 0; a < (int)b3.size(); ++a)
        for (int c = 0; c < (int)b3.size(); ++c) {
            if (!leq(b3[a], b3[c])) continue;
            auto ex = weingarten_expansion(b3, a, c, 4);
            REQUIRE(ex.count(0) == 1);
            CHECK(ex.at(0) == mobius(b3[a], b3[c]));
        }
}
