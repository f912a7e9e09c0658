#pragma once

// Gram and Weingarten matrices over partition bases, Haar integration of
// monomials in matrix entries, Gram determinants (both direct and via the
// known product formulas), and the 1/N expansion of the Weingarten function.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqg/categories.hpp"
#include "eqg/linmap.hpp"
#include "eqg/matrix.hpp"
#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

struct SingularGram : std::runtime_error {
    explicit SingularGram(const std::string& what) : std::runtime_error(what) {}
};

inline std::vector<Partition> category_basis(const CategorySpec& spec, const ColorWord& up,
                                             const ColorWord& lo,
                                             int point_bound = kDefaultPointBound) {
    return enumerate_partitions(up, lo, predicate(spec), point_bound);
}

inline IMatrix gram_int(const std::vector<Partition>& basis, const Int& N) {
    int n = (int)basis.size();
    IMatrix g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            g(a, b) = int_pow(N, join(basis[a], basis[b]).num_blocks());
            g(b, a) = g(a, b);
        }
    return g;
}

inline QMatrix gram(const std::vector<Partition>& basis, const Int& N) {
    IMatrix g = gram_int(basis, N);
    QMatrix q(g.rows(), g.cols());
    for (int a = 0; a < g.rows(); ++a)
        for (int b = 0; b < g.cols(); ++b) q(a, b) = Rat(g(a, b));
    return q;
}

// G = A L with A(pi,tau) = [tau >= pi] and L(tau,sigma) = N^(falling)[tau >= sigma]:
// counting functions constant on pi v sigma blocks by their kernel tau.
struct GramFactorization {
    QMatrix A;  // 0/1, upper unitriangular when the basis is sorted coarser-first
    QMatrix L;
};

inline GramFactorization gram_factorization(const std::vector<Partition>& basis, const Int& N) {
    int n = (int)basis.size();
    GramFactorization f{QMatrix(n, n), QMatrix(n, n)};
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool geq = leq(basis[a], basis[b]);  // basis[b] coarsens basis[a]
            f.A(a, b) = geq ? 1 : 0;
            f.L(a, b) = leq(basis[b], basis[a]) ? Rat(falling(N, basis[a].num_blocks())) : Rat(0);
        }
    return f;
}

inline QMatrix weingarten(const std::vector<Partition>& basis, const Int& N,
                          bool quasi = false) {
    QMatrix g = gram(basis, N);
    if (quasi) return quasi_inverse(g);
    try {
        return inverse(g);
    } catch (const std::domain_error&) {
        throw SingularGram("Gram matrix is singular at N=" + N.get_str() +
                           "; rerun with the pseudoinverse enabled");
    }
}

// Haar integral of a degree-k monomial in the matrix entries, row indices i,
// column indices j, with entry conjugations encoded by the word w (white =
// plain, black = conjugate). The basis must be D(empty, w).
inline Rat integrate(const std::vector<Partition>& basis, const MultiIndex& i,
                     const MultiIndex& j, const Int& N, bool quasi = false) {
    QMatrix w = weingarten(basis, N, quasi);
    int n = (int)basis.size();
    std::vector<char> di(n), dj(n);
    for (int a = 0; a < n; ++a) {
        di[a] = delta(basis[a], {}, i);
        dj[a] = delta(basis[a], {}, j);
    }
    Rat out = 0;
    for (int a = 0; a < n; ++a) {
        if (!di[a]) continue;
        for (int b = 0; b < n; ++b)
            if (dj[b]) out += w(a, b);
    }
    return out;
}

// Exact S_N integral of g_{i1 j1} ... g_{ik jk}.
inline Rat sn_integral(const MultiIndex& i, const MultiIndex& j, const Int& N) {
    if (i.size() != j.size()) throw std::invalid_argument("sn_integral: arity mismatch");
    int k = (int)i.size();
    Partition ki = kernel({}, i, {}, uncolored(k));
    Partition kj = kernel({}, j, {}, uncolored(k));
    if (!(ki == kj)) return 0;
    Int b = ki.num_blocks();
    if (N < b) return 0;
    return Rat(factorial(N - b)) / Rat(factorial(N));
}

// Moment of the truncated character chi_s = sum_{i<=s} u_ii at dimension N:
// sum over the basis of W_N(pi,sigma) s^{|pi v sigma|} = Tr(W_{N} G_{s}).
inline Rat truncated_moment(const std::vector<Partition>& basis, const Int& N, const Int& s,
                            bool quasi = false) {
    QMatrix w = weingarten(basis, N, quasi);
    QMatrix gs = gram(basis, s);
    Rat out = 0;
    for (int a = 0; a < (int)basis.size(); ++a)
        for (int b = 0; b < (int)basis.size(); ++b) out += w(a, b) * gs(a, b);
    return out;
}

// N -> infinity moment of the (full) character: the number of diagrams.
inline Int asymptotic_moment(const CategorySpec& spec, const ColorWord& w,
                             int point_bound = kDefaultPointBound) {
    return (Int)category_basis(spec, {}, w, point_bound).size();
}

inline Int gram_det(const std::vector<Partition>& basis, const Int& N) {
    return det_bareiss(gram_int(basis, N));
}

// Fixed point space dimension: rank of the Gram matrix of the T_pi.
inline int fix_space_dim(const std::vector<Partition>& basis, const Int& N) {
    return rank(gram(basis, N));
}

// ---- closed-form Gram determinants ----------------------------------------

namespace detail {

using Shape = std::vector<int>;  // weakly decreasing row lengths

inline void shapes_of(int n, int maxrow, Shape& cur, std::vector<Shape>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int r = std::min(n, maxrow); r >= 1; --r) {
        cur.push_back(r);
        shapes_of(n - r, r, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Shape> young_shapes(int n) {
    std::vector<Shape> out;
    Shape cur;
    shapes_of(n, n, cur, out);
    return out;
}

// number of standard Young tableaux, hook length formula
inline Int syt_count(const Shape& la) {
    int n = 0;
    for (int r : la) n += r;
    std::vector<int> colh(la.empty() ? 0 : la[0], 0);
    for (int i = (int)la.size() - 1; i >= 0; --i)
        for (int j = 0; j < la[i]; ++j)
            if (colh[j] == 0) colh[j] = i + 1;
    Int hooks = 1;
    for (int i = 0; i < (int)la.size(); ++i)
        for (int j = 0; j < la[i]; ++j) hooks *= (la[i] - j) + (colh[j] - i) - 1;
    Int f = factorial(n) / hooks;
    return f;
}

inline Shape doubled(const Shape& la) {
    Shape d;
    for (int r : la) d.push_back(2 * r);
    return d;
}

// product over cells of (N + 2j - i + shift), 1-based i, j
inline Int cell_product(const Shape& la, const Int& N, int shift) {
    Int p = 1;
    for (int i = 1; i <= (int)la.size(); ++i)
        for (int j = 1; j <= la[i - 1]; ++j) p *= N + 2 * j - i + shift;
    return p;
}

inline Int f_chebyshev_count(int k, int r) {  // f_{kr}
    return binomial(2 * k, k - r) - binomial(2 * k, k - r - 1);
}

inline Int d_chebyshev(int k, int r) { return f_chebyshev_count(k, r) - f_chebyshev_count(k, r + 1); }

// a + b sqrt(N), exact arithmetic
struct SqrtInt {
    Int a = 0, b = 0;
    Int N = 0;
    SqrtInt mul(const SqrtInt& o) const {
        return {a * o.a + b * o.b * N, a * o.b + b * o.a, N};
    }
    SqrtInt pow(long e) const {
        SqrtInt r{1, 0, N}, base = *this;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = r.mul(base);
            base = base.mul(base);
        }
        return r;
    }
};

inline SqrtInt chebyshev_sqrt(int r, const Int& N) {  // P_r(sqrt N)
    SqrtInt p0{1, 0, N}, p1{0, 1, N};
    if (r == 0) return p0;
    for (int t = 1; t < r; ++t) {
        SqrtInt p2{N * p1.b - p0.a, p1.a - p0.b, N};
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

inline Int chebyshev(int r, const Int& x) {  // P_r(x)
    Int p0 = 1, p1 = x;
    if (r == 0) return p0;
    for (int t = 1; t < r; ++t) {
        Int p2 = x * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

inline long block_exponent(const CategorySpec& spec, int k) {
    // sum over the one-row basis of 2|pi| - k
    long a = 0;
    for (const auto& pi : enumerate_partitions({}, uncolored(k), predicate(spec), 2 * k))
        a += 2 * pi.num_blocks() - k;
    return a;
}

inline Int det_on_closed(int k, const Int& N) {  // basis P2(k), empty for odd k
    if (k % 2) return 1;
    Int out = 1;
    for (const auto& la : young_shapes(k / 2))
        out *= int_pow(cell_product(la, N, -1), syt_count(doubled(la)).get_si());
    return out;
}

inline Int det_onplus_closed(int k, const Int& N) {  // basis NC2(k), empty for odd k
    if (k % 2) return 1;
    Int out = 1;
    for (int r = 1; r <= k / 2; ++r)
        out *= int_pow(chebyshev(r, N), d_chebyshev(k / 2, r).get_si());
    return out;
}

}  // namespace detail

// det of the Gram matrix over P(k) (Lindstrom): product of falling factorials.
inline Int det_formula_sn(int k, const Int& N) {
    Int out = 1;
    for (const auto& pi : enumerate_partitions({}, uncolored(k), {}, 2 * k))
        out *= falling(N, pi.num_blocks());
    return out;
}

// over P2(k): Young diagram product formula
inline Int det_formula_on(int k, const Int& N) { return detail::det_on_closed(k, N); }

// over NC2(k): Chebyshev product formula
inline Int det_formula_onplus(int k, const Int& N) { return detail::det_onplus_closed(k, N); }

// over NC(k): sqrt(N)^{a_k} prod P_r(sqrt N)^{d_kr}; always an integer.
inline Int det_formula_snplus(int k, const Int& N) {
    long a = detail::block_exponent({CatKind::NC}, k);
    if (a < 0) throw std::logic_error("det_formula_snplus: negative exponent");
    detail::SqrtInt acc = a % 2 == 0 ? detail::SqrtInt{int_pow(N, a / 2), 0, N}
                                     : detail::SqrtInt{0, int_pow(N, (a - 1) / 2), N};
    for (int r = 1; r <= k; ++r)
        acc = acc.mul(detail::chebyshev_sqrt(r, N).pow(detail::d_chebyshev(k, r).get_si()));
    if (acc.b != 0) throw std::logic_error("det_formula_snplus: result not an integer");
    return acc.a;
}

// over P12(k): N^{a_k} prod_r det_on(r, N-1)^{C(k,r)}
inline Int det_formula_bn(int k, const Int& N) {
    long a = detail::block_exponent({CatKind::P12}, k);
    Int out = int_pow(N, a);
    for (int r = 1; r <= k; ++r)
        out *= int_pow(detail::det_on_closed(r, N - 1), binomial(k, r).get_si());
    return out;
}

// over NC12(k): N^{a_k} prod_r P_r(N-1)^{sum_l C(k,2l) d_lr}
inline Int det_formula_bnplus(int k, const Int& N) {
    long a = detail::block_exponent({CatKind::NC12}, k);
    Int out = int_pow(N, a);
    for (int r = 1; r <= k / 2; ++r) {
        Int e = 0;
        for (int l = 1; l <= k / 2; ++l) e += binomial(k, 2 * l) * detail::d_chebyshev(l, r);
        out *= int_pow(detail::chebyshev(r, N - 1), e.get_si());
    }
    return out;
}

inline Int det_formula(const std::string& family, int k, const Int& N) {
    if (family == "sn") return det_formula_sn(k, N);
    if (family == "on") return det_formula_on(k, N);
    if (family == "onplus") return det_formula_onplus(k, N);
    if (family == "snplus") return det_formula_snplus(k, N);
    if (family == "bn") return det_formula_bn(k, N);
    if (family == "bnplus") return det_formula_bnplus(k, N);
    throw std::invalid_argument("unknown determinant family: " + family);
}

// basis paired with each closed form; gram_det over it must match det_formula
inline std::vector<Partition> det_formula_basis(const std::string& family, int k) {
    CatKind kind = family == "sn"       ? CatKind::P
                   : family == "on"     ? CatKind::P2
                   : family == "onplus" ? CatKind::NC2
                   : family == "snplus" ? CatKind::NC
                   : family == "bn"     ? CatKind::P12
                   : family == "bnplus" ? CatKind::NC12
                                        : throw std::invalid_argument("unknown family: " + family);
    return enumerate_partitions({}, uncolored(k), predicate({kind}), 2 * k);
}

// ---- fattening -------------------------------------------------------------

// Gram compatibility across the fattening bijection NC(k) ~ NC2(2k):
//   |fat(pi) v fat(sigma)| = k + 2|pi v sigma| - |pi| - |sigma|.
inline bool gram_fatten_check(int k, const Int& n) {
    auto ncs = enumerate_partitions({}, uncolored(k), predicate({CatKind::NC}), 2 * k);
    for (const auto& pi : ncs)
        for (const auto& sigma : ncs) {
            Int lhs = int_pow(n, join(fatten(pi), fatten(sigma)).num_blocks());
            long e = k + 2 * join(pi, sigma).num_blocks() - pi.num_blocks() - sigma.num_blocks();
            if (lhs != int_pow(n, e)) return false;
        }
    return true;
}

// ---- 1/N expansion ---------------------------------------------------------

// Signed path counts K_g: paths pi = t0 != t1 != ... != tr = sigma through the
// basis, signed by (-1)^r, grouped by geodesicity defect
//   g = sum d(t_{i-1}, t_i) - d(pi, sigma).
// Defects come in half-integer steps; keys are 2g.
inline std::map<long, Int> weingarten_expansion(const std::vector<Partition>& basis, int a, int b,
                                                long g2_max) {
    std::map<long, Int> K;
    int n = (int)basis.size();
    std::vector<std::vector<long>> d2(n, std::vector<long>(n, 0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Rat d = Rat(2) * distance(basis[x], basis[y]);
            d2[x][y] = d.get_num().get_si();
        }
    // depth-first over paths; a length-r path has sum >= r (each step >= 1/2),
    // so the defect bound caps the length
    long base = d2[a][b];
    std::function<void(int, long, int)> walk = [&](int cur, long sum2, int r) {
        if (cur == b) {
            long g2 = sum2 - base;
            if (g2 <= g2_max) K[g2] += (r % 2 ? -1 : 1);
        }
        for (int nxt = 0; nxt < n; ++nxt) {
            if (nxt == cur) continue;
            long s2 = sum2 + d2[cur][nxt];
            if (s2 + d2[nxt][b] - base > g2_max) continue;
            walk(nxt, s2, r + 1);
        }
    };
    walk(a, 0, 0);
    return K;
}

// Compare the truncated expansion against the exact Weingarten entry:
//   W(pi,sigma) = N^{|pi v sigma| - |pi| - |sigma|} sum_g K_g N^{-g}
// should approximate the exact value up to O(N^{lead - g_max - 1/2}).
inline bool weingarten_expansion_check(const std::vector<Partition>& basis, int a, int b,
                                       long g2_max, const Int& N) {
    auto K = weingarten_expansion(basis, a, b, g2_max);
    long lead = join(basis[a], basis[b]).num_blocks() - basis[a].num_blocks() -
                basis[b].num_blocks();
    // all defects are integers: 2*sum d(t_{i-1},t_i) == |pi|+|sigma| == 2*d(pi,sigma) mod 2
    Rat partial = 0;
    Int ksum = 1;
    for (const auto& [g2, c] : K) {
        if (g2 % 2 != 0) return false;
        partial += Rat(c) * rat_pow(Rat(N), lead - g2 / 2);
        ksum += abs(c);
    }
    Rat exact = weingarten(basis, N)(a, b);
    Rat err = exact - partial;
    if (err < 0) err = -err;
    // tail starts at defect g_max+1; generous constant on the leading tail term
    Rat bound = Rat(4 * ksum * Int((long)basis.size() + 1) * Int((long)basis.size() + 1)) *
                rat_pow(Rat(N), lead - g2_max / 2 - 1);
    return err <= bound;
}

}  // namespace eqg
