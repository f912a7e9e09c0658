#pragma once

// Moment/cumulant calculus in both the classical (all set partitions) and
// free (noncrossing partitions) flavors, the catalog of limit laws as
// cumulant sequences, and the Bercovici-Pata comparison.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqg/categories.hpp"
#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

enum class Flavor { classical, free_ };

// values[i] is the (i+1)-st moment / cumulant
using MomentSeq = std::vector<Rat>;

struct CumulantSeq {
    std::vector<Rat> values;
    Flavor flavor = Flavor::classical;
};

namespace detail {

inline const std::vector<Partition>& lattice(Flavor flavor, int n) {
    static std::map<std::pair<int, int>, std::vector<Partition>> memo;
    auto key = std::make_pair((int)flavor, n);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    PartitionPred pred;
    if (flavor == Flavor::free_) pred = [](const Partition& p) { return is_noncrossing(p); };
    auto parts = enumerate_partitions({}, uncolored(n), pred, 2 * n + 2);
    return memo.emplace(key, std::move(parts)).first->second;
}

// product over the blocks of pi of seq[|block|]
inline Rat block_product(const Partition& pi, const std::vector<Rat>& seq) {
    Rat p = 1;
    for (const auto& b : pi.blocks()) p *= seq[b.size() - 1];
    return p;
}

}  // namespace detail

// M_n = sum over the lattice of products of cumulants over blocks.
inline MomentSeq cumulants_to_moments(const CumulantSeq& c) {
    MomentSeq m(c.values.size());
    for (int n = 1; n <= (int)c.values.size(); ++n) {
        Rat s = 0;
        for (const auto& pi : detail::lattice(c.flavor, n))
            s += detail::block_product(pi, c.values);
        m[n - 1] = s;
    }
    return m;
}

// Inverse, computed recursively: the one-block partition contributes c_n.
inline CumulantSeq moments_to_cumulants(const MomentSeq& m, Flavor flavor) {
    CumulantSeq c;
    c.flavor = flavor;
    c.values.resize(m.size());
    for (int n = 1; n <= (int)m.size(); ++n) {
        Rat rest = 0;
        for (const auto& pi : detail::lattice(flavor, n)) {
            if (pi.num_blocks() == 1) continue;
            rest += detail::block_product(pi, c.values);
        }
        c.values[n - 1] = m[n - 1] - rest;
    }
    return c;
}

// ---- laws -------------------------------------------------------------------

struct LawSpec {
    enum class Kind {
        dirac, gaussian, poisson, semicircle, free_poisson, bessel, free_bessel,
        shifted, category_weighted
    };
    Kind kind = Kind::dirac;
    Rat t = 0;       // main parameter (point mass for dirac, shift for shifted)
    int s = 2;       // bessel root-of-unity order
    CategorySpec spec;  // category_weighted
    std::vector<LawSpec> base;  // shifted: base law as single element

    bool is_free() const {
        return kind == Kind::semicircle || kind == Kind::free_poisson ||
               kind == Kind::free_bessel;
    }
};

// Closed-form cumulants of the named laws. For category_weighted laws the
// cumulants of the limiting character are t when the one-block partition of
// size n lies in the category, 0 otherwise (valid for uniform categories).
inline CumulantSeq law_cumulants(const LawSpec& law, int n, Flavor flavor) {
    CumulantSeq c;
    c.flavor = flavor;
    c.values.assign(n, 0);
    auto one_block = [](int sz) {
        return Partition({}, uncolored(sz), std::vector<int>(sz, 0));
    };
    switch (law.kind) {
        case LawSpec::Kind::dirac: {
            MomentSeq m(n);
            for (int i = 1; i <= n; ++i) m[i - 1] = rat_pow(law.t, i);
            return moments_to_cumulants(m, flavor);
        }
        case LawSpec::Kind::gaussian:
        case LawSpec::Kind::semicircle:
            if (n >= 2) c.values[1] = law.t;
            return c;
        case LawSpec::Kind::poisson:
        case LawSpec::Kind::free_poisson:
            for (auto& v : c.values) v = law.t;
            return c;
        case LawSpec::Kind::bessel:
        case LawSpec::Kind::free_bessel:
            for (int i = 1; i <= n; ++i)
                if (i % law.s == 0) c.values[i - 1] = law.t;
            return c;
        case LawSpec::Kind::category_weighted:
            for (int i = 1; i <= n; ++i)
                if (contains(law.spec, one_block(i))) c.values[i - 1] = law.t;
            return c;
        case LawSpec::Kind::shifted: {
            // shift adds t to the first cumulant in either flavor
            CumulantSeq base = law_cumulants(law.base.at(0), n, flavor);
            if (n >= 1) base.values[0] += law.t;
            return base;
        }
    }
    throw std::logic_error("law_cumulants: unhandled kind");
}

inline MomentSeq law_moments(const LawSpec& law, int n) {
    if (n > 16) throw std::invalid_argument("law_moments: order capped at 16");
    if (law.kind == LawSpec::Kind::dirac) {
        MomentSeq m(n);
        for (int i = 1; i <= n; ++i) m[i - 1] = rat_pow(law.t, i);
        return m;
    }
    if (law.kind == LawSpec::Kind::category_weighted) {
        // weighted diagram count: sum of t^{|pi|} over the one-row basis
        MomentSeq m(n);
        auto pred = predicate(law.spec);
        for (int i = 1; i <= n; ++i) {
            Rat s = 0;
            for (const auto& pi : enumerate_partitions({}, uncolored(i), pred, 2 * n + 2))
                s += rat_pow(law.t, pi.num_blocks());
            m[i - 1] = s;
        }
        return m;
    }
    if (law.kind == LawSpec::Kind::shifted) {
        // binomial shift of the base moments by the constant t
        MomentSeq base = law_moments(law.base.at(0), n);
        std::vector<Rat> full = {1};
        for (const auto& v : base) full.push_back(v);
        MomentSeq m(n);
        for (int i = 1; i <= n; ++i) {
            Rat s = 0;
            for (int r = 0; r <= i; ++r)
                s += Rat(binomial(i, r)) * full[r] * rat_pow(law.t, i - r);
            m[i - 1] = s;
        }
        return m;
    }
    Flavor fl = law.is_free() ? Flavor::free_ : Flavor::classical;
    return cumulants_to_moments(law_cumulants(law, n, fl));
}

// ---- Bercovici-Pata ----------------------------------------------------------

struct BpReport {
    bool passed = true;
    int first_failure = 0;  // order of first mismatch, 0 if none
    std::vector<Rat> classical_cumulants, free_cumulants;
};

// classical cumulants of the classical-side weighted counts must equal the
// free cumulants of the free-side weighted counts, order by order.
inline BpReport bp_check(const CategorySpec& classical_spec, const CategorySpec& free_spec,
                         const Rat& t, int n_max) {
    LawSpec lc, lf;
    lc.kind = lf.kind = LawSpec::Kind::category_weighted;
    lc.t = lf.t = t;
    lc.spec = classical_spec;
    lf.spec = free_spec;
    // the free side must be the noncrossing part of the classical side
    auto pc = predicate(classical_spec);
    auto pf = predicate(free_spec);
    for (int i = 1; i <= n_max; ++i)
        for (const auto& pi : enumerate_partitions({}, uncolored(i), {}, 2 * n_max + 2)) {
            bool in_free = pf(pi), want = pc(pi) && is_noncrossing(pi);
            if (in_free != want)
                throw std::invalid_argument("bp_check: free side is not classical side /\\ NC");
        }
    BpReport rep;
    rep.classical_cumulants =
        moments_to_cumulants(law_moments(lc, n_max), Flavor::classical).values;
    rep.free_cumulants = moments_to_cumulants(law_moments(lf, n_max), Flavor::free_).values;
    for (int i = 0; i < n_max; ++i)
        if (rep.classical_cumulants[i] != rep.free_cumulants[i]) {
            rep.passed = false;
            rep.first_failure = i + 1;
            break;
        }
    return rep;
}

// ---- small exact/analytic helpers --------------------------------------------

// probability that a uniform permutation of N points has no fixed point:
// the inclusion-exclusion partial sum of (-1)^r / r!.
inline Rat derangement_exact(const Int& N) {
    Rat s = 0;
    Int sign = 1;
    for (Int r = 0; r <= N; ++r) {
        s += Rat(sign) / Rat(factorial(r));
        sign = -sign;
    }
    return s;
}

// rational enclosure of exp(-t) t^j / j!; width shrinks with `terms`.
struct RatInterval {
    Rat lo, hi;
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

inline RatInterval poisson_pmf(const Rat& t, int j, int terms = 30) {
    if (t < 0) throw std::invalid_argument("poisson_pmf: t must be nonnegative");
    // exp(-t) = sum (-t)^n / n!; once n > t the terms decrease in magnitude
    // and consecutive partial sums bracket the limit
    long M = terms + Int(t.get_num() / t.get_den()).get_si() + 2;
    Rat term = 1, partial = 0, prev = 0;
    for (long n = 0; n <= M; ++n) {
        prev = partial;
        partial += (n % 2 ? -term : term);
        term = term * t / (n + 1);
    }
    Rat lo = std::min(prev, partial), hi = std::max(prev, partial);
    Rat scale = rat_pow(t, j) / Rat(factorial((unsigned long)j));
    return {lo * scale, hi * scale};
}

}  // namespace eqg
