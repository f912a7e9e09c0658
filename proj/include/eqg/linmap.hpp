#pragma once

// The linear maps T_pi attached to partitions, acting on tensor powers of
// C^N, in sparse form, together with their twisted (signed) versions and the
// Moebius expansion relating the two.

#include <map>
#include <utility>
#include <vector>

#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

using MultiIndex = std::vector<int>;  // entries in 0..N-1

// delta_pi(i, j) = 1 iff ker(i/j) >= pi, i.e. i/j is constant on each block.
inline bool delta(const Partition& pi, const MultiIndex& i, const MultiIndex& j) {
    if ((int)i.size() != pi.k() || (int)j.size() != pi.l())
        throw std::invalid_argument("delta: index arity mismatch");
    std::vector<int> rep(pi.num_blocks(), -1);
    for (int p = 0; p < pi.points(); ++p) {
        int v = p < pi.k() ? i[p] : j[p - pi.k()];
        int b = pi.rgs[p];
        if (rep[b] == -1) rep[b] = v;
        else if (rep[b] != v) return false;
    }
    return true;
}

// Twisted version: the signature of ker(i/j) when it refines-coarsens
// correctly, else 0. Only meaningful for even pi.
inline int delta_twisted(const Partition& pi, const MultiIndex& i, const MultiIndex& j) {
    if (!delta(pi, i, j)) return 0;
    Partition tau = kernel(i, j, pi.upper, pi.lower);
    return signature(tau);
}

// Sparse operator (C^N)^{tensor k} -> (C^N)^{tensor l}; keys are (out, in).
struct SparseOp {
    int N = 0;
    ColorWord upper, lower;  // input / output colors, matching the partitions
    std::map<std::pair<MultiIndex, MultiIndex>, Rat> entries;

    int k() const { return (int)upper.size(); }
    int l() const { return (int)lower.size(); }
};

namespace detail {
inline bool next_index(MultiIndex& m, int N) {
    for (int p = (int)m.size() - 1; p >= 0; --p) {
        if (++m[p] < N) return true;
        m[p] = 0;
    }
    return false;
}
}  // namespace detail

template <typename Coeff>
SparseOp build_tpi(const Partition& pi, int N, Coeff coeff) {
    SparseOp op;
    op.N = N;
    op.upper = pi.upper;
    op.lower = pi.lower;
    MultiIndex i(pi.k(), 0);
    do {
        MultiIndex j(pi.l(), 0);
        do {
            if (delta(pi, i, j)) {
                Rat c = coeff(i, j);
                if (c != 0) op.entries[{j, i}] = c;
            }
        } while (detail::next_index(j, N));
    } while (detail::next_index(i, N));
    return op;
}

inline SparseOp tpi(const Partition& pi, int N) {
    return build_tpi(pi, N, [](const MultiIndex&, const MultiIndex&) { return Rat(1); });
}

inline SparseOp tpi_twisted(const Partition& pi, int N) {
    return build_tpi(pi, N, [&pi](const MultiIndex& i, const MultiIndex& j) {
        return Rat(delta_twisted(pi, i, j));
    });
}

inline SparseOp op_scale(SparseOp op, const Rat& c) {
    if (c == 0) {
        op.entries.clear();
        return op;
    }
    for (auto& [k, v] : op.entries) v *= c;
    return op;
}

inline SparseOp op_add(const SparseOp& a, const SparseOp& b) {
    if (a.N != b.N || a.upper != b.upper || a.lower != b.lower)
        throw std::invalid_argument("op_add: shape mismatch");
    SparseOp out = a;
    for (const auto& [k, v] : b.entries) {
        auto& e = out.entries[k];
        e += v;
        if (e == 0) out.entries.erase(k);
    }
    return out;
}

inline SparseOp op_tensor(const SparseOp& a, const SparseOp& b) {
    if (a.N != b.N) throw std::invalid_argument("op_tensor: dimension mismatch");
    SparseOp out;
    out.N = a.N;
    out.upper = a.upper;
    out.upper.insert(out.upper.end(), b.upper.begin(), b.upper.end());
    out.lower = a.lower;
    out.lower.insert(out.lower.end(), b.lower.begin(), b.lower.end());
    for (const auto& [ka, va] : a.entries)
        for (const auto& [kb, vb] : b.entries) {
            MultiIndex out_j = ka.first, out_i = ka.second;
            out_j.insert(out_j.end(), kb.first.begin(), kb.first.end());
            out_i.insert(out_i.end(), kb.second.begin(), kb.second.end());
            out.entries[{out_j, out_i}] = va * vb;
        }
    return out;
}

// a after b: takes the input space of b to the output space of a.
inline SparseOp op_compose(const SparseOp& a, const SparseOp& b) {
    if (a.N != b.N || a.upper != b.lower)
        throw std::invalid_argument("op_compose: middle space mismatch");
    SparseOp out;
    out.N = a.N;
    out.upper = b.upper;
    out.lower = a.lower;
    std::map<MultiIndex, std::vector<std::pair<MultiIndex, Rat>>> by_mid;
    for (const auto& [k, v] : b.entries) by_mid[k.first].push_back({k.second, v});
    for (const auto& [ka, va] : a.entries) {
        auto it = by_mid.find(ka.second);
        if (it == by_mid.end()) continue;
        for (const auto& [in, vb] : it->second) {
            auto& e = out.entries[{ka.first, in}];
            e += va * vb;
            if (e == 0) out.entries.erase({ka.first, in});
        }
    }
    return out;
}

inline SparseOp op_adjoint(const SparseOp& a) {
    SparseOp out;
    out.N = a.N;
    out.upper = word_complement(a.lower);
    out.lower = word_complement(a.upper);
    for (const auto& [k, v] : a.entries) out.entries[{k.second, k.first}] = v;
    return out;
}

inline bool op_equal(const SparseOp& a, const SparseOp& b) {
    return a.N == b.N && a.k() == b.k() && a.l() == b.l() && a.entries == b.entries;
}

// Dimension of the fixed point space Fix(v^{tensor w}) = rank of the span of
// the T_pi, pi in the basis: rational rank of their Gram matrix of inner
// products <T_pi, T_sigma> = N^{|pi v sigma|}. Declared in weingarten.hpp.

// Expansion of the twisted map over untwisted ones:
//   Tbar_pi = sum over coarsenings sigma of alpha_sigma T_sigma,
//   alpha_sigma = sum over pi <= tau <= sigma of eps(tau) mu(tau, sigma).
inline std::vector<std::pair<Partition, Rat>> twist_expansion(const Partition& pi) {
    Partition top(pi.upper, pi.lower, std::vector<int>(pi.points(), 0));
    std::vector<std::pair<Partition, Rat>> out;
    for (const auto& sigma : interval(pi, top)) {
        Rat alpha = 0;
        for (const auto& tau : interval(pi, sigma)) alpha += Rat(signature(tau)) * mobius(tau, sigma);
        if (alpha != 0) out.push_back({sigma, alpha});
    }
    return out;
}

// Check Tbar_pi = sum alpha_sigma T_sigma at a concrete dimension N.
inline bool mobius_expansion_check(const Partition& pi, int N) {
    SparseOp lhs = tpi_twisted(pi, N);
    SparseOp rhs = tpi(pi, N);
    rhs.entries.clear();
    for (const auto& [sigma, alpha] : twist_expansion(pi))
        rhs = op_add(rhs, op_scale(tpi(sigma, N), alpha));
    return op_equal(lhs, rhs);
}

}  // namespace eqg
