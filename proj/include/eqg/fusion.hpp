#pragma once

// Fusion rings of the free quantum groups, as pure combinatorics on labels:
//  - on_plus: labels are naturals, r_k (x) r_l = r_|k-l| + r_|k-l|+2 + ... + r_k+l
//  - un_plus: labels are words over the two-letter alphabet {a, b} (the free
//    monoid N*N), r_k (x) r_l = sum over k = xy, l = (y bar) z of r_xz
//  - hs_plus(s): labels are words over Z_s, with the inductive rule
//    p a_i (x) a_j q = p a_i a_j q + p a_{i+j} q + delta_{i+j,0} p (x) q

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqg/partition.hpp"
#include "eqg/rational.hpp"

namespace eqg {

struct FusionRing {
    enum class Kind { on_plus, un_plus, hs_plus };
    Kind kind = Kind::on_plus;
    int s = 0;  // hs_plus only; 0 = infinity (labels over Z)
    bool operator==(const FusionRing&) const = default;
};

// on_plus: {k}; un_plus: word of 0 (= a) / 1 (= b); hs_plus: word over Z_s.
using Label = std::vector<int>;

struct FusionElement {
    FusionRing ring;
    std::map<Label, Int> terms;  // label -> positive multiplicity

    void add(const Label& l, const Int& mult = 1) {
        auto& v = terms[l];
        v += mult;
        if (v == 0) terms.erase(l);
    }
};

inline void validate_label(const FusionRing& ring, const Label& l) {
    switch (ring.kind) {
        case FusionRing::Kind::on_plus:
            if (l.size() != 1 || l[0] < 0) throw std::invalid_argument("bad on_plus label");
            break;
        case FusionRing::Kind::un_plus:
            for (int c : l)
                if (c != 0 && c != 1) throw std::invalid_argument("bad un_plus label");
            break;
        case FusionRing::Kind::hs_plus:
            for (int c : l)
                if (ring.s > 0 && (c < 0 || c >= ring.s))
                    throw std::invalid_argument("bad hs_plus label");
            break;
    }
}

// conjugate label: k -> k; word -> reversed with letters swapped / negated
inline Label conjugate_label(const FusionRing& ring, const Label& l) {
    if (ring.kind == FusionRing::Kind::on_plus) return l;
    Label out(l.rbegin(), l.rend());
    for (int& c : out) {
        if (ring.kind == FusionRing::Kind::un_plus) c = 1 - c;
        else c = ring.s > 0 ? (ring.s - c) % ring.s : -c;
    }
    return out;
}

inline FusionElement fuse(const FusionRing& ring, const Label& a, const Label& b);

namespace detail {

inline FusionElement fuse_on_plus(const FusionRing& ring, int k, int l) {
    FusionElement out{ring, {}};
    for (int r = std::abs(k - l); r <= k + l; r += 2) out.add({r});
    return out;
}

inline FusionElement fuse_un_plus(const FusionRing& ring, const Label& k, const Label& l) {
    FusionElement out{ring, {}};
    // k = x y, l = (y bar) z
    for (size_t cut = 0; cut <= k.size(); ++cut) {
        Label x(k.begin(), k.begin() + cut), y(k.begin() + cut, k.end());
        Label ybar = conjugate_label(ring, y);
        if (ybar.size() > l.size()) continue;
        if (!std::equal(ybar.begin(), ybar.end(), l.begin())) continue;
        Label xz = x;
        xz.insert(xz.end(), l.begin() + ybar.size(), l.end());
        out.add(xz);
    }
    return out;
}

inline FusionElement fuse_hs_plus(const FusionRing& ring, const Label& a, const Label& b) {
    FusionElement out{ring, {}};
    if (a.empty() || b.empty()) {
        out.add(a.empty() ? b : a);
        return out;
    }
    // a = p a_i, b = a_j q
    Label p(a.begin(), a.end() - 1), q(b.begin() + 1, b.end());
    int i = a.back(), j = b.front();
    int ij = ring.s > 0 ? (i + j) % ring.s : i + j;
    Label concat = a;
    concat.insert(concat.end(), b.begin(), b.end());
    out.add(concat);
    Label merged = p;
    merged.push_back(ij);
    merged.insert(merged.end(), q.begin(), q.end());
    out.add(merged);
    if (ij == 0) {
        FusionElement rec = fuse(ring, p, q);
        for (const auto& [lab, mult] : rec.terms) out.add(lab, mult);
    }
    return out;
}

}  // namespace detail

inline FusionElement fuse(const FusionRing& ring, const Label& a, const Label& b) {
    validate_label(ring, a);
    validate_label(ring, b);
    switch (ring.kind) {
        case FusionRing::Kind::on_plus: return detail::fuse_on_plus(ring, a[0], b[0]);
        case FusionRing::Kind::un_plus: return detail::fuse_un_plus(ring, a, b);
        case FusionRing::Kind::hs_plus: return detail::fuse_hs_plus(ring, a, b);
    }
    throw std::logic_error("fuse: unhandled ring");
}

inline FusionElement fuse_elements(const FusionElement& A, const FusionElement& B) {
    if (!(A.ring == B.ring)) throw std::invalid_argument("fuse_elements: ring mismatch");
    FusionElement out{A.ring, {}};
    for (const auto& [la, ma] : A.terms)
        for (const auto& [lb, mb] : B.terms) {
            FusionElement f = fuse(A.ring, la, lb);
            for (const auto& [l, m] : f.terms) out.add(l, ma * mb * m);
        }
    return out;
}

// The fundamental object for one tensor factor:
//  on_plus: u = r_1; un_plus: u = r_a or (conjugate factor) r_b;
//  hs_plus: u_i = r_i + delta_{i0} 1.
inline FusionElement fundamental(const FusionRing& ring, int letter = 0) {
    FusionElement out{ring, {}};
    switch (ring.kind) {
        case FusionRing::Kind::on_plus: out.add({1}); break;
        case FusionRing::Kind::un_plus: out.add({letter ? 1 : 0}); break;
        case FusionRing::Kind::hs_plus:
            out.add({letter});
            if (letter == 0) out.add({});
            break;
    }
    return out;
}

inline Label trivial_label(const FusionRing& ring) {
    return ring.kind == FusionRing::Kind::on_plus ? Label{0} : Label{};
}

// Decompose the tensor product of fundamentals described by `letters`
// (on_plus ignores the letter values; un_plus: 0 = u, 1 = u bar; hs_plus:
// the index i of each factor u_i).
inline FusionElement decompose_power(const FusionRing& ring, const std::vector<int>& letters) {
    if (letters.size() > 20) throw std::invalid_argument("decompose_power: k capped at 20");
    FusionElement acc{ring, {}};
    acc.add(trivial_label(ring));
    for (int c : letters) acc = fuse_elements(acc, fundamental(ring, c));
    return acc;
}

inline Int trivial_multiplicity(const FusionRing& ring, const std::vector<int>& letters) {
    FusionElement e = decompose_power(ring, letters);
    auto it = e.terms.find(trivial_label(ring));
    return it == e.terms.end() ? Int(0) : it->second;
}

// dim r_k for on_plus: the Chebyshev-type recurrence.
inline Int dim_on(int k, const Int& N) {
    if (N < 2) throw std::invalid_argument("dim_on: N must be at least 2");
    Int p0 = 1, p1 = N;
    if (k == 0) return p0;
    for (int t = 1; t < k; ++t) {
        Int p2 = N * p1 - p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

// un_plus dimensions, derived degree by degree from dimension additivity:
// the word w is the top term (multiplicity 1) of its own power decomposition,
// every other label is shorter, so dim r_w = N^{|w|} - sum of the rest.
inline Int dim_un(const Label& w, const Int& N) {
    static std::map<std::pair<Label, std::string>, Int> memo;
    auto key = std::make_pair(w, N.get_str());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    FusionRing ring{FusionRing::Kind::un_plus};
    FusionElement e = decompose_power(ring, w);
    Int total = int_pow(N, w.size());
    Int rest = 0;
    for (const auto& [lab, mult] : e.terms) {
        if (lab == w) {
            if (mult != 1) throw std::logic_error("dim_un: top multiplicity not 1");
            continue;
        }
        rest += mult * dim_un(lab, N);
    }
    Int d = total - rest;
    memo[key] = d;
    return d;
}

// #NC_s(i_1...i_k): noncrossing partitions whose blocks have label sums
// divisible by s; the diagrammatic count behind trivial multiplicities.
inline Int ncs_count(const std::vector<int>& labels, int s) {
    int k = (int)labels.size();
    Int count = 0;
    for (const auto& pi :
         enumerate_partitions({}, uncolored(k), [](const Partition& p) { return is_noncrossing(p); },
                              2 * k + 2)) {
        bool ok = true;
        for (const auto& b : pi.blocks()) {
            long sum = 0;
            for (int p : b) sum += labels[p];
            if (s > 0 ? sum % s != 0 : sum != 0) ok = false;
        }
        if (ok) count += 1;
    }
    return count;
}

}  // namespace eqg
