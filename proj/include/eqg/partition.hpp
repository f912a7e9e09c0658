#pragma once

// Colored two-row set partitions and the diagram/lattice operations on them.
//
// Points are numbered 0..k-1 on the upper row (left to right) and k..k+l-1
// on the lower row (left to right). The circular order used for planarity
// runs upper left->right, then lower right->left, matching the usual
// pictures. Blocks are stored as a restricted-growth string: rgs[p] is the
// block id of point p, ids appearing in first-occurrence order, which makes
// the representation canonical and equality structural.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "eqg/rational.hpp"

namespace eqg {

enum class Color : std::uint8_t { white, black };

inline Color complement(Color c) {
    return c == Color::white ? Color::black : Color::white;
}

using ColorWord = std::vector<Color>;

inline ColorWord word_parse(const std::string& s) {
    ColorWord w;
    w.reserve(s.size());
    for (char c : s) {
        if (c == 'o') w.push_back(Color::white);
        else if (c == 'b') w.push_back(Color::black);
        else throw std::invalid_argument("color word must be over {o,b}");
    }
    return w;
}

inline std::string word_str(const ColorWord& w) {
    std::string s;
    s.reserve(w.size());
    for (Color c : w) s.push_back(c == Color::white ? 'o' : 'b');
    return s;
}

inline ColorWord uncolored(int n) { return ColorWord(n, Color::white); }

// Alternating word starting white: obob...
inline ColorWord alternating(int n) {
    ColorWord w(n);
    for (int i = 0; i < n; ++i) w[i] = i % 2 ? Color::black : Color::white;
    return w;
}

inline ColorWord word_complement(const ColorWord& w) {
    ColorWord r = w;
    for (Color& c : r) c = complement(c);
    return r;
}

// Canonicalize an arbitrary block-id labeling into a restricted-growth
// string (ids renumbered in first-occurrence order).
inline std::vector<int> to_rgs(std::vector<int> ids) {
    std::map<int, int> relabel;
    for (int& x : ids) {
        auto [it, fresh] = relabel.try_emplace(x, (int)relabel.size());
        x = it->second;
    }
    return ids;
}

struct Partition {
    ColorWord upper, lower;
    std::vector<int> rgs;  // block id per point, restricted growth

    Partition() = default;
    Partition(ColorWord up, ColorWord lo, std::vector<int> ids)
        : upper(std::move(up)), lower(std::move(lo)), rgs(to_rgs(std::move(ids))) {
        if (rgs.size() != upper.size() + lower.size())
            throw std::invalid_argument("block labeling does not cover the points");
    }

    int k() const { return (int)upper.size(); }
    int l() const { return (int)lower.size(); }
    int points() const { return (int)rgs.size(); }
    int num_blocks() const {
        return rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    }

    std::vector<std::vector<int>> blocks() const {
        std::vector<std::vector<int>> b(num_blocks());
        for (int p = 0; p < points(); ++p) b[rgs[p]].push_back(p);
        return b;
    }

    bool same_shape(const Partition& o) const {
        return upper == o.upper && lower == o.lower;
    }

    auto operator<=>(const Partition& o) const = default;
    bool operator==(const Partition& o) const = default;
};

// ---- basic constructions ------------------------------------------------

inline Partition identity_partition(const ColorWord& w) {
    std::vector<int> ids((size_t)w.size() * 2);
    int n = (int)w.size();
    for (int i = 0; i < n; ++i) ids[i] = ids[n + i] = i;
    return Partition(w, w, std::move(ids));
}

// Semicircle (cap) in P(0, c . complement(c)): one block on two lower points.
inline Partition semicircle(Color c) {
    return Partition({}, {c, complement(c)}, {0, 0});
}

// One-row partition on |w| lower points from explicit blocks.
inline Partition flat_partition(const ColorWord& w, const std::vector<std::vector<int>>& blks) {
    std::vector<int> ids(w.size(), -1);
    int id = 0;
    for (const auto& b : blks) {
        for (int p : b) {
            if (p < 0 || p >= (int)w.size() || ids[p] != -1)
                throw std::invalid_argument("bad block list");
            ids[p] = id;
        }
        ++id;
    }
    for (int x : ids)
        if (x == -1) throw std::invalid_argument("blocks do not cover the points");
    return Partition({}, w, std::move(ids));
}

// ---- kernels and the lattice --------------------------------------------

// ker(i/j): group equal index values across the concatenated tuples.
inline Partition kernel(const std::vector<int>& i, const std::vector<int>& j,
                        const ColorWord& up, const ColorWord& lo) {
    if (i.size() != up.size() || j.size() != lo.size())
        throw std::invalid_argument("kernel: tuple/word length mismatch");
    std::vector<int> ids;
    ids.reserve(i.size() + j.size());
    ids.insert(ids.end(), i.begin(), i.end());
    ids.insert(ids.end(), j.begin(), j.end());
    return Partition(up, lo, std::move(ids));
}

inline void check_shape(const Partition& a, const Partition& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("partition shape mismatch");
}

// pi <= sigma: every block of pi is contained in a block of sigma.
inline bool leq(const Partition& pi, const Partition& sigma) {
    check_shape(pi, sigma);
    int nb = pi.num_blocks();
    std::vector<int> rep(nb, -1);
    for (int p = 0; p < pi.points(); ++p) {
        int b = pi.rgs[p];
        if (rep[b] == -1) rep[b] = sigma.rgs[p];
        else if (rep[b] != sigma.rgs[p]) return false;
    }
    return true;
}

namespace detail {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};
}  // namespace detail

inline Partition join(const Partition& pi, const Partition& sigma) {
    check_shape(pi, sigma);
    detail::UnionFind uf(pi.points());
    auto merge = [&](const Partition& p) {
        std::vector<int> first(p.num_blocks(), -1);
        for (int q = 0; q < p.points(); ++q) {
            int b = p.rgs[q];
            if (first[b] == -1) first[b] = q;
            else uf.unite(first[b], q);
        }
    };
    merge(pi);
    merge(sigma);
    std::vector<int> ids(pi.points());
    for (int q = 0; q < pi.points(); ++q) ids[q] = uf.find(q);
    return Partition(pi.upper, pi.lower, std::move(ids));
}

inline Partition meet(const Partition& pi, const Partition& sigma) {
    check_shape(pi, sigma);
    std::vector<int> ids(pi.points());
    std::map<std::pair<int, int>, int> pairs;
    for (int q = 0; q < pi.points(); ++q) {
        auto [it, fresh] = pairs.try_emplace({pi.rgs[q], sigma.rgs[q]}, (int)pairs.size());
        ids[q] = it->second;
    }
    return Partition(pi.upper, pi.lower, std::move(ids));
}

// d(pi, sigma) = (|pi| + |sigma|)/2 - |pi v sigma|.
inline Rat distance(const Partition& pi, const Partition& sigma) {
    Rat d(pi.num_blocks() + sigma.num_blocks(), 2);
    d -= join(pi, sigma).num_blocks();
    d.canonicalize();
    return d;
}

// All tau with pi <= tau <= sigma: coarsenings of pi's blocks refining
// sigma's grouping, built per sigma-block and combined.
inline std::vector<Partition> interval(const Partition& pi, const Partition& sigma) {
    if (!leq(pi, sigma)) return {};
    int nbp = pi.num_blocks();
    // sigma-block id of each pi-block
    std::vector<int> group(nbp, -1);
    for (int p = 0; p < pi.points(); ++p) group[pi.rgs[p]] = sigma.rgs[p];
    int nbs = sigma.num_blocks();
    std::vector<std::vector<int>> members(nbs);
    for (int b = 0; b < nbp; ++b) members[group[b]].push_back(b);
    // set partitions of each member list
    std::vector<std::vector<std::vector<int>>> choices(nbs);  // per group: list of labelings
    for (int g = 0; g < nbs; ++g) {
        int m = (int)members[g].size();
        std::vector<int> cur(m, 0);
        std::function<void(int, int)> rec = [&](int pos, int maxid) {
            if (pos == m) {
                choices[g].push_back(cur);
                return;
            }
            for (int id = 0; id <= maxid; ++id) {
                cur[pos] = id;
                rec(pos + 1, std::max(maxid, id + 1));
            }
        };
        rec(0, 0);
        if (m == 0) choices[g].push_back({});
    }
    std::vector<Partition> out;
    std::vector<int> pick(nbs, 0);
    while (true) {
        std::vector<int> blockid(nbp);
        int base = 0;
        for (int g = 0; g < nbs; ++g) {
            const auto& lab = choices[g][pick[g]];
            int mx = 0;
            for (int t = 0; t < (int)members[g].size(); ++t) {
                blockid[members[g][t]] = base + lab[t];
                mx = std::max(mx, lab[t] + 1);
            }
            base += mx;
        }
        std::vector<int> ids(pi.points());
        for (int p = 0; p < pi.points(); ++p) ids[p] = blockid[pi.rgs[p]];
        out.emplace_back(pi.upper, pi.lower, std::move(ids));
        int g = nbs - 1;
        while (g >= 0 && pick[g] + 1 == (int)choices[g].size()) pick[g--] = 0;
        if (g < 0) break;
        ++pick[g];
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Moebius function of the refinement order, by the defining recurrence
// mu(pi,pi)=1, mu(pi,sigma) = -sum_{pi<=tau<sigma} mu(pi,tau), memoized
// over the interval.
inline Int mobius(const Partition& pi, const Partition& sigma) {
    check_shape(pi, sigma);
    if (!leq(pi, sigma)) return 0;
    auto elems = interval(pi, sigma);
    // order by number of blocks descending (finer first); pi is the finest
    std::sort(elems.begin(), elems.end(), [](const Partition& a, const Partition& b) {
        if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
        return a < b;
    });
    std::map<std::vector<int>, Int> mu;
    for (const auto& tau : elems) {
        Int v = 0;
        if (tau.rgs == pi.rgs) v = 1;
        else {
            for (const auto& rho : elems)
                if (rho.rgs != tau.rgs && leq(rho, tau) && mu.count(rho.rgs)) {
                    // rho in [pi, tau)
                    v -= mu.at(rho.rgs);
                }
        }
        mu[tau.rgs] = v;
    }
    return mu.at(sigma.rgs);
}

// ---- category operations -------------------------------------------------

// Horizontal concatenation [pi sigma].
inline Partition tensor(const Partition& pi, const Partition& sigma) {
    ColorWord up = pi.upper, lo = pi.lower;
    up.insert(up.end(), sigma.upper.begin(), sigma.upper.end());
    lo.insert(lo.end(), sigma.lower.begin(), sigma.lower.end());
    int k1 = pi.k(), l1 = pi.l(), k2 = sigma.k(), l2 = sigma.l();
    int off = pi.num_blocks();
    std::vector<int> ids(pi.points() + sigma.points());
    for (int i = 0; i < k1; ++i) ids[i] = pi.rgs[i];
    for (int i = 0; i < k2; ++i) ids[k1 + i] = off + sigma.rgs[i];
    for (int i = 0; i < l1; ++i) ids[k1 + k2 + i] = pi.rgs[k1 + i];
    for (int i = 0; i < l2; ++i) ids[k1 + k2 + l1 + i] = off + sigma.rgs[k2 + i];
    return Partition(std::move(up), std::move(lo), std::move(ids));
}

struct ComposeResult {
    Partition result;
    int loops;  // closed middle components; the N^c factor
};

// Vertical concatenation: glue top's lower row to bottom's upper row.
// Result has top.upper over bottom.lower.
inline ComposeResult compose(const Partition& top, const Partition& bottom) {
    if (top.lower != bottom.upper)
        throw std::invalid_argument("compose: middle color words do not match");
    int k = top.k(), m = top.l(), l = bottom.l();
    // points: 0..k-1 upper, k..k+m-1 middle, k+m..k+m+l-1 lower
    detail::UnionFind uf(k + m + l);
    {
        std::vector<int> first(top.num_blocks(), -1);
        for (int p = 0; p < top.points(); ++p) {
            int b = top.rgs[p];
            if (first[b] == -1) first[b] = p;
            else uf.unite(first[b], p);
        }
    }
    {
        std::vector<int> first(bottom.num_blocks(), -1);
        for (int p = 0; p < bottom.points(); ++p) {
            int b = bottom.rgs[p];
            int q = k + p;  // bottom's upper row lands on the shared middle
            if (first[b] == -1) first[b] = q;
            else uf.unite(first[b], q);
        }
    }
    std::vector<int> ids;
    ids.reserve(k + l);
    for (int p = 0; p < k; ++p) ids.push_back(uf.find(p));
    for (int p = 0; p < l; ++p) ids.push_back(uf.find(k + m + p));
    // loops: components whose every point lies in the middle row
    std::vector<char> touched(k + m + l, 0);
    for (int p = 0; p < k; ++p) touched[uf.find(p)] = 1;
    for (int p = 0; p < l; ++p) touched[uf.find(k + m + p)] = 1;
    int loops = 0;
    std::vector<char> counted(k + m + l, 0);
    for (int p = 0; p < m; ++p) {
        int r = uf.find(k + p);
        if (!touched[r] && !counted[r]) {
            counted[r] = 1;
            ++loops;
        }
    }
    return {Partition(top.upper, bottom.lower, std::move(ids)), loops};
}

// Upside-down turn with color complementation.
inline Partition involute(const Partition& pi) {
    int k = pi.k(), l = pi.l();
    std::vector<int> ids(k + l);
    for (int i = 0; i < l; ++i) ids[i] = pi.rgs[k + i];
    for (int i = 0; i < k; ++i) ids[l + i] = pi.rgs[i];
    return Partition(word_complement(pi.lower), word_complement(pi.upper), std::move(ids));
}

enum class RotateDir { left, right };

// left: leftmost upper point moves to the leftmost lower position;
// right: leftmost lower point moves to the leftmost upper position.
// The moved leg's color is complemented; blocks follow the point.
inline Partition rotate(const Partition& pi, RotateDir dir) {
    int k = pi.k(), l = pi.l();
    if (dir == RotateDir::left) {
        if (k == 0) throw std::invalid_argument("rotate left: empty upper row");
        ColorWord up(pi.upper.begin() + 1, pi.upper.end());
        ColorWord lo;
        lo.push_back(complement(pi.upper[0]));
        lo.insert(lo.end(), pi.lower.begin(), pi.lower.end());
        std::vector<int> ids;
        for (int i = 1; i < k; ++i) ids.push_back(pi.rgs[i]);
        ids.push_back(pi.rgs[0]);
        for (int i = 0; i < l; ++i) ids.push_back(pi.rgs[k + i]);
        return Partition(std::move(up), std::move(lo), std::move(ids));
    }
    if (l == 0) throw std::invalid_argument("rotate right: empty lower row");
    ColorWord up;
    up.push_back(complement(pi.lower[0]));
    up.insert(up.end(), pi.upper.begin(), pi.upper.end());
    ColorWord lo(pi.lower.begin() + 1, pi.lower.end());
    std::vector<int> ids;
    ids.push_back(pi.rgs[k]);
    for (int i = 0; i < k; ++i) ids.push_back(pi.rgs[i]);
    for (int i = 1; i < l; ++i) ids.push_back(pi.rgs[k + i]);
    return Partition(std::move(up), std::move(lo), std::move(ids));
}

// Rotate every upper leg down: the flat word is rev-complement(upper)+lower.
inline Partition flatten(Partition pi) {
    while (pi.k() > 0) pi = rotate(pi, RotateDir::left);
    return pi;
}

// ---- planarity, signature, fattening -------------------------------------

// Block ids in circular order: upper left->right, then lower right->left.
inline std::vector<int> circular_ids(const Partition& pi) {
    std::vector<int> seq;
    seq.reserve(pi.points());
    for (int i = 0; i < pi.k(); ++i) seq.push_back(pi.rgs[i]);
    for (int i = pi.points() - 1; i >= pi.k(); --i) seq.push_back(pi.rgs[i]);
    return seq;
}

inline bool is_noncrossing(const Partition& pi) {
    auto seq = circular_ids(pi);
    int n = (int)seq.size();
    // two blocks interleave iff the pattern a b a b occurs
    std::vector<int> last;  // stack of open block ids
    std::vector<int> remaining(pi.num_blocks(), 0);
    for (int x : seq) ++remaining[x];
    for (int p = 0; p < n; ++p) {
        int x = seq[p];
        if (!last.empty() && last.back() == x) {
            // continuing the open block
        } else {
            // x must not already be open deeper in the stack
            for (int y : last)
                if (y == x) return false;
            last.push_back(x);
        }
        if (--remaining[x] == 0) {
            if (last.back() != x) return false;
            last.pop_back();
            // close any finished blocks uncovered beneath (cannot happen:
            // blocks close exactly when their last leg is read)
        }
    }
    return last.empty();
}

inline bool is_pairing(const Partition& pi) {
    std::vector<int> cnt(pi.num_blocks(), 0);
    for (int x : pi.rgs) ++cnt[x];
    for (int c : cnt)
        if (c != 2) return false;
    return true;
}

inline bool is_even(const Partition& pi) {
    std::vector<int> cnt(pi.num_blocks(), 0);
    for (int x : pi.rgs) ++cnt[x];
    for (int c : cnt)
        if (c % 2) return false;
    return true;
}

// Signature of an even partition: parity of the number of adjacent
// transpositions of legs in distinct blocks needed to reach a noncrossing
// arrangement. Normalization: on the flat order (upper legs rotated down),
// repeatedly take the block with the leftmost unplaced leg and bubble its
// remaining legs next to it, counting inter-block switches.
inline int signature(const Partition& pi) {
    if (!is_even(pi)) throw std::invalid_argument("signature: partition has an odd block");
    // flat order: reversed upper, then lower
    std::vector<int> seq;
    for (int i = pi.k() - 1; i >= 0; --i) seq.push_back(pi.rgs[i]);
    for (int i = pi.k(); i < pi.points(); ++i) seq.push_back(pi.rgs[i]);
    long c = 0;
    int n = (int)seq.size();
    int done = 0;
    while (done < n) {
        int b = seq[done];
        int write = done + 1;
        for (int p = done + 1; p < n; ++p) {
            if (seq[p] == b) {
                // bubble seq[p] left to position `write`
                c += p - write;
                for (int q = p; q > write; --q) seq[q] = seq[q - 1];
                seq[write] = b;
                ++write;
            }
        }
        done = write;
    }
    return c % 2 == 0 ? 1 : -1;
}

// Crossing count for pairings in flat order (test oracle for signature).
inline long pairing_crossings(const Partition& pi) {
    std::vector<int> seq;
    for (int i = pi.k() - 1; i >= 0; --i) seq.push_back(pi.rgs[i]);
    for (int i = pi.k(); i < pi.points(); ++i) seq.push_back(pi.rgs[i]);
    int n = (int)seq.size();
    long c = 0;
    std::vector<std::pair<int, int>> legs(pi.num_blocks(), {-1, -1});
    for (int p = 0; p < n; ++p)
        (legs[seq[p]].first == -1 ? legs[seq[p]].first : legs[seq[p]].second) = p;
    for (size_t a = 0; a < legs.size(); ++a)
        for (size_t b = a + 1; b < legs.size(); ++b) {
            auto [a1, a2] = legs[a];
            auto [b1, b2] = legs[b];
            if ((a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2)) ++c;
        }
    return c;
}

// Fattening NC(k) -> NC_2(2k): point i doubles to 2i, 2i+1; within each
// block, the right leg of each point pairs with the left leg of the
// cyclically next point of the block.
inline Partition fatten(const Partition& pi) {
    if (pi.k() != 0) throw std::invalid_argument("fatten: expects a one-row partition");
    if (!is_noncrossing(pi)) throw std::invalid_argument("fatten: input has a crossing");
    int n = pi.points();
    std::vector<int> ids(2 * n, -1);
    int id = 0;
    for (const auto& blk : pi.blocks()) {
        int m = (int)blk.size();
        for (int t = 0; t < m; ++t) {
            int a = blk[t], b = blk[(t + 1) % m];
            ids[2 * a + 1] = id;
            ids[2 * b] = id;
            ++id;
        }
    }
    return Partition({}, uncolored(2 * n), std::move(ids));
}

inline Partition shrink(const Partition& pairing) {
    if (pairing.k() != 0 || pairing.points() % 2 || !is_pairing(pairing))
        throw std::invalid_argument("shrink: expects a one-row pairing");
    int n = pairing.points() / 2;
    detail::UnionFind uf(n);
    auto blks = pairing.blocks();
    for (const auto& b : blks) {
        int p = b[0], q = b[1];
        // pair {2a+1, 2b} glues point a to point b (cyclically)
        if (p % 2 == 0) std::swap(p, q);
        if (p % 2 == 0 || q % 2 == 1)
            throw std::invalid_argument("shrink: pairing is not a fattened diagram");
        uf.unite(p / 2, q / 2 % n);
    }
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = uf.find(i);
    return Partition({}, uncolored(n), std::move(ids));
}

// ---- enumeration ----------------------------------------------------------

inline constexpr int kDefaultPointBound = 16;

using PartitionPred = std::function<bool(const Partition&)>;

// Every set partition of the k+l points (restricted-growth strings in
// lexicographic order) passing pred. Deterministic canonical order.
inline std::vector<Partition> enumerate_partitions(const ColorWord& up, const ColorWord& lo,
                                                   const PartitionPred& pred = nullptr,
                                                   int point_bound = kDefaultPointBound) {
    int n = (int)(up.size() + lo.size());
    if (n > point_bound)
        throw std::invalid_argument("enumerate: point count " + std::to_string(n) +
                                    " exceeds bound " + std::to_string(point_bound));
    std::vector<Partition> out;
    std::vector<int> cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int maxid) {
        if (pos == n) {
            Partition p(up, lo, cur);
            if (!pred || pred(p)) out.push_back(std::move(p));
            return;
        }
        for (int id = 0; id <= maxid; ++id) {
            cur[pos] = id;
            rec(pos + 1, std::max(maxid, id + 1));
        }
    };
    if (n == 0) {
        Partition p(up, lo, {});
        if (!pred || pred(p)) out.push_back(std::move(p));
    } else {
        rec(0, 0);
    }
    return out;
}

}  // namespace eqg
