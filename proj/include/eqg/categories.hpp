#pragma once

// Named membership predicates for the categories of partitions in scope,
// plus the axiom/uniformity audits and bounded generation closure.
//
// Color conventions used by the predicates: a partition is flattened by
// rotating all upper legs down (the flat word is the reversed complement of
// the upper word followed by the lower word); legs weigh o -> +1, b -> -1
// on the flat line. "Balanced"-type conditions that ignore colors instead
// weigh flat positions alternately +1/-1.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eqg/partition.hpp"

namespace eqg {

// s or r parameters use 0 to encode infinity.
inline constexpr int kInf = 0;

enum class CatKind {
    P, Peven, P2, P12, P12prime,
    NC, NCeven, NC2, NC12, NC12prime,
    MatchP2, MatchNC2, MatchPeven, MatchNCeven,
    Ps, NCs,
    PevenStar, P2Star, P2GlobalMod,
    PevenBalanced, PevenLocallyBalanced, PevenInfty,
    MatchP2String, MatchP2Circ, MatchP2Cosemigroup,
    NCevenAlternating, Diamond,
};

struct CategorySpec {
    CatKind kind = CatKind::P;
    int s = 0;                  // Ps/NCs/PevenBalanced/PevenLocallyBalanced (0 = infinity)
    int r = 0;                  // P2GlobalMod/MatchP2String/Diamond (0 = infinity)
    std::vector<int> residues;  // MatchP2Cosemigroup: allowed values
    int modulus = 0;            // 0 = exact integer values, m >= 1 = residues mod m

    bool operator<(const CategorySpec& o) const {
        return std::tie(kind, s, r, residues, modulus) <
               std::tie(o.kind, o.s, o.r, o.residues, o.modulus);
    }
    bool operator==(const CategorySpec& o) const = default;
};

namespace detail {

// Per-position signed color weight on the flat line (upper legs complemented).
inline std::vector<int> flat_weights(const Partition& pi) {
    std::vector<int> w;
    w.reserve(pi.points());
    for (int i = pi.k() - 1; i >= 0; --i)
        w.push_back(pi.upper[i] == Color::white ? -1 : +1);
    for (int i = 0; i < pi.l(); ++i)
        w.push_back(pi.lower[i] == Color::white ? +1 : -1);
    return w;
}

inline std::vector<int> flat_block_ids(const Partition& pi) {
    std::vector<int> s;
    s.reserve(pi.points());
    for (int i = pi.k() - 1; i >= 0; --i) s.push_back(pi.rgs[i]);
    for (int i = pi.k(); i < pi.points(); ++i) s.push_back(pi.rgs[i]);
    return s;
}

inline bool mod_zero(long v, int m) {  // m = 0 means v must vanish exactly
    return m == kInf ? v == 0 : v % m == 0;
}

// Per-block signed sums; weights either color weights or position parities.
inline bool blocks_balanced(const Partition& pi, const std::vector<int>& w, int mod) {
    auto ids = flat_block_ids(pi);
    std::vector<long> sum(pi.num_blocks(), 0);
    for (int p = 0; p < (int)ids.size(); ++p) sum[ids[p]] += w[p];
    for (long s : sum)
        if (!mod_zero(s, mod)) return false;
    return true;
}

inline std::vector<int> parity_weights(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i % 2 ? -1 : +1;
    return w;
}

// Matching pairing: every string joins a +1 leg to a -1 leg on the flat line.
inline bool is_matching_pairing(const Partition& pi) {
    if (!is_pairing(pi)) return false;
    return blocks_balanced(pi, flat_weights(pi), kInf);
}

// The two flat positions of each string of a pairing.
inline std::vector<std::pair<int, int>> string_legs(const Partition& pi) {
    auto ids = flat_block_ids(pi);
    std::vector<std::pair<int, int>> legs(pi.num_blocks(), {-1, -1});
    for (int p = 0; p < (int)ids.size(); ++p)
        (legs[ids[p]].first == -1 ? legs[ids[p]].first : legs[ids[p]].second) = p;
    return legs;
}

// Signed color count strictly between two flat positions, read left->right.
inline long between_count(const std::vector<int>& w, int a, int b) {
    if (a > b) std::swap(a, b);
    long s = 0;
    for (int p = a + 1; p < b; ++p) s += w[p];
    return s;
}

// Every subpartition (subset of blocks, points renumbered) is s-balanced:
// each block has #odd = #even legs mod s in the alternating position labeling.
inline bool locally_balanced(const Partition& pi, int s) {
    int nb = pi.num_blocks();
    if (nb > 20) throw std::invalid_argument("locally_balanced: too many blocks");
    auto ids = flat_block_ids(pi);
    for (unsigned mask = 0; mask < (1u << nb); ++mask) {
        std::vector<long> sum(nb, 0);
        int pos = 0;
        for (int p = 0; p < (int)ids.size(); ++p) {
            if (!(mask >> ids[p] & 1)) continue;
            sum[ids[p]] += pos % 2 ? -1 : +1;
            ++pos;
        }
        for (int b = 0; b < nb; ++b)
            if ((mask >> b & 1) && !mod_zero(sum[b], s)) return false;
    }
    return true;
}

std::set<Partition> generated_closure(const std::vector<Partition>& gens, int max_points,
                                      int max_rounds);
Partition diamond_generator(int r);

}  // namespace detail

inline bool contains(const CategorySpec& spec, const Partition& pi);

namespace detail {
inline bool contains_diamond(int r, const Partition& pi) {
    // <pi_r> has no closed-form membership test; bounded generated closure
    // gives a certified lower bound (see generate()).
    int budget = std::max(pi.points() + 2, 8);
    auto cl = generated_closure({diamond_generator(r == kInf ? 1 : r)}, budget, 6);
    return cl.count(pi) > 0;
}
}  // namespace detail

inline bool contains(const CategorySpec& spec, const Partition& pi) {
    using detail::blocks_balanced;
    using detail::flat_weights;
    using detail::parity_weights;
    switch (spec.kind) {
        case CatKind::P: return true;
        case CatKind::Peven: return is_even(pi);
        case CatKind::P2: return is_pairing(pi);
        case CatKind::P12: {
            for (const auto& b : pi.blocks())
                if (b.size() > 2) return false;
            return true;
        }
        case CatKind::P12prime:
            return contains({CatKind::P12}, pi) && pi.points() % 2 == 0;
        case CatKind::NC: return is_noncrossing(pi);
        case CatKind::NCeven: return is_even(pi) && is_noncrossing(pi);
        case CatKind::NC2: return is_pairing(pi) && is_noncrossing(pi);
        case CatKind::NC12:
            return contains({CatKind::P12}, pi) && is_noncrossing(pi);
        case CatKind::NC12prime:
            return contains({CatKind::P12prime}, pi) && is_noncrossing(pi);
        case CatKind::MatchP2: return detail::is_matching_pairing(pi);
        case CatKind::MatchNC2:
            return detail::is_matching_pairing(pi) && is_noncrossing(pi);
        case CatKind::MatchPeven:
            return is_even(pi) && blocks_balanced(pi, flat_weights(pi), kInf);
        case CatKind::MatchNCeven:
            return contains({CatKind::MatchPeven}, pi) && is_noncrossing(pi);
        case CatKind::Ps:
            return blocks_balanced(pi, flat_weights(pi), spec.s);
        case CatKind::NCs: {
            CategorySpec ps{CatKind::Ps};
            ps.s = spec.s;
            return contains(ps, pi) && is_noncrossing(pi);
        }
        case CatKind::PevenStar:
            return is_even(pi) && blocks_balanced(pi, parity_weights(pi.points()), kInf);
        case CatKind::P2Star:
            return is_pairing(pi) && blocks_balanced(pi, parity_weights(pi.points()), kInf);
        case CatKind::P2GlobalMod: {
            if (!is_pairing(pi)) return false;
            auto w = flat_weights(pi);
            long s = 0;
            for (int x : w) s += x;
            return detail::mod_zero(s, spec.r);
        }
        case CatKind::PevenBalanced:
            return is_even(pi) && blocks_balanced(pi, parity_weights(pi.points()), spec.s);
        case CatKind::PevenLocallyBalanced:
            return is_even(pi) && detail::locally_balanced(pi, spec.s);
        case CatKind::PevenInfty:
            // equivalent to: every coarsening has signature +1 (see
            // peven_infty_by_signature, kept as a cross-check)
            return is_even(pi) && detail::locally_balanced(pi, kInf);
        case CatKind::MatchP2String: {
            if (!detail::is_matching_pairing(pi)) return false;
            auto w = flat_weights(pi);
            for (auto [a, b] : detail::string_legs(pi))
                if (!detail::mod_zero(detail::between_count(w, a, b), spec.r)) return false;
            return true;
        }
        case CatKind::MatchP2Circ: {
            CategorySpec q{CatKind::MatchP2String};
            q.r = kInf;
            return contains(q, pi);
        }
        case CatKind::MatchP2Cosemigroup: {
            CategorySpec base{CatKind::MatchP2Circ};
            if (!contains(base, pi)) return false;
            auto w = flat_weights(pi);
            auto legs = detail::string_legs(pi);
            auto allowed = [&](long v) {
                if (spec.modulus >= 1) {
                    long m = ((v % spec.modulus) + spec.modulus) % spec.modulus;
                    return std::find(spec.residues.begin(), spec.residues.end(), (int)m) !=
                           spec.residues.end();
                }
                for (int c : spec.residues)
                    if (v == c || v == -c) return true;
                return false;
            };
            for (size_t i = 0; i < legs.size(); ++i)
                for (size_t j = i + 1; j < legs.size(); ++j) {
                    auto [a1, a2] = legs[i];
                    auto [b1, b2] = legs[j];
                    bool cross = (a1 < b1 && b1 < a2 && a2 < b2) ||
                                 (b1 < a1 && a1 < b2 && b2 < a2);
                    if (!cross) continue;
                    // compare the white leg of one string with the black leg
                    // of the other, both ways, on the flat line
                    int wi = w[a1] > 0 ? a1 : a2, bi = w[a1] > 0 ? a2 : a1;
                    int wj = w[b1] > 0 ? b1 : b2, bj = w[b1] > 0 ? b2 : b1;
                    if (!allowed(detail::between_count(w, wi, bj))) return false;
                    if (!allowed(detail::between_count(w, wj, bi))) return false;
                }
            return true;
        }
        case CatKind::NCevenAlternating: {
            // even noncrossing partitions whose blocks alternate colors on
            // the flat line
            if (!is_even(pi) || !is_noncrossing(pi)) return false;
            auto w = flat_weights(pi);
            auto ids = detail::flat_block_ids(pi);
            std::vector<int> last(pi.num_blocks(), 0);
            for (int p = 0; p < (int)ids.size(); ++p) {
                int b = ids[p];
                if (last[b] != 0 && last[b] == w[p]) return false;
                last[b] = w[p];
            }
            return true;
        }
        case CatKind::Diamond:
            return detail::contains_diamond(spec.r, pi);
    }
    return false;
}

// The signature characterization of the membership test behind PevenInfty:
// all coarsenings (including the partition itself) have signature +1.
inline bool peven_infty_by_signature(const Partition& pi) {
    if (!is_even(pi)) return false;
    Partition top(pi.upper, pi.lower, std::vector<int>(pi.points(), 0));
    for (const auto& tau : interval(pi, top))
        if (signature(tau) != 1) return false;
    return true;
}

inline PartitionPred predicate(const CategorySpec& spec) {
    return [spec](const Partition& pi) { return contains(spec, pi); };
}

// ---- CLI name table --------------------------------------------------------

// "inf" or 0 denotes the infinite parameter value.
inline CategorySpec parse_category(const std::string& name) {
    auto parse_param = [](const std::string& t) {
        if (t == "inf") return kInf;
        int v = std::stoi(t);
        if (v < 0) throw std::invalid_argument("negative category parameter");
        return v;
    };
    auto colon = name.find(':');
    std::string head = name.substr(0, colon);
    std::string tail = colon == std::string::npos ? "" : name.substr(colon + 1);
    CategorySpec c;
    static const std::map<std::string, CatKind> plain = {
        {"p", CatKind::P}, {"peven", CatKind::Peven}, {"p2", CatKind::P2},
        {"p12", CatKind::P12}, {"p12prime", CatKind::P12prime},
        {"nc", CatKind::NC}, {"nceven", CatKind::NCeven}, {"nc2", CatKind::NC2},
        {"nc12", CatKind::NC12}, {"nc12prime", CatKind::NC12prime},
        {"matchp2", CatKind::MatchP2}, {"matchnc2", CatKind::MatchNC2},
        {"matchpeven", CatKind::MatchPeven}, {"matchnceven", CatKind::MatchNCeven},
        {"pevenstar", CatKind::PevenStar}, {"p2star", CatKind::P2Star},
        {"peveninf", CatKind::PevenInfty}, {"p2circ", CatKind::MatchP2Circ},
        {"ncevenalt", CatKind::NCevenAlternating},
    };
    if (auto it = plain.find(head); it != plain.end()) {
        if (!tail.empty()) throw std::invalid_argument("category takes no parameter: " + name);
        c.kind = it->second;
        return c;
    }
    if (head == "ps" || head == "ncs" || head == "pevenbal" || head == "pevenlocbal") {
        c.kind = head == "ps"         ? CatKind::Ps
                 : head == "ncs"      ? CatKind::NCs
                 : head == "pevenbal" ? CatKind::PevenBalanced
                                      : CatKind::PevenLocallyBalanced;
        c.s = parse_param(tail);
        return c;
    }
    if (head == "p2r" || head == "p2string" || head == "diamond") {
        c.kind = head == "p2r"        ? CatKind::P2GlobalMod
                 : head == "p2string" ? CatKind::MatchP2String
                                      : CatKind::Diamond;
        c.r = parse_param(tail);
        return c;
    }
    if (head == "p2c") {
        // p2c:<r1,r2,...>/<m>  e.g. p2c:0/4 ; m = 0 or "exact" for exact values
        auto slash = tail.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("p2c needs residues/modulus");
        c.kind = CatKind::MatchP2Cosemigroup;
        std::string rs = tail.substr(0, slash), ms = tail.substr(slash + 1);
        c.modulus = ms == "exact" ? 0 : std::stoi(ms);
        std::stringstream ss(rs);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) c.residues.push_back(std::stoi(tok));
        std::sort(c.residues.begin(), c.residues.end());
        return c;
    }
    throw std::invalid_argument("unknown category: " + name);
}

inline std::string category_name(const CategorySpec& c) {
    auto p = [](int v) { return v == kInf ? std::string("inf") : std::to_string(v); };
    switch (c.kind) {
        case CatKind::P: return "p";
        case CatKind::Peven: return "peven";
        case CatKind::P2: return "p2";
        case CatKind::P12: return "p12";
        case CatKind::P12prime: return "p12prime";
        case CatKind::NC: return "nc";
        case CatKind::NCeven: return "nceven";
        case CatKind::NC2: return "nc2";
        case CatKind::NC12: return "nc12";
        case CatKind::NC12prime: return "nc12prime";
        case CatKind::MatchP2: return "matchp2";
        case CatKind::MatchNC2: return "matchnc2";
        case CatKind::MatchPeven: return "matchpeven";
        case CatKind::MatchNCeven: return "matchnceven";
        case CatKind::Ps: return "ps:" + p(c.s);
        case CatKind::NCs: return "ncs:" + p(c.s);
        case CatKind::PevenStar: return "pevenstar";
        case CatKind::P2Star: return "p2star";
        case CatKind::P2GlobalMod: return "p2r:" + p(c.r);
        case CatKind::PevenBalanced: return "pevenbal:" + p(c.s);
        case CatKind::PevenLocallyBalanced: return "pevenlocbal:" + p(c.s);
        case CatKind::PevenInfty: return "peveninf";
        case CatKind::MatchP2String: return "p2string:" + p(c.r);
        case CatKind::MatchP2Circ: return "p2circ";
        case CatKind::MatchP2Cosemigroup: {
            std::string s = "p2c:";
            for (size_t i = 0; i < c.residues.size(); ++i)
                s += (i ? "," : "") + std::to_string(c.residues[i]);
            return s + "/" + (c.modulus == 0 ? "exact" : std::to_string(c.modulus));
        }
        case CatKind::NCevenAlternating: return "ncevenalt";
        case CatKind::Diamond: return "diamond:" + p(c.r);
    }
    return "?";
}

// Whether a spec's conditions involve colors (unitary-type); drives the
// default word conventions for moment computations.
inline bool is_unitary_type(const CategorySpec& c) {
    switch (c.kind) {
        case CatKind::MatchP2:
        case CatKind::MatchNC2:
        case CatKind::MatchPeven:
        case CatKind::MatchNCeven:
        case CatKind::Ps:
        case CatKind::NCs:
        case CatKind::P2GlobalMod:
        case CatKind::MatchP2String:
        case CatKind::MatchP2Circ:
        case CatKind::MatchP2Cosemigroup:
        case CatKind::NCevenAlternating: return true;
        default: return false;
    }
}

// Specs with closed-form membership (everything but Diamond).
inline std::vector<CategorySpec> shipped_specs() {
    std::vector<CategorySpec> out;
    for (CatKind k : {CatKind::P, CatKind::Peven, CatKind::P2, CatKind::P12,
                      CatKind::P12prime, CatKind::NC, CatKind::NCeven, CatKind::NC2,
                      CatKind::NC12, CatKind::NC12prime, CatKind::MatchP2, CatKind::MatchNC2,
                      CatKind::MatchPeven, CatKind::MatchNCeven, CatKind::PevenStar,
                      CatKind::P2Star, CatKind::PevenInfty, CatKind::MatchP2Circ,
                      CatKind::NCevenAlternating})
        out.push_back({k});
    for (int s : {1, 2, 3, 4}) {
        CategorySpec a{CatKind::Ps};
        a.s = s;
        out.push_back(a);
        a.kind = CatKind::NCs;
        out.push_back(a);
    }
    for (int s : {2, 3, kInf}) {
        CategorySpec a{CatKind::PevenBalanced};
        a.s = s;
        out.push_back(a);
        a.kind = CatKind::PevenLocallyBalanced;
        out.push_back(a);
    }
    for (int r : {1, 2, 3, kInf}) {
        CategorySpec a{CatKind::P2GlobalMod};
        a.r = r;
        out.push_back(a);
        a.kind = CatKind::MatchP2String;
        out.push_back(a);
    }
    {
        CategorySpec a{CatKind::MatchP2Cosemigroup};
        a.residues = {0};
        a.modulus = 0;  // P2^x
        out.push_back(a);
        a.residues = {0};
        a.modulus = 4;
        out.push_back(a);
    }
    return out;
}

// ---- audits ----------------------------------------------------------------

struct AuditReport {
    bool passed = true;
    std::string counterexample;  // empty when passed
    long checks = 0;

    void fail(const std::string& what) {
        if (passed) {
            passed = false;
            counterexample = what;
        }
    }
};

namespace detail {

inline std::vector<ColorWord> all_words(int n) {
    std::vector<ColorWord> out;
    for (unsigned m = 0; m < (1u << n); ++m) {
        ColorWord w(n);
        for (int i = 0; i < n; ++i) w[i] = (m >> i & 1) ? Color::black : Color::white;
        out.push_back(std::move(w));
    }
    return out;
}

inline std::string describe(const Partition& pi) {
    std::string s = "upper=" + word_str(pi.upper) + " lower=" + word_str(pi.lower) + " blocks=";
    for (const auto& b : pi.blocks()) {
        s += "{";
        for (size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
        s += "}";
    }
    return s;
}

}  // namespace detail

// Verify the category axioms on members with up to max_points points:
// exhaustively for <= 4 points over all colorings, by seeded sampling above
// that. Checks tensor/composition/involution closure, identities, semicircles.
inline AuditReport audit_axioms(const CategorySpec& spec, int max_points) {
    AuditReport rep;
    auto member = predicate(spec);
    // identities and semicircles
    for (Color c : {Color::white, Color::black}) {
        if (!member(semicircle(c))) rep.fail("missing semicircle " + word_str({c, complement(c)}));
        ++rep.checks;
    }
    for (int n = 1; n <= std::min(3, max_points / 2); ++n)
        for (const auto& w : detail::all_words(n)) {
            if (!member(identity_partition(w)))
                rep.fail("missing identity on " + word_str(w));
            ++rep.checks;
        }
    // collect members, exhaustive small sizes
    std::vector<Partition> members;
    int exhaustive_to = std::min(max_points, 4);
    for (int n = 0; n <= exhaustive_to; ++n)
        for (int k = 0; k <= n; ++k)
            for (const auto& up : detail::all_words(k))
                for (const auto& lo : detail::all_words(n - k))
                    for (auto& p : enumerate_partitions(up, lo, member))
                        members.push_back(std::move(p));
    // involution + rotation closure on everything collected
    for (const auto& p : members) {
        if (!member(involute(p))) rep.fail("involution escapes: " + detail::describe(p));
        if (p.k() > 0 && !member(rotate(p, RotateDir::left)))
            rep.fail("left rotation escapes: " + detail::describe(p));
        if (p.l() > 0 && !member(rotate(p, RotateDir::right)))
            rep.fail("right rotation escapes: " + detail::describe(p));
        rep.checks += 3;
    }
    // tensor / composition closure, exhaustive on the small members
    for (const auto& a : members)
        for (const auto& b : members) {
            if (a.points() + b.points() <= max_points) {
                if (!member(tensor(a, b)))
                    rep.fail("tensor escapes: " + detail::describe(a) + " (x) " +
                             detail::describe(b));
                ++rep.checks;
            }
            if (a.lower == b.upper) {
                if (!member(compose(a, b).result))
                    rep.fail("composition escapes: " + detail::describe(a) + " over " +
                             detail::describe(b));
                ++rep.checks;
            }
        }
    // sampled larger members: random colored words + filter
    std::mt19937_64 rng(20260826);
    auto random_member = [&](int n) -> std::optional<Partition> {
        std::uniform_int_distribution<int> ksplit(0, n);
        for (int tries = 0; tries < 40; ++tries) {
            int k = ksplit(rng);
            ColorWord up(k), lo(n - k);
            for (auto& c : up) c = rng() & 1 ? Color::black : Color::white;
            for (auto& c : lo) c = rng() & 1 ? Color::black : Color::white;
            auto all = enumerate_partitions(up, lo, member);
            if (all.empty()) continue;
            std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
            return all[pick(rng)];
        }
        return std::nullopt;
    };
    for (int n = exhaustive_to + 1; n <= max_points; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            auto a = random_member(n);
            if (!a) break;
            if (!member(involute(*a))) rep.fail("involution escapes: " + detail::describe(*a));
            auto b = random_member(std::max(0, max_points - n));
            if (b && !member(tensor(*a, *b)))
                rep.fail("tensor escapes: " + detail::describe(*a) + " (x) " +
                         detail::describe(*b));
            // compose a with a member sharing its lower word
            auto mid = enumerate_partitions(a->lower, a->lower, member);
            if (!mid.empty()) {
                std::uniform_int_distribution<size_t> pick(0, mid.size() - 1);
                const auto& m = mid[pick(rng)];
                if (!member(compose(*a, m).result))
                    rep.fail("composition escapes: " + detail::describe(*a) + " over " +
                             detail::describe(m));
            }
            rep.checks += 3;
        }
    }
    return rep;
}

// Uniformity: deleting any block of any member yields a member.
inline AuditReport is_uniform(const CategorySpec& spec, int max_points) {
    AuditReport rep;
    auto member = predicate(spec);
    for (int n = 0; n <= max_points; ++n)
        for (int k = 0; k <= n; ++k) {
            // all colorings for unitary-type; uncolored suffices otherwise
            std::vector<std::pair<ColorWord, ColorWord>> shapes;
            if (is_unitary_type(spec)) {
                for (const auto& up : detail::all_words(k))
                    for (const auto& lo : detail::all_words(n - k)) shapes.push_back({up, lo});
            } else {
                shapes.push_back({uncolored(k), uncolored(n - k)});
            }
            for (const auto& [up, lo] : shapes)
                for (const auto& p : enumerate_partitions(up, lo, member)) {
                    for (const auto& blk : p.blocks()) {
                        std::vector<char> drop(p.points(), 0);
                        for (int q : blk) drop[q] = 1;
                        ColorWord u2, l2;
                        std::vector<int> ids;
                        for (int q = 0; q < p.points(); ++q) {
                            if (drop[q]) continue;
                            if (q < p.k()) u2.push_back(p.upper[q]);
                            else l2.push_back(p.lower[q - p.k()]);
                            ids.push_back(p.rgs[q]);
                        }
                        Partition sub(u2, l2, std::move(ids));
                        ++rep.checks;
                        if (!member(sub))
                            rep.fail("deleting a block of " + detail::describe(p) +
                                     " leaves non-member " + detail::describe(sub));
                    }
                }
        }
    return rep;
}

// ---- bounded generation ------------------------------------------------

namespace detail {

inline std::set<Partition> generated_closure(const std::vector<Partition>& gens, int max_points,
                                             int max_rounds) {
    std::set<Partition> cur;
    for (const auto& g : gens)
        if (g.points() <= max_points) cur.insert(g);
    cur.insert(semicircle(Color::white));
    cur.insert(semicircle(Color::black));
    for (int n = 1; 2 * n <= max_points && n <= 3; ++n)
        for (const auto& w : all_words(n)) cur.insert(identity_partition(w));
    for (int round = 0; round < max_rounds; ++round) {
        std::set<Partition> next = cur;
        for (const auto& a : cur) {
            next.insert(involute(a));
            if (a.k() > 0) next.insert(rotate(a, RotateDir::left));
            if (a.l() > 0) next.insert(rotate(a, RotateDir::right));
            for (const auto& b : cur) {
                if (a.points() + b.points() <= max_points) next.insert(tensor(a, b));
                if (a.lower == b.upper && a.k() + b.l() <= max_points)
                    next.insert(compose(a, b).result);
            }
        }
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

// pi_r = ker(1...r r...1 / 1...r r...1), the diamond generator.
inline Partition diamond_generator(int r) {
    std::vector<int> i;
    for (int t = 1; t <= r; ++t) i.push_back(t);
    for (int t = r; t >= 1; --t) i.push_back(t);
    return kernel(i, i, uncolored(2 * r), uncolored(2 * r));
}

}  // namespace detail

inline std::set<Partition> generate(const std::vector<Partition>& gens, int max_points,
                                    int max_rounds = 8) {
    return detail::generated_closure(gens, max_points, max_rounds);
}

inline Partition diamond_generator(int r) { return detail::diamond_generator(r); }

}  // namespace eqg
