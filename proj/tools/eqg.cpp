// Command line front end: every library operation behind one binary with
// stable JSON-lines output. Exact rationals are always printed as "p/q".
//
// Exit codes: 0 success, 1 domain error (printed as a JSON error object),
// 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eqg/categories.hpp"
#include "eqg/freeprob.hpp"
#include "eqg/fusion.hpp"
#include "eqg/haarmc.hpp"
#include "eqg/json_io.hpp"
#include "eqg/linmap.hpp"
#include "eqg/weingarten.hpp"

using namespace eqg;
using nlohmann::json;

namespace {

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    return out;
}

// CLI index tuples are 1-based
MultiIndex parse_index_tuple(const std::string& s) {
    auto v = parse_int_list(s);
    for (int& x : v) {
        if (x < 1) throw std::invalid_argument("indices are 1-based");
        --x;
    }
    return v;
}

json config_echo(const std::string& cmd, const json& params) {
    return json{{"config", {{"command", cmd}, {"params", params}}}};
}

struct LawParse {
    LawSpec law;
};

// e.g. "poisson:t=1", "bessel:s=2,t=1/2", "dirac:t=3", "cat:peven:t=2"
LawSpec parse_law(const std::string& s) {
    auto first = s.find(':');
    std::string name = s.substr(0, first);
    LawSpec law;
    std::map<std::string, std::string> kv;
    std::string rest = first == std::string::npos ? "" : s.substr(first + 1);
    if (name == "cat") {
        auto second = rest.find(":");
        if (second == std::string::npos) throw std::invalid_argument("cat law needs cat:SPEC:t=V");
        law.kind = LawSpec::Kind::category_weighted;
        law.spec = parse_category(rest.substr(0, second));
        rest = rest.substr(second + 1);
    }
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    if (kv.count("t")) law.t = rat_parse(kv["t"]);
    if (kv.count("s")) law.s = std::stoi(kv["s"]);
    if (name == "cat") return law;
    if (name == "dirac") law.kind = LawSpec::Kind::dirac;
    else if (name == "gaussian") law.kind = LawSpec::Kind::gaussian;
    else if (name == "poisson") law.kind = LawSpec::Kind::poisson;
    else if (name == "semicircle") law.kind = LawSpec::Kind::semicircle;
    else if (name == "freepoisson") law.kind = LawSpec::Kind::free_poisson;
    else if (name == "bessel") law.kind = LawSpec::Kind::bessel;
    else if (name == "freebessel") law.kind = LawSpec::Kind::free_bessel;
    else throw std::invalid_argument("unknown law: " + name);
    return law;
}

// word defaulting: orthogonal-type specs use uncolored words, unitary-type
// the alternating word, when the caller passes a bare point count
ColorWord default_word(const CategorySpec& spec, int k) {
    return is_unitary_type(spec) ? alternating(k) : uncolored(k);
}

std::optional<CategorySpec> category_for_group(Group g, int s) {
    switch (g) {
        case Group::sn: return CategorySpec{CatKind::P};
        case Group::on: return CategorySpec{CatKind::P2};
        case Group::bn: return CategorySpec{CatKind::P12};
        case Group::hn: return CategorySpec{CatKind::Peven};
        case Group::hsn:
            if (s == 2) return CategorySpec{CatKind::Peven};
            return std::nullopt;  // complex characters; no real-moment closed form here
        default: return std::nullopt;
    }
}

int run_selftest() {
    struct Row {
        std::string name;
        bool ok;
    };
    std::vector<Row> rows;
    auto add = [&](const std::string& n, bool ok) { rows.push_back({n, ok}); };

    add("partition enumeration Bell(4) = 15",
        enumerate_partitions({}, uncolored(4), {}).size() == 15);
    add("noncrossing count Catalan(4) = 14",
        enumerate_partitions({}, uncolored(4),
                             [](const Partition& p) { return is_noncrossing(p); })
                .size() == 14);
    {
        bool ok = true;
        for (const auto& fam : {"sn", "on", "onplus", "snplus", "bn", "bnplus"})
            for (int k = 1; k <= 4; ++k) {
                auto basis = det_formula_basis(fam, k);
                if (gram_det(basis, 5) != det_formula(fam, k, 5)) ok = false;
            }
        add("gram determinants match closed forms (k <= 4, N = 5)", ok);
    }
    {
        auto basis = det_formula_basis("sn", 3);
        QMatrix w = weingarten(basis, 6), g = gram(basis, 6);
        QMatrix prod = w * g;
        bool ok = true;
        for (int a = 0; a < prod.rows(); ++a)
            for (int b = 0; b < prod.cols(); ++b)
                if (prod(a, b) != (a == b ? 1 : 0)) ok = false;
        add("W G = I on P(3), N = 6", ok);
    }
    {
        MomentSeq M = {1, 2, 5, 15};
        add("classical k4 at (1,2,5,15) = 1",
            moments_to_cumulants(M, Flavor::classical).values[3] == 1);
        add("free kappa4 at (1,2,5,15) = 2",
            moments_to_cumulants(M, Flavor::free_).values[3] == 2);
    }
    add("Bercovici-Pata P/NC at t=1", bp_check({CatKind::P}, {CatKind::NC}, 1, 6).passed);
    {
        FusionRing onp{FusionRing::Kind::on_plus};
        add("trivial multiplicity u^8 = Catalan(4) = 14",
            trivial_multiplicity(onp, std::vector<int>(8, 0)) == 14);
    }
    add("category audit Peven at 5 points", audit_axioms({CatKind::Peven}, 5).passed);

    bool all = true;
    for (const auto& r : rows) {
        std::cout << (r.ok ? "pass" : "FAIL") << "  " << r.name << "\n";
        all = all && r.ok;
    }
    std::cout << (all ? "selftest: all checks passed" : "selftest: FAILURES") << std::endl;
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partition-category combinatorics toolkit"};
    app.require_subcommand(0, 1);

    bool schema = false;
    app.add_flag("--schema", schema, "print the JSON schemas for the wire types and exit");
    int point_bound = kDefaultPointBound;
    app.add_option("--bound", point_bound, "enumeration point bound");

    // ---- partitions ----
    auto* cmd_partitions = app.add_subcommand("partitions", "enumerate partitions in a category");
    std::string p_upper, p_lower, p_cat = "p", p_action = "enum";
    cmd_partitions->add_option("action", p_action, "only 'enum' is supported");
    cmd_partitions->add_option("--upper", p_upper, "upper color word over o/b");
    cmd_partitions->add_option("--lower", p_lower, "lower color word over o/b");
    cmd_partitions->add_option("--cat", p_cat, "category name");

    // ---- category ----
    auto* cmd_category = app.add_subcommand("category", "audit a category or test membership");
    std::string c_cat = "p", c_member;
    int c_points = 4;
    bool c_audit = false, c_uniform = false;
    cmd_category->add_option("--cat", c_cat, "category name");
    cmd_category->add_flag("--audit", c_audit, "run the axiom audit");
    cmd_category->add_flag("--uniform", c_uniform, "run the block-deletion audit");
    cmd_category->add_option("--max-points", c_points, "audit size bound");
    cmd_category->add_option("--contains", c_member, "partition JSON to test for membership");

    // ---- gram / weingarten ----
    auto* cmd_gram = app.add_subcommand("gram", "Gram matrix over a category basis");
    auto* cmd_wg = app.add_subcommand("weingarten", "Weingarten matrix (exact Gram inverse)");
    std::string g_cat = "p", g_upper, g_lower;
    int g_k = -1;
    long g_N = 3;
    bool g_quasi = false;
    for (auto* c : {cmd_gram, cmd_wg}) {
        c->add_option("--cat", g_cat, "category name");
        c->add_option("--upper", g_upper, "upper word");
        c->add_option("--lower", g_lower, "lower word");
        c->add_option("--k", g_k, "use the default word on k points instead");
        c->add_option("--N", g_N, "dimension");
    }
    cmd_wg->add_flag("--quasi", g_quasi, "experimental rank-factorization quasi-inverse");

    // ---- integrate ----
    auto* cmd_integrate = app.add_subcommand("integrate", "Haar integral of a monomial");
    std::string i_cat = "p", i_word, i_i, i_j;
    long i_N = 3;
    bool i_quasi = false;
    cmd_integrate->add_option("--cat", i_cat, "category name");
    cmd_integrate->add_option("--word", i_word, "color word of the monomial");
    cmd_integrate->add_option("--i", i_i, "row indices, 1-based, comma separated")->required();
    cmd_integrate->add_option("--j", i_j, "column indices, 1-based")->required();
    cmd_integrate->add_option("--N", i_N, "dimension");
    cmd_integrate->add_flag("--quasi", i_quasi, "quasi-inverse fallback");

    // ---- gramdet ----
    auto* cmd_gramdet = app.add_subcommand("gramdet", "exact Gram determinant");
    std::string d_cat = "p", d_check;
    int d_k = 2;
    long d_N = 3;
    cmd_gramdet->add_option("--cat", d_cat, "category name");
    cmd_gramdet->add_option("--k", d_k, "points in the one-row word");
    cmd_gramdet->add_option("--N", d_N, "dimension");
    cmd_gramdet->add_option("--check", d_check,
                            "closed form to compare: sn|on|onplus|snplus|bn|bnplus");

    // ---- moments ----
    auto* cmd_moments = app.add_subcommand("moments", "truncated character moments");
    std::string m_cat = "p";
    int m_k = 4;
    long m_N = 5, m_s = -1;
    std::string m_t;
    cmd_moments->add_option("--cat", m_cat, "category name");
    cmd_moments->add_option("--k", m_k, "moment order bound");
    cmd_moments->add_option("--N", m_N, "dimension");
    cmd_moments->add_option("--s", m_s, "truncation cut (default N)");
    cmd_moments->add_option("--asym-t", m_t, "instead emit asymptotic weighted counts at t");

    // ---- cumulants ----
    auto* cmd_cumulants = app.add_subcommand("cumulants", "moment/cumulant conversion");
    std::string cu_flavor = "classical", cu_dir = "m2c", cu_in, cu_values;
    cmd_cumulants->add_option("--flavor", cu_flavor, "classical|free");
    cmd_cumulants->add_option("--direction", cu_dir, "m2c|c2m");
    cmd_cumulants->add_option("--in", cu_in, "JSON file with an array of p/q strings");
    cmd_cumulants->add_option("--values", cu_values, "inline comma-separated p/q values");

    // ---- law-moments ----
    auto* cmd_law = app.add_subcommand("law-moments", "moments of a named law");
    std::string l_law = "poisson:t=1";
    int l_n = 8;
    cmd_law->add_option("--law", l_law, "law spec, e.g. poisson:t=1, cat:peven:t=2");
    cmd_law->add_option("--n", l_n, "order");

    // ---- bp-check ----
    auto* cmd_bp = app.add_subcommand("bp-check", "Bercovici-Pata cumulant comparison");
    std::string b_class = "p", b_free = "nc", b_t = "1";
    int b_n = 8;
    cmd_bp->add_option("--class", b_class, "classical-side category");
    cmd_bp->add_option("--free", b_free, "free-side category");
    cmd_bp->add_option("--t", b_t, "parameter t");
    cmd_bp->add_option("--n", b_n, "order bound");

    // ---- fusion ----
    auto* cmd_fusion = app.add_subcommand("fusion", "fusion ring operations");
    std::string f_ring = "on+", f_op = "fuse", f_a, f_b, f_letters;
    long f_N = 3;
    int f_k = -1;
    cmd_fusion->add_option("--ring", f_ring, "on+|un+|hs+:s");
    cmd_fusion->add_option("--op", f_op, "fuse|power|dims");
    cmd_fusion->add_option("--a", f_a, "first label (comma ints)");
    cmd_fusion->add_option("--b", f_b, "second label");
    cmd_fusion->add_option("--letters", f_letters, "tensor factor letters for power");
    cmd_fusion->add_option("--k", f_k, "shorthand: k copies of letter 0");
    cmd_fusion->add_option("--N", f_N, "dimension for dims");

    // ---- mc ----
    auto* cmd_mc = app.add_subcommand("mc", "Monte Carlo character moments");
    std::string mc_group = "sn", mc_out = "csv";
    int mc_N = 20, mc_k = 4;
    double mc_t = 1.0;
    long mc_samples = 10000;
    uint64_t mc_seed = 42;
    bool mc_derangement = false;
    cmd_mc->add_option("--group", mc_group, "sn|hn|hsn:s|bn|on|un|kn");
    cmd_mc->add_option("--N", mc_N, "matrix size");
    cmd_mc->add_option("--t", mc_t, "truncation parameter");
    cmd_mc->add_option("--k", mc_k, "max moment order");
    cmd_mc->add_option("--samples", mc_samples, "sample count");
    cmd_mc->add_option("--seed", mc_seed, "RNG seed (mt19937_64)");
    cmd_mc->add_option("--out", mc_out, "csv|json");
    cmd_mc->add_flag("--derangement", mc_derangement, "estimate the fixed-point-free rate");

    // ---- twist ----
    auto* cmd_twist = app.add_subcommand("twist", "signed (twisted) maps and Gram neutrality");
    std::string t_cat = "peven", t_partition;
    int t_points = 4;
    long t_N = 3;
    cmd_twist->add_option("--cat", t_cat, "category (must be inside peven)");
    cmd_twist->add_option("--points", t_points, "word size for the Gram comparison");
    cmd_twist->add_option("--N", t_N, "dimension");
    cmd_twist->add_option("--partition", t_partition, "partition JSON: print its expansion");

    // ---- wg-expand ----
    auto* cmd_expand = app.add_subcommand("wg-expand", "1/N expansion of a Weingarten entry");
    std::string e_cat = "p";
    int e_k = 3, e_pi = 0, e_sigma = 0, e_gmax = 4;
    long e_N = 16;
    cmd_expand->add_option("--cat", e_cat, "category name");
    cmd_expand->add_option("--k", e_k, "points");
    cmd_expand->add_option("--pi", e_pi, "basis index of pi");
    cmd_expand->add_option("--sigma", e_sigma, "basis index of sigma");
    cmd_expand->add_option("--gmax", e_gmax, "defect bound");
    cmd_expand->add_option("--N", e_N, "dimension for the consistency check");

    auto* cmd_selftest = app.add_subcommand("selftest", "run the built-in invariant checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (schema) {
            std::cout << json{{"partition", schema_partition()},
                              {"partition_matrix", schema_matrix()},
                              {"fusion_element", schema_fusion()},
                              {"empirical_moments", schema_empirical()}}
                             .dump()
                      << "\n";
            return 0;
        }

        if (cmd_partitions->parsed()) {
            CategorySpec spec = parse_category(p_cat);
            std::cout << config_echo("partitions", {{"upper", p_upper}, {"lower", p_lower},
                                                    {"cat", p_cat}})
                             .dump()
                      << "\n";
            for (const auto& p : enumerate_partitions(word_parse(p_upper), word_parse(p_lower),
                                                      predicate(spec), point_bound))
                std::cout << partition_to_json(p).dump() << "\n";
            return 0;
        }

        if (cmd_category->parsed()) {
            CategorySpec spec = parse_category(c_cat);
            std::cout << config_echo("category", {{"cat", c_cat}, {"max_points", c_points}}).dump()
                      << "\n";
            json out;
            if (!c_member.empty()) {
                Partition p = partition_from_json(json::parse(c_member));
                out["contains"] = contains(spec, p);
            }
            if (c_audit) {
                auto rep = audit_axioms(spec, c_points);
                out["audit"] = {{"passed", rep.passed},
                                {"checks", rep.checks},
                                {"counterexample", rep.counterexample}};
            }
            if (c_uniform) {
                auto rep = is_uniform(spec, c_points);
                out["uniform"] = {{"passed", rep.passed},
                                  {"checks", rep.checks},
                                  {"counterexample", rep.counterexample}};
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (cmd_gram->parsed() || cmd_wg->parsed()) {
            CategorySpec spec = parse_category(g_cat);
            ColorWord up = word_parse(g_upper), lo = word_parse(g_lower);
            if (g_k >= 0) {
                up = {};
                lo = default_word(spec, g_k);
            }
            auto basis = category_basis(spec, up, lo, point_bound);
            bool want_w = cmd_wg->parsed();
            std::cout << config_echo(want_w ? "weingarten" : "gram",
                                     {{"cat", g_cat},
                                      {"upper", word_str(up)},
                                      {"lower", word_str(lo)},
                                      {"N", g_N}})
                             .dump()
                      << "\n";
            QMatrix m = want_w ? weingarten(basis, g_N, g_quasi) : gram(basis, g_N);
            std::cout << matrix_to_json(basis, m).dump() << "\n";
            return 0;
        }

        if (cmd_integrate->parsed()) {
            CategorySpec spec = parse_category(i_cat);
            MultiIndex i = parse_index_tuple(i_i), j = parse_index_tuple(i_j);
            ColorWord w =
                i_word.empty() ? default_word(spec, (int)i.size()) : word_parse(i_word);
            auto basis = category_basis(spec, {}, w, point_bound);
            std::cout << config_echo("integrate", {{"cat", i_cat},
                                                   {"word", word_str(w)},
                                                   {"N", i_N}})
                             .dump()
                      << "\n";
            Rat v = integrate(basis, i, j, i_N, i_quasi);
            json out{{"value", rat_str(v)}};
            if (spec.kind == CatKind::P) out["sn_closed_form"] = rat_str(sn_integral(i, j, i_N));
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (cmd_gramdet->parsed()) {
            CategorySpec spec = parse_category(d_cat);
            auto basis = category_basis(spec, {}, default_word(spec, d_k), point_bound);
            Int v = gram_det(basis, d_N);
            std::cout << config_echo("gramdet",
                                     {{"cat", d_cat}, {"k", d_k}, {"N", d_N}, {"check", d_check}})
                             .dump()
                      << "\n";
            json out{{"value", v.get_str()}};
            if (!d_check.empty()) {
                Int f = det_formula(d_check, d_k, d_N);
                out["formula"] = f.get_str();
                out["equal"] = (f == v);
            }
            std::cout << out.dump() << "\n";
            return 0;
        }

        if (cmd_moments->parsed()) {
            CategorySpec spec = parse_category(m_cat);
            std::cout << config_echo("moments", {{"cat", m_cat}, {"k", m_k}, {"N", m_N}}).dump()
                      << "\n";
            json vals = json::array();
            for (int k = 1; k <= m_k; ++k) {
                ColorWord w = default_word(spec, k);
                auto basis = category_basis(spec, {}, w, point_bound);
                if (!m_t.empty()) {
                    Rat t = rat_parse(m_t), s = 0;
                    for (const auto& pi : basis) s += rat_pow(t, pi.num_blocks());
                    vals.push_back(rat_str(s));
                } else {
                    vals.push_back(rat_str(truncated_moment(basis, m_N, m_s < 0 ? m_N : m_s)));
                }
            }
            std::cout << json{{"moments", vals}}.dump() << "\n";
            return 0;
        }

        if (cmd_cumulants->parsed()) {
            std::vector<Rat> in;
            if (!cu_in.empty()) {
                std::ifstream f(cu_in);
                if (!f) throw std::invalid_argument("cannot open: " + cu_in);
                json j = json::parse(f);
                for (const auto& v : j) in.push_back(rat_parse(v.get<std::string>()));
            } else {
                std::stringstream ss(cu_values);
                std::string tok;
                while (std::getline(ss, tok, ',')) in.push_back(rat_parse(tok));
            }
            Flavor fl = cu_flavor == "free" ? Flavor::free_ : Flavor::classical;
            std::vector<Rat> out_vals;
            if (cu_dir == "m2c") out_vals = moments_to_cumulants(in, fl).values;
            else if (cu_dir == "c2m") out_vals = cumulants_to_moments({in, fl});
            else throw std::invalid_argument("direction must be m2c or c2m");
            std::cout << config_echo("cumulants", {{"flavor", cu_flavor}, {"direction", cu_dir}})
                             .dump()
                      << "\n";
            json arr = json::array();
            for (const auto& v : out_vals) arr.push_back(rat_str(v));
            std::cout << arr.dump() << "\n";
            return 0;
        }

        if (cmd_law->parsed()) {
            LawSpec law = parse_law(l_law);
            std::cout << config_echo("law-moments", {{"law", l_law}, {"n", l_n}}).dump() << "\n";
            json arr = json::array();
            for (const auto& v : law_moments(law, l_n)) arr.push_back(rat_str(v));
            std::cout << arr.dump() << "\n";
            return 0;
        }

        if (cmd_bp->parsed()) {
            auto rep = bp_check(parse_category(b_class), parse_category(b_free), rat_parse(b_t),
                                b_n);
            std::cout << config_echo("bp-check", {{"class", b_class},
                                                  {"free", b_free},
                                                  {"t", b_t},
                                                  {"n", b_n}})
                             .dump()
                      << "\n";
            json cc = json::array(), fc = json::array();
            for (const auto& v : rep.classical_cumulants) cc.push_back(rat_str(v));
            for (const auto& v : rep.free_cumulants) fc.push_back(rat_str(v));
            std::cout << json{{"passed", rep.passed},
                              {"first_failure", rep.first_failure},
                              {"classical_cumulants", cc},
                              {"free_cumulants", fc}}
                             .dump()
                      << "\n";
            return rep.passed ? 0 : 1;
        }

        if (cmd_fusion->parsed()) {
            FusionRing ring;
            if (f_ring == "on+") ring.kind = FusionRing::Kind::on_plus;
            else if (f_ring == "un+") ring.kind = FusionRing::Kind::un_plus;
            else if (f_ring.rfind("hs+", 0) == 0) {
                ring.kind = FusionRing::Kind::hs_plus;
                auto colon = f_ring.find(':');
                ring.s = colon == std::string::npos ? 0 : std::stoi(f_ring.substr(colon + 1));
            } else throw std::invalid_argument("unknown ring: " + f_ring);
            std::cout << config_echo("fusion", {{"ring", f_ring}, {"op", f_op}}).dump() << "\n";
            if (f_op == "fuse") {
                auto e = fuse(ring, parse_int_list(f_a), parse_int_list(f_b));
                std::cout << fusion_to_json(e).dump() << "\n";
            } else if (f_op == "power") {
                std::vector<int> letters =
                    f_k >= 0 ? std::vector<int>(f_k, 0) : parse_int_list(f_letters);
                auto e = decompose_power(ring, letters);
                json out = fusion_to_json(e);
                out["trivial_multiplicity"] = trivial_multiplicity(ring, letters).get_str();
                std::cout << out.dump() << "\n";
            } else if (f_op == "dims") {
                std::vector<int> letters =
                    f_k >= 0 ? std::vector<int>(f_k, 0) : parse_int_list(f_letters);
                auto e = decompose_power(ring, letters);
                Int total = 0;
                json terms = json::array();
                for (const auto& [lab, mult] : e.terms) {
                    Int d;
                    if (ring.kind == FusionRing::Kind::on_plus) d = dim_on(lab[0], f_N);
                    else if (ring.kind == FusionRing::Kind::un_plus) d = dim_un(lab, f_N);
                    else throw std::invalid_argument("dims not available for hs+");
                    total += mult * d;
                    terms.push_back(json{{"label", lab},
                                         {"multiplicity", mult.get_str()},
                                         {"dim", d.get_str()}});
                }
                std::cout << json{{"terms", terms},
                                  {"total", total.get_str()},
                                  {"expected", int_pow(Int((long)f_N), letters.size()).get_str()}}
                                 .dump()
                          << "\n";
            } else throw std::invalid_argument("unknown fusion op: " + f_op);
            return 0;
        }

        if (cmd_mc->parsed()) {
            int s = 0;
            Group g = parse_group(mc_group, s);
            GroupSampler sampler(g, mc_N, mc_seed, s);
            std::cout << config_echo("mc", {{"group", mc_group},
                                            {"N", mc_N},
                                            {"t", mc_t},
                                            {"k", mc_k},
                                            {"samples", mc_samples},
                                            {"seed", mc_seed},
                                            {"rng", "mt19937_64"}})
                             .dump()
                      << "\n";
            if (mc_derangement) {
                auto r = derangement_rate(mc_N, mc_samples, mc_seed);
                Rat ex = derangement_exact(mc_N);
                std::cout << json{{"estimate", r.estimate},
                                  {"std_error", r.std_error},
                                  {"exact", ex.get_d()},
                                  {"z", (r.estimate - ex.get_d()) / r.std_error}}
                                 .dump()
                          << "\n";
                return 0;
            }
            std::vector<double> exact;
            if (auto spec = category_for_group(g, s)) {
                long cut = (long)(mc_t * mc_N);
                for (int k = 1; k <= mc_k; ++k) {
                    auto basis = category_basis(*spec, {}, default_word(*spec, k), point_bound);
                    try {
                        exact.push_back(truncated_moment(basis, mc_N, cut).get_d());
                    } catch (const SingularGram&) {
                        exact.push_back(std::nan(""));
                    }
                }
            }
            auto rows = compare_exact(sampler, mc_t, mc_k, mc_samples, exact);
            if (mc_out == "csv") {
                std::cout << "k,estimate,std_error,exact,z\n";
                char buf[160];
                for (const auto& r : rows) {
                    snprintf(buf, sizeof buf, "%d,%.6f,%.6f,%.6f,%.3f", r.k, r.estimate,
                             r.std_error, r.exact, r.z);
                    std::cout << buf << "\n";
                }
            } else {
                for (const auto& r : rows)
                    std::cout << json{{"k", r.k},
                                      {"estimate", r.estimate},
                                      {"std_error", r.std_error},
                                      {"exact", r.exact},
                                      {"z", r.z}}
                                     .dump()
                              << "\n";
            }
            return 0;
        }

        if (cmd_twist->parsed()) {
            std::cout << config_echo("twist", {{"cat", t_cat}, {"points", t_points}, {"N", t_N}})
                             .dump()
                      << "\n";
            if (!t_partition.empty()) {
                Partition p = partition_from_json(json::parse(t_partition));
                json terms = json::array();
                for (const auto& [sigma, alpha] : twist_expansion(p))
                    terms.push_back(json{{"partition", partition_to_json(sigma)},
                                         {"coefficient", rat_str(alpha)}});
                std::cout << json{{"expansion", terms},
                                  {"check", mobius_expansion_check(p, (int)t_N)}}
                                 .dump()
                          << "\n";
                return 0;
            }
            // twisted-column Gram vs untwisted Gram over the word
            CategorySpec spec = parse_category(t_cat);
            auto basis = category_basis(spec, {}, uncolored(t_points), point_bound);
            bool equal = true;
            for (size_t x = 0; x < basis.size(); ++x)
                for (size_t y = 0; y < basis.size(); ++y) {
                    SparseOp tx = tpi_twisted(basis[x], (int)t_N);
                    SparseOp ty = tpi_twisted(basis[y], (int)t_N);
                    Rat inner = 0;
                    for (const auto& [key, v] : tx.entries) {
                        auto it = ty.entries.find(key);
                        if (it != ty.entries.end()) inner += v * it->second;
                    }
                    if (inner != Rat(int_pow(t_N, join(basis[x], basis[y]).num_blocks())))
                        equal = false;
                }
            std::cout << json{{"twisted_gram_equals_untwisted", equal},
                              {"basis_size", basis.size()}}
                             .dump()
                      << "\n";
            return equal ? 0 : 1;
        }

        if (cmd_expand->parsed()) {
            CategorySpec spec = parse_category(e_cat);
            auto basis = category_basis(spec, {}, default_word(spec, e_k), point_bound);
            if (e_pi >= (int)basis.size() || e_sigma >= (int)basis.size())
                throw std::invalid_argument("basis index out of range");
            auto K = weingarten_expansion(basis, e_pi, e_sigma, 2L * e_gmax);
            std::cout << config_echo("wg-expand", {{"cat", e_cat},
                                                   {"k", e_k},
                                                   {"pi", e_pi},
                                                   {"sigma", e_sigma},
                                                   {"gmax", e_gmax}})
                             .dump()
                      << "\n";
            json coeffs = json::array();
            for (const auto& [g2, c] : K)
                coeffs.push_back(json{{"g", g2 / 2.0}, {"K", c.get_str()}});
            std::cout << json{{"coefficients", coeffs},
                              {"check", weingarten_expansion_check(basis, e_pi, e_sigma,
                                                                   2L * e_gmax, e_N)}}
                             .dump()
                      << "\n";
            return 0;
        }

        if (cmd_selftest->parsed()) return run_selftest();

        std::cout << app.help() << "\n";
        return 2;
    } catch (const SingularGram& e) {
        std::cout << json{{"error", "singular_gram"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cout << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cout << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}
