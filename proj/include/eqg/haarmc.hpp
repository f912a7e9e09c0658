#pragma once

// Seeded Monte Carlo samplers for the classical groups S_N, H_N^s, B_N, O_N,
// U_N, K_N, plus empirical character moments and comparisons against exact
// values. This is the only part of the library that touches floating point.

#include <cmath>
#include <complex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqg {

enum class Group { sn, hn, hsn, bn, on, un, kn };

inline Group parse_group(const std::string& name, int& s_out) {
    s_out = 0;
    if (name == "sn") return Group::sn;
    if (name == "hn") {
        s_out = 2;
        return Group::hn;
    }
    if (name.rfind("hsn", 0) == 0) {
        auto colon = name.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("hsn needs :s");
        s_out = std::stoi(name.substr(colon + 1));
        return Group::hsn;
    }
    if (name == "bn") return Group::bn;
    if (name == "on") return Group::on;
    if (name == "un") return Group::un;
    if (name == "kn") return Group::kn;
    throw std::invalid_argument("unknown group: " + name);
}

using CplxMat = std::vector<std::complex<double>>;  // row-major N x N

struct GroupSampler {
    Group group = Group::sn;
    int N = 1;
    int s = 2;           // hsn only
    uint64_t seed = 0;
    std::mt19937_64 rng;

    GroupSampler(Group g, int n, uint64_t sd, int s_param = 2)
        : group(g), N(n), s(s_param), seed(sd), rng(sd) {}

    // substream derivation for parallel use: golden-ratio increment
    static uint64_t split_seed(uint64_t seed, uint64_t stream) {
        return seed + stream * 0x9E3779B97F4A7C15ULL;
    }

    bool is_complex() const {
        return group == Group::un || group == Group::kn || (group == Group::hsn && s > 2);
    }

    std::vector<int> random_permutation() {
        std::vector<int> p(N);
        std::iota(p.begin(), p.end(), 0);
        for (int i = N - 1; i > 0; --i) {
            std::uniform_int_distribution<int> d(0, i);
            std::swap(p[i], p[d(rng)]);
        }
        return p;
    }

    CplxMat sample() {
        CplxMat m(N * (size_t)N, 0.0);
        switch (group) {
            case Group::sn: {
                auto p = random_permutation();
                for (int j = 0; j < N; ++j) m[(size_t)p[j] * N + j] = 1.0;
                return m;
            }
            case Group::hn:
            case Group::hsn:
            case Group::kn: {
                auto p = random_permutation();
                int sloc = group == Group::hn ? 2 : s;
                for (int j = 0; j < N; ++j) {
                    std::complex<double> phase;
                    if (group == Group::kn || sloc == 0) {
                        std::uniform_real_distribution<double> u(0.0, 1.0);
                        double th = 2 * M_PI * u(rng);
                        phase = {std::cos(th), std::sin(th)};
                    } else {
                        std::uniform_int_distribution<int> d(0, sloc - 1);
                        double th = 2 * M_PI * d(rng) / sloc;
                        phase = {std::cos(th), std::sin(th)};
                    }
                    m[(size_t)p[j] * N + j] = phase;
                }
                return m;
            }
            case Group::on: return gaussian_q(N, false);
            case Group::un: return gaussian_q(N, true);
            case Group::bn: {
                // conjugate a Haar O_{N-1} sample, embedded as 1 (+) v, by a
                // fixed orthogonal F with first column the normalized all-ones
                CplxMat v = gaussian_q(N - 1, false);
                CplxMat emb(N * (size_t)N, 0.0);
                emb[0] = 1.0;
                for (int i = 0; i < N - 1; ++i)
                    for (int j = 0; j < N - 1; ++j)
                        emb[(size_t)(i + 1) * N + (j + 1)] = v[(size_t)i * (N - 1) + j];
                const CplxMat& F = fourier_like();
                // F emb F^T
                CplxMat t(N * (size_t)N, 0.0), out(N * (size_t)N, 0.0);
                for (int i = 0; i < N; ++i)
                    for (int k = 0; k < N; ++k) {
                        if (F[(size_t)i * N + k] == 0.0) continue;
                        for (int j = 0; j < N; ++j)
                            t[(size_t)i * N + j] += F[(size_t)i * N + k] * emb[(size_t)k * N + j];
                    }
                for (int i = 0; i < N; ++i)
                    for (int k = 0; k < N; ++k)
                        for (int j = 0; j < N; ++j)
                            out[(size_t)i * N + j] += t[(size_t)i * N + k] * F[(size_t)j * N + k];
                return out;
            }
        }
        throw std::logic_error("sample: unhandled group");
    }

  private:
    // Haar via Gram-Schmidt of an iid Gaussian matrix; the triangular factor
    // has a positive diagonal by construction, which makes the law Haar.
    CplxMat gaussian_q(int n, bool complex_entries) {
        std::normal_distribution<double> g(0.0, 1.0);
        std::vector<std::vector<std::complex<double>>> col(n,
                                                           std::vector<std::complex<double>>(n));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                col[j][i] = complex_entries ? std::complex<double>(g(rng), g(rng))
                                            : std::complex<double>(g(rng), 0.0);
        for (int j = 0; j < n; ++j) {
            for (int p = 0; p < j; ++p) {
                std::complex<double> dot = 0;
                for (int i = 0; i < n; ++i) dot += std::conj(col[p][i]) * col[j][i];
                for (int i = 0; i < n; ++i) col[j][i] -= dot * col[p][i];
            }
            double norm = 0;
            for (int i = 0; i < n; ++i) norm += std::norm(col[j][i]);
            norm = std::sqrt(norm);
            for (int i = 0; i < n; ++i) col[j][i] /= norm;
        }
        CplxMat m(n * (size_t)n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[(size_t)i * n + j] = col[j][i];
        return m;
    }

    const CplxMat& fourier_like() {
        if (!fmat_.empty()) return fmat_;
        // orthonormalize [ones/sqrt(N), e_1, ..., e_{N-1}]
        std::vector<std::vector<double>> col(N, std::vector<double>(N, 0.0));
        for (int i = 0; i < N; ++i) col[0][i] = 1.0 / std::sqrt((double)N);
        for (int j = 1; j < N; ++j) col[j][j] = 1.0;
        for (int j = 1; j < N; ++j) {
            for (int p = 0; p < j; ++p) {
                double dot = 0;
                for (int i = 0; i < N; ++i) dot += col[p][i] * col[j][i];
                for (int i = 0; i < N; ++i) col[j][i] -= dot * col[p][i];
            }
            double norm = 0;
            for (int i = 0; i < N; ++i) norm += col[j][i] * col[j][i];
            norm = std::sqrt(norm);
            for (int i = 0; i < N; ++i) col[j][i] /= norm;
        }
        fmat_.assign(N * (size_t)N, 0.0);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) fmat_[(size_t)i * N + j] = col[j][i];
        return fmat_;
    }

    CplxMat fmat_;
};

struct EmpiricalMoments {
    int k_max = 0;
    double t = 1.0;
    long n_samples = 0;
    std::vector<double> estimates;   // mean of chi_t^k (real part), k = 1..k_max
    std::vector<double> std_errors;  // sample std / sqrt(n)
};

// Monte Carlo moments of the truncated character chi_t = sum_{i < floor(tN)} u_ii.
inline EmpiricalMoments empirical_moments(GroupSampler& sampler, double t, int k_max,
                                          long n_samples) {
    if (t <= 0 || t > 1) throw std::invalid_argument("empirical_moments: need 0 < t <= 1");
    int cut = (int)(t * sampler.N);
    EmpiricalMoments out;
    out.k_max = k_max;
    out.t = t;
    out.n_samples = n_samples;
    std::vector<double> sum(k_max, 0.0), sumsq(k_max, 0.0);
    for (long it = 0; it < n_samples; ++it) {
        CplxMat m = sampler.sample();
        std::complex<double> chi = 0;
        for (int i = 0; i < cut; ++i) chi += m[(size_t)i * sampler.N + i];
        std::complex<double> p = 1;
        for (int k = 0; k < k_max; ++k) {
            p *= chi;
            sum[k] += p.real();
            sumsq[k] += p.real() * p.real();
        }
    }
    for (int k = 0; k < k_max; ++k) {
        double mean = sum[k] / n_samples;
        double var = sumsq[k] / n_samples - mean * mean;
        if (var < 0) var = 0;
        out.estimates.push_back(mean);
        out.std_errors.push_back(std::sqrt(var / n_samples));
    }
    return out;
}

struct RateEstimate {
    double estimate = 0, std_error = 0;
    long n_samples = 0;
};

inline RateEstimate derangement_rate(int N, long n_samples, uint64_t seed) {
    GroupSampler s(Group::sn, N, seed);
    long hits = 0;
    for (long it = 0; it < n_samples; ++it) {
        auto p = s.random_permutation();
        bool fixed = false;
        for (int i = 0; i < N; ++i)
            if (p[i] == i) {
                fixed = true;
                break;
            }
        if (!fixed) ++hits;
    }
    double rate = (double)hits / n_samples;
    return {rate, std::sqrt(rate * (1 - rate) / n_samples), n_samples};
}

struct CompareRow {
    int k = 0;
    double estimate = 0, std_error = 0, exact = 0, z = 0;
};

// z-scores of empirical moments against caller-supplied exact values
// (exact[k-1] for the k-th moment; NaN marks "no exact value").
inline std::vector<CompareRow> compare_exact(GroupSampler& sampler, double t, int k_max,
                                             long n_samples, const std::vector<double>& exact) {
    EmpiricalMoments em = empirical_moments(sampler, t, k_max, n_samples);
    std::vector<CompareRow> rows;
    for (int k = 1; k <= k_max; ++k) {
        CompareRow r;
        r.k = k;
        r.estimate = em.estimates[k - 1];
        r.std_error = em.std_errors[k - 1];
        r.exact = k <= (int)exact.size() ? exact[k - 1] : std::nan("");
        r.z = r.std_error > 0 ? (r.estimate - r.exact) / r.std_error : 0.0;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace eqg
