#include "wigner/qrac.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <vector>

namespace wigner {

namespace {

CVec phase_fixed(CVec v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-9) {
            v *= std::conj(v(i)) / std::abs(v(i));
            break;
        }
    }
    return v;
}

double canonical_unit(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

bool QracReport::has_exact() const { return !std::isnan(p_q_exact); }
bool QracReport::has_empirical() const { return !std::isnan(p_q_empirical); }

QracCode::QracCode(MubSet m) : mub_(std::move(m)) { require_valid_mub(mub_, 1e-8); }

CVec QracCode::encode(const PointOperatorIndex& message) const {
    const CMat a = point_operator(mub_, message);
    const Spectrum s = hermitian_eig(a, true);
    CVec top = s.eigenvectors.col(s.eigenvectors.cols() - 1);
    top.normalize();
    return phase_fixed(std::move(top));
}

QracReport qrac_rate(const MubSet& m, const ScanOptions& opts) {
    const ExtremaReport ext = extremal_eigenvalues(m, opts);
    QracReport rep;
    rep.d = m.dim;
    rep.mub_source = m.source;
    rep.elapsed_seconds = ext.elapsed_seconds;
    rep.workers = ext.workers;
    const double total = static_cast<double>(ext.total_operators);
    rep.p_q_exact =
        (ext.sum_lambda_max + total) / (total * static_cast<double>(m.dim + 1));
    return rep;
}

QracReport simulate(const QracCode& code, std::uint64_t trials, std::uint64_t seed,
                    int workers) {
    if (trials == 0) throw std::invalid_argument("simulate: trials must be at least 1");
    const int d = code.dim();
    const std::uint64_t total = total_point_operators(d);

    // flattened per-basis outcome probabilities, entry r*d + k
    auto outcome_probs = [&](const CVec& psi) {
        std::vector<double> prob(static_cast<std::size_t>(d + 1) * static_cast<std::size_t>(d));
        for (int r = 0; r <= d; ++r)
            for (int k = 0; k < d; ++k)
                prob[static_cast<std::size_t>(r * d + k)] =
                    std::norm(code.mub().vector(r, k).dot(psi));
        return prob;
    };

    const int nworkers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(1, workers)), trials));

    auto run = [&](int w, std::uint64_t local_trials) -> std::uint64_t {
        std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(w)};
        std::mt19937_64 gen(seq);
        std::unordered_map<std::uint64_t, std::vector<double>> cache;
        std::uint64_t successes = 0;
        for (std::uint64_t t = 0; t < local_trials; ++t) {
            const std::uint64_t msg = gen() % total;
            std::vector<double> local;
            const std::vector<double>* prob_ptr = nullptr;
            if (auto it = cache.find(msg); it != cache.end()) {
                prob_ptr = &it->second;
            } else {
                local = outcome_probs(code.encode(PointOperatorIndex::from_linear(msg, d)));
                if (cache.size() < 65536)
                    prob_ptr = &cache.emplace(msg, std::move(local)).first->second;
                else
                    prob_ptr = &local;
            }
            const auto& prob = *prob_ptr;
            const int r = static_cast<int>(gen() % static_cast<std::uint64_t>(d + 1));
            const double u = canonical_unit(gen);
            int outcome = d - 1;
            double cum = 0.0;
            for (int k = 0; k < d; ++k) {
                cum += prob[static_cast<std::size_t>(r * d + k)];
                if (u < cum) {
                    outcome = k;
                    break;
                }
            }
            const int wanted = PointOperatorIndex::from_linear(msg, d)
                                   .select[static_cast<std::size_t>(r)];
            if (outcome == wanted) ++successes;
        }
        return successes;
    };

    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t successes = 0;
    if (nworkers == 1) {
        successes = run(0, trials);
    } else {
        std::vector<std::uint64_t> partial(static_cast<std::size_t>(nworkers), 0);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int w = 0; w < nworkers; ++w) {
            const std::uint64_t lo = trials / static_cast<std::uint64_t>(nworkers) *
                                         static_cast<std::uint64_t>(w) +
                                     std::min<std::uint64_t>(static_cast<std::uint64_t>(w),
                                                             trials % static_cast<std::uint64_t>(nworkers));
            const std::uint64_t hi = trials / static_cast<std::uint64_t>(nworkers) *
                                         static_cast<std::uint64_t>(w + 1) +
                                     std::min<std::uint64_t>(static_cast<std::uint64_t>(w + 1),
                                                             trials % static_cast<std::uint64_t>(nworkers));
            pool.emplace_back(
                [&partial, &run, w, lo, hi]() { partial[static_cast<std::size_t>(w)] = run(w, hi - lo); });
        }
        for (auto& t : pool) t.join();
        for (std::uint64_t s : partial) successes += s;
    }
    const auto t1 = std::chrono::steady_clock::now();

    QracReport rep;
    rep.d = d;
    rep.mub_source = code.mub().source;
    rep.p_q_empirical = static_cast<double>(successes) / static_cast<double>(trials);
    rep.trials = trials;
    rep.seed = seed;
    rep.workers = nworkers;
    rep.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
    return rep;
}

ClassicalSearchResult classical_3to1_optimum() {
    // encoder: bit x of enc is the stored bit for message x in {0..7};
    // decoder: bit (2*i + b) of dec is decoder i's guess on received bit b
    int best = 0;
    int searched = 0;
    for (int enc = 0; enc < 256; ++enc) {
        for (int dec = 0; dec < 64; ++dec) {
            ++searched;
            int hits = 0;
            for (int x = 0; x < 8; ++x) {
                const int b = (enc >> x) & 1;
                for (int i = 0; i < 3; ++i) {
                    const int guess = (dec >> (2 * i + b)) & 1;
                    const int want = (x >> i) & 1;
                    if (guess == want) ++hits;
                }
            }
            best = std::max(best, hits);
        }
    }
    return {static_cast<double>(best) / 24.0, searched};
}

}  // namespace wigner
