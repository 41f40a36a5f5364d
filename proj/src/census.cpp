#include "wigner/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

namespace wigner {

std::uint64_t total_point_operators(int d) {
    if (d < 2) throw std::invalid_argument("total_point_operators: d must be at least 2");
    std::uint64_t total = 1;
    for (int k = 0; k < d + 1; ++k) {
        if (total > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(d))
            throw std::overflow_error("total_point_operators: d^(d+1) overflows 64 bits");
        total *= static_cast<std::uint64_t>(d);
    }
    return total;
}

PointOperatorIndex PointOperatorIndex::from_linear(std::uint64_t linear, int d) {
    const std::uint64_t total = total_point_operators(d);
    if (linear >= total)
        throw std::out_of_range("PointOperatorIndex: linear index exceeds d^(d+1)");
    PointOperatorIndex c;
    c.select.assign(static_cast<std::size_t>(d) + 1, 0);
    for (int k = d; k >= 0; --k) {
        c.select[static_cast<std::size_t>(k)] = static_cast<int>(linear % d);
        linear /= static_cast<std::uint64_t>(d);
    }
    return c;
}

std::uint64_t PointOperatorIndex::to_linear(int d) const {
    if (d < 2) throw std::invalid_argument("PointOperatorIndex: d must be at least 2");
    std::uint64_t linear = 0;
    for (int s : select) {
        if (s < 0 || s >= d)
            throw std::out_of_range("PointOperatorIndex: selector out of range");
        linear = linear * static_cast<std::uint64_t>(d) + static_cast<std::uint64_t>(s);
    }
    return linear;
}

CMat point_operator(const MubSet& m, const PointOperatorIndex& c) {
    const int d = m.dim;
    if (c.select.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("point_operator: selector needs one entry per basis");
    CMat a = -CMat::Identity(d, d);
    for (int r = 0; r <= d; ++r) {
        const CVec& v = m.vector(r, c.select[static_cast<std::size_t>(r)]);
        a.noalias() += v * v.adjoint();
    }
    return a;
}

namespace {

struct ExtremaAcc {
    double lmin = std::numeric_limits<double>::infinity();
    double lmax = -std::numeric_limits<double>::infinity();
    std::uint64_t argmin = 0;
    std::uint64_t argmax = 0;
    long double sum_lmax = 0.0L;

    void consume(std::uint64_t idx, const RVec& ev) {
        const double lo = ev(0);
        const double hi = ev(ev.size() - 1);
        if (lo < lmin) {
            lmin = lo;
            argmin = idx;
        }
        if (hi > lmax) {
            lmax = hi;
            argmax = idx;
        }
        sum_lmax += hi;
    }

    // `later` covers strictly larger indices, so ties keep this side and the
    // reported arg indices are the smallest in their class.
    void absorb(ExtremaAcc&& later) {
        if (later.lmin < lmin) {
            lmin = later.lmin;
            argmin = later.argmin;
        }
        if (later.lmax > lmax) {
            lmax = later.lmax;
            argmax = later.argmax;
        }
        sum_lmax += later.sum_lmax;
    }
};

struct SpecKey {
    std::array<std::int64_t, 8> v{};
    std::int32_t len = 0;
    bool operator==(const SpecKey&) const = default;
};

struct SpecKeyHash {
    std::size_t operator()(const SpecKey& k) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int32_t i = 0; i < k.len; ++i) {
            h ^= static_cast<std::uint64_t>(k.v[static_cast<std::size_t>(i)]);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

struct ClassAcc {
    std::uint64_t count = 0;
    bool has_rep = false;
    std::uint64_t rep_index = 0;
    RVec rep_eigs;
};

SpecKey round_key(const RVec& ev) {
    SpecKey key;
    key.len = static_cast<std::int32_t>(ev.size());
    for (std::int32_t j = 0; j < key.len; ++j)
        key.v[static_cast<std::size_t>(j)] = std::llround(ev(j) * 1e6);
    return key;
}

struct CensusAcc {
    ExtremaAcc ext;
    std::unordered_map<SpecKey, ClassAcc, SpecKeyHash> classes;
    std::uint64_t rep_budget = 0;
    std::uint64_t reps_stored = 0;

    void consume(std::uint64_t idx, const RVec& ev) {
        ext.consume(idx, ev);
        auto [it, inserted] = classes.try_emplace(round_key(ev));
        ClassAcc& c = it->second;
        ++c.count;
        if (inserted && reps_stored < rep_budget) {
            c.has_rep = true;
            c.rep_index = idx;
            c.rep_eigs = ev;
            ++reps_stored;
        }
    }

    void absorb(CensusAcc&& later) {
        ext.absorb(std::move(later.ext));
        for (auto& [key, lc] : later.classes) {
            auto [it, inserted] = classes.try_emplace(key);
            ClassAcc& c = it->second;
            if (inserted) {
                c.count = lc.count;
                if (lc.has_rep && reps_stored < rep_budget) {
                    c.has_rep = true;
                    c.rep_index = lc.rep_index;
                    c.rep_eigs = std::move(lc.rep_eigs);
                    ++reps_stored;
                }
            } else {
                c.count += lc.count;
                // this side saw the class first (smaller indices); keep its
                // representative when present
                if (!c.has_rep && lc.has_rep && reps_stored < rep_budget) {
                    c.has_rep = true;
                    c.rep_index = lc.rep_index;
                    c.rep_eigs = std::move(lc.rep_eigs);
                    ++reps_stored;
                }
            }
        }
        later.classes.clear();
    }
};

void merge_stats(ScanStats& into, const ScanStats& from) {
    into.spot_checks += from.spot_checks;
    into.max_trace_dev = std::max(into.max_trace_dev, from.max_trace_dev);
    into.max_hermiticity_dev = std::max(into.max_hermiticity_dev, from.max_hermiticity_dev);
}

/// Runs the base-d odometer over [begin, end), maintaining prefix sums
/// prefix[k+1] = prefix[k] + P[k][c[k]] with prefix[0] = -I so each step
/// rebuilds only the suffix that changed (about d/(d-1) matrix adds per
/// operator, amortized).
template <class Acc>
void scan_range(const MubSet& m, const std::vector<std::vector<CMat>>& projs,
                std::uint64_t begin, std::uint64_t end, std::uint64_t stride, Acc& acc,
                ScanStats& stats, std::atomic<std::uint64_t>* done) {
    const int d = m.dim;
    const int nb = d + 1;
    if (begin >= end) return;

    std::vector<int> c(static_cast<std::size_t>(nb), 0);
    std::uint64_t rem = begin;
    for (int k = nb - 1; k >= 0; --k) {
        c[static_cast<std::size_t>(k)] = static_cast<int>(rem % d);
        rem /= static_cast<std::uint64_t>(d);
    }

    std::vector<CMat> prefix(static_cast<std::size_t>(nb) + 1);
    prefix[0] = -CMat::Identity(d, d);
    for (int k = 0; k < nb; ++k)
        prefix[static_cast<std::size_t>(k) + 1] =
            prefix[static_cast<std::size_t>(k)] +
            projs[static_cast<std::size_t>(k)][static_cast<std::size_t>(c[static_cast<std::size_t>(k)])];

    Eigen::SelfAdjointEigenSolver<CMat> solver(d);
    std::uint64_t pending = 0;

    for (std::uint64_t i = begin; i < end; ++i) {
        const CMat& a = prefix[static_cast<std::size_t>(nb)];
        if (i % stride == 0) {
            ++stats.spot_checks;
            stats.max_trace_dev =
                std::max(stats.max_trace_dev, std::abs(a.trace() - Complex(1.0)));
            stats.max_hermiticity_dev =
                std::max(stats.max_hermiticity_dev, hermiticity_error(a));
        }
        solver.compute(a, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("census: eigenvalue solve failed");
        acc.consume(i, solver.eigenvalues());

        if (done != nullptr && ++pending == 32768) {
            done->fetch_add(pending, std::memory_order_relaxed);
            pending = 0;
        }
        if (i + 1 == end) break;

        int pos = nb - 1;
        while (c[static_cast<std::size_t>(pos)] == d - 1) {
            c[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        ++c[static_cast<std::size_t>(pos)];
        for (int k = pos; k < nb; ++k)
            prefix[static_cast<std::size_t>(k) + 1] =
                prefix[static_cast<std::size_t>(k)] +
                projs[static_cast<std::size_t>(k)][static_cast<std::size_t>(c[static_cast<std::size_t>(k)])];
    }
    if (done != nullptr && pending > 0) done->fetch_add(pending, std::memory_order_relaxed);
}

/// Splits [0, total) into contiguous chunks, one per worker, and merges the
/// per-worker accumulators in index order. The merged result is therefore
/// identical for every worker count.
template <class Acc>
double scan_all(const MubSet& m, const ScanOptions& opts, std::vector<Acc>& accs,
                ScanStats& stats, int& workers_used) {
    require_valid_mub(m, opts.mub_tolerance);
    const int d = m.dim;
    if (d > 8) throw std::invalid_argument("scan: dimensions above 8 are not supported");
    const std::uint64_t total = total_point_operators(d);
    const std::uint64_t stride = std::max<std::uint64_t>(1, total / 10000);

    std::vector<std::vector<CMat>> projs(static_cast<std::size_t>(d) + 1);
    for (int r = 0; r <= d; ++r) {
        projs[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) {
            const CVec& v = m.vector(r, k);
            projs[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = v * v.adjoint();
        }
    }

    int workers = std::max(1, opts.workers);
    workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
    workers_used = workers;
    if (accs.size() != static_cast<std::size_t>(workers))
        throw std::logic_error("scan_all: accumulator count must match worker count");

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<ScanStats> wstats(static_cast<std::size_t>(workers));
    auto range_begin = [&](int w) {
        return total / static_cast<std::uint64_t>(workers) * static_cast<std::uint64_t>(w) +
               std::min<std::uint64_t>(static_cast<std::uint64_t>(w),
                                       total % static_cast<std::uint64_t>(workers));
    };

    if (workers == 1 && !opts.progress) {
        scan_range(m, projs, 0, total, stride, accs[0], wstats[0], nullptr);
    } else {
        std::atomic<std::uint64_t> done{0};
        std::atomic<int> alive{workers};
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    scan_range(m, projs, range_begin(w), range_begin(w + 1), stride,
                               accs[static_cast<std::size_t>(w)],
                               wstats[static_cast<std::size_t>(w)], &done);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
                alive.fetch_sub(1, std::memory_order_release);
            });
        }
        while (alive.load(std::memory_order_acquire) > 0) {
            std::this_thread::sleep_for(std::chrono::milliseconds(200));
            if (opts.progress) opts.progress(done.load(std::memory_order_relaxed), total);
        }
        for (auto& t : pool) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
        if (opts.progress) opts.progress(total, total);
    }

    for (int w = 1; w < workers; ++w) accs[0].absorb(std::move(accs[static_cast<std::size_t>(w)]));
    for (const auto& s : wstats) merge_stats(stats, s);

    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

std::vector<double> SpectrumClass::spectrum() const {
    std::vector<double> out;
    out.reserve(key.size());
    if (has_representative) {
        for (Eigen::Index j = 0; j < representative_eigenvalues.size(); ++j)
            out.push_back(representative_eigenvalues(j));
    } else {
        for (std::int64_t k : key) out.push_back(static_cast<double>(k) * 1e-6);
    }
    return out;
}

CensusReport census(const MubSet& m, const ScanOptions& opts) {
    const int workers_requested = std::max(1, opts.workers);
    std::vector<CensusAcc> accs(static_cast<std::size_t>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers_requested),
                                total_point_operators(m.dim))));
    for (auto& a : accs) a.rep_budget = opts.representative_cap;

    CensusReport rep;
    rep.dim = m.dim;
    rep.mub_source = m.source;
    rep.total_operators = total_point_operators(m.dim);
    rep.elapsed_seconds = scan_all(m, opts, accs, rep.stats, rep.workers);

    const CensusAcc& acc = accs[0];
    rep.lambda_min = acc.ext.lmin;
    rep.lambda_max = acc.ext.lmax;
    rep.argmin_index = acc.ext.argmin;
    rep.argmax_index = acc.ext.argmax;
    rep.sum_lambda_max = static_cast<double>(acc.ext.sum_lmax);

    rep.classes.reserve(acc.classes.size());
    for (const auto& [key, c] : acc.classes) {
        SpectrumClass sc;
        sc.key.assign(key.v.begin(), key.v.begin() + key.len);
        sc.count = c.count;
        sc.has_representative = c.has_rep;
        sc.representative_index = c.rep_index;
        sc.representative_eigenvalues = c.rep_eigs;
        rep.classes.push_back(std::move(sc));
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const SpectrumClass& a, const SpectrumClass& b) { return a.key > b.key; });
    return rep;
}

ExtremaReport extremal_eigenvalues(const MubSet& m, const ScanOptions& opts) {
    const int workers_requested = std::max(1, opts.workers);
    std::vector<ExtremaAcc> accs(static_cast<std::size_t>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers_requested),
                                total_point_operators(m.dim))));

    ExtremaReport rep;
    rep.dim = m.dim;
    rep.mub_source = m.source;
    rep.total_operators = total_point_operators(m.dim);
    rep.elapsed_seconds = scan_all(m, opts, accs, rep.stats, rep.workers);

    const ExtremaAcc& acc = accs[0];
    rep.lambda_min = acc.lmin;
    rep.lambda_max = acc.lmax;
    rep.argmin_index = acc.argmin;
    rep.argmax_index = acc.argmax;
    rep.sum_lambda_max = static_cast<double>(acc.sum_lmax);
    return rep;
}

bool census_equal(const CensusReport& a, const CensusReport& b) {
    if (a.dim != b.dim)
        throw std::invalid_argument("census_equal: reports have different dimensions");
    if (a.classes.size() != b.classes.size()) return false;
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
        if (a.classes[i].key != b.classes[i].key) return false;
        if (a.classes[i].count != b.classes[i].count) return false;
    }
    return true;
}

}  // namespace wigner
