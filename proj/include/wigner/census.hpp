#ifndef WIGNER_CENSUS_HPP
#define WIGNER_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wigner/linalg.hpp"
#include "wigner/mub.hpp"

namespace wigner {

/// Selector of one basis vector per basis: entry r picks vector select[r]
/// from basis r. The full space of these tuples has d^(d+1) elements and is
/// enumerated as a base-d odometer with select[0] most significant.
struct PointOperatorIndex {
    std::vector<int> select;

    static PointOperatorIndex from_linear(std::uint64_t linear, int d);
    std::uint64_t to_linear(int d) const;

    bool operator==(const PointOperatorIndex&) const = default;
};

/// d^(d+1)
std::uint64_t total_point_operators(int d);

/// A = sum_r |v_{r,select_r}><v_{r,select_r}| - I. Hermitian with trace 1.
CMat point_operator(const MubSet& m, const PointOperatorIndex& c);

struct ScanOptions {
    int workers = 1;
    /// At most this many spectrum classes keep a stored representative;
    /// class counts stay exact regardless.
    std::uint64_t representative_cap = 200000;
    /// Input MUB deviations beyond this abort the scan. Loosen it to census
    /// a deliberately perturbed set.
    double mub_tolerance = 1e-8;
    /// Called periodically with (operators done, total). Optional.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Sampled self-checks performed during a scan (about 1e4 operators per
/// run): trace and Hermiticity deviations of the assembled operators.
struct ScanStats {
    std::uint64_t spot_checks = 0;
    double max_trace_dev = 0.0;
    double max_hermiticity_dev = 0.0;
};

/// Operators sharing the same eigenvalue list after rounding to 1e-6.
struct SpectrumClass {
    std::vector<std::int64_t> key;  // ascending eigenvalues in units of 1e-6
    std::uint64_t count = 0;
    bool has_representative = false;
    std::uint64_t representative_index = 0;  // smallest linear index in the class
    RVec representative_eigenvalues;         // full precision, from the representative

    double lambda_min() const { return static_cast<double>(key.front()) * 1e-6; }
    double lambda_max() const { return static_cast<double>(key.back()) * 1e-6; }
    /// Display eigenvalues: full precision when a representative is stored.
    std::vector<double> spectrum() const;
};

struct CensusReport {
    int dim = 0;
    std::string mub_source;
    std::vector<SpectrumClass> classes;  // sorted by descending lambda_min, then key
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    std::uint64_t argmin_index = 0;
    std::uint64_t argmax_index = 0;
    double sum_lambda_max = 0.0;  // over all operators; feeds the QRAC rate
    std::uint64_t total_operators = 0;
    double elapsed_seconds = 0.0;
    int workers = 1;
    ScanStats stats;
};

/// Extrema-only variant of the scan: same enumeration, O(1) memory.
struct ExtremaReport {
    int dim = 0;
    std::string mub_source;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    std::uint64_t argmin_index = 0;
    std::uint64_t argmax_index = 0;
    double sum_lambda_max = 0.0;
    std::uint64_t total_operators = 0;
    double elapsed_seconds = 0.0;
    int workers = 1;
    ScanStats stats;
};

/// Full scan over all d^(d+1) point operators, streaming: one operator in
/// flight per worker, eigenvalues only, class counts accumulated in private
/// histograms and merged deterministically. The result is independent of
/// the worker count.
CensusReport census(const MubSet& m, const ScanOptions& opts = {});

ExtremaReport extremal_eigenvalues(const MubSet& m, const ScanOptions& opts = {});

/// True iff the two reports agree class-by-class (rounded keys and counts).
/// Throws when the dimensions differ.
bool census_equal(const CensusReport& a, const CensusReport& b);

}  // namespace wigner

#endif
