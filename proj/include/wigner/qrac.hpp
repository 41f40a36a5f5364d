#ifndef WIGNER_QRAC_HPP
#define WIGNER_QRAC_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "wigner/census.hpp"
#include "wigner/mub.hpp"

namespace wigner {

/// (d+1) -> d random access code: a message is one symbol per basis
/// (a PointOperatorIndex); Alice sends the top eigenvector of A_message;
/// Bob measures in the basis whose symbol he wants.
class QracCode {
  public:
    explicit QracCode(MubSet m);

    int dim() const { return mub_.dim; }
    const MubSet& mub() const { return mub_; }

    /// Unit top eigenvector of the message's point operator, phase-fixed.
    CVec encode(const PointOperatorIndex& message) const;

  private:
    MubSet mub_;
};

struct QracReport {
    int d = 0;
    double p_q_exact = std::numeric_limits<double>::quiet_NaN();
    double p_q_empirical = std::numeric_limits<double>::quiet_NaN();
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string mub_source;
    double elapsed_seconds = 0.0;
    int workers = 1;

    bool has_exact() const;
    bool has_empirical() const;
};

/// Exact average success rate: p_q = (1/d^(d+1)) (1/(d+1)) sum_alpha
/// (lambda_max^alpha + 1), evaluated by the full extrema scan.
QracReport qrac_rate(const MubSet& m, const ScanOptions& opts = {});

/// Monte Carlo protocol run: uniform message, encode, uniform basis choice,
/// Born-rule outcome, success when the outcome equals the requested symbol.
/// Deterministic given (seed, workers).
QracReport simulate(const QracCode& code, std::uint64_t trials, std::uint64_t seed,
                    int workers = 1);

struct ClassicalSearchResult {
    double optimum = 0.0;
    int protocols_searched = 0;
};

/// Exhaustive search over all deterministic classical 3 -> 1 protocols on
/// bits: 256 encodings x 64 decoder triples. The optimum is exactly 0.75.
ClassicalSearchResult classical_3to1_optimum();

}  // namespace wigner

#endif
