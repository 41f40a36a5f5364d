#ifndef WIGNER_DWF_HPP
#define WIGNER_DWF_HPP

#include <cstdint>
#include <vector>

#include "wigner/census.hpp"
#include "wigner/linalg.hpp"
#include "wigner/mub.hpp"
#include "wigner/phase_space.hpp"

namespace wigner {

/// A choice of Wigner function: which basis each striation measures, and
/// which basis vector each line within a striation stands for. Both maps
/// are bijections; every choice yields a valid quasi-probability.
struct QuantumNet {
    std::vector<int> striation_to_basis;           // permutation of [0, d]
    std::vector<std::vector<int>> line_to_vector;  // per striation, permutation of [0, d)

    static QuantumNet canonical(int d);
    static QuantumNet random(int d, std::uint64_t seed);

    /// Throws std::invalid_argument unless both maps are bijections of the
    /// right sizes for dimension d.
    void validate(int d) const;
};

class DensityMatrix {
  public:
    /// Validates: Hermitian, trace 1, eigenvalues >= -tol, all within tol.
    static DensityMatrix from_matrix(const CMat& mat, double tol = 1e-10);
    /// |state><state| after normalization; throws on a near-zero vector.
    static DensityMatrix pure(const CVec& state);
    static DensityMatrix maximally_mixed(int d);

    int dim() const { return static_cast<int>(mat_.rows()); }
    const CMat& matrix() const { return mat_; }

  private:
    explicit DensityMatrix(CMat m) : mat_(std::move(m)) {}
    CMat mat_;
};

/// Wigner function values on the d x d grid, indexed by PhasePoint::index.
struct DwfMap {
    int dim = 0;
    std::vector<double> values;

    double sum() const;
    double min() const;
    double max() const;
};

/// Index tuple read off the d+1 lines through beta: the line in striation i
/// fixes the vector choice for basis striation_to_basis[i].
PointOperatorIndex geometric_index(const PhaseSpace& ps, const QuantumNet& net,
                                   const PhasePoint& beta);

CMat geometric_point_operator(const MubSet& m, const PhaseSpace& ps, const QuantumNet& net,
                              const PhasePoint& beta);

/// W_beta = (1/d) Tr(rho A_beta) for every phase-space point.
DwfMap evaluate(const DensityMatrix& rho, const MubSet& m, const PhaseSpace& ps,
                const QuantumNet& net);

/// Per-line sums of W, indexed [striation][line]. Under the defining
/// constraint each sum equals the probability of the matching basis outcome.
std::vector<std::vector<double>> line_sums(const DwfMap& w, const PhaseSpace& ps);

/// rho = sum_alpha W_alpha A_alpha; validated on return.
DensityMatrix reconstruct(const DwfMap& w, const MubSet& m, const PhaseSpace& ps,
                          const QuantumNet& net);

struct DwfExtrema {
    double w_min = 0.0;
    double w_max = 0.0;
};

/// W extrema over every point of every net: lambda extrema divided by d.
DwfExtrema dwf_extrema(const CensusReport& report);
DwfExtrema dwf_extrema(const ExtremaReport& report);

/// Exact minimum of <state|A|state> over all d^(d+1) point operators.
/// Enumeration is capped at d <= 3 (8 and 81 operators) unless allow_large.
double nonnegativity_minimum(const MubSet& m, const CVec& state, bool allow_large = false);

}  // namespace wigner

#endif
