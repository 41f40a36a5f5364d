#ifndef WIGNER_LINALG_HPP
#define WIGNER_LINALG_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace wigner {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;

/// Eigendecomposition of a Hermitian matrix: real eigenvalues ascending,
/// eigenvector columns aligned with them when requested.
struct Spectrum {
    RVec eigenvalues;
    CMat eigenvectors;  // empty when computed values-only
    bool has_vectors = false;

    double min() const { return eigenvalues(0); }
    double max() const { return eigenvalues(eigenvalues.size() - 1); }
};

/// max_ij |M - M^dagger|
template <typename Derived>
double hermiticity_error(const Eigen::MatrixBase<Derived>& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Eigendecomposition of a Hermitian matrix (checked to 1e-10). Eigenvalues
/// ascending; deterministic for identical input.
Spectrum hermitian_eig(const CMat& m, bool with_vectors = true);

/// |v><v|
template <typename Derived>
CMat projector(const Eigen::MatrixBase<Derived>& v) {
    return v * v.adjoint();
}

/// Tr(A B) without forming the product.
template <typename DA, typename DB>
Complex trace_product(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    return (a.transpose().cwiseProduct(b)).sum();
}

/// <v|M|v> for unit v (throws otherwise) and Hermitian M; the imaginary part
/// is discarded, it vanishes by Hermiticity.
template <typename DM, typename DV>
double rayleigh(const Eigen::MatrixBase<DM>& m, const Eigen::MatrixBase<DV>& v) {
    if (std::abs(v.norm() - 1.0) > 1e-10) throw std::invalid_argument("rayleigh: vector is not unit norm");
    const Complex val = (v.adjoint() * (m * v)).value();
    return val.real();
}

}  // namespace wigner

#endif
