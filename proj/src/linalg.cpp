#include "wigner/linalg.hpp"

namespace wigner {

Spectrum hermitian_eig(const CMat& m, bool with_vectors) {
    if (m.rows() != m.cols()) throw std::invalid_argument("hermitian_eig: matrix is not square");
    if (hermiticity_error(m) > 1e-10) throw std::invalid_argument("hermitian_eig: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMat> solver;
    solver.compute(m, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eig: eigensolver failed");
    Spectrum s;
    s.eigenvalues = solver.eigenvalues();
    if (with_vectors) {
        s.eigenvectors = solver.eigenvectors();
        s.has_vectors = true;
    }
    return s;
}

}  // namespace wigner
