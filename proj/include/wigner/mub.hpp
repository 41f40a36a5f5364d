#ifndef WIGNER_MUB_HPP
#define WIGNER_MUB_HPP

#include <string>
#include <vector>

#include "wigner/linalg.hpp"
#include "wigner/pauli.hpp"

namespace wigner {

/// Complete set of d+1 mutually unbiased bases: each basis orthonormal,
/// every cross-basis overlap |<u|v>|^2 = 1/d.
struct MubSet {
    int dim = 0;
    std::vector<std::vector<CVec>> bases;  // (d+1) bases of d unit vectors
    std::string source;                    // "ivanovic" | "pauli-table" | "file"

    const CVec& vector(int basis, int k) const { return bases.at(basis).at(k); }
    int basis_count() const { return static_cast<int>(bases.size()); }
};

/// Deviation report for the MUB defining relations.
struct MubCheck {
    double max_orthonormality_dev = 0.0;  // same-basis |<v_i|v_j>|^2 vs delta_ij
    double max_unbiasedness_dev = 0.0;    // cross-basis |<u|v>|^2 vs 1/d

    double max_dev() const { return std::max(max_orthonormality_dev, max_unbiasedness_dev); }
    bool pass(double tol) const { return max_dev() <= tol; }
};

/// Quadratic Gauss-phase construction for odd prime d: basis 0 is
/// computational, basis r in 1..d-1 has components exp(2*pi*i*(r*j^2+j*k)/d)
/// / sqrt(d), basis d has components exp(2*pi*i*j*k/d) / sqrt(d).
/// d = 2 is rejected: there the formula collapses two bases onto each other.
MubSet ivanovic_mub(int d);

/// The Z/X/Y eigenbases for a single qubit (d = 2).
MubSet qubit_mub();

/// Common-eigenbasis construction: one basis per commuting row. Requires
/// 2^n + 1 rows jointly covering all 4^n - 1 non-identity words exactly
/// once. For each sign pattern s in {+-1}^n the rank-1 projector
/// prod_k (I + s_k G_k)/2 yields the basis vector at index
/// sum_k (1-s_k)/2 * 2^(n-1-k), phase-fixed so its first nonzero component
/// is real positive.
MubSet mub_from_pauli_table(const std::vector<CommutingSet>& rows);

MubCheck verify_mub(const MubSet& m);

/// The construction used by default for each supported dimension:
/// 2 -> qubit Z/X/Y, {3,5,7} -> ivanovic, 4/8 -> built-in Pauli tables.
MubSet default_mub(int d);

/// Throws unless the set passes verify_mub at `tol`.
void require_valid_mub(const MubSet& m, double tol);

}  // namespace wigner

#endif
