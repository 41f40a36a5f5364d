#include "wigner/mub.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "wigner/finite_field.hpp"

namespace wigner {

namespace {

CVec phase_fixed(CVec v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        const double mag = std::abs(v(i));
        if (mag > 1e-9) {
            v *= std::conj(v(i)) / mag;
            break;
        }
    }
    return v;
}

}  // namespace

MubSet ivanovic_mub(int d) {
    if (d == 2)
        throw std::invalid_argument(
            "the quadratic-phase construction degenerates at d = 2; use qubit_mub()");
    if (!is_prime(d) || d % 2 == 0) throw std::invalid_argument("odd prime dimension required");

    MubSet m;
    m.dim = d;
    m.source = "ivanovic";
    m.bases.resize(d + 1);

    // basis 0: computational
    for (int k = 0; k < d; ++k) {
        CVec v = CVec::Zero(d);
        v(k) = 1.0;
        m.bases[0].push_back(std::move(v));
    }

    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    auto phase = [&](int units) {  // exp(2*pi*i*units/d)
        const double angle = 2.0 * std::numbers::pi * (units % d) / d;
        return Complex(std::cos(angle), std::sin(angle));
    };

    // bases 1..d-1: quadratic phases r*j^2 + j*k; basis d: linear phases j*k
    for (int r = 1; r <= d; ++r) {
        const int quad = (r == d) ? 0 : r;
        for (int k = 0; k < d; ++k) {
            CVec v(d);
            for (int j = 0; j < d; ++j) v(j) = norm * phase(quad * j * j + j * k);
            m.bases[r].push_back(std::move(v));
        }
    }
    return m;
}

MubSet qubit_mub() {
    MubSet m = mub_from_pauli_table(single_qubit_partition());
    return m;
}

MubSet mub_from_pauli_table(const std::vector<CommutingSet>& rows) {
    if (rows.empty()) throw std::invalid_argument("empty Pauli table");
    const int n = rows[0].strings[0].n;
    const int d = 1 << n;
    if (static_cast<int>(rows.size()) != d + 1)
        throw std::invalid_argument("Pauli table must have 2^n + 1 rows");

    // exact cover of the 4^n - 1 non-identity words
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const CommutingSet& row : rows) {
        for (const PauliString& s : row.strings) {
            if (s.n != n) throw std::invalid_argument("mixed word lengths across rows");
            if (!seen.insert({s.x_bits, s.z_bits}).second)
                throw std::invalid_argument("word " + s.letters() + " appears in more than one row");
        }
    }
    if (seen.size() != static_cast<std::size_t>((1 << (2 * n)) - 1))
        throw std::invalid_argument("rows do not cover all non-identity Pauli words");

    MubSet m;
    m.dim = d;
    m.source = "pauli-table";
    m.bases.resize(d + 1);

    const CMat identity = CMat::Identity(d, d);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<CMat> gen_mats;
        for (const PauliString& g : rows[r].generators) gen_mats.push_back(g.matrix());

        m.bases[r].resize(d);
        for (int idx = 0; idx < d; ++idx) {
            CMat proj = identity;
            for (int k = 0; k < n; ++k) {
                const double sign = ((idx >> (n - 1 - k)) & 1) ? -1.0 : 1.0;
                proj = proj * (0.5 * (identity + sign * gen_mats[k]));
            }
            if (std::abs(proj.trace().real() - 1.0) > 1e-8 || std::abs(proj.trace().imag()) > 1e-8 ||
                (proj * proj - proj).cwiseAbs().maxCoeff() > 1e-8)
                throw std::invalid_argument("sign-pattern projector is not rank 1");

            Eigen::Index best = 0;
            double best_norm = -1.0;
            for (Eigen::Index c = 0; c < d; ++c) {
                const double cn = proj.col(c).norm();
                if (cn > best_norm + 1e-12) {
                    best_norm = cn;
                    best = c;
                }
            }
            m.bases[r][idx] = phase_fixed(proj.col(best) / best_norm);
        }
    }
    return m;
}

MubCheck verify_mub(const MubSet& m) {
    MubCheck check;
    const int d = m.dim;
    const double unbiased = 1.0 / d;
    for (int i = 0; i < m.basis_count(); ++i) {
        for (int k = i; k < m.basis_count(); ++k) {
            for (int a = 0; a < static_cast<int>(m.bases[i].size()); ++a) {
                const int b0 = (i == k) ? a : 0;
                for (int b = b0; b < static_cast<int>(m.bases[k].size()); ++b) {
                    const double overlap = std::norm(m.bases[i][a].dot(m.bases[k][b]));
                    if (i == k) {
                        const double target = (a == b) ? 1.0 : 0.0;
                        check.max_orthonormality_dev =
                            std::max(check.max_orthonormality_dev, std::abs(overlap - target));
                    } else {
                        check.max_unbiasedness_dev =
                            std::max(check.max_unbiasedness_dev, std::abs(overlap - unbiased));
                    }
                }
            }
        }
    }
    return check;
}

MubSet default_mub(int d) {
    switch (d) {
        case 2: return qubit_mub();
        case 3:
        case 5:
        case 7: return ivanovic_mub(d);
        case 4: return mub_from_pauli_table(standard_two_qubit_partition());
        case 8: return mub_from_pauli_table(standard_three_qubit_partition());
        default:
            throw std::invalid_argument("no built-in MUB construction for dimension " + std::to_string(d));
    }
}

void require_valid_mub(const MubSet& m, double tol) {
    if (m.dim < 2) throw std::invalid_argument("MUB dimension must be at least 2");
    if (m.basis_count() != m.dim + 1)
        throw std::invalid_argument("a complete MUB set needs d+1 bases");
    for (const auto& basis : m.bases)
        if (static_cast<int>(basis.size()) != m.dim)
            throw std::invalid_argument("each basis needs exactly d vectors");
    const MubCheck check = verify_mub(m);
    if (!check.pass(tol))
        throw std::invalid_argument("MUB verification failed: max deviation " +
                                    std::to_string(check.max_dev()));
}

}  // namespace wigner
