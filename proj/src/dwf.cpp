#include "wigner/dwf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wigner {

namespace {

bool is_permutation_of_iota(const std::vector<int>& v) {
    std::vector<bool> seen(v.size(), false);
    for (int x : v) {
        if (x < 0 || static_cast<std::size_t>(x) >= v.size() || seen[static_cast<std::size_t>(x)])
            return false;
        seen[static_cast<std::size_t>(x)] = true;
    }
    return true;
}

// Fisher-Yates with explicit draws so results do not depend on the standard
// library's std::shuffle implementation.
void shuffle_in_place(std::vector<int>& v, std::mt19937_64& gen) {
    for (std::size_t i = v.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(gen() % i);
        std::swap(v[i - 1], v[j]);
    }
}

}  // namespace

QuantumNet QuantumNet::canonical(int d) {
    if (d < 2) throw std::invalid_argument("QuantumNet: d must be at least 2");
    QuantumNet net;
    net.striation_to_basis.resize(static_cast<std::size_t>(d) + 1);
    std::iota(net.striation_to_basis.begin(), net.striation_to_basis.end(), 0);
    net.line_to_vector.assign(static_cast<std::size_t>(d) + 1, std::vector<int>(static_cast<std::size_t>(d)));
    for (auto& row : net.line_to_vector) std::iota(row.begin(), row.end(), 0);
    return net;
}

QuantumNet QuantumNet::random(int d, std::uint64_t seed) {
    QuantumNet net = canonical(d);
    std::mt19937_64 gen(seed);
    shuffle_in_place(net.striation_to_basis, gen);
    for (auto& row : net.line_to_vector) shuffle_in_place(row, gen);
    return net;
}

void QuantumNet::validate(int d) const {
    if (d < 2) throw std::invalid_argument("QuantumNet: d must be at least 2");
    if (striation_to_basis.size() != static_cast<std::size_t>(d) + 1 ||
        !is_permutation_of_iota(striation_to_basis))
        throw std::invalid_argument("QuantumNet: striation_to_basis is not a permutation of [0, d]");
    if (line_to_vector.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("QuantumNet: need one line map per striation");
    for (const auto& row : line_to_vector)
        if (row.size() != static_cast<std::size_t>(d) || !is_permutation_of_iota(row))
            throw std::invalid_argument("QuantumNet: line_to_vector row is not a permutation of [0, d)");
}

DensityMatrix DensityMatrix::from_matrix(const CMat& mat, double tol) {
    if (mat.rows() != mat.cols() || mat.rows() < 1)
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    if (tol <= 0) throw std::invalid_argument("DensityMatrix: tolerance must be positive");
    if (hermiticity_error(mat) > tol)
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    if (std::abs(mat.trace() - Complex(1.0)) > tol)
        throw std::invalid_argument("DensityMatrix: trace must be 1");
    // symmetrize before the eigensolve so its own 1e-10 gate cannot trip on
    // asymmetry we already accepted
    const CMat sym = (mat + mat.adjoint()) / 2.0;
    const Spectrum s = hermitian_eig(sym, false);
    if (s.min() < -tol)
        throw std::invalid_argument("DensityMatrix: matrix is not positive semidefinite");
    return DensityMatrix(sym);
}

DensityMatrix DensityMatrix::pure(const CVec& state) {
    const double n = state.norm();
    if (n < 1e-12) throw std::invalid_argument("DensityMatrix: state vector is zero");
    const CVec u = state / n;
    return DensityMatrix(u * u.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
    if (d < 1) throw std::invalid_argument("DensityMatrix: d must be positive");
    return DensityMatrix(CMat::Identity(d, d) / static_cast<double>(d));
}

double DwfMap::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

double DwfMap::min() const {
    if (values.empty()) throw std::logic_error("DwfMap: empty");
    return *std::min_element(values.begin(), values.end());
}

double DwfMap::max() const {
    if (values.empty()) throw std::logic_error("DwfMap: empty");
    return *std::max_element(values.begin(), values.end());
}

PointOperatorIndex geometric_index(const PhaseSpace& ps, const QuantumNet& net,
                                   const PhasePoint& beta) {
    const int d = ps.dim();
    net.validate(d);
    const std::vector<Line> incident = ps.lines_through(beta);
    PointOperatorIndex c;
    c.select.assign(static_cast<std::size_t>(d) + 1, 0);
    for (const Line& line : incident) {
        const int basis = net.striation_to_basis[static_cast<std::size_t>(line.striation_id)];
        c.select[static_cast<std::size_t>(basis)] =
            net.line_to_vector[static_cast<std::size_t>(line.striation_id)]
                              [static_cast<std::size_t>(line.line_id)];
    }
    return c;
}

CMat geometric_point_operator(const MubSet& m, const PhaseSpace& ps, const QuantumNet& net,
                              const PhasePoint& beta) {
    if (m.dim != ps.dim())
        throw std::invalid_argument("geometric_point_operator: MUB and phase space dimensions differ");
    return point_operator(m, geometric_index(ps, net, beta));
}

DwfMap evaluate(const DensityMatrix& rho, const MubSet& m, const PhaseSpace& ps,
                const QuantumNet& net) {
    const int d = ps.dim();
    if (m.dim != d || rho.dim() != d)
        throw std::invalid_argument("evaluate: dimension mismatch between state, MUB and phase space");
    net.validate(d);

    DwfMap w;
    w.dim = d;
    w.values.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int idx = 0; idx < d * d; ++idx) {
        const CMat a = geometric_point_operator(m, ps, net, ps.point(idx));
        w.values[static_cast<std::size_t>(idx)] =
            trace_product(rho.matrix(), a).real() / static_cast<double>(d);
    }
    if (std::abs(w.sum() - 1.0) > 1e-9)
        throw std::runtime_error("evaluate: Wigner values do not sum to 1");
    return w;
}

std::vector<std::vector<double>> line_sums(const DwfMap& w, const PhaseSpace& ps) {
    if (w.dim != ps.dim() ||
        w.values.size() != static_cast<std::size_t>(ps.point_count()))
        throw std::invalid_argument("line_sums: map does not match phase space");
    std::vector<std::vector<double>> sums;
    sums.reserve(ps.striations().size());
    for (const Striation& s : ps.striations()) {
        std::vector<double> row;
        row.reserve(s.lines.size());
        for (const Line& line : s.lines) {
            double total = 0.0;
            for (int p : line.point_indices) total += w.values[static_cast<std::size_t>(p)];
            row.push_back(total);
        }
        sums.push_back(std::move(row));
    }
    return sums;
}

DensityMatrix reconstruct(const DwfMap& w, const MubSet& m, const PhaseSpace& ps,
                          const QuantumNet& net) {
    const int d = ps.dim();
    if (m.dim != d || w.dim != d ||
        w.values.size() != static_cast<std::size_t>(ps.point_count()))
        throw std::invalid_argument("reconstruct: dimension mismatch");
    net.validate(d);

    CMat rho = CMat::Zero(d, d);
    for (int idx = 0; idx < d * d; ++idx)
        rho += w.values[static_cast<std::size_t>(idx)] *
               geometric_point_operator(m, ps, net, ps.point(idx));
    return DensityMatrix::from_matrix(rho);
}

DwfExtrema dwf_extrema(const CensusReport& report) {
    if (report.dim < 2) throw std::invalid_argument("dwf_extrema: empty report");
    return {report.lambda_min / static_cast<double>(report.dim),
            report.lambda_max / static_cast<double>(report.dim)};
}

DwfExtrema dwf_extrema(const ExtremaReport& report) {
    if (report.dim < 2) throw std::invalid_argument("dwf_extrema: empty report");
    return {report.lambda_min / static_cast<double>(report.dim),
            report.lambda_max / static_cast<double>(report.dim)};
}

double nonnegativity_minimum(const MubSet& m, const CVec& state, bool allow_large) {
    const int d = m.dim;
    if (state.size() != d)
        throw std::invalid_argument("nonnegativity_minimum: state dimension mismatch");
    if (std::abs(state.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("nonnegativity_minimum: state must be unit norm");
    if (d > 3 && !allow_large)
        throw std::invalid_argument(
            "nonnegativity_minimum: full enumeration has d^(d+1) operators; pass allow_large for d > 3");

    // <state|A|state> = sum_r |<v_{r,c_r}|state>|^2 - 1, so scan tuples over
    // precomputed per-basis probabilities.
    std::vector<std::vector<double>> prob(static_cast<std::size_t>(d) + 1,
                                          std::vector<double>(static_cast<std::size_t>(d)));
    for (int r = 0; r <= d; ++r)
        for (int k = 0; k < d; ++k)
            prob[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] =
                std::norm(m.vector(r, k).dot(state));

    const int nb = d + 1;
    std::vector<int> c(static_cast<std::size_t>(nb), 0);
    std::vector<double> partial(static_cast<std::size_t>(nb) + 1, 0.0);
    for (int k = 0; k < nb; ++k)
        partial[static_cast<std::size_t>(k) + 1] =
            partial[static_cast<std::size_t>(k)] + prob[static_cast<std::size_t>(k)][0];

    const std::uint64_t total = total_point_operators(d);
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 0;; ++i) {
        best = std::min(best, partial[static_cast<std::size_t>(nb)] - 1.0);
        if (i + 1 == total) break;
        int pos = nb - 1;
        while (c[static_cast<std::size_t>(pos)] == d - 1) {
            c[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        ++c[static_cast<std::size_t>(pos)];
        for (int k = pos; k < nb; ++k)
            partial[static_cast<std::size_t>(k) + 1] =
                partial[static_cast<std::size_t>(k)] +
                prob[static_cast<std::size_t>(k)][static_cast<std::size_t>(c[static_cast<std::size_t>(k)])];
    }
    return best;
}

}  // namespace wigner
