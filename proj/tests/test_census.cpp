#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "wigner/census.hpp"
#include "wigner/linalg.hpp"
#include "wigner/mub.hpp"

using namespace wigner;

TEST_SUITE("census") {

TEST_CASE("index arithmetic") {
    CHECK(total_point_operators(2) == 8);
    CHECK(total_point_operators(3) == 81);
    CHECK(total_point_operators(5) == 15625);
    CHECK(total_point_operators(7) == 5764801);
    CHECK(total_point_operators(8) == 134217728);
    CHECK_THROWS_AS(total_point_operators(1), std::invalid_argument);

    // select[0] is the most significant digit
    CHECK(PointOperatorIndex::from_linear(0, 3).select == std::vector<int>{0, 0, 0, 0});
    CHECK(PointOperatorIndex::from_linear(27, 3).select == std::vector<int>{1, 0, 0, 0});
    CHECK(PointOperatorIndex::from_linear(80, 3).select == std::vector<int>{2, 2, 2, 2});
    CHECK(PointOperatorIndex::from_linear(5, 2).select == std::vector<int>{1, 0, 1});

    std::mt19937_64 gen(11);
    for (int d : {2, 3, 4, 5, 7}) {
        const std::uint64_t total = total_point_operators(d);
        for (int rep = 0; rep < 50; ++rep) {
            const std::uint64_t linear = gen() % total;
            const PointOperatorIndex c = PointOperatorIndex::from_linear(linear, d);
            REQUIRE(c.select.size() == static_cast<std::size_t>(d + 1));
            for (int v : c.select) CHECK((0 <= v && v < d));
            CHECK(c.to_linear(d) == linear);
        }
    }

    CHECK_THROWS_AS(PointOperatorIndex::from_linear(8, 2), std::out_of_range);
    PointOperatorIndex bad{{0, 0, 2}};
    CHECK_THROWS_AS(bad.to_linear(2), std::out_of_range);
}

TEST_CASE("point operators are trace-one Hermitian sums of projectors") {
    std::mt19937_64 gen(5);
    for (int d : {2, 3, 4, 5}) {
        const MubSet m = default_mub(d);
        for (int rep = 0; rep < 20; ++rep) {
            const auto c =
                PointOperatorIndex::from_linear(gen() % total_point_operators(d), d);
            const CMat a = point_operator(m, c);
            CHECK(std::abs(a.trace().real() - 1.0) < 1e-10);
            CHECK(std::abs(a.trace().imag()) < 1e-12);
            CHECK(hermiticity_error(a) < 1e-12);

            // <u|A|u> = sum_r |<v_r|u>|^2 - 1 for any unit u
            CVec u(d);
            std::normal_distribution<double> gauss;
            for (int j = 0; j < d; ++j) u(j) = Complex(gauss(gen), gauss(gen));
            u.normalize();
            double expect = -1.0;
            for (int r = 0; r <= d; ++r) expect += std::norm(m.vector(r, c.select[r]).dot(u));
            CHECK(std::abs(rayleigh(a, u) - expect) < 1e-10);
        }
    }

    CHECK_THROWS_AS(point_operator(default_mub(2), PointOperatorIndex{{0, 0}}),
                    std::invalid_argument);
}

TEST_CASE("d=2: a single class with closed-form spectrum") {
    const CensusReport r = census(default_mub(2));
    CHECK(r.dim == 2);
    CHECK(r.total_operators == 8);
    REQUIRE(r.classes.size() == 1);
    const SpectrumClass& cls = r.classes[0];
    CHECK(cls.count == 8);
    CHECK(cls.has_representative);
    CHECK(cls.representative_index == 0);

    const double lo = (1.0 - std::sqrt(3.0)) / 2.0;
    const double hi = (1.0 + std::sqrt(3.0)) / 2.0;
    CHECK(cls.representative_eigenvalues(0) == doctest::Approx(lo).epsilon(1e-9));
    CHECK(cls.representative_eigenvalues(1) == doctest::Approx(hi).epsilon(1e-9));
    CHECK(r.lambda_min == doctest::Approx(lo).epsilon(1e-9));
    CHECK(r.lambda_max == doctest::Approx(hi).epsilon(1e-9));
    CHECK(r.sum_lambda_max == doctest::Approx(8.0 * hi).epsilon(1e-9));

    // all eight operators tie up to machine noise; the argmin/argmax indices
    // must simply reproduce the recorded extrema when rebuilt
    CHECK(r.argmin_index < 8);
    CHECK(r.argmax_index < 8);
    const MubSet m = default_mub(2);
    CHECK(hermitian_eig(point_operator(m, PointOperatorIndex::from_linear(r.argmin_index, 2)), false)
              .min() == r.lambda_min);
    CHECK(hermitian_eig(point_operator(m, PointOperatorIndex::from_linear(r.argmax_index, 2)), false)
              .max() == r.lambda_max);
}

TEST_CASE("d=3: two classes with golden-ratio and {-1,1,1} spectra") {
    const CensusReport r = census(default_mub(3));
    CHECK(r.total_operators == 81);
    REQUIRE(r.classes.size() == 2);

    // canonical order: descending lambda_min
    const SpectrumClass& golden = r.classes[0];
    const SpectrumClass& flat = r.classes[1];
    CHECK(golden.count == 72);
    CHECK(flat.count == 9);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    CHECK(golden.representative_eigenvalues(0) == doctest::Approx(1.0 - phi).epsilon(1e-9));
    CHECK(golden.representative_eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(golden.representative_eigenvalues(2) == doctest::Approx(phi).epsilon(1e-9));

    CHECK(flat.representative_eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(flat.representative_eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(flat.representative_eigenvalues(2) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK(r.lambda_min == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(r.lambda_max == doctest::Approx(phi).epsilon(1e-9));
}

TEST_CASE("d=4: three classes, 320/320/384") {
    const CensusReport r = census(default_mub(4));
    CHECK(r.total_operators == 1024);
    REQUIRE(r.classes.size() == 3);

    CHECK(r.classes[0].count == 320);
    CHECK(r.classes[1].count == 320);
    CHECK(r.classes[2].count == 384);

    const std::vector<std::vector<double>> spectra = {
        {-0.50000, -0.50000, 0.13397, 1.86603},
        {-0.86603, -0.50000, 0.86603, 1.50000},
        {-0.89680, -0.14204, 0.27877, 1.76007},
    };
    for (std::size_t i = 0; i < spectra.size(); ++i) {
        REQUIRE(r.classes[i].representative_eigenvalues.size() == 4);
        for (int j = 0; j < 4; ++j)
            CHECK(std::abs(r.classes[i].representative_eigenvalues(j) - spectra[i][j]) <= 1e-4);
    }

    std::uint64_t total = 0;
    for (const auto& cls : r.classes) total += cls.count;
    CHECK(total == 1024);
}

TEST_CASE("class census is independent of the worker split") {
    for (int d : {3, 4}) {
        const MubSet m = default_mub(d);
        ScanOptions one, two, eight;
        one.workers = 1;
        two.workers = 2;
        eight.workers = 8;
        const CensusReport a = census(m, one);
        const CensusReport b = census(m, two);
        const CensusReport c = census(m, eight);
        CHECK(census_equal(a, b));
        CHECK(census_equal(a, c));
        CHECK(a.lambda_min == b.lambda_min);
        CHECK(a.lambda_max == c.lambda_max);
        CHECK(a.argmin_index == b.argmin_index);
        CHECK(a.argmax_index == c.argmax_index);
        CHECK(a.sum_lambda_max == doctest::Approx(b.sum_lambda_max).epsilon(1e-12));
        CHECK(b.workers == 2);
        CHECK(c.workers == 8);
    }
}

TEST_CASE("census_equal distinguishes a perturbed MUB") {
    const CensusReport clean = census(default_mub(2));

    MubSet bent = default_mub(2);
    CVec v = bent.vector(2, 0);
    v(0) += 1e-3;
    v.normalize();
    bent.bases[2][0] = v;
    ScanOptions loose;
    loose.mub_tolerance = 1.0;
    const CensusReport dirty = census(bent, loose);
    CHECK_FALSE(census_equal(clean, dirty));

    const CensusReport d3 = census(default_mub(3));
    CHECK_THROWS_AS(census_equal(clean, d3), std::invalid_argument);
}

TEST_CASE("representative cap bounds stored spectra, not counts") {
    ScanOptions opts;
    opts.representative_cap = 1;
    const CensusReport r = census(default_mub(3), opts);
    REQUIRE(r.classes.size() == 2);
    CHECK(r.classes[0].count + r.classes[1].count == 81);
    int with_rep = 0;
    for (const auto& cls : r.classes)
        if (cls.has_representative) ++with_rep;
    CHECK(with_rep == 1);
    // keys still expose rounded spectra
    for (const auto& cls : r.classes) {
        CHECK(cls.spectrum().size() == 3);
        CHECK(cls.lambda_min() <= cls.lambda_max());
    }
}

TEST_CASE("scan stats and argmin oracle") {
    const MubSet m = default_mub(4);
    const CensusReport r = census(m);
    CHECK(r.stats.spot_checks > 0);
    CHECK(r.stats.max_trace_dev < 1e-9);
    CHECK(r.stats.max_hermiticity_dev < 1e-9);

    // reconstruct the claimed extremal operators and confirm their spectra
    const auto cmin = PointOperatorIndex::from_linear(r.argmin_index, 4);
    const auto cmax = PointOperatorIndex::from_linear(r.argmax_index, 4);
    CHECK(hermitian_eig(point_operator(m, cmin), false).min() ==
          doctest::Approx(r.lambda_min).epsilon(1e-12));
    CHECK(hermitian_eig(point_operator(m, cmax), false).max() ==
          doctest::Approx(r.lambda_max).epsilon(1e-12));
}

TEST_CASE("extrema-only scan agrees with the census") {
    for (int d : {2, 3, 4}) {
        const MubSet m = default_mub(d);
        const CensusReport full = census(m);
        const ExtremaReport ext = extremal_eigenvalues(m);
        CHECK(ext.lambda_min == full.lambda_min);
        CHECK(ext.lambda_max == full.lambda_max);
        CHECK(ext.argmin_index == full.argmin_index);
        CHECK(ext.argmax_index == full.argmax_index);
        CHECK(ext.sum_lambda_max == doctest::Approx(full.sum_lambda_max).epsilon(1e-12));
        CHECK(ext.total_operators == full.total_operators);
    }
}

TEST_CASE("progress callback reaches the total") {
    ScanOptions opts;
    opts.workers = 2;
    std::uint64_t last = 0;
    std::uint64_t total_seen = 0;
    opts.progress = [&](std::uint64_t done, std::uint64_t total) {
        last = done;
        total_seen = total;
    };
    census(default_mub(3), opts);
    CHECK(last == 81);
    CHECK(total_seen == 81);
}

TEST_CASE("scan validates its MUB input") {
    MubSet broken = default_mub(2);
    broken.bases[1] = broken.bases[0];
    CHECK_THROWS_AS(census(broken), std::invalid_argument);
}

}  // TEST_SUITE
