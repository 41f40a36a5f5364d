#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "wigner/pauli.hpp"

using namespace wigner;

namespace {

// all non-identity words on n qubits
std::vector<PauliString> all_words(int n) {
    const char letters[4] = {'1', 'X', 'Z', 'Y'};
    std::vector<PauliString> out;
    int total = 1;
    for (int i = 0; i < n; ++i) total *= 4;
    for (int code = 1; code < total; ++code) {
        std::string w(static_cast<std::size_t>(n), '1');
        int rem = code;
        for (int i = n - 1; i >= 0; --i) {
            w[static_cast<std::size_t>(i)] = letters[rem % 4];
            rem /= 4;
        }
        if (w != std::string(static_cast<std::size_t>(n), '1'))
            out.push_back(PauliString::from_letters(w));
    }
    return out;
}

bool matrices_commute(const PauliString& a, const PauliString& b) {
    const CMat ma = a.matrix();
    const CMat mb = b.matrix();
    return (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
}

std::set<std::string> row_letters(const CommutingSet& row) {
    std::set<std::string> out;
    for (const auto& s : row.strings) out.insert(s.letters());
    return out;
}

}  // namespace

TEST_SUITE("pauli") {

TEST_CASE("letters round trip and matrices") {
    const PauliString x = PauliString::from_letters("X");
    const PauliString y = PauliString::from_letters("Y");
    const PauliString z = PauliString::from_letters("Z");
    CHECK(x.letters() == "X");
    CHECK(y.letters() == "Y");
    CHECK(z.letters() == "Z");
    CHECK(PauliString::from_letters("I").letters() == "1");

    CHECK((x.matrix() - (CMat(2, 2) << 0, 1, 1, 0).finished()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((z.matrix() - (CMat(2, 2) << 1, 0, 0, -1).finished()).cwiseAbs().maxCoeff() == 0.0);
    CHECK((y.matrix() - (CMat(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished())
              .cwiseAbs()
              .maxCoeff() == 0.0);

    // leftmost letter is the most significant tensor factor
    const PauliString xz = PauliString::from_letters("XZ");
    CMat expect(4, 4);
    expect.setZero();
    expect.block(0, 2, 2, 2) = z.matrix();
    expect.block(2, 0, 2, 2) = z.matrix();
    CHECK((xz.matrix() - expect).cwiseAbs().maxCoeff() == 0.0);

    CHECK_THROWS_AS(PauliString::from_letters("XA"), std::invalid_argument);
    CHECK_THROWS_AS(PauliString::from_letters(""), std::invalid_argument);
}

TEST_CASE("symplectic commutation matches matrix commutation") {
    for (int n = 1; n <= 2; ++n) {
        const auto words = all_words(n);
        for (const auto& a : words)
            for (const auto& b : words) CHECK(commutes(a, b) == matrices_commute(a, b));
    }
    // three-qubit sample
    const auto w3 = all_words(3);
    for (std::size_t i = 0; i < w3.size(); i += 7)
        for (std::size_t j = 0; j < w3.size(); j += 5)
            CHECK(commutes(w3[i], w3[j]) == matrices_commute(w3[i], w3[j]));
}

TEST_CASE("phase-free product matches the matrix product up to phase") {
    const auto words = all_words(2);
    for (const auto& a : words) {
        for (const auto& b : words) {
            const PauliString c = phase_free_product(a, b);
            const CMat prod = a.matrix() * b.matrix();
            if (c.is_identity()) {
                // product proportional to I
                CHECK((prod * prod).isApprox(CMat::Identity(4, 4), 1e-12));
                continue;
            }
            const CMat cm = c.matrix();
            // prod = phase * cm with phase in {1, -1, i, -i}
            Complex phase = 0;
            for (int r = 0; r < 4 && phase == Complex(0); ++r)
                for (int s = 0; s < 4 && phase == Complex(0); ++s)
                    if (std::abs(cm(r, s)) > 0.5) phase = prod(r, s) / cm(r, s);
            CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
            CHECK((prod - phase * cm).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("symplectic independence") {
    auto P = [](const char* s) { return PauliString::from_letters(s); };
    CHECK(symplectically_independent({P("Z1"), P("1Z")}));
    CHECK(symplectically_independent({P("XX"), P("ZZ")}));
    CHECK_FALSE(symplectically_independent({P("XX"), P("XX")}));
    CHECK_FALSE(symplectically_independent({P("XX"), P("YY"), P("ZZ")}));
}

TEST_CASE("make_commuting_set validates") {
    auto P = [](const char* s) { return PauliString::from_letters(s); };

    const CommutingSet ok = make_commuting_set({P("XX"), P("YY"), P("ZZ")});
    CHECK(ok.strings.size() == 3);
    CHECK(ok.generators.size() == 2);

    // anticommuting pair
    CHECK_THROWS_AS(make_commuting_set({P("XX"), P("ZX"), P("YX")}), std::invalid_argument);
    // wrong count
    CHECK_THROWS_AS(make_commuting_set({P("XX"), P("YY")}), std::invalid_argument);
    // identity member
    CHECK_THROWS_AS(make_commuting_set({P("11"), P("Z1"), P("1Z")}), std::invalid_argument);
    // duplicate member
    CHECK_THROWS_AS(make_commuting_set({P("XX"), P("XX"), P("ZZ")}), std::invalid_argument);
    // commuting but not closed: XX * YY ~ ZZ, missing
    CHECK_THROWS_AS(make_commuting_set({P("XX"), P("YY"), P("1Z")}), std::invalid_argument);
}

TEST_CASE("single-qubit partition") {
    const auto rows = single_qubit_partition();
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].strings[0].letters() == "Z");
    CHECK(rows[1].strings[0].letters() == "X");
    CHECK(rows[2].strings[0].letters() == "Y");
}

TEST_CASE("two-qubit table") {
    const auto rows = standard_two_qubit_partition();
    REQUIRE(rows.size() == 5);

    const std::vector<std::set<std::string>> expected = {
        {"XX", "X1", "1X"}, {"ZZ", "Z1", "1Z"}, {"YY", "Y1", "1Y"},
        {"XY", "YZ", "ZX"}, {"XZ", "YX", "ZY"},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(row_letters(rows[i]) == expected[i]);

    std::set<std::string> covered;
    for (const auto& row : rows) {
        const auto letters = row_letters(row);
        CHECK(letters.size() == 3);
        covered.insert(letters.begin(), letters.end());
    }
    CHECK(covered.size() == 15);
}

TEST_CASE("three-qubit table covers all 63 words with commuting rows") {
    const auto rows = standard_three_qubit_partition();
    REQUIRE(rows.size() == 9);
    std::set<std::string> covered;
    for (const auto& row : rows) {
        REQUIRE(row.strings.size() == 7);
        CHECK(row.generators.size() == 3);
        for (std::size_t i = 0; i < row.strings.size(); ++i) {
            covered.insert(row.strings[i].letters());
            for (std::size_t j = i + 1; j < row.strings.size(); ++j)
                CHECK(commutes(row.strings[i], row.strings[j]));
        }
    }
    CHECK(covered.size() == 63);

    // matrix-level commutation cross-check on one row
    for (const auto& a : rows[6].strings)
        for (const auto& b : rows[6].strings) CHECK(matrices_commute(a, b));
}

TEST_CASE("enumerate_pauli_partitions finds exactly the six two-qubit partitions") {
    const auto partitions = enumerate_pauli_partitions(2);
    REQUIRE(partitions.size() == 6);

    std::set<std::set<std::set<std::string>>> canon;
    for (const auto& partition : partitions) {
        REQUIRE(partition.size() == 5);
        std::set<std::set<std::string>> rows;
        std::set<std::string> covered;
        for (const auto& row : partition) {
            const auto letters = row_letters(row);
            CHECK(letters.size() == 3);
            rows.insert(letters);
            covered.insert(letters.begin(), letters.end());
        }
        CHECK(covered.size() == 15);
        canon.insert(rows);
    }
    CHECK(canon.size() == 6);  // pairwise distinct

    // the built-in table appears among them
    std::set<std::set<std::string>> table;
    for (const auto& row : standard_two_qubit_partition()) table.insert(row_letters(row));
    CHECK(canon.count(table) == 1);

    // deterministic order
    const auto again = enumerate_pauli_partitions(2);
    REQUIRE(again.size() == partitions.size());
    for (std::size_t i = 0; i < partitions.size(); ++i)
        for (std::size_t r = 0; r < partitions[i].size(); ++r)
            CHECK(partitions[i][r].strings == again[i][r].strings);

    CHECK_THROWS_AS(enumerate_pauli_partitions(3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_pauli_partitions(1), std::invalid_argument);
}

}  // TEST_SUITE
