#include "wigner/pauli.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace wigner {

namespace {

constexpr Complex kI{0.0, 1.0};

CMat single_qubit_matrix(bool x, bool z) {
    CMat m(2, 2);
    if (!x && !z)
        m << 1, 0, 0, 1;
    else if (x && !z)
        m << 0, 1, 1, 0;
    else if (!x && z)
        m << 1, 0, 0, -1;
    else
        m << 0, -kI, kI, 0;
    return m;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

std::string canonical_row_key(const CommutingSet& row) {
    std::vector<std::string> words;
    words.reserve(row.strings.size());
    for (const PauliString& s : row.strings) words.push_back(s.letters());
    std::sort(words.begin(), words.end());
    std::string key;
    for (const std::string& w : words) key += w + "|";
    return key;
}

}  // namespace

PauliString PauliString::from_letters(std::string_view letters) {
    PauliString p;
    p.n = static_cast<int>(letters.size());
    if (p.n < 1 || p.n > 16) throw std::invalid_argument("Pauli word length out of range");
    for (int k = 0; k < p.n; ++k) {
        switch (letters[k]) {
            case '1':
            case 'I':
                break;
            case 'X': p.x_bits |= 1u << k; break;
            case 'Z': p.z_bits |= 1u << k; break;
            case 'Y':
                p.x_bits |= 1u << k;
                p.z_bits |= 1u << k;
                break;
            default: throw std::invalid_argument("invalid Pauli letter in word");
        }
    }
    return p;
}

std::string PauliString::letters() const {
    std::string out(n, '1');
    for (int k = 0; k < n; ++k) {
        const bool x = (x_bits >> k) & 1u;
        const bool z = (z_bits >> k) & 1u;
        if (x && z)
            out[k] = 'Y';
        else if (x)
            out[k] = 'X';
        else if (z)
            out[k] = 'Z';
    }
    return out;
}

CMat PauliString::matrix() const {
    CMat m = single_qubit_matrix((x_bits >> 0) & 1u, (z_bits >> 0) & 1u);
    for (int k = 1; k < n; ++k) m = kron(m, single_qubit_matrix((x_bits >> k) & 1u, (z_bits >> k) & 1u));
    return m;
}

bool commutes(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw std::invalid_argument("Pauli words of different length");
    const std::uint32_t sym = (a.x_bits & b.z_bits) ^ (a.z_bits & b.x_bits);
    return (std::popcount(sym) % 2) == 0;
}

PauliString phase_free_product(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw std::invalid_argument("Pauli words of different length");
    return PauliString{a.n, a.x_bits ^ b.x_bits, a.z_bits ^ b.z_bits};
}

bool symplectically_independent(const std::vector<PauliString>& strings) {
    std::vector<std::uint64_t> rows;
    for (const PauliString& s : strings)
        rows.push_back((static_cast<std::uint64_t>(s.x_bits) << s.n) | s.z_bits);
    // Gaussian elimination over GF(2)
    int rank = 0;
    for (int bit = 63; bit >= 0 && rank < static_cast<int>(rows.size()); --bit) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if ((rows[r] >> bit) & 1u) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            if (r != rank && ((rows[r] >> bit) & 1u)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank == static_cast<int>(rows.size());
}

CommutingSet make_commuting_set(std::vector<PauliString> strings) {
    if (strings.empty()) throw std::invalid_argument("empty commuting set");
    const int n = strings[0].n;
    const std::size_t expected = (1u << n) - 1;
    if (strings.size() != expected)
        throw std::invalid_argument("commuting set must contain 2^n - 1 strings");
    for (const PauliString& s : strings) {
        if (s.n != n) throw std::invalid_argument("mixed word lengths in commuting set");
        if (s.is_identity()) throw std::invalid_argument("identity not allowed in commuting set");
    }
    for (std::size_t i = 0; i < strings.size(); ++i)
        for (std::size_t j = i + 1; j < strings.size(); ++j) {
            if (strings[i] == strings[j]) throw std::invalid_argument("duplicate string in commuting set");
            if (!commutes(strings[i], strings[j]))
                throw std::invalid_argument("strings " + strings[i].letters() + " and " +
                                            strings[j].letters() + " do not commute");
        }

    CommutingSet set;
    set.strings = std::move(strings);
    for (const PauliString& s : set.strings) {
        std::vector<PauliString> candidate = set.generators;
        candidate.push_back(s);
        if (symplectically_independent(candidate)) set.generators.push_back(s);
        if (static_cast<int>(set.generators.size()) == n) break;
    }
    if (static_cast<int>(set.generators.size()) != n)
        throw std::invalid_argument("commuting set does not contain n independent generators");

    // generated group minus identity must equal the set
    std::set<std::pair<std::uint32_t, std::uint32_t>> generated;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        PauliString prod{n, 0, 0};
        for (int k = 0; k < n; ++k)
            if ((mask >> k) & 1u) prod = phase_free_product(prod, set.generators[k]);
        generated.insert({prod.x_bits, prod.z_bits});
    }
    for (const PauliString& s : set.strings)
        if (!generated.count({s.x_bits, s.z_bits}))
            throw std::invalid_argument("commuting set is not closed under multiplication");
    return set;
}

namespace {

std::vector<CommutingSet> rows_from_words(const std::vector<std::vector<const char*>>& table) {
    std::vector<CommutingSet> rows;
    for (const auto& row : table) {
        std::vector<PauliString> strings;
        for (const char* w : row) strings.push_back(PauliString::from_letters(w));
        rows.push_back(make_commuting_set(std::move(strings)));
    }
    return rows;
}

}  // namespace

std::vector<CommutingSet> single_qubit_partition() {
    return rows_from_words({{"Z"}, {"X"}, {"Y"}});
}

std::vector<CommutingSet> standard_two_qubit_partition() {
    return rows_from_words({
        {"XX", "X1", "1X"},
        {"ZZ", "Z1", "1Z"},
        {"YY", "Y1", "1Y"},
        {"XY", "YZ", "ZX"},
        {"XZ", "YX", "ZY"},
    });
}

std::vector<CommutingSet> standard_three_qubit_partition() {
    return rows_from_words({
        {"XXX", "XX1", "X1X", "X11", "1XX", "1X1", "11X"},
        {"XXY", "XYX", "YXX", "YYY", "ZZ1", "Z1Z", "1ZZ"},
        {"XXZ", "XYY", "YZ1", "Y1X", "ZXY", "ZYZ", "1ZX"},
        {"XYZ", "XZX", "YX1", "Y1Y", "ZYX", "ZZZ", "1XY"},
        {"XY1", "X1Z", "YXY", "YZX", "ZXX", "ZZY", "1YZ"},
        {"XZY", "X1Y", "YZZ", "Y1Z", "ZZX", "Z1X", "1Z1"},
        {"XZZ", "XZ1", "YYZ", "YY1", "ZXZ", "ZX1", "11Z"},
        {"YXZ", "YYX", "YZY", "Y11", "1XZ", "1YX", "1ZY"},
        {"ZYY", "ZY1", "Z1Y", "Z11", "1YY", "1Y1", "11Y"},
    });
}

std::vector<std::vector<CommutingSet>> enumerate_pauli_partitions(int n) {
    if (n != 2) throw std::invalid_argument("partition enumeration is implemented for n = 2 only");

    // Symplectic codes 1..15; for two qubits every pairwise-commuting triple
    // of distinct words is {a, b, ab}, so rows are determined by pairs.
    auto code_of = [](const PauliString& s) { return (s.x_bits << 2) | s.z_bits; };
    auto string_of = [](std::uint32_t code) {
        return PauliString{2, (code >> 2) & 3u, code & 3u};
    };
    auto codes_commute = [&](std::uint32_t a, std::uint32_t b) {
        PauliString pa = string_of(a), pb = string_of(b);
        return commutes(pa, pb);
    };

    std::vector<std::vector<std::uint32_t>> found;  // each: 5 rows of 3 codes
    std::vector<std::vector<std::uint32_t>> rows_acc;
    std::uint32_t covered = 0;

    auto recurse = [&](auto&& self) -> void {
        if (covered == 0xFFFE) {  // codes 1..15 all covered
            std::vector<std::uint32_t> flat;
            for (const auto& r : rows_acc) flat.insert(flat.end(), r.begin(), r.end());
            found.push_back(std::move(flat));
            return;
        }
        std::uint32_t a = 1;
        while (covered & (1u << a)) ++a;
        for (std::uint32_t b = a + 1; b <= 15; ++b) {
            if (covered & (1u << b)) continue;
            if (!codes_commute(a, b)) continue;
            const std::uint32_t c = a ^ b;
            if (c <= b || (covered & (1u << c))) continue;
            covered |= (1u << a) | (1u << b) | (1u << c);
            rows_acc.push_back({a, b, c});
            self(self);
            rows_acc.pop_back();
            covered &= ~((1u << a) | (1u << b) | (1u << c));
        }
    };
    recurse(recurse);

    std::vector<std::vector<CommutingSet>> partitions;
    for (const auto& flat : found) {
        std::vector<CommutingSet> rows;
        for (std::size_t r = 0; r < flat.size(); r += 3) {
            std::vector<PauliString> strings{string_of(flat[r]), string_of(flat[r + 1]),
                                             string_of(flat[r + 2])};
            std::sort(strings.begin(), strings.end(),
                      [](const PauliString& x, const PauliString& y) { return x.letters() < y.letters(); });
            rows.push_back(make_commuting_set(std::move(strings)));
        }
        std::sort(rows.begin(), rows.end(), [](const CommutingSet& x, const CommutingSet& y) {
            return canonical_row_key(x) < canonical_row_key(y);
        });
        partitions.push_back(std::move(rows));
    }
    std::sort(partitions.begin(), partitions.end(),
              [](const std::vector<CommutingSet>& x, const std::vector<CommutingSet>& y) {
                  std::vector<std::string> kx, ky;
                  for (const auto& r : x) kx.push_back(canonical_row_key(r));
                  for (const auto& r : y) ky.push_back(canonical_row_key(r));
                  return kx < ky;
              });
    return partitions;
}

}  // namespace wigner
