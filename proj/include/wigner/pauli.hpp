#ifndef WIGNER_PAULI_HPP
#define WIGNER_PAULI_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wigner/linalg.hpp"

namespace wigner {

/// Phase-free n-qubit Pauli word. Letter k acts on qubit k (leftmost letter
/// = qubit 0 = most significant tensor factor). Bit k of x_bits/z_bits
/// carries the symplectic representation of letter k.
struct PauliString {
    int n = 0;
    std::uint32_t x_bits = 0;
    std::uint32_t z_bits = 0;

    static PauliString from_letters(std::string_view letters);
    std::string letters() const;

    bool is_identity() const { return x_bits == 0 && z_bits == 0; }
    CMat matrix() const;  // 2^n x 2^n tensor product

    bool operator==(const PauliString&) const = default;
};

bool commutes(const PauliString& a, const PauliString& b);

/// Product up to phase (symplectic sum).
PauliString phase_free_product(const PauliString& a, const PauliString& b);

/// GF(2) independence of the symplectic vectors.
bool symplectically_independent(const std::vector<PauliString>& strings);

/// 2^n - 1 pairwise-commuting non-identity strings, closed under
/// multiplication up to phase, together with n independent generators
/// (first-found in the given order).
struct CommutingSet {
    std::vector<PauliString> strings;
    std::vector<PauliString> generators;
};

/// Validates pairwise commutation, picks generators, and checks that the set
/// is exactly the generated group minus identity. Throws on violations.
CommutingSet make_commuting_set(std::vector<PauliString> strings);

/// The rows {Z}, {X}, {Y}: the single-qubit partition behind the canonical
/// qubit MUB.
std::vector<CommutingSet> single_qubit_partition();

/// Built-in two-qubit partition of the 15 non-identity Pauli words into 5
/// commuting triples (one basis per row).
std::vector<CommutingSet> standard_two_qubit_partition();

/// Built-in three-qubit partition: 9 rows of 7 commuting words covering all
/// 63 non-identity strings.
std::vector<CommutingSet> standard_three_qubit_partition();

/// All partitions of the 15 non-identity two-qubit Pauli words into 5
/// pairwise-commuting triples, in a deterministic canonical order. Only
/// n = 2 is supported.
std::vector<std::vector<CommutingSet>> enumerate_pauli_partitions(int n);

}  // namespace wigner

#endif
