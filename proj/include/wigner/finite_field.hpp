#ifndef WIGNER_FINITE_FIELD_HPP
#define WIGNER_FINITE_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace wigner {

/// Element of GF(p^n), stored as the coefficient vector of its polynomial
/// representative (low degree first, residues mod p). Elements remember the
/// field they belong to through a structural signature; operations on
/// elements from different fields throw.
struct FieldElement {
    std::array<std::uint8_t, 8> coeffs{};
    std::uint64_t field_sig = 0;

    bool operator==(const FieldElement&) const = default;
};

/// GF(p^n) with a fixed monic irreducible modulus of degree n over Z_p.
/// All arithmetic is exact integer arithmetic. Immutable after construction.
class FieldSpec {
public:
    /// Uses the built-in modulus table: n=1 -> x, GF(4) -> x^2+x+1,
    /// GF(8) -> x^3+x+1. Throws for non-prime p or for (p,n) pairs with no
    /// table entry.
    FieldSpec(int p, int n);

    /// Same, with a caller-supplied modulus (coefficients low-to-high,
    /// length n+1, monic). Irreducibility is verified by trial division
    /// against every monic polynomial of degree <= n/2.
    FieldSpec(int p, int n, std::vector<int> modulus);

    int p() const { return p_; }
    int n() const { return n_; }
    int order() const { return d_; }
    const std::vector<int>& modulus() const { return modulus_; }
    std::uint64_t signature() const { return sig_; }
    std::string modulus_string() const;

    FieldElement zero() const;
    FieldElement one() const;

    /// Element at position `index` in the canonical order (coefficient
    /// vectors read as base-p integers, ascending).
    FieldElement element(int index) const;
    int index_of(const FieldElement& a) const;
    FieldElement from_coeffs(const std::vector<int>& coeffs) const;

    /// All p^n elements in canonical order: 0 first, 1 second.
    std::vector<FieldElement> elements() const;

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    /// Throws for a = 0.
    FieldElement inv(const FieldElement& a) const;

    bool is_zero(const FieldElement& a) const;
    bool operator==(const FieldSpec& other) const { return sig_ == other.sig_; }

private:
    void check_member(const FieldElement& a) const;

    int p_ = 0;
    int n_ = 0;
    int d_ = 0;
    std::vector<int> modulus_;
    std::uint64_t sig_ = 0;
};

bool is_prime(int p);

/// Field of order d for the supported dimensions {2,3,4,5,7,8}; throws if d
/// is not a power of a prime with a built-in modulus.
FieldSpec field_of_order(int d);

}  // namespace wigner

#endif
