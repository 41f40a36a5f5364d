#include "wigner/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wigner {

namespace {

using Poly = std::vector<int>;  // coefficients mod p, low degree first

int poly_degree(const Poly& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != 0) return i;
    return -1;
}

// Remainder of a modulo m over Z_p; m must be monic.
Poly poly_mod(Poly a, const Poly& m, int p) {
    int dm = poly_degree(m);
    for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
        int factor = a[da];  // leading coefficient, m is monic
        for (int i = 0; i <= dm; ++i) {
            int j = da - dm + i;
            a[j] = ((a[j] - factor * m[i]) % p + p) % p;
        }
    }
    a.resize(std::max(dm, 1));
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return out;
}

// Every monic polynomial of degree deg over Z_p, coefficients low-to-high.
std::vector<Poly> monic_polys(int p, int deg) {
    std::vector<Poly> out;
    int count = 1;
    for (int i = 0; i < deg; ++i) count *= p;
    for (int v = 0; v < count; ++v) {
        Poly q(deg + 1, 0);
        int t = v;
        for (int i = 0; i < deg; ++i) {
            q[i] = t % p;
            t /= p;
        }
        q[deg] = 1;
        out.push_back(std::move(q));
    }
    return out;
}

bool is_irreducible(const Poly& m, int p, int n) {
    if (n == 1) return true;
    for (int deg = 1; deg <= n / 2; ++deg) {
        for (const Poly& q : monic_polys(p, deg)) {
            Poly r = poly_mod(m, q, p);
            if (poly_degree(r) < 0) return false;
        }
    }
    return true;
}

Poly table_modulus(int p, int n) {
    if (n == 1) return {0, 1};                      // x
    if (p == 2 && n == 2) return {1, 1, 1};         // x^2 + x + 1
    if (p == 2 && n == 3) return {1, 1, 0, 1};      // x^3 + x + 1
    throw std::invalid_argument("no built-in modulus for GF(" + std::to_string(p) + "^" +
                                std::to_string(n) + "); supply one explicitly");
}

std::uint64_t make_signature(int p, int n, const Poly& m) {
    std::uint64_t code = 0;
    for (int i = poly_degree(m); i >= 0; --i) code = code * static_cast<std::uint64_t>(p) + m[i];
    return (static_cast<std::uint64_t>(p) << 56) | (static_cast<std::uint64_t>(n) << 48) | code;
}

}  // namespace

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

FieldSpec::FieldSpec(int p, int n) : FieldSpec(p, n, table_modulus(p, n)) {}

FieldSpec::FieldSpec(int p, int n, std::vector<int> modulus) : p_(p), n_(n), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(p_));
    if (n_ < 1 || n_ > 8) throw std::invalid_argument("extension degree out of range");
    if (static_cast<int>(modulus_.size()) != n_ + 1)
        throw std::invalid_argument("modulus must have degree exactly n");
    for (int& c : modulus_) {
        c = ((c % p_) + p_) % p_;
    }
    if (modulus_[n_] != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(modulus_, p_, n_)) throw std::invalid_argument("modulus is reducible over Z_p");
    d_ = 1;
    for (int i = 0; i < n_; ++i) {
        d_ *= p_;
        if (d_ > 4096) throw std::invalid_argument("field order too large");
    }
    sig_ = make_signature(p_, n_, modulus_);
}

std::string FieldSpec::modulus_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = n_; i >= 0; --i) {
        if (modulus_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || modulus_[i] != 1) os << modulus_[i];
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

void FieldSpec::check_member(const FieldElement& a) const {
    if (a.field_sig != sig_) throw std::invalid_argument("field element belongs to a different field");
}

FieldElement FieldSpec::zero() const { return element(0); }
FieldElement FieldSpec::one() const { return element(1); }

FieldElement FieldSpec::element(int index) const {
    if (index < 0 || index >= d_) throw std::out_of_range("field element index out of range");
    FieldElement e;
    e.field_sig = sig_;
    for (int i = 0; i < n_; ++i) {
        e.coeffs[i] = static_cast<std::uint8_t>(index % p_);
        index /= p_;
    }
    return e;
}

int FieldSpec::index_of(const FieldElement& a) const {
    check_member(a);
    int idx = 0;
    for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a.coeffs[i];
    return idx;
}

FieldElement FieldSpec::from_coeffs(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > n_) throw std::invalid_argument("too many coefficients");
    FieldElement e;
    e.field_sig = sig_;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        e.coeffs[i] = static_cast<std::uint8_t>(((coeffs[i] % p_) + p_) % p_);
    return e;
}

std::vector<FieldElement> FieldSpec::elements() const {
    std::vector<FieldElement> out;
    out.reserve(d_);
    for (int i = 0; i < d_; ++i) out.push_back(element(i));
    return out;
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
    check_member(a);
    check_member(b);
    FieldElement r;
    r.field_sig = sig_;
    for (int i = 0; i < n_; ++i) r.coeffs[i] = static_cast<std::uint8_t>((a.coeffs[i] + b.coeffs[i]) % p_);
    return r;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const { return add(a, neg(b)); }

FieldElement FieldSpec::neg(const FieldElement& a) const {
    check_member(a);
    FieldElement r;
    r.field_sig = sig_;
    for (int i = 0; i < n_; ++i) r.coeffs[i] = static_cast<std::uint8_t>((p_ - a.coeffs[i]) % p_);
    return r;
}

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
    check_member(a);
    check_member(b);
    Poly pa(n_), pb(n_);
    for (int i = 0; i < n_; ++i) {
        pa[i] = a.coeffs[i];
        pb[i] = b.coeffs[i];
    }
    Poly prod = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
    FieldElement r;
    r.field_sig = sig_;
    for (int i = 0; i < n_ && i < static_cast<int>(prod.size()); ++i)
        r.coeffs[i] = static_cast<std::uint8_t>(prod[i]);
    return r;
}

FieldElement FieldSpec::inv(const FieldElement& a) const {
    check_member(a);
    if (is_zero(a)) throw std::domain_error("inverse of zero field element");
    // d <= 4096, so a scan is fine.
    for (int i = 1; i < d_; ++i) {
        FieldElement c = element(i);
        if (mul(a, c) == one()) return c;
    }
    throw std::logic_error("no inverse found; field construction is broken");
}

bool FieldSpec::is_zero(const FieldElement& a) const {
    check_member(a);
    return std::all_of(a.coeffs.begin(), a.coeffs.begin() + n_, [](std::uint8_t c) { return c == 0; });
}

FieldSpec field_of_order(int d) {
    switch (d) {
        case 2: return FieldSpec(2, 1);
        case 3: return FieldSpec(3, 1);
        case 4: return FieldSpec(2, 2);
        case 5: return FieldSpec(5, 1);
        case 7: return FieldSpec(7, 1);
        case 8: return FieldSpec(2, 3);
        default: break;
    }
    if (is_prime(d)) return FieldSpec(d, 1);
    throw std::invalid_argument("no finite field of order " + std::to_string(d) +
                                " is available (not a supported prime power)");
}

}  // namespace wigner
