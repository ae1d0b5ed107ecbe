#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "congr/errors.hpp"

namespace congr {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kPrimeLimit = u64(1) << 31; // residues support odd primes p < 2^31

std::string u128_str(u128 v); // decimal

// Deterministic Miller-Rabin, valid for every n < 2^64.
bool is_prime(u64 n);

// A modulus of the form p^k for an odd prime p and 1 <= k <= 4.
// p < 2^31 guarantees p^4 < 2^124, so canonical residues and their sums fit in 128 bits.
struct PrimePower {
    u64 p = 0;
    int k = 0;
    u128 value = 0;
    u64 p_squared = 0; // cached for the wide multiply split

    friend bool operator==(const PrimePower& a, const PrimePower& b) { return a.value == b.value; }
    friend bool operator!=(const PrimePower& a, const PrimePower& b) { return a.value != b.value; }
};

// A validated odd prime 3 <= p < 2^31 carrying p, p^2, p^3, p^4.
class Prime {
public:
    explicit Prime(u64 p);

    u64 value() const { return p_; }
    u64 half() const { return (p_ - 1) / 2; }
    u128 pow(int k) const; // p^k, k in 1..4
    PrimePower modulus(int k) const;

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

private:
    u64 p_;
    u128 pow_[4];
};

// Canonical representative in [0, modulus); all operations preserve this.
struct Residue {
    u128 value = 0;
    PrimePower mod;

    friend bool operator==(const Residue& a, const Residue& b)
    {
        return a.value == b.value && a.mod == b.mod;
    }
    friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }
};

// Raw kernels on canonical values. mulmod handles p^3/p^4 moduli above 2^64 by
// splitting into base-p^2 limbs; the a1*b1*p^4 partial vanishes mod p^k for k >= 3,
// so the 248-bit product never has to be formed.
u128 mulmod(u128 a, u128 b, const PrimePower& m);

inline u128 addmod(u128 a, u128 b, const PrimePower& m)
{
    u128 t = a + b; // both < m <= 2^124, no overflow
    return t >= m.value ? t - m.value : t;
}

inline u128 submod(u128 a, u128 b, const PrimePower& m)
{
    return a >= b ? a - b : a + (m.value - b);
}

inline u128 negmod(u128 a, const PrimePower& m) { return a == 0 ? 0 : m.value - a; }

Residue make_residue(u128 value, const PrimePower& m); // canonicalizes

Residue operator+(const Residue& a, const Residue& b);
Residue operator-(const Residue& a, const Residue& b);
Residue operator*(const Residue& a, const Residue& b);
Residue operator-(const Residue& a);

// Multiplicative inverse by extended Euclid; valid for any p^k modulus.
// Throws NotInvertible when p divides a.
Residue mod_inv(const Residue& a);

// base^exp mod m; exp = 0 yields 1.
Residue mod_pow(const Residue& base, u64 exp);

// Elementwise mod_inv over a list sharing one modulus, with exactly one extended-gcd
// inversion via the prefix-product trick. NotInvertible names the first offending index.
std::vector<Residue> batch_inverse(std::span<const Residue> values);

// Inverses of 1..p-1 modulo p^k, built with one extended-gcd inversion.
// An inverse mod p^k reduced mod p^j (j < k) is the mod-p^j inverse, so one table per
// prime serves every consumer; this is the per-prime table shared by the sums and
// binomial pipelines.
class InverseTable {
public:
    InverseTable(const Prime& p, int k);

    const Prime& prime() const { return prime_; }
    int power() const { return k_; }
    const PrimePower& modulus() const { return m_; }
    bool fits_u64() const { return !narrow_.empty(); }

    // inverse of i mod p^k, 1 <= i < p
    u128 inv(u64 i) const { return fits_u64() ? u128(narrow_[i]) : wide_[i]; }
    u64 inv_narrow(u64 i) const { return narrow_[i]; }

private:
    Prime prime_;
    int k_;
    PrimePower m_;
    std::vector<u64> narrow_; // index 0 unused
    std::vector<u128> wide_;
};

} // namespace congr
