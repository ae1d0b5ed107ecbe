#pragma once

#include <gmpxx.h>

#include "congr/modarith.hpp"

namespace congr {

enum class BinomialKind {
    wolstenholme, // C(2p-1, p-1)
    central, // C(p-1, (p-1)/2), optionally signed by (-1)^((p-1)/2)
};

struct BinomialValue {
    BinomialKind kind;
    int modulus_power; // k in 1..4
    Residue value;

    friend bool operator==(const BinomialValue& a, const BinomialValue& b)
    {
        return a.kind == b.kind && a.modulus_power == b.modulus_power && a.value == b.value;
    }
    friend bool operator!=(const BinomialValue& a, const BinomialValue& b) { return !(a == b); }
};

// C(2p-1, p-1) mod p^k (k in 1..4) as the p-free product of (p+i)/i over 1 <= i < p.
// No numerator or denominator factor is divisible by p, so every inversion is valid.
BinomialValue wolstenholme_binomial_mod(const Prime& p, int k);
BinomialValue wolstenholme_binomial_mod(const Prime& p, int k, const InverseTable& inv);

// C(p-1, (p-1)/2) mod p^k (k in 1..3) as the product of (p-i)/i over 1 <= i <= (p-1)/2.
// With signed_form the result carries the factor (-1)^((p-1)/2) (modular complement
// when the exponent is odd).
BinomialValue central_binomial_mod(const Prime& p, int k, bool signed_form);
BinomialValue central_binomial_mod(const Prime& p, int k, bool signed_form, const InverseTable& inv);

// Exact C(n, r) in arbitrary precision; oracle support. Throws OutOfRange when r > n
// or n exceeds the bound.
mpz_class small_binomial_exact(u64 n, u64 r, u64 n_bound = 1'000'000);

} // namespace congr
