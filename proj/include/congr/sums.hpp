#pragma once

#include "congr/modarith.hpp"

namespace congr {

// The full evaluated symbol table of a prime. Single sums live mod p^2, double sums
// mod p. Index parity classes: a = 0 even, a = 1 odd. Double sums run over pairs
// i < j with i ≡ a, j ≡ b (mod 2).
struct SumProfile {
    Prime p;
    Residue q; // Fermat quotient to base 2, lifted mod p^2
    Residue S; // sum of 1/i over 0 < i < p, mod p^2
    Residue S0, S1; // even-/odd-index restrictions of S, mod p^2
    Residue half_sum; // sum of 1/i for 1 <= i <= (p-1)/2, mod p^2
    Residue S00, S01, S10, S11; // double sums of 1/(ij), mod p
    Residue inv_sq_sum; // sum of 1/i^2, mod p
    Residue pair_sum; // sum of 1/(ij) over all pairs i < j, mod p

    friend bool operator==(const SumProfile& a, const SumProfile& b)
    {
        return a.p == b.p && a.q == b.q && a.S == b.S && a.S0 == b.S0 && a.S1 == b.S1
            && a.half_sum == b.half_sum && a.S00 == b.S00 && a.S01 == b.S01
            && a.S10 == b.S10 && a.S11 == b.S11 && a.inv_sq_sum == b.inv_sq_sum
            && a.pair_sum == b.pair_sum;
    }
    friend bool operator!=(const SumProfile& a, const SumProfile& b) { return !(a == b); }
};

// (2^(p-1) - 1)/p reduced mod p^k, k in {1, 2}. Computes 2^(p-1) mod p^(k+1) and
// divides the lifted value exactly by p; a nonzero remainder would contradict
// Fermat's little theorem and throws InternalInvariantViolation.
Residue fermat_quotient(const Prime& p, int k);

// All fields in O(p) multiplications. The double sums are accumulated in one upward
// sweep of parity-split prefix sums: S_ab = sum over j ≡ b of (1/j) * prefix_a(j-1).
SumProfile compute_profile(const Prime& p);

// Same, fed from a shared per-prime inverse table (power >= 2).
SumProfile compute_profile(const Prime& p, const InverseTable& inv);

// Sum of 1/i^2 over 0 < i < p, mod p. Zero for every prime p > 3.
Residue inverse_square_sum(const Prime& p);

} // namespace congr
