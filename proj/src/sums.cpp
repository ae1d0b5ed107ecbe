#include "congr/sums.hpp"

namespace congr {

namespace {

    inline u64 add_red(u64 a, u64 b, u64 m)
    {
        u64 t = a + b; // a, b < m < 2^63
        return t >= m ? t - m : t;
    }

} // namespace

Residue fermat_quotient(const Prime& p, int k)
{
    if (k < 1 || k > 2)
        throw OutOfRange("fermat_quotient: k must be 1 or 2, got " + std::to_string(k));
    const PrimePower lift = p.modulus(k + 1);
    const Residue two = make_residue(2, lift);
    const u128 t = mod_pow(two, p.value() - 1).value;
    const u128 tm1 = t - 1; // t >= 1 since 2 is a unit
    if (tm1 % p.value() != 0)
        throw InternalInvariantViolation("fermat_quotient: 2^(p-1) - 1 not divisible by p");
    return Residue { tm1 / p.value(), p.modulus(k) }; // quotient < p^k
}

SumProfile compute_profile(const Prime& p)
{
    InverseTable inv(p, 2);
    return compute_profile(p, inv);
}

SumProfile compute_profile(const Prime& p, const InverseTable& inv)
{
    if (inv.power() < 2 || inv.prime() != p)
        throw InternalInvariantViolation("compute_profile: inverse table must match p with power >= 2");

    const u64 P = p.value();
    const u64 psq = u64(p.pow(2));
    const u64 half = p.half();
    const bool narrow = inv.fits_u64();

    u64 S = 0, S0 = 0, S1 = 0, H = 0; // mod p^2
    u64 sab[2][2] = { { 0, 0 }, { 0, 0 } }; // mod p, [a][b]
    u64 pair = 0, invsq = 0; // mod p
    u64 pref[2] = { 0, 0 }; // prefix sums of 1/i mod p by parity

    for (u64 j = 1; j < P; ++j) {
        const u64 v2 = narrow ? inv.inv_narrow(j) % psq : u64(inv.inv(j) % psq);
        S = add_red(S, v2, psq);
        const int b = int(j & 1);
        if (b == 0)
            S0 = add_red(S0, v2, psq);
        else
            S1 = add_red(S1, v2, psq);
        if (j <= half)
            H = add_red(H, v2, psq);

        const u64 vp = v2 % P;
        invsq = (invsq + vp * vp) % P; // vp < 2^31
        const u64 t0 = (pref[0] * vp) % P;
        const u64 t1 = (pref[1] * vp) % P;
        sab[0][b] = add_red(sab[0][b], t0, P);
        sab[1][b] = add_red(sab[1][b], t1, P);
        pair = add_red(add_red(pair, t0, P), t1, P);
        pref[b] = add_red(pref[b], vp, P);
    }

    const PrimePower m1 = p.modulus(1);
    const PrimePower m2 = p.modulus(2);
    return SumProfile {
        p,
        fermat_quotient(p, 2),
        Residue { S, m2 },
        Residue { S0, m2 },
        Residue { S1, m2 },
        Residue { H, m2 },
        Residue { sab[0][0], m1 },
        Residue { sab[0][1], m1 },
        Residue { sab[1][0], m1 },
        Residue { sab[1][1], m1 },
        Residue { invsq, m1 },
        Residue { pair, m1 },
    };
}

Residue inverse_square_sum(const Prime& p)
{
    InverseTable inv(p, 1);
    const u64 P = p.value();
    u64 acc = 0;
    for (u64 i = 1; i < P; ++i) {
        const u64 v = inv.inv_narrow(i);
        acc = (acc + v * v) % P;
    }
    return Residue { acc, p.modulus(1) };
}

} // namespace congr
