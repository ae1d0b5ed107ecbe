#include "congr/modarith.hpp"

#include <algorithm>

namespace congr {

std::string u128_str(u128 v)
{
    if (v == 0)
        return "0";
    char buf[40];
    int n = 0;
    while (v != 0) {
        buf[n++] = char('0' + int(v % 10));
        v /= 10;
    }
    std::string s(buf, buf + n);
    std::reverse(s.begin(), s.end());
    return s;
}

namespace {

    inline u64 mulmod64(u64 a, u64 b, u64 m) { return u64((u128(a) * b) % m); }

    u64 powmod64(u64 base, u64 exp, u64 m)
    {
        u64 r = 1 % m;
        base %= m;
        while (exp != 0) {
            if (exp & 1)
                r = mulmod64(r, base, m);
            base = mulmod64(base, base, m);
            exp >>= 1;
        }
        return r;
    }

    // Extended Euclid; writes a^-1 mod m on success.
    bool try_invert(u128 a, u128 m, u128& out)
    {
        i128 t = 0, nt = 1;
        u128 r = m, nr = a;
        while (nr != 0) {
            u128 q = r / nr;
            i128 t2 = t - i128(q) * nt;
            t = nt;
            nt = t2;
            u128 r2 = r - q * nr;
            r = nr;
            nr = r2;
        }
        if (r != 1)
            return false;
        if (t < 0)
            t += i128(m);
        out = u128(t);
        return true;
    }

} // namespace

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    for (u64 q : { 2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull }) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set below 2^64 (Sinclair)
    for (u64 a : { 2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull }) {
        u64 x = powmod64(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Prime::Prime(u64 p)
    : p_(p)
{
    if (p >= kPrimeLimit)
        throw OutOfRange("Prime: " + std::to_string(p) + " is not below 2^31");
    if (p < 3 || p % 2 == 0)
        throw NotPrime("Prime: " + std::to_string(p) + " is not an odd prime");
    if (!is_prime(p))
        throw NotPrime("Prime: " + std::to_string(p) + " is not prime");
    u128 v = 1;
    for (int i = 0; i < 4; ++i) {
        v *= p;
        pow_[i] = v;
    }
}

u128 Prime::pow(int k) const
{
    if (k < 1 || k > 4)
        throw OutOfRange("Prime::pow: k must be in 1..4, got " + std::to_string(k));
    return pow_[k - 1];
}

PrimePower Prime::modulus(int k) const
{
    return PrimePower { p_, k, pow(k), u64(pow_[1]) };
}

u128 mulmod(u128 a, u128 b, const PrimePower& m)
{
    if ((m.value >> 64) == 0)
        return (u128(u64(a)) * u64(b)) % u64(m.value);

    // m = p^3 or p^4 above 2^64: split a, b into base-p^2 limbs
    const u64 ps = m.p_squared;
    const u64 a0 = u64(a % ps);
    const u64 a1 = u64(a / ps); // < p^(k-2) <= p^2
    const u64 b0 = u64(b % ps);
    const u64 b1 = u64(b / ps);

    const u128 cross = u128(a1) * b0 + u128(a0) * b1; // < 2^125
    const u128 low = u128(a0) * b0; // < p^4

    if (m.k == 4) {
        u128 t = (cross % ps) * ps + low; // < 2 p^4
        return t >= m.value ? t - m.value : t;
    }
    // k == 3: low = q*p^2 + r with q < p^2; a*b == ((cross + q) mod p)*p^2 + r (mod p^3)
    const u64 q = u64(low / ps);
    const u64 r = u64(low % ps);
    const u64 c = u64((cross + q) % m.p);
    return u128(c) * ps + r;
}

Residue make_residue(u128 value, const PrimePower& m)
{
    return Residue { value % m.value, m };
}

namespace {
    inline void require_same(const Residue& a, const Residue& b, const char* op)
    {
        if (a.mod != b.mod)
            throw ModulusMismatch(std::string("Residue ") + op + ": moduli differ ("
                + u128_str(a.mod.value) + " vs " + u128_str(b.mod.value) + ")");
    }
}

Residue operator+(const Residue& a, const Residue& b)
{
    require_same(a, b, "+");
    return Residue { addmod(a.value, b.value, a.mod), a.mod };
}

Residue operator-(const Residue& a, const Residue& b)
{
    require_same(a, b, "-");
    return Residue { submod(a.value, b.value, a.mod), a.mod };
}

Residue operator*(const Residue& a, const Residue& b)
{
    require_same(a, b, "*");
    return Residue { mulmod(a.value, b.value, a.mod), a.mod };
}

Residue operator-(const Residue& a)
{
    return Residue { negmod(a.value, a.mod), a.mod };
}

Residue mod_inv(const Residue& a)
{
    if (a.value % a.mod.p == 0)
        throw NotInvertible("mod_inv: " + u128_str(a.value) + " is divisible by "
            + std::to_string(a.mod.p));
    u128 inv;
    if (!try_invert(a.value, a.mod.value, inv))
        throw InternalInvariantViolation("mod_inv: extended gcd failed on a unit");
    return Residue { inv, a.mod };
}

Residue mod_pow(const Residue& base, u64 exp)
{
    const PrimePower& m = base.mod;
    u128 r = 1;
    u128 b = base.value;
    while (exp != 0) {
        if (exp & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        exp >>= 1;
    }
    return Residue { r, m };
}

std::vector<Residue> batch_inverse(std::span<const Residue> values)
{
    std::vector<Residue> out;
    if (values.empty())
        return out;
    const PrimePower m = values.front().mod;
    for (const Residue& v : values)
        if (v.mod != m)
            throw ModulusMismatch("batch_inverse: mixed moduli");

    const size_t n = values.size();
    std::vector<u128> pref(n);
    u128 acc = 1;
    for (size_t i = 0; i < n; ++i) {
        acc = mulmod(acc, values[i].value, m);
        pref[i] = acc;
    }

    u128 inv_all;
    if (acc % m.p == 0 || !try_invert(acc, m.value, inv_all)) {
        for (size_t i = 0; i < n; ++i)
            if (values[i].value % m.p == 0)
                throw NotInvertible("batch_inverse: element at index " + std::to_string(i)
                    + " is divisible by " + std::to_string(m.p));
        throw InternalInvariantViolation("batch_inverse: product not invertible but all "
                                         "elements coprime");
    }

    out.resize(n);
    u128 t = inv_all;
    for (size_t i = n; i-- > 0;) {
        u128 inv_i = (i == 0) ? t : mulmod(t, pref[i - 1], m);
        out[i] = Residue { inv_i, m };
        t = mulmod(t, values[i].value, m);
    }
    return out;
}

InverseTable::InverseTable(const Prime& p, int k)
    : prime_(p)
    , k_(k)
    , m_(p.modulus(k))
{
    const u64 P = p.value();
    if ((m_.value >> 64) == 0) {
        const u64 m = u64(m_.value);
        narrow_.resize(P);
        u64 acc = 1;
        for (u64 i = 1; i < P; ++i) {
            acc = mulmod64(acc, i, m);
            narrow_[i] = acc; // prefix products, rewritten below
        }
        u128 inv_acc;
        if (!try_invert(acc, m_.value, inv_acc))
            throw InternalInvariantViolation("InverseTable: (p-1)! not invertible mod p^k");
        u64 t = u64(inv_acc);
        for (u64 i = P - 1; i >= 1; --i) {
            u64 inv_i = (i == 1) ? t : mulmod64(t, narrow_[i - 1], m);
            t = mulmod64(t, i, m);
            narrow_[i] = inv_i;
        }
    } else {
        wide_.resize(P);
        u128 acc = 1;
        for (u64 i = 1; i < P; ++i) {
            acc = mulmod(acc, i, m_);
            wide_[i] = acc;
        }
        u128 inv_acc;
        if (!try_invert(acc, m_.value, inv_acc))
            throw InternalInvariantViolation("InverseTable: (p-1)! not invertible mod p^k");
        u128 t = inv_acc;
        for (u64 i = P - 1; i >= 1; --i) {
            u128 inv_i = (i == 1) ? t : mulmod(t, wide_[i - 1], m_);
            t = mulmod(t, i, m_);
            wide_[i] = inv_i;
        }
    }
}

} // namespace congr
