#pragma once

#include <cstdint>

namespace prequant {

// Residues mod p are stored canonically in [0, p).
using Scalar = std::uint32_t;

inline Scalar mod_add(Scalar a, Scalar b, Scalar p) { return (a + b) % p; }

inline Scalar mod_sub(Scalar a, Scalar b, Scalar p) { return (a + p - b % p) % p; }

inline Scalar mod_mul(Scalar a, Scalar b, Scalar p)
{
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
}

inline Scalar mod_neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }

inline Scalar mod_pow(Scalar a, std::uint64_t e, Scalar p)
{
    Scalar r = 1 % p;
    while (e) {
        if (e & 1)
            r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

// Inverse mod a prime via Fermat.
inline Scalar mod_inv(Scalar a, Scalar p) { return mod_pow(a % p, p - 2, p); }

inline bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

// C(n, k) mod p for small n.
inline Scalar mod_binomial(long long n, long long k, Scalar p)
{
    if (k < 0 || k > n)
        return 0;
    Scalar num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num = mod_mul(num, static_cast<Scalar>((n - i) % p), p);
        den = mod_mul(den, static_cast<Scalar>((i + 1) % p), p);
    }
    // den can vanish mod p; use Lucas' theorem instead for safety.
    if (den == 0 || num == 0) {
        Scalar r = 1;
        long long nn = n, kk = k;
        while (nn > 0 || kk > 0) {
            long long nd = nn % p, kd = kk % p;
            if (kd > nd)
                return 0;
            Scalar partial = 1, pden = 1;
            for (long long i = 0; i < kd; ++i) {
                partial = mod_mul(partial, static_cast<Scalar>(nd - i), p);
                pden = mod_mul(pden, static_cast<Scalar>(i + 1), p);
            }
            r = mod_mul(r, mod_mul(partial, mod_inv(pden, p), p), p);
            nn /= p;
            kk /= p;
        }
        return r;
    }
    return mod_mul(num, mod_inv(den, p), p);
}

}  // namespace prequant
