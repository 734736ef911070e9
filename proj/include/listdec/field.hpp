#pragma once

// Arithmetic in GF(p) for a prime p <= 2^31.  Elements are residues stored
// as u32; products fit in 64 bits and are reduced with a Barrett multiplier
// so hot loops never divide.

#include <vector>

#include "listdec/common.hpp"

namespace listdec {

bool is_prime(u64 x);
std::vector<u64> prime_factors(u64 x);

// Smallest g in [1, p) of multiplicative order p-1, found deterministically
// by testing 1, 2, 3, ... against the prime factorization of p-1.
u32 find_primitive(u32 p);

struct Field {
    u32 p = 0;
    u32 alpha = 0;    // primitive element
    u64 barrett = 0;  // floor(2^64 / p)

    explicit Field(u32 modulus) : Field(modulus, 0) {}
    Field(u32 modulus, u32 primitive);  // primitive == 0 means "pick smallest"

    u32 reduce(u64 z) const {
        u64 q = (u64)(((u128)z * barrett) >> 64);
        u64 r = z - q * (u64)p;
        if (r >= p) r -= p;
        return (u32)r;
    }

    u32 add(u32 a, u32 b) const {
        u32 s = a + b;
        if (s >= p) s -= p;
        return s;
    }
    u32 sub(u32 a, u32 b) const { return a >= b ? a - b : a + p - b; }
    u32 neg(u32 a) const { return a == 0 ? 0 : p - a; }
    u32 mul(u32 a, u32 b) const { return reduce((u64)a * b); }

    u32 pow(u32 a, u64 e) const {
        u32 r = 1 % p, x = a;
        while (e) {
            if (e & 1) r = mul(r, x);
            e >>= 1;
            if (e) x = mul(x, x);
        }
        return r;
    }

    u32 inv(u32 a) const;

    // C(n, k) mod p for arbitrary nonnegative n, k via Lucas' decomposition.
    u32 binom(u64 n, u64 k) const;
};

}  // namespace listdec
