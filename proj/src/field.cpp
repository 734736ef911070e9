#include "listdec/field.hpp"

namespace listdec {

bool is_prime(u64 x) {
    if (x < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL})
        if (x % q == 0) return x == q;
    for (u64 f = 11; f * f <= x; f += 2)
        if (x % f == 0) return false;
    return true;
}

std::vector<u64> prime_factors(u64 x) {
    std::vector<u64> fs;
    for (u64 f = 2; f * f <= x; f += (f == 2 ? 1 : 2)) {
        if (x % f == 0) {
            fs.push_back(f);
            while (x % f == 0) x /= f;
        }
    }
    if (x > 1) fs.push_back(x);
    return fs;
}

namespace {

u32 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = (u64)(((u128)r * a) % p);
        a = (u64)(((u128)a * a) % p);
        e >>= 1;
    }
    return (u32)r;
}

bool has_full_order(u32 g, u32 p, const std::vector<u64>& factors) {
    for (u64 f : factors)
        if (pow_mod(g, (p - 1) / f, p) == 1) return false;
    return true;
}

}  // namespace

u32 find_primitive(u32 p) {
    require(is_prime(p), "find_primitive: p must be prime");
    if (p == 2) return 1;  // the unit group is trivial
    auto factors = prime_factors((u64)p - 1);
    for (u32 g = 2; g < p; ++g)
        if (has_full_order(g, p, factors)) return g;
    throw InvariantError("find_primitive: no primitive root found");  // unreachable for prime p
}

Field::Field(u32 modulus, u32 primitive) : p(modulus) {
    require(modulus >= 2, "field: modulus must be >= 2");
    require((u64)modulus <= (1ULL << 31), "field: modulus must fit in 31 bits");
    require(is_prime(modulus), "field: modulus must be prime");
    barrett = (u64)((((u128)1) << 64) / p);
    if (primitive == 0) {
        alpha = find_primitive(p);
    } else {
        require(primitive < p && primitive > 0, "field: primitive element out of range");
        if (p > 2) {
            auto factors = prime_factors((u64)p - 1);
            require(has_full_order(primitive, p, factors),
                    "field: element does not have order p-1");
        }
        alpha = primitive;
    }
}

u32 Field::inv(u32 a) const {
    require(a % p != 0, "field: division by zero");
    return pow(a % p, (u64)p - 2);
}

u32 Field::binom(u64 n, u64 k) const {
    if (k > n) return 0;
    u32 result = 1 % p;
    // Lucas: multiply the per-digit binomials in base p.
    while (n > 0 || k > 0) {
        u64 nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        kd = kd < nd - kd ? kd : nd - kd;
        u32 num = 1 % p, den = 1 % p;
        for (u64 t = 1; t <= kd; ++t) {
            num = mul(num, (u32)((nd - kd + t) % p));
            den = mul(den, (u32)t);
        }
        result = mul(result, mul(num, inv(den)));
        n /= p;
        k /= p;
    }
    return result;
}

}  // namespace listdec
