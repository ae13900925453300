#pragma once

#include <cstdint>
#include <stdexcept>

// Arithmetic in the prime field F_p. The modulus is process-global: one
// algebra session runs at one prime (default 32003), tests that sweep primes
// swap it via FieldScope. All values live in [0, p).

namespace tauq {

uint64_t field_prime();
void set_field_prime(uint64_t p); // throws std::invalid_argument unless p is prime

bool is_prime_u64(uint64_t n);

struct FieldScope {
    uint64_t saved;
    explicit FieldScope(uint64_t p) : saved(field_prime()) { set_field_prime(p); }
    ~FieldScope() { set_field_prime(saved); }
    FieldScope(const FieldScope&) = delete;
    FieldScope& operator=(const FieldScope&) = delete;
};

struct Fp {
    uint32_t v = 0;

    Fp() = default;
    explicit Fp(uint64_t raw) : v(static_cast<uint32_t>(raw % field_prime())) {}
    static Fp from_int(long long x) {
        long long p = static_cast<long long>(field_prime());
        long long r = x % p;
        if (r < 0) r += p;
        Fp e; e.v = static_cast<uint32_t>(r); return e;
    }

    bool is_zero() const { return v == 0; }

    friend Fp operator+(Fp a, Fp b) {
        uint64_t s = static_cast<uint64_t>(a.v) + b.v;
        uint64_t p = field_prime();
        if (s >= p) s -= p;
        Fp e; e.v = static_cast<uint32_t>(s); return e;
    }
    friend Fp operator-(Fp a, Fp b) {
        uint64_t p = field_prime();
        uint64_t s = static_cast<uint64_t>(a.v) + p - b.v;
        if (s >= p) s -= p;
        Fp e; e.v = static_cast<uint32_t>(s); return e;
    }
    friend Fp operator*(Fp a, Fp b) {
        Fp e; e.v = static_cast<uint32_t>(static_cast<uint64_t>(a.v) * b.v % field_prime()); return e;
    }
    Fp operator-() const { return Fp::from_int(0) - *this; }
    Fp& operator+=(Fp o) { *this = *this + o; return *this; }
    Fp& operator-=(Fp o) { *this = *this - o; return *this; }
    Fp& operator*=(Fp o) { *this = *this * o; return *this; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
};

Fp fp_inv(Fp a); // throws std::domain_error on 0

inline Fp fp_one() { Fp e; e.v = 1; return e; }

} // namespace tauq
