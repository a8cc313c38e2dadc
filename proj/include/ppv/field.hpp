#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ppv/errors.hpp"

namespace ppv {

/// Exact rational coefficients. All engine arithmetic is exact; there is
/// no floating point anywhere in the computation paths.
struct RatField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long n) const { return Elem(n); }

    Elem add(const Elem& a, const Elem& b) const { return Elem(a + b); }
    Elem sub(const Elem& a, const Elem& b) const { return Elem(a - b); }
    Elem mul(const Elem& a, const Elem& b) const { return Elem(a * b); }
    Elem neg(const Elem& a) const { return Elem(-a); }
    Elem div(const Elem& a, const Elem& b) const {
        if (b == 0) throw Error("RatField: division by zero");
        return Elem(a / b);
    }
    Elem inv(const Elem& a) const { return div(one(), a); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    static std::string to_string(const Elem& a) { return a.get_str(); }
};

/// F_p with a runtime modulus. Elements are canonical residues in [0,p).
struct PrimeField {
    using Elem = std::uint32_t;

    std::uint32_t p = 0;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t prime) : p(prime) {}

    Elem zero() const { return 0; }
    Elem one() const { return p > 1 ? 1 : 0; }
    Elem from_int(long n) const {
        long r = n % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<Elem>(r);
    }

    Elem add(Elem a, Elem b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p ? Elem(s - p) : Elem(s);
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
    Elem mul(Elem a, Elem b) const {
        return Elem((std::uint64_t(a) * b) % p);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("PrimeField: division by zero");
        // extended Euclid
        long long t = 0, nt = 1, r = p, nr = a;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p;
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    static std::string to_string(Elem a) { return std::to_string(a); }
};

}  // namespace ppv
