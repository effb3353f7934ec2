#pragma once

// Exact scalar types shared by every module: arbitrary-precision integers
// and canonical rationals (gcd(num, den) = 1, den >= 1), backed by GMP.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& z) { return mpz_sgn(z.get_mpz_t()); }
inline int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

inline Integer abs(const Integer& z) { return ::abs(z); }
inline Rational abs(const Rational& q) { return ::abs(q); }

inline Integer pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("pow: zero to negative power");
    Rational r;
    unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    if (e < 0) {
        if (r == 0) throw std::domain_error("pow: zero to negative power");
        r = 1 / r;
    }
    r.canonicalize();
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// log of a positive integer, accurate to double precision even for huge values
inline double log_integer(const Integer& z) {
    if (sign(z) <= 0) throw std::domain_error("log_integer: non-positive argument");
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

inline double log_rational_abs(const Rational& q) {
    if (q == 0) throw std::domain_error("log_rational_abs: zero argument");
    return log_integer(abs(q.get_num())) - log_integer(q.get_den());
}

inline size_t bit_size(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); }

// Parses "a", "-a", "a/b" with optional whitespace.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// v_p(z) for z != 0: the exponent of p in z.
inline long p_adic_valuation(Integer z, const Integer& p) {
    if (z == 0) throw std::domain_error("p_adic_valuation: zero argument");
    Integer r;
    long v = 0;
    for (;;) {
        Integer q;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
        if (r != 0) return v;
        z = q;
        ++v;
    }
}

}  // namespace cremona
