#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qtor {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt big_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt big_pow(long base, unsigned long e) { return big_pow(BigInt(base), e); }

// "num" or "num/den", exact.
inline std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

}  // namespace qtor
