#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace sympaint {

using Bigint = boost::multiprecision::cpp_int;

inline Bigint binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Bigint r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

inline Bigint bigpow(const Bigint& base, long long exp) {
    if (exp < 0) throw DomainError("negative exponent");
    Bigint r = 1, b = base;
    while (exp > 0) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

}  // namespace sympaint
