#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace heis {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Rat rat_pow(const Rat& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: 0^negative");
        Rat inv = Rat(denominator(base), numerator(base));
        return rat_pow(inv, -e);
    }
    Rat acc = 1;
    for (int i = 0; i < e; ++i) acc *= base;
    return acc;
}

inline Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    Int num = 1, den = 1;
    for (int i = 0; i < r; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return num / den;
}

// binomial(k, r) for possibly negative k: k(k-1)...(k-r+1)/r!
inline Rat binomial_any(int k, int r) {
    if (r < 0) return 0;
    Rat num = 1;
    for (int i = 0; i < r; ++i) num *= Rat(k - i);
    return num / Rat(factorial(r));
}

inline std::string rat_str(const Rat& r) { return r.str(); }

// Parses "p" or "p/q".
inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

}  // namespace heis
