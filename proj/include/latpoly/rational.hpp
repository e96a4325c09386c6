#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "latpoly/errors.hpp"

namespace latpoly {

// Arbitrary precision throughout the kernel. Enumeration scales coordinates
// by k and shoelace sums double magnitudes, so fixed-width integers are not
// allowed here; the enumeration engine has its own bounded int64 fast path.
using BigInt = boost::multiprecision::cpp_int;

// cpp_rational keeps gcd-reduced form with positive denominator as a class
// invariant, which is exactly the canonical form we need for structural
// equality of coordinates.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return numerator(r); }
inline BigInt den(const Rat& r) { return denominator(r); }

inline Rat make_rat(BigInt n, BigInt d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(std::move(n), std::move(d));
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

/// Largest integer <= r.
inline BigInt rat_floor(const Rat& r) {
    BigInt q = numerator(r) / denominator(r);
    if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
    return q;
}

/// Smallest integer >= r.
inline BigInt rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline BigInt big_gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_lcm(BigInt a, BigInt b) { return boost::multiprecision::lcm(a, b); }

inline std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

/// Parses "p" or "p/q" (optionally signed). Rejects zero denominators and
/// anything with trailing garbage; accepts non-reduced input and reduces it.
inline Rat parse_rat(std::string_view text) {
    auto bad = [&]() { throw ParseError("bad rational: '" + std::string(text) + "'"); };
    if (text.empty()) bad();
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view part) -> BigInt {
        if (part.empty()) bad();
        std::size_t start = (part[0] == '+' || part[0] == '-') ? 1 : 0;
        if (start == part.size()) bad();
        for (std::size_t j = start; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9') bad();
        return BigInt(std::string(part));
    };
    BigInt n = parse_int(text.substr(0, slash));
    BigInt d = 1;
    if (slash != std::string_view::npos) {
        d = parse_int(text.substr(slash + 1));
        if (d == 0) bad();
    }
    return Rat(n, d);
}

} // namespace latpoly
