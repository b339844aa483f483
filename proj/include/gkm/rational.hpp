#ifndef GKM_RATIONAL_HPP
#define GKM_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace gkm {

using BigInt = boost::multiprecision::mpz_int;

/// Exact rational scalar. GMP keeps values in lowest terms with a positive
/// denominator; all arithmetic is exact.
using Rational = boost::multiprecision::mpq_rational;

/// Parses "p", "-p" or "p/q". The GMP string constructor does not
/// canonicalize, so we go through an explicit division.
inline Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) {
            throw std::invalid_argument("zero denominator in rational \"" + text + "\"");
        }
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("cannot parse rational \"" + text + "\"");
    }
}

/// Canonical rendering: "p" when the denominator is 1, "p/q" otherwise.
inline std::string format_rational(const Rational& value) {
    if (denominator(value) == 1) {
        return numerator(value).str();
    }
    return numerator(value).str() + "/" + denominator(value).str();
}

} // namespace gkm

#endif // GKM_RATIONAL_HPP
