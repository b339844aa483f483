#ifndef GKM_MONOMIAL_HPP
#define GKM_MONOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "gkm/rational.hpp"

namespace gkm {

/// Exponent multi-index of a monomial; entry i is the power of variable i.
using Exponents = std::vector<int>;

/// Number of degree-`degree` monomials in `vars` variables,
/// C(degree + vars - 1, vars - 1). `vars` may be 0, where only the empty
/// degree-0 monomial exists.
long long graded_dim(int vars, int degree);

/// All exponent vectors of total degree `degree` in `vars` variables, in the
/// global monomial order: graded lexicographic with variable 0 largest, so
/// within one degree the vectors come out in decreasing lexicographic order
/// (x1^2, x1*x2, x1*x3, x2^2, ...).
std::vector<Exponents> enumerate_monomials(int vars, int degree);

/// "x1^2*x3" style rendering; empty exponent vectors and the zero vector
/// render as "1". Variables are 1-indexed in output.
std::string format_monomial(const Exponents& expo);

/// Enumerated monomial basis of one graded piece, with index lookup.
struct MonomialBasis {
    int vars;
    int degree;
    std::vector<Exponents> list;
    std::map<Exponents, int> index;

    MonomialBasis(int vars_, int degree_);
    long long size() const { return static_cast<long long>(list.size()); }
};

} // namespace gkm

#endif // GKM_MONOMIAL_HPP
