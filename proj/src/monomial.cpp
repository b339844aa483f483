#include "gkm/monomial.hpp"

#include <stdexcept>

namespace gkm {

long long graded_dim(int vars, int degree) {
    if (vars < 0 || degree < 0) {
        throw std::invalid_argument("graded_dim: negative arguments");
    }
    if (vars == 0) {
        return degree == 0 ? 1 : 0;
    }
    // C(degree + vars - 1, vars - 1), exact
    BigInt result = 1;
    for (int i = 1; i <= vars - 1; ++i) {
        result *= degree + i;
        result /= i;
    }
    return result.convert_to<long long>();
}

namespace {

void enumerate_rec(int vars, int remaining, Exponents& prefix, std::vector<Exponents>& out) {
    if (vars == 0) {
        if (remaining == 0) {
            out.push_back(prefix);
        }
        return;
    }
    if (vars == 1) {
        prefix.push_back(remaining);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    // highest power of the current variable first: decreasing lex order
    for (int e = remaining; e >= 0; --e) {
        prefix.push_back(e);
        enumerate_rec(vars - 1, remaining - e, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Exponents> enumerate_monomials(int vars, int degree) {
    if (vars < 0 || degree < 0) {
        throw std::invalid_argument("enumerate_monomials: negative arguments");
    }
    std::vector<Exponents> out;
    Exponents prefix;
    enumerate_rec(vars, degree, prefix, out);
    return out;
}

std::string format_monomial(const Exponents& expo) {
    std::string out;
    for (std::size_t i = 0; i < expo.size(); ++i) {
        if (expo[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += "x" + std::to_string(i + 1);
        if (expo[i] > 1) {
            out += "^" + std::to_string(expo[i]);
        }
    }
    return out.empty() ? "1" : out;
}

MonomialBasis::MonomialBasis(int vars_, int degree_)
    : vars(vars_), degree(degree_), list(enumerate_monomials(vars_, degree_)) {
    for (int i = 0; i < static_cast<int>(list.size()); ++i) {
        index.emplace(list[i], i);
    }
}

} // namespace gkm
