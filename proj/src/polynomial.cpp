#include "gkm/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "gkm/errors.hpp"

namespace gkm {

bool LinearForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](long long c) { return c == 0; });
}

LinearForm LinearForm::negated() const {
    LinearForm out(*this);
    for (auto& c : out.coeffs) {
        c = -c;
    }
    return out;
}

BigInt LinearForm::eval(const std::vector<long long>& xi) const {
    if (xi.size() != coeffs.size()) {
        throw std::invalid_argument("LinearForm::eval: dimension mismatch");
    }
    BigInt acc = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        acc += BigInt(coeffs[i]) * xi[i];
    }
    return acc;
}

bool proportional(const LinearForm& a, const LinearForm& b) {
    if (a.rank() != b.rank()) {
        throw std::invalid_argument("proportional: rank mismatch");
    }
    // cross products a_i b_j == a_j b_i for all pairs
    const int n = a.rank();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (BigInt(a.coeffs[i]) * b.coeffs[j] != BigInt(a.coeffs[j]) * b.coeffs[i]) {
                return false;
            }
        }
    }
    return true;
}

bool is_rational_multiple(const LinearForm& difference, const LinearForm& base,
                          bool integral_only) {
    if (difference.rank() != base.rank()) {
        throw std::invalid_argument("is_rational_multiple: rank mismatch");
    }
    if (base.is_zero()) {
        throw ZeroForm("is_rational_multiple: zero base form");
    }
    if (!proportional(difference, base)) {
        return false;
    }
    // difference = lambda * base with lambda = d_i / b_i at any nonzero b_i;
    // proportionality already pins every other coordinate. A coordinate of
    // the difference sitting over a zero base coordinate must itself vanish.
    int anchor = -1;
    for (int i = 0; i < base.rank(); ++i) {
        if (base.coeffs[i] != 0) {
            if (anchor < 0) {
                anchor = i;
            }
        } else if (difference.coeffs[i] != 0) {
            return false;
        }
    }
    if (!integral_only) {
        return true;
    }
    return difference.coeffs[anchor] % base.coeffs[anchor] == 0;
}

HomogPolynomial HomogPolynomial::monomial(int vars, const Exponents& expo,
                                          const Rational& coeff) {
    int total = 0;
    for (int e : expo) {
        total += e;
    }
    if (static_cast<int>(expo.size()) != vars) {
        throw std::invalid_argument("HomogPolynomial::monomial: exponent length mismatch");
    }
    HomogPolynomial p(vars, total);
    p.add_term(expo, coeff);
    return p;
}

HomogPolynomial HomogPolynomial::from_form(const LinearForm& form) {
    HomogPolynomial p(form.rank(), 1);
    for (int i = 0; i < form.rank(); ++i) {
        if (form.coeffs[i] == 0) {
            continue;
        }
        Exponents expo(form.rank(), 0);
        expo[i] = 1;
        p.add_term(expo, Rational(form.coeffs[i]));
    }
    return p;
}

Rational HomogPolynomial::coeff(const Exponents& expo) const {
    auto it = terms_.find(expo);
    return it == terms_.end() ? Rational(0) : it->second;
}

void HomogPolynomial::add_term(const Exponents& expo, const Rational& coeff) {
    if (coeff == 0) {
        return;
    }
    if (static_cast<int>(expo.size()) != vars_) {
        throw std::invalid_argument("HomogPolynomial::add_term: exponent length mismatch");
    }
    int total = 0;
    for (int e : expo) {
        if (e < 0) {
            throw std::invalid_argument("HomogPolynomial::add_term: negative exponent");
        }
        total += e;
    }
    if (total != degree_) {
        throw std::invalid_argument("HomogPolynomial::add_term: degree mismatch");
    }
    auto [it, inserted] = terms_.emplace(expo, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

HomogPolynomial HomogPolynomial::operator+(const HomogPolynomial& other) const {
    if (vars_ != other.vars_ || degree_ != other.degree_) {
        throw std::invalid_argument("HomogPolynomial::operator+: shape mismatch");
    }
    HomogPolynomial out(*this);
    for (const auto& [expo, c] : other.terms_) {
        out.add_term(expo, c);
    }
    return out;
}

HomogPolynomial HomogPolynomial::operator-(const HomogPolynomial& other) const {
    return *this + other.scaled(Rational(-1));
}

HomogPolynomial HomogPolynomial::operator*(const HomogPolynomial& other) const {
    if (vars_ != other.vars_) {
        throw std::invalid_argument("HomogPolynomial::operator*: variable count mismatch");
    }
    HomogPolynomial out(vars_, degree_ + other.degree_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            Exponents expo(vars_);
            for (int i = 0; i < vars_; ++i) {
                expo[i] = ea[i] + eb[i];
            }
            out.add_term(expo, ca * cb);
        }
    }
    return out;
}

HomogPolynomial HomogPolynomial::scaled(const Rational& factor) const {
    HomogPolynomial out(vars_, degree_);
    if (factor == 0) {
        return out;
    }
    for (const auto& [expo, c] : terms_) {
        out.terms_.emplace(expo, c * factor);
    }
    return out;
}

Rational HomogPolynomial::eval(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != vars_) {
        throw std::invalid_argument("HomogPolynomial::eval: dimension mismatch");
    }
    Rational acc = 0;
    for (const auto& [expo, c] : terms_) {
        Rational term = c;
        for (int i = 0; i < vars_; ++i) {
            for (int e = 0; e < expo[i]; ++e) {
                term *= point[i];
            }
        }
        acc += term;
    }
    return acc;
}

std::vector<Rational> HomogPolynomial::dense_coeffs() const {
    MonomialBasis basis(vars_, degree_);
    std::vector<Rational> out(basis.list.size(), Rational(0));
    for (const auto& [expo, c] : terms_) {
        out[basis.index.at(expo)] = c;
    }
    return out;
}

std::string HomogPolynomial::str() const {
    if (terms_.empty()) {
        return "0";
    }
    // terms_ is ascending lex; the global order within one degree is
    // descending lex, so walk it backwards
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [expo, c] = *it;
        const bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) {
                out += "-";
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string mono = format_monomial(expo);
        if (mono == "1") {
            out += format_rational(mag);
        } else {
            if (mag != 1) {
                out += format_rational(mag) + "*";
            }
            out += mono;
        }
    }
    return out;
}

bool HomogPolynomial::operator==(const HomogPolynomial& other) const {
    return vars_ == other.vars_ && degree_ == other.degree_ && terms_ == other.terms_;
}

int restriction_pivot(const LinearForm& form) {
    if (form.is_zero()) {
        throw ZeroForm("restriction along the zero form");
    }
    int pivot = 0;
    long long best = 0;
    for (int i = 0; i < form.rank(); ++i) {
        long long mag = form.coeffs[i] < 0 ? -form.coeffs[i] : form.coeffs[i];
        if (mag > best) {
            best = mag;
            pivot = i;
        }
    }
    return pivot;
}

FormRestrictor::FormRestrictor(const LinearForm& form, int max_degree)
    : vars_(form.rank()), pivot_(restriction_pivot(form)) {
    // image of the pivot variable on the hyperplane:
    //   x_pivot = -(sum_{i != pivot} c_i x_i) / c_pivot
    // expressed in the remaining variables (relative order preserved)
    const int reduced = vars_ - 1;
    HomogPolynomial image(reduced, 1);
    int slot = 0;
    for (int i = 0; i < vars_; ++i) {
        if (i == pivot_) {
            continue;
        }
        if (form.coeffs[i] != 0) {
            Exponents expo(reduced, 0);
            expo[slot] = 1;
            image.add_term(expo, Rational(-form.coeffs[i]) / form.coeffs[pivot_]);
        }
        ++slot;
    }
    substitute_powers_.reserve(max_degree + 1);
    substitute_powers_.emplace_back(
        HomogPolynomial::monomial(reduced, Exponents(reduced, 0), Rational(1)));
    for (int d = 1; d <= max_degree; ++d) {
        substitute_powers_.push_back(substitute_powers_.back() * image);
    }
}

HomogPolynomial FormRestrictor::restrict(const HomogPolynomial& p) const {
    if (p.vars() != vars_) {
        throw std::invalid_argument("FormRestrictor::restrict: variable count mismatch");
    }
    if (p.degree() >= static_cast<int>(substitute_powers_.size())) {
        throw std::invalid_argument("FormRestrictor::restrict: degree above precomputed bound");
    }
    const int reduced = vars_ - 1;
    HomogPolynomial out(reduced, p.degree());
    for (const auto& [expo, c] : p.terms()) {
        // the non-pivot part of the monomial, renumbered
        Exponents rest(reduced, 0);
        int slot = 0;
        for (int i = 0; i < vars_; ++i) {
            if (i == pivot_) {
                continue;
            }
            rest[slot++] = expo[i];
        }
        const HomogPolynomial& power = substitute_powers_[expo[pivot_]];
        for (const auto& [pexpo, pc] : power.terms()) {
            Exponents combined(reduced);
            for (int i = 0; i < reduced; ++i) {
                combined[i] = rest[i] + pexpo[i];
            }
            out.add_term(combined, c * pc);
        }
    }
    return out;
}

HomogPolynomial restrict_mod_form(const HomogPolynomial& p, const LinearForm& form) {
    return FormRestrictor(form, p.degree()).restrict(p);
}

} // namespace gkm
