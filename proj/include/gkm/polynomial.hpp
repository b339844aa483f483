#ifndef GKM_POLYNOMIAL_HPP
#define GKM_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "gkm/monomial.hpp"
#include "gkm/rational.hpp"

namespace gkm {

/// Integer covector in the weight lattice; houses edge weights. Not required
/// to be primitive.
struct LinearForm {
    std::vector<long long> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::vector<long long> c) : coeffs(std::move(c)) {}

    int rank() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    LinearForm negated() const;

    /// Exact pairing with an integer vector; big-integer accumulation so no
    /// overflow for any input.
    BigInt eval(const std::vector<long long>& xi) const;

    bool operator==(const LinearForm& other) const { return coeffs == other.coeffs; }
};

/// True when one form is a rational multiple of the other (zero forms count
/// as proportional to everything).
bool proportional(const LinearForm& a, const LinearForm& b);

/// difference == lambda * base for some rational lambda? Optionally restrict
/// lambda to integers. `base` must be nonzero.
bool is_rational_multiple(const LinearForm& difference, const LinearForm& base,
                          bool integral_only = false);

/// Homogeneous polynomial of fixed total degree with exact rational
/// coefficients; absent monomials are zero. Immutable style: operations
/// return new values.
class HomogPolynomial {
  public:
    HomogPolynomial(int vars, int degree) : vars_(vars), degree_(degree) {}

    static HomogPolynomial monomial(int vars, const Exponents& expo, const Rational& coeff);
    static HomogPolynomial from_form(const LinearForm& form);

    int vars() const { return vars_; }
    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    Rational coeff(const Exponents& expo) const;
    void add_term(const Exponents& expo, const Rational& coeff);

    HomogPolynomial operator+(const HomogPolynomial& other) const;
    HomogPolynomial operator-(const HomogPolynomial& other) const;
    HomogPolynomial operator*(const HomogPolynomial& other) const;
    HomogPolynomial scaled(const Rational& factor) const;

    Rational eval(const std::vector<Rational>& point) const;

    /// Dense coefficient vector in the global monomial order of this graded
    /// piece.
    std::vector<Rational> dense_coeffs() const;

    /// Human-readable rendering in the global term order, e.g.
    /// "x1^2 - 2*x1*x2 + x2^2"; the zero polynomial renders as "0".
    std::string str() const;

    bool operator==(const HomogPolynomial& other) const;

  private:
    int vars_;
    int degree_;
    std::map<Exponents, Rational> terms_; // no explicit zeros
};

/// Index of the variable eliminated when restricting to the hyperplane
/// form == 0: largest |coefficient|, ties to the smallest index.
int restriction_pivot(const LinearForm& form);

/// Substitution onto the hyperplane form == 0. Precomputes the powers of the
/// replacement form once, so restricting many polynomials against one weight
/// is cheap.
class FormRestrictor {
  public:
    /// Throws ZeroForm when the form vanishes. `max_degree` bounds the
    /// degree of polynomials that may be restricted.
    FormRestrictor(const LinearForm& form, int max_degree);

    /// The restriction of `p` to the hyperplane, expressed in the remaining
    /// vars()-1 variables (relative order preserved). Zero iff the form
    /// divides `p`.
    HomogPolynomial restrict(const HomogPolynomial& p) const;

    int pivot() const { return pivot_; }

  private:
    int vars_;
    int pivot_;
    std::vector<HomogPolynomial> substitute_powers_; // powers 0..max_degree of the pivot image
};

/// One-shot convenience wrapper around FormRestrictor.
HomogPolynomial restrict_mod_form(const HomogPolynomial& p, const LinearForm& form);

} // namespace gkm

#endif // GKM_POLYNOMIAL_HPP
