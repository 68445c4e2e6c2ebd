#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace arakelov {

// Exact polynomial in the transcendental psi2 = pi * theta(1)^4 with rational
// coefficients; coeffs[k] multiplies psi2^k.
class PsiPolynomial {
public:
    PsiPolynomial() = default;
    explicit PsiPolynomial(std::vector<mpq_class> coeffs);
    static PsiPolynomial constant(const mpq_class& c);
    static PsiPolynomial monomial(const mpq_class& c, int k);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }
    bool is_even() const;  // only even powers of psi2 present
    mpq_class coeff(int k) const;
    const std::vector<mpq_class>& coeffs() const { return coeffs_; }

    double evaluate(double psi2) const;

    PsiPolynomial& operator+=(const PsiPolynomial& o);
    PsiPolynomial& operator-=(const PsiPolynomial& o);
    PsiPolynomial& operator*=(const mpq_class& c);
    friend PsiPolynomial operator+(PsiPolynomial a, const PsiPolynomial& b) { return a += b; }
    friend PsiPolynomial operator-(PsiPolynomial a, const PsiPolynomial& b) { return a -= b; }
    friend PsiPolynomial operator*(PsiPolynomial a, const mpq_class& c) { return a *= c; }
    friend PsiPolynomial operator*(const PsiPolynomial& a, const PsiPolynomial& b);
    friend bool operator==(const PsiPolynomial& a, const PsiPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // e.g. "-1/8 - 3/32*psi^2"
    std::string to_string(const std::string& var = "psi") const;

private:
    void trim();
    std::vector<mpq_class> coeffs_;
};

}  // namespace arakelov
