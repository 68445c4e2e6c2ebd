#include "arakelov/psi_polynomial.hpp"

#include <cmath>
#include <sstream>

namespace arakelov {

PsiPolynomial::PsiPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c.canonicalize();
    trim();
}

PsiPolynomial PsiPolynomial::constant(const mpq_class& c) { return PsiPolynomial({c}); }

PsiPolynomial PsiPolynomial::monomial(const mpq_class& c, int k) {
    std::vector<mpq_class> v(static_cast<size_t>(k) + 1, mpq_class(0));
    v[static_cast<size_t>(k)] = c;
    return PsiPolynomial(std::move(v));
}

void PsiPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int PsiPolynomial::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

bool PsiPolynomial::is_even() const {
    for (size_t k = 1; k < coeffs_.size(); k += 2)
        if (coeffs_[k] != 0) return false;
    return true;
}

mpq_class PsiPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<size_t>(k)];
}

double PsiPolynomial::evaluate(double psi2) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * psi2 + it->get_d();
    return acc;
}

PsiPolynomial& PsiPolynomial::operator+=(const PsiPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

PsiPolynomial& PsiPolynomial::operator-=(const PsiPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), mpq_class(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

PsiPolynomial& PsiPolynomial::operator*=(const mpq_class& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

PsiPolynomial operator*(const PsiPolynomial& a, const PsiPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> out(a.coeffs_.size() + b.coeffs_.size() - 1, mpq_class(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return PsiPolynomial(std::move(out));
}

std::string PsiPolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const mpq_class& c = coeffs_[k];
        if (c == 0) continue;
        mpq_class a = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace arakelov
