#include "arakelov/qseries.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <numbers>
#include <sstream>

namespace arakelov {

// ---------------------------------------------------------------- QSeries

QSeries::QSeries(int order) : c_(static_cast<size_t>(order) + 1, mpq_class(0)) {
    if (order < 0) throw DomainError("QSeries: negative order");
}

QSeries::QSeries(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(0);
    for (auto& x : c_) x.canonicalize();
}

QSeries QSeries::theta(int order) {
    QSeries s(order);
    s[0] = 1;
    for (long n = 1; n * n <= order; ++n) s[static_cast<int>(n * n)] = 2;
    return s;
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s[0] = 1;
    return s;
}

QSeries QSeries::truncated(int order) const {
    QSeries s(order);
    for (int m = 0; m <= std::min(order, this->order()); ++m) s[m] = c_[m];
    return s;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (int m = 0; m <= r.order(); ++m) r[m] = a[m] + b[m];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order(), b.order()));
    for (int m = 0; m <= r.order(); ++m) r[m] = a[m] - b[m];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int M = std::min(a.order(), b.order());
    QSeries r(M);
    for (int i = 0; i <= M; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= M; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    return r;
}

QSeries operator*(const QSeries& a, const mpq_class& k) {
    QSeries r = a;
    for (int m = 0; m <= r.order(); ++m) r[m] *= k;
    return r;
}

QSeries series_log(const QSeries& a) {
    if (a[0] != 1) throw DomainError("series_log: constant term must be 1");
    const int M = a.order();
    QSeries b(M);
    // m a_m = sum_{k=1}^{m} k b_k a_{m-k}
    for (int m = 1; m <= M; ++m) {
        mpq_class acc = m * a[m];
        for (int k = 1; k < m; ++k)
            if (a[m - k] != 0) acc -= k * b[k] * a[m - k];
        b[m] = acc / m;
    }
    return b;
}

QSeries series_exp(const QSeries& b) {
    if (b[0] != 0) throw DomainError("series_exp: constant term must be 0");
    const int M = b.order();
    QSeries a(M);
    a[0] = 1;
    for (int m = 1; m <= M; ++m) {
        mpq_class acc = 0;
        for (int k = 1; k <= m; ++k)
            if (b[k] != 0) acc += k * b[k] * a[m - k];
        a[m] = acc / m;
    }
    return a;
}

QSeries series_pow(const QSeries& a, long e) {
    if (a[0] == 0) throw DomainError("series_pow: constant term must be nonzero");
    const int M = a.order();
    QSeries p(M);
    // a0^e exactly
    mpq_class base = a[0], a0e = 1;
    for (long i = 0; i < std::labs(e); ++i) a0e *= base;
    if (e < 0) a0e = 1 / a0e;
    p[0] = a0e;
    // a_0 m p_m = sum_{k=1}^{m} ((e+1) k - m) a_k p_{m-k}
    for (int m = 1; m <= M; ++m) {
        mpq_class acc = 0;
        for (int k = 1; k <= m; ++k)
            if (a[k] != 0) acc += mpq_class((e + 1) * k - m) * a[k] * p[m - k];
        p[m] = acc / (a[0] * m);
    }
    return p;
}

// ------------------------------------------------------- RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) {
    for (auto& x : c_) x.canonicalize();
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RationalPolynomial::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<size_t>(j)];
}

mpq_class RationalPolynomial::operator()(const mpq_class& w) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w + *it;
    return acc;
}

double RationalPolynomial::operator()(double w) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * w + it->get_d();
    return acc;
}

std::string RationalPolynomial::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int j = degree(); j >= 0; --j) {
        const mpq_class& c = c_[j];
        if (c == 0) continue;
        mpq_class a = abs(c);
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        first = false;
        if (j == 0 || a != 1) os << a.get_str();
        if (j > 0) os << (a != 1 ? "*" : "") << var << (j > 1 ? "^" + std::to_string(j) : "");
    }
    return os.str();
}

// ------------------------------------------------------ coefficient tables

namespace {

// d_m = m! c_m(w) with integer coefficients, via the power recurrence
// m c_m = sum_{k square} (w k - m + k) 2 c_{m-k}.
struct IntPolyTable {
    std::mutex mu;
    std::vector<std::vector<mpz_class>> d{{mpz_class(1)}};

    void extend(int m_max) {
        for (int m = static_cast<int>(d.size()); m <= m_max; ++m) {
            std::vector<mpz_class> out(static_cast<size_t>(m) + 1, mpz_class(0));
            for (long r = 1; r * r <= m; ++r) {
                const long k = r * r;
                // 2 * (m-1)!/(m-k)!
                mpz_class ff = 2;
                for (long i = m - k + 1; i <= m - 1; ++i) ff *= i;
                const auto& prev = d[static_cast<size_t>(m - k)];
                for (size_t j = 0; j < prev.size(); ++j) {
                    if (prev[j] == 0) continue;
                    mpz_class base = ff * prev[j];
                    out[j + 1] += base * k;
                    out[j] += base * (k - m);
                }
            }
            d.push_back(std::move(out));
        }
    }
};

IntPolyTable& int_table() {
    static IntPolyTable t;
    return t;
}

std::vector<mpz_class> d_poly(int m) {
    auto& t = int_table();
    std::lock_guard<std::mutex> lock(t.mu);
    t.extend(m);
    return t.d[static_cast<size_t>(m)];
}

mpz_class factorial(long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

mpz_class sigma_k(long n, int k) {
    mpz_class s = 0;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
        s += p;
        long e = n / d;
        if (e != d) {
            mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
            s += p;
        }
    }
    return s;
}

mpq_class sigma_minus1(long n) {
    mpq_class q(sigma_k(n, 1), mpz_class(n));
    q.canonicalize();
    return q;
}

int chi4(long d) {
    if (d % 2 == 0) return 0;
    return (d % 4 == 1) ? 1 : -1;
}

bool is_square(long m) {
    long r = static_cast<long>(std::sqrt(double(m)));
    while (r * r > m) --r;
    while ((r + 1) * (r + 1) <= m) ++r;
    return r * r == m;
}

}  // namespace

RationalPolynomial c_poly(int m) {
    if (m < 0) throw DomainError("c_poly: m must be >= 0");
    const auto d = d_poly(m);
    const mpz_class f = factorial(m);
    std::vector<mpq_class> c(d.size());
    for (size_t j = 0; j < d.size(); ++j) c[j] = mpq_class(d[j], f);
    return RationalPolynomial(std::move(c));
}

std::vector<RationalPolynomial> c_poly_table(int m_max) {
    std::vector<RationalPolynomial> out;
    out.reserve(static_cast<size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) out.push_back(c_poly(m));
    return out;
}

RationalPolynomial c_star(int m) {
    if (m < 1) throw DomainError("c_star: m must be >= 1");
    const auto d = d_poly(m);
    std::vector<mpq_class> c(d.size());
    for (size_t j = 0; j < d.size(); ++j) c[j] = ((m + j) % 2 == 0) ? mpq_class(d[j]) : mpq_class(-d[j]);
    return RationalPolynomial(std::move(c));
}

mpq_class c_prime(long m) {
    if (m < 1) throw DomainError("c_prime: m must be >= 1");
    mpq_class v = 2 * sigma_minus1(m);
    if (m % 2 == 0) v -= 5 * sigma_minus1(m / 2);
    if (m % 4 == 0) v += 2 * sigma_minus1(m / 4);
    return v;
}

std::vector<double> theta_power_coefficients(double u, long M) {
    std::vector<double> c(static_cast<size_t>(M) + 1, 0.0);
    c[0] = 1.0;
    if (u == 0.0) return c;
    const double ur = std::round(u);
    if (u == ur && ur > 0 && ur <= 64) {
        // Exact: repeated sparse multiplication by theta.
        std::vector<double> next(c.size());
        for (int rep = 0; rep < static_cast<int>(ur); ++rep) {
            next = c;
            for (long n = 1; n * n <= M; ++n)
                for (long m = M; m >= n * n; --m) next[m] += 2.0 * c[m - n * n];
            c.swap(next);
        }
        return c;
    }
    // exp(u log theta): m c_m = u sum_k k c'_k c_{m-k}.
    std::vector<double> sig(static_cast<size_t>(M) + 1, 0.0);
    for (long d = 1; d <= M; ++d)
        for (long k = d; k <= M; k += d) sig[k] += 1.0 / double(d);
    std::vector<double> kl(static_cast<size_t>(M) + 1, 0.0);
    for (long k = 1; k <= M; ++k) {
        double v = 2.0 * sig[k];
        if (k % 2 == 0) v -= 5.0 * sig[k / 2];
        if (k % 4 == 0) v += 2.0 * sig[k / 4];
        kl[k] = double(k) * v;
    }
    for (long m = 1; m <= M; ++m) {
        double acc = 0.0;
        for (long k = 1; k <= m; ++k) acc += kl[k] * c[m - k];
        c[m] = u * acc / double(m);
    }
    return c;
}

cplx dirichlet_D(double u, cplx s, const EvalContext& ctx) {
    if (u < 0.0) throw DomainError("dirichlet_D: u must be nonnegative");
    if (u == 0.0) return 0.0;
    const double alpha = s.real() - u / 2.0;  // |c_m| m^{-sigma} <= 24 m^{-alpha}
    if (!(alpha > 1.0))
        throw ConvergenceError("dirichlet_D: Re(s) must exceed u/2 + 1 for the tail bound to close");
    // Tail of 24 sum_{m>M} m^{-alpha} <= 24 M^{1-alpha}/(alpha-1); the second
    // bound 6u sum m^{1-alpha} applies when alpha > 2.
    double M = std::pow(24.0 / ((alpha - 1.0) * ctx.tol), 1.0 / (alpha - 1.0));
    if (alpha > 2.0)
        M = std::min(M, std::pow(6.0 * u / ((alpha - 2.0) * ctx.tol), 1.0 / (alpha - 2.0)));
    M = std::max(M, 2.0);
    if (M > double(ctx.max_terms))
        throw ConvergenceError("dirichlet_D: tail bound needs more than max_terms coefficients");
    const long N = static_cast<long>(std::ceil(M));
    const auto c = theta_power_coefficients(u, N);
    cplx sum = 0.0;
    for (long m = N; m >= 1; --m)
        if (c[m] != 0.0) sum += c[m] * std::exp(-s * std::log(double(m)));
    return sum;
}

mpq_class ctilde(const RationalPolynomial& cm, const mpq_class& w) {
    if (w == 0) return cm.coeff(1) / 2;
    return cm(w) / (2 * w);
}

std::optional<mpq_class> ctilde_closed_form(long w, long m) {
    if (m < 1) throw DomainError("ctilde_closed_form: m must be >= 1");
    switch (w) {
        case 0: {
            long o = m;
            while (o % 2 == 0) o /= 2;
            mpq_class v = sigma_minus1(o);
            return (m % 2 == 0) ? mpq_class(-v) : v;
        }
        case 1:
            return mpq_class(is_square(m) ? 1 : 0);
        case 2: {
            long s = 0;
            for (long d = 1; d <= m; ++d)
                if (m % d == 0) s += chi4(d);
            return mpq_class(s);
        }
        case 4: {
            mpz_class v = sigma_k(m, 1);
            if (m % 4 == 0) v -= 4 * sigma_k(m / 4, 1);
            return mpq_class(v);
        }
        case 8: {
            mpz_class v = sigma_k(m, 3);
            if (m % 2 == 0) v -= 2 * sigma_k(m / 2, 3);
            if (m % 4 == 0) v += 16 * sigma_k(m / 4, 3);
            return mpq_class(v);
        }
        default:
            return std::nullopt;
    }
}

mpq_class ctilde6_closed_form(long m) {
    mpz_class a = 0, b = 0;
    for (long d = 1; d <= m; ++d) {
        if (m % d) continue;
        a += chi4(m / d) * d * d;
        b += chi4(d) * d * d;
    }
    return mpq_class(4 * a, 3) - mpq_class(b, 3);
}

std::string EulerReport::summary() const {
    std::ostringstream os;
    os << "w=" << w.get_str() << " M=" << M << ": ";
    if (!multiplicative)
        os << "not multiplicative at (" << fail_m << "," << fail_n << ")";
    else
        os << "multiplicative";
    if (closed_form_checked)
        os << (closed_form_match ? ", closed form matches"
                                 : ", closed form mismatch at m=" + std::to_string(closed_form_fail));
    return os.str();
}

EulerReport euler_check(const mpq_class& w, int M) {
    if (M < 6) throw DomainError("euler_check: M must be >= 6");
    EulerReport rep;
    rep.w = w;
    rep.M = M;
    std::vector<mpq_class> ct(static_cast<size_t>(M) + 1);
    for (int m = 1; m <= M; ++m) ct[m] = ctilde(c_poly(m), w);
    // Coprime pairs ordered by product.
    for (long k = 6; k <= M && rep.multiplicative; ++k)
        for (long a = 2; a * a < k; ++a) {
            if (k % a) continue;
            const long b = k / a;
            if (std::gcd(a, b) != 1) continue;
            if (ct[k] != ct[a] * ct[b]) {
                rep.multiplicative = false;
                rep.fail_m = a;
                rep.fail_n = b;
                break;
            }
        }
    if (w.get_den() == 1 && w.get_num().fits_slong_p()) {
        const long wi = w.get_num().get_si();
        if (ctilde_closed_form(wi, 1)) {
            rep.closed_form_checked = true;
            for (int m = 1; m <= M; ++m)
                if (*ctilde_closed_form(wi, m) != ct[m]) {
                    rep.closed_form_match = false;
                    rep.closed_form_fail = m;
                    break;
                }
        }
    }
    return rep;
}

double bessel_main_term(double u, long m, const EvalContext&) {
    if (!(u > 0.0) || m < 1) throw DomainError("bessel_main_term: need u > 0 and m >= 1");
    // Saddle at q = -1, where theta^{-u} ~ 2^{-u} eps^{u/2} exp(pi u / 4 eps).
    const double nu = 1.0 + 0.5 * u;
    const double x = std::numbers::pi * std::sqrt(u * double(m));
    const double sign = (m % 2) ? -1.0 : 1.0;
    const double log_pref = std::log(std::numbers::pi) - u * std::log(2.0) + 0.5 * nu * std::log(u / (4.0 * double(m)));
    return sign * std::exp(log_pref) * std::cyl_bessel_i(nu, x);
}

}  // namespace arakelov
