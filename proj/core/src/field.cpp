#include "arakelov/field.hpp"

#include <cmath>

#include "arakelov/context.hpp"

namespace arakelov {

const std::vector<int>& FieldDescriptor::supported_discriminants() {
    static const std::vector<int> ds = {-3, -4, -7, -8, -11, -19, -43, -67, -163};
    return ds;
}

FieldDescriptor FieldDescriptor::from_discriminant(int D) {
    FieldDescriptor K;
    K.discriminant = D;
    switch (D) {
        case -3: K.a = 1; K.b = 1; K.c = 1; break;
        case -4: K.a = 1; K.b = 0; K.c = 1; break;
        case -7: K.a = 1; K.b = 1; K.c = 2; break;
        case -8: K.a = 1; K.b = 0; K.c = 2; break;
        case -11: K.a = 1; K.b = 1; K.c = 3; break;
        case -19: K.a = 1; K.b = 1; K.c = 5; break;
        case -43: K.a = 1; K.b = 1; K.c = 11; break;
        case -67: K.a = 1; K.b = 1; K.c = 17; break;
        case -163: K.a = 1; K.b = 1; K.c = 41; break;
        default:
            throw ConfigurationError("unsupported discriminant " + std::to_string(D) +
                                     " (class number one imaginary quadratic fields only)");
    }
    K.w_K = D == -3 ? 6 : (D == -4 ? 4 : 2);
    K.sqrt_abs_disc = std::sqrt(static_cast<double>(-D));
    return K;
}

std::string FieldDescriptor::name() const {
    if (discriminant == -4) return "Q(i)";
    int d = discriminant % 4 == 0 ? discriminant / 4 : discriminant;
    return "Q(sqrt(" + std::to_string(d) + "))";
}

std::vector<long> representation_counts(const FieldDescriptor& K, long n_max) {
    std::vector<long> r(static_cast<size_t>(n_max) + 1, 0);
    const double det = 4.0 * K.a * K.c - double(K.b) * K.b;
    const long m_max = static_cast<long>(std::sqrt(4.0 * K.c * n_max / det)) + 1;
    const long n_lim = static_cast<long>(std::sqrt(4.0 * K.a * n_max / det)) + 1;
    for (long m = -m_max; m <= m_max; ++m)
        for (long n = -n_lim; n <= n_lim; ++n) {
            long N = K.norm(m, n);
            if (N <= n_max) ++r[static_cast<size_t>(N)];
        }
    return r;
}

}  // namespace arakelov
