#pragma once

#include <string>
#include <vector>

namespace arakelov {

// Imaginary quadratic field of class number one, described by its reduced
// norm form q(m, n) = a m^2 + b m n + c n^2.
struct FieldDescriptor {
    int discriminant = -4;
    int a = 1, b = 0, c = 1;
    int w_K = 4;  // roots of unity in O_K
    double sqrt_abs_disc = 2.0;

    static FieldDescriptor from_discriminant(int discriminant);
    static const std::vector<int>& supported_discriminants();

    long norm(long m, long n) const { return a * m * m + b * m * n + c * n * n; }
    std::string name() const;
};

// r_K(N) for 0 <= N <= n_max: number of (m, n) in Z^2 with q(m, n) = N.
std::vector<long> representation_counts(const FieldDescriptor& K, long n_max);

}  // namespace arakelov
