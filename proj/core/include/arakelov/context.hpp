#pragma once

#include <algorithm>
#include <complex>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace arakelov {

using cplx = std::complex<double>;

// Evaluation settings shared by every numerical routine.
//
// precision_bits drives the multiprecision paths (theta constants, number
// field slices). The double-precision core clamps tol at a few ulps and
// reports the error it actually achieved.
struct EvalContext {
    int precision_bits = 128;
    double tol = 1e-12;
    long max_terms = 200000;
    int threads = 1;

    void validate() const;
    EvalContext with_tol(double t) const {
        EvalContext c = *this;
        c.tol = t;
        return c;
    }
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// A series would need more than max_terms terms.
class TruncationError : public Error {
public:
    using Error::Error;
};

// Z evaluated on a boundary line of the four-region decomposition.
class RegionError : public Error {
public:
    using Error::Error;
};

// Z(0, s), which vanishes identically.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Iteration or series failed to converge.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Quadrature could not reach the requested tolerance.
class AccuracyError : public Error {
public:
    using Error::Error;
};

class ConfigurationError : public Error {
public:
    using Error::Error;
};

// Runs f(i) for i in [0, n) on up to `threads` workers (strided split).
// The first exception thrown by any worker is rethrown.
template <class F>
void parallel_for(long n, int threads, F&& f) {
    if (threads <= 1 || n < 2) {
        for (long i = 0; i < n; ++i) f(i);
        return;
    }
    const int T = int(std::min<long>(threads, n));
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int k = 0; k < T; ++k) {
        pool.emplace_back([&, k] {
            try {
                for (long i = k; i < n; i += T) f(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!err) err = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace arakelov
