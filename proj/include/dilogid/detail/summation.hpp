#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace dilogid::detail {

// Neumaier variant of Kahan summation.
class neumaier {
public:
    void add(double x) noexcept
    {
        double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class complex_neumaier {
public:
    void add(std::complex<double> z) noexcept
    {
        re_.add(z.real());
        im_.add(z.imag());
    }
    void add(double x) noexcept { re_.add(x); }
    std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    neumaier re_, im_;
};

// Per-thread count of numeric (quadrature or series) evaluations. The
// identity registry reads it to check which side of an identity touched
// a numeric engine.
inline thread_local std::uint64_t numeric_evaluations = 0;

inline void note_numeric_evaluation() noexcept { ++numeric_evaluations; }

}  // namespace dilogid::detail
