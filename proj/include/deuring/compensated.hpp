#pragma once

#include <complex>

namespace deuring {

// Neumaier's variant of Kahan summation. The running compensation holds the
// exact rounding error of every addition (TwoSum), so the result is as if
// accumulated in roughly twice the working precision.
class CompensatedSum {
public:
    constexpr CompensatedSum() = default;
    constexpr explicit CompensatedSum(double v) : sum_(v) {}

    constexpr void add(double x) noexcept
    {
        const double t = sum_ + x;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    // Merge another accumulator, keeping both of its parts.
    constexpr void merge(const CompensatedSum& other) noexcept
    {
        add(other.sum_);
        add(other.comp_);
    }

    constexpr CompensatedSum& operator+=(double x) noexcept
    {
        add(x);
        return *this;
    }

    [[nodiscard]] constexpr double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

class CompensatedComplexSum {
public:
    void add(std::complex<double> z) noexcept
    {
        re_.add(z.real());
        im_.add(z.imag());
    }

    void merge(const CompensatedComplexSum& other) noexcept
    {
        re_.merge(other.re_);
        im_.merge(other.im_);
    }

    CompensatedComplexSum& operator+=(std::complex<double> z) noexcept
    {
        add(z);
        return *this;
    }

    [[nodiscard]] std::complex<double> value() const noexcept { return {re_.value(), im_.value()}; }

private:
    CompensatedSum re_;
    CompensatedSum im_;
};

} // namespace deuring
