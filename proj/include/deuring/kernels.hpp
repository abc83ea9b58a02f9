#pragma once

// Data-parallel inner loops. Every parallel kernel has a serial counterpart in
// `kernels::serial` that is kept as the reference for tests and benchmarks.
//
// Reductions are blockwise: the index range is cut into fixed-size blocks
// independent of the thread count, each block is summed with compensation,
// and block results are merged in index order. The parallel result is
// therefore bitwise identical for any number of threads.

#include "deuring/compensated.hpp"

#include <omp.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <exception>
#include <limits>
#include <span>
#include <vector>

namespace deuring::kernels {

inline constexpr std::uint64_t kBlockSize = 1u << 14;

// n^{-s} = exp(-sigma log n) (cos(t log n) - i sin(t log n)).
inline std::complex<double> power_minus_s(std::uint64_t n, double sigma, double t) noexcept
{
    const double ln = std::log(static_cast<double>(n));
    const double mag = std::exp(-sigma * ln);
    const double phase = t * ln;
    return {mag * std::cos(phase), -mag * std::sin(phase)};
}

template <class Term>
std::complex<double> sum_complex(Term&& term, std::uint64_t first, std::uint64_t last)
{
    if (last < first)
        return {0.0, 0.0};
    const std::uint64_t count = last - first + 1;
    const auto blocks = static_cast<std::int64_t>((count + kBlockSize - 1) / kBlockSize);
    std::vector<CompensatedComplexSum> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::uint64_t lo = first + static_cast<std::uint64_t>(b) * kBlockSize;
        const std::uint64_t hi = std::min(last, lo + kBlockSize - 1);
        CompensatedComplexSum acc;
        for (std::uint64_t n = lo; n <= hi; ++n)
            acc.add(term(n));
        partial[static_cast<std::size_t>(b)] = acc;
    }
    CompensatedComplexSum total;
    for (const auto& p : partial)
        total.merge(p);
    return total.value();
}

template <class Term>
double sum_real(Term&& term, std::uint64_t first, std::uint64_t last)
{
    if (last < first)
        return 0.0;
    const std::uint64_t count = last - first + 1;
    const auto blocks = static_cast<std::int64_t>((count + kBlockSize - 1) / kBlockSize);
    std::vector<CompensatedSum> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < blocks; ++b) {
        const std::uint64_t lo = first + static_cast<std::uint64_t>(b) * kBlockSize;
        const std::uint64_t hi = std::min(last, lo + kBlockSize - 1);
        CompensatedSum acc;
        for (std::uint64_t n = lo; n <= hi; ++n)
            acc.add(term(n));
        partial[static_cast<std::size_t>(b)] = acc;
    }
    CompensatedSum total;
    for (const auto& p : partial)
        total.merge(p);
    return total.value();
}

// out[n] = f(n) for 1 <= n < out.size(); out[0] is left untouched.
// The first exception thrown by f is rethrown after the loop.
template <class T, class F>
void tabulate(std::span<T> out, F&& f)
{
    const auto size = static_cast<std::int64_t>(out.size());
    std::exception_ptr error;
#pragma omp parallel for schedule(static, 4096)
    for (std::int64_t n = 1; n < size; ++n) {
        try {
            out[static_cast<std::size_t>(n)] = f(static_cast<std::uint64_t>(n));
        } catch (...) {
#pragma omp critical(deuring_tabulate_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

struct GridMin {
    double value = std::numeric_limits<double>::infinity();
    std::size_t row = 0;
    std::size_t col = 0;
};

// Minimum of f(rows[i], cols[j]) over the product grid. Ties resolve to the
// smallest flat index, so the argmin does not depend on scheduling.
template <class F>
GridMin grid_min(std::span<const double> rows, std::span<const double> cols, F&& f)
{
    const auto nrows = static_cast<std::int64_t>(rows.size());
    std::vector<GridMin> per_row(rows.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nrows; ++i) {
        GridMin best;
        best.row = static_cast<std::size_t>(i);
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const double v = f(rows[static_cast<std::size_t>(i)], cols[j]);
            if (v < best.value) {
                best.value = v;
                best.col = j;
            }
        }
        per_row[static_cast<std::size_t>(i)] = best;
    }
    GridMin best;
    for (const auto& r : per_row)
        if (r.value < best.value)
            best = r;
    return best;
}

namespace serial {

template <class Term>
std::complex<double> sum_complex(Term&& term, std::uint64_t first, std::uint64_t last)
{
    CompensatedComplexSum acc;
    for (std::uint64_t n = first; n <= last && last >= first; ++n)
        acc.add(term(n));
    return acc.value();
}

template <class Term>
double sum_real(Term&& term, std::uint64_t first, std::uint64_t last)
{
    CompensatedSum acc;
    for (std::uint64_t n = first; n <= last && last >= first; ++n)
        acc.add(term(n));
    return acc.value();
}

template <class T, class F>
void tabulate(std::span<T> out, F&& f)
{
    for (std::size_t n = 1; n < out.size(); ++n)
        out[n] = f(static_cast<std::uint64_t>(n));
}

template <class F>
GridMin grid_min(std::span<const double> rows, std::span<const double> cols, F&& f)
{
    GridMin best;
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const double v = f(rows[i], cols[j]);
            if (v < best.value)
                best = {v, i, j};
        }
    return best;
}

} // namespace serial

} // namespace deuring::kernels
