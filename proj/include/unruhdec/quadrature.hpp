#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace unruhdec::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;  // absolute error estimate
    int intervals = 1;
    bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7-15 pair, positive half of the Kronrod abscissae.
// Odd indices (1,3,5) plus the midpoint are the embedded Gauss nodes.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Interval {
    double lo, hi, value, error;
    bool operator<(const Interval& o) const { return error < o.error; }
};

template <class F>
Interval gk15(F&& f, double lo, double hi) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double fv1[7], fv2[7];
    const double fc = f(mid);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::fabs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(mid - dx);
        fv2[j] = f(mid + dx);
        resk += kWgk[j] * (fv1[j] + fv2[j]);
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
        if (j % 2 == 1) resg += kWg[(j - 1) / 2] * (fv1[j] + fv2[j]);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
    const double value = resk * half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps)
        err = std::max(err, eps * resabs);
    return {lo, hi, value, err};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration of f over [lo, hi].
///
/// Bisects the interval with the largest error estimate until the summed
/// error estimate satisfies max(abs_tol, rel_tol * |integral|) or the
/// interval budget is exhausted (converged == false in that case).
template <class F>
Result integrate(F&& f, double lo, double hi, double rel_tol = 1e-12,
                 double abs_tol = 0.0, int limit = 2000) {
    Result out;
    if (lo == hi) {
        out.converged = true;
        out.intervals = 0;
        return out;
    }
    std::vector<detail::Interval> heap;
    heap.push_back(detail::gk15(f, lo, hi));
    double total = heap.front().value;
    double toterr = heap.front().error;
    auto tolerance = [&] { return std::max(abs_tol, rel_tol * std::fabs(total)); };
    while (toterr > tolerance() && static_cast<int>(heap.size()) < limit) {
        std::pop_heap(heap.begin(), heap.end());
        const detail::Interval worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {
            // interval no longer splittable in double precision
            heap.push_back(worst);
            std::push_heap(heap.begin(), heap.end());
            break;
        }
        const auto left = detail::gk15(f, worst.lo, mid);
        const auto right = detail::gk15(f, mid, worst.hi);
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end());
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end());
    }
    out.value = total;
    out.error = toterr;
    out.intervals = static_cast<int>(heap.size());
    out.converged = toterr <= tolerance();
    return out;
}

}  // namespace unruhdec::quad
