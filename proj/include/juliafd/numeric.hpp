#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <thread>
#include <vector>

namespace juliafd {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

// Neumaier compensated summation. All bulk reductions go through this so
// results are reproducible regardless of magnitude ordering within the
// fixed traversal order.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x))
            c += (s - t) + x;
        else
            c += (x - t) + s;
        s = t;
    }
    double value() const { return s + c; }
};

struct KahanCSum {
    KahanSum re, im;
    void add(cplx z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cplx value() const { return {re.value(), im.value()}; }
};

// ---- counter-based RNG -------------------------------------------------
// Splittable, stateless: value = mix(key, counter). Parallel consumers
// index their own counters, so draws are reproducible for a fixed seed
// independent of scheduling.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

struct CounterRng {
    std::uint64_t key;
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key(splitmix64(seed ^ splitmix64(stream + 0x6a09e667f3bcc909ULL))) {}

    std::uint64_t bits(std::uint64_t counter) const {
        return splitmix64(key ^ splitmix64(counter));
    }
    // uniform in [0,1)
    double uniform(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }
    double uniform(std::uint64_t counter, double lo, double hi) const {
        return lo + (hi - lo) * uniform(counter);
    }
    // standard complex gaussian (Box-Muller on two sub-counters)
    cplx gaussian(std::uint64_t counter) const {
        double u1 = uniform(2 * counter);
        double u2 = uniform(2 * counter + 1);
        double r = std::sqrt(-2.0 * std::log(1.0 - u1));
        return {r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
    }
    cplx in_disk(std::uint64_t counter, cplx center, double radius) const {
        double u1 = uniform(2 * counter);
        double u2 = uniform(2 * counter + 1);
        double r = radius * std::sqrt(u1);
        return center + cplx{r * std::cos(2.0 * kPi * u2), r * std::sin(2.0 * kPi * u2)};
    }
};

// ---- least squares -----------------------------------------------------

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;   // coefficient of determination
    double rms = 0.0;  // RMS residual
    std::size_t n = 0;
};

inline LinearFit fit_line(std::span<const double> xs, std::span<const double> ys) {
    LinearFit f;
    f.n = xs.size();
    if (f.n < 2) return f;
    KahanSum sx, sy;
    for (std::size_t i = 0; i < f.n; ++i) { sx.add(xs[i]); sy.add(ys[i]); }
    double mx = sx.value() / double(f.n), my = sy.value() / double(f.n);
    KahanSum sxx, sxy, syy;
    for (std::size_t i = 0; i < f.n; ++i) {
        sxx.add((xs[i] - mx) * (xs[i] - mx));
        sxy.add((xs[i] - mx) * (ys[i] - my));
        syy.add((ys[i] - my) * (ys[i] - my));
    }
    if (sxx.value() <= 0) return f;
    f.slope = sxy.value() / sxx.value();
    f.intercept = my - f.slope * mx;
    KahanSum res;
    for (std::size_t i = 0; i < f.n; ++i) {
        double e = ys[i] - (f.intercept + f.slope * xs[i]);
        res.add(e * e);
    }
    f.rms = std::sqrt(res.value() / double(f.n));
    f.r2 = syy.value() > 0 ? 1.0 - res.value() / syy.value() : 1.0;
    return f;
}

// ---- deterministic parallel map ----------------------------------------
// Each index writes only its own slot; the reduction order downstream is
// index order, so output bytes do not depend on the thread count.

inline int& worker_threads() {
    static int n = 1;
    return n;
}

inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    int nthreads = std::max(1, worker_threads());
    if (nthreads == 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (count + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

// wrap an angle difference into (-pi, pi]
inline double wrap_angle(double a) {
    a = std::fmod(a, 2.0 * kPi);
    if (a <= -kPi) a += 2.0 * kPi;
    if (a > kPi) a -= 2.0 * kPi;
    return a;
}

} // namespace juliafd
