#pragma once

// Adaptive Gauss-Kronrod (7/15) quadrature used as an independent oracle.

#include <array>
#include <cmath>
#include <complex>
#include <functional>

namespace oracle {

namespace detail {

inline constexpr std::array<double, 8> kXgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
T gk15(const std::function<T(double)>& f, double a, double b, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    T kron = fc * kWgk[7];
    T gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const T s = f(c - dx) + f(c + dx);
        kron += s * kWgk[j];
        if (j % 2 == 1) gauss += s * kWg[j / 2];
    }
    err = std::abs((kron - gauss) * h);
    return kron * h;
}

template <class T>
T adapt(const std::function<T(double)>& f, double a, double b, double abs_tol, double rel_tol, int depth) {
    double err = 0.0;
    const T whole = gk15<T>(f, a, b, err);
    if (err <= std::max(abs_tol, rel_tol * std::abs(whole)) || depth >= 60) return whole;
    const double m = 0.5 * (a + b);
    return adapt<T>(f, a, m, 0.5 * abs_tol, rel_tol, depth + 1) + adapt<T>(f, m, b, 0.5 * abs_tol, rel_tol, depth + 1);
}

} // namespace detail

inline double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 0.0,
                        double rel_tol = 1e-12) {
    return detail::adapt<double>(f, a, b, abs_tol, rel_tol, 0);
}

inline std::complex<double> integrate_complex(const std::function<std::complex<double>(double)>& f, double a,
                                              double b, double abs_tol = 0.0, double rel_tol = 1e-12) {
    return detail::adapt<std::complex<double>>(f, a, b, abs_tol, rel_tol, 0);
}

// Damped Fourier-Laplace transform int_0^inf g(t) exp(i (w + i eta) t) dt,
// integrated panel by panel up to where exp(-eta t) < 1e-18.
inline std::complex<double> laplace(const std::function<double(double)>& g, double w, double eta,
                                    double panel, double rel_tol = 1e-12) {
    const double T = 42.0 / eta;
    const std::complex<double> iz(-eta, w);
    std::complex<double> sum = 0.0;
    auto integrand = [&](double t) { return g(t) * std::exp(iz * t); };
    for (double a = 0.0; a < T; a += panel) sum += integrate_complex(integrand, a, std::min(a + panel, T), 0.0, rel_tol);
    return sum;
}

// Golden-section search for the minimum of a unimodal function, in long double.
template <class F>
long double golden_min(F f, long double a, long double b, long double tol) {
    const long double g = (std::sqrt(5.0L) - 1.0L) / 2.0L;
    long double c = b - g * (b - a);
    long double d = a + g * (b - a);
    long double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    return 0.5L * (a + b);
}

} // namespace oracle
