#pragma once

// Test-only oracles: finite differences, quadrature, brute-force scans and an
// independent RNG (std::mt19937_64).  Nothing here may call the code path it
// is used to check.

#include <cmath>
#include <functional>
#include <random>

#include "suitalab/cvec.hpp"

namespace testoracle {

using suitalab::cdouble;
using suitalab::CMat;
using suitalab::CVec;

// Complex Jacobian of a holomorphic map by central differences along the real
// axes (for holomorphic f the real directional derivative is df/dz_j).
template <class F>
CMat fd_jacobian(const F& f, const CVec& z, double h = 1e-5) {
    int n = z.dim();
    CMat jac(n);
    for (int j = 0; j < n; ++j) {
        CVec zp = z, zm = z;
        zp[j] += h;
        zm[j] -= h;
        CVec fp = f(zp), fm = f(zm);
        for (int i = 0; i < n; ++i) jac.at(i, j) = (fp[i] - fm[i]) / (2.0 * h);
    }
    return jac;
}

inline double simpson(const std::function<double(double)>& f, double a, double b) {
    return (b - a) / 6.0 * (f(a) + 4.0 * f(0.5 * (a + b)) + f(b));
}

inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double left = simpson(f, a, m);
    double right = simpson(f, m, b);
    if (depth <= 0 || std::abs(left + right - whole) < 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson_rec(f, a, m, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_rec(f, m, b, right, 0.5 * tol, depth - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int depth = 40) {
    return adaptive_simpson_rec(f, a, b, simpson(f, a, b), tol, depth);
}

// Second-order complex Taylor data of a real function F with F(0) = 0:
// F(z) ~ 2 Re(sum a_i z_i) + Re(z^T A z) + z* B z.
struct TaylorData {
    CVec grad;  // a_i = dF/dz_i
    CMat holo;  // A_ij = d^2F/dz_i dz_j
    CMat herm;  // B_ij = d^2F/dz_i d conj(z_j)
};

template <class F>
TaylorData fd_taylor(const F& f, int n, double h = 1e-3) {
    const int d = 2 * n;  // real coordinates (x1, y1, x2, y2, ...)
    auto eval = [&](const std::array<double, 8>& x) {
        CVec z(n);
        for (int i = 0; i < n; ++i) z[i] = cdouble{x[2 * i], x[2 * i + 1]};
        return f(z);
    };
    auto at = [&](int i, double hi, int j, double hj) {
        std::array<double, 8> x{};
        x[i] += hi;
        x[j] += hj;
        return eval(x);
    };

    // Richardson-extrapolated first derivatives
    std::array<double, 8> g{};
    for (int i = 0; i < d; ++i) {
        auto d1 = [&](double step) { return (at(i, step, i, 0.0) - at(i, -step, i, 0.0)) / (2.0 * step); };
        g[i] = (4.0 * d1(h / 2.0) - d1(h)) / 3.0;
    }

    // real Hessian with Richardson extrapolation
    double f0 = eval({});
    std::array<std::array<double, 8>, 8> hess{};
    for (int i = 0; i < d; ++i) {
        auto d2 = [&](double step) {
            return (at(i, step, i, 0.0) - 2.0 * f0 + at(i, -step, i, 0.0)) / (step * step);
        };
        hess[i][i] = (16.0 * d2(h / 2.0) - d2(h)) / 15.0;
        for (int j = i + 1; j < d; ++j) {
            auto m2 = [&](double step) {
                return (at(i, step, j, step) + at(i, -step, j, -step) - at(i, step, j, -step) -
                        at(i, -step, j, step)) /
                       (4.0 * step * step);
            };
            hess[i][j] = hess[j][i] = (16.0 * m2(h / 2.0) - m2(h)) / 15.0;
        }
    }

    TaylorData t{CVec(n), CMat(n), CMat(n)};
    for (int i = 0; i < n; ++i)
        t.grad[i] = 0.5 * cdouble{g[2 * i], -g[2 * i + 1]};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            double xx = hess[2 * i][2 * j], yy = hess[2 * i + 1][2 * j + 1];
            double xy = hess[2 * i][2 * j + 1], yx = hess[2 * i + 1][2 * j];
            t.holo.at(i, j) = 0.25 * cdouble{xx - yy, -(xy + yx)};
            t.herm.at(i, j) = 0.25 * cdouble{xx + yy, xy - yx};
        }
    }
    return t;
}

// Independent uniform sampling helpers (mt19937_64, unrelated to the library
// counter-based generator).
class TestRng {
public:
    explicit TestRng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double a = 0.0, double b = 1.0) {
        return std::uniform_real_distribution<double>(a, b)(eng_);
    }
    double gaussian() { return std::normal_distribution<double>()(eng_); }

    cdouble complex_in_disc(double radius = 1.0) {
        for (;;) {
            double x = uniform(-radius, radius), y = uniform(-radius, radius);
            if (x * x + y * y < radius * radius) return {x, y};
        }
    }

    CVec vec_in_cube(int n, double half_side) {
        CVec v(n);
        for (int i = 0; i < n; ++i)
            v[i] = cdouble{uniform(-half_side, half_side), uniform(-half_side, half_side)};
        return v;
    }

    CVec unit_vector(int n) {
        CVec v(n);
        double s = 0.0;
        while (s == 0.0) {
            for (int i = 0; i < n; ++i) v[i] = cdouble{gaussian(), gaussian()};
            s = v.norm();
        }
        return cdouble{1.0 / s, 0.0} * v;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace testoracle
