#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <stdexcept>

namespace suitalab {

using cdouble = std::complex<double>;

// Small dense complex vector, capacity fixed at compile time.  All model
// domains live in C^2, but n is kept generic up to kMaxDim.
class CVec {
public:
    static constexpr int kMaxDim = 4;

    CVec() : n_(0) {}
    explicit CVec(int n) : n_(check_dim(n)) { v_.fill(cdouble{0.0, 0.0}); }
    CVec(std::initializer_list<cdouble> xs) : n_(check_dim(static_cast<int>(xs.size()))) {
        int i = 0;
        for (const auto& x : xs) v_[i++] = x;
    }

    static CVec zero(int n) { return CVec(n); }
    static CVec unit(int n, int k) {
        CVec e(n);
        e[k] = 1.0;
        return e;
    }

    int dim() const { return n_; }

    cdouble& operator[](int i) { return v_[i]; }
    const cdouble& operator[](int i) const { return v_[i]; }

    double norm_sq() const {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += std::norm(v_[i]);
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    bool finite() const {
        for (int i = 0; i < n_; ++i)
            if (!std::isfinite(v_[i].real()) || !std::isfinite(v_[i].imag())) return false;
        return true;
    }

    // 'z part (all but the last coordinate).
    CVec prime() const {
        CVec p(n_ - 1);
        for (int i = 0; i < n_ - 1; ++i) p[i] = v_[i];
        return p;
    }
    cdouble last() const { return v_[n_ - 1]; }

    CVec& operator+=(const CVec& o) {
        for (int i = 0; i < n_; ++i) v_[i] += o.v_[i];
        return *this;
    }
    CVec& operator-=(const CVec& o) {
        for (int i = 0; i < n_; ++i) v_[i] -= o.v_[i];
        return *this;
    }
    CVec& operator*=(cdouble c) {
        for (int i = 0; i < n_; ++i) v_[i] *= c;
        return *this;
    }

    friend CVec operator+(CVec a, const CVec& b) { return a += b; }
    friend CVec operator-(CVec a, const CVec& b) { return a -= b; }
    friend CVec operator*(cdouble c, CVec a) { return a *= c; }
    friend CVec operator-(CVec a) { return a *= -1.0; }

private:
    static int check_dim(int n) {
        if (n < 0 || n > kMaxDim) throw std::invalid_argument("CVec: dimension out of range");
        return n;
    }
    std::array<cdouble, kMaxDim> v_;
    int n_;
};

// Hermitian inner product <a,b> = sum_i a_i * conj(b_i).
inline cdouble hermitian_dot(const CVec& a, const CVec& b) {
    cdouble s = 0.0;
    for (int i = 0; i < a.dim(); ++i) s += a[i] * std::conj(b[i]);
    return s;
}

inline double dist(const CVec& a, const CVec& b) { return (a - b).norm(); }

// Small dense complex matrix (n x n), row major.
class CMat {
public:
    CMat() : n_(0) {}
    explicit CMat(int n) : n_(check_dim(n)) { a_.fill(cdouble{0.0, 0.0}); }

    static CMat identity(int n) {
        CMat m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
        return m;
    }
    static CMat diagonal(const CVec& d) {
        CMat m(d.dim());
        for (int i = 0; i < d.dim(); ++i) m.at(i, i) = d[i];
        return m;
    }

    int dim() const { return n_; }

    cdouble& at(int i, int j) { return a_[i * n_ + j]; }
    const cdouble& at(int i, int j) const { return a_[i * n_ + j]; }

    CVec operator*(const CVec& v) const {
        CVec r(n_);
        for (int i = 0; i < n_; ++i) {
            cdouble s = 0.0;
            for (int j = 0; j < n_; ++j) s += at(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    CMat operator*(const CMat& o) const {
        CMat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                cdouble aik = at(i, k);
                for (int j = 0; j < n_; ++j) r.at(i, j) += aik * o.at(k, j);
            }
        return r;
    }

    CMat adjoint() const {
        CMat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.at(i, j) = std::conj(at(j, i));
        return r;
    }

    // Determinant by partially pivoted LU; n is at most kMaxDim.
    cdouble det() const {
        CMat lu = *this;
        cdouble d = 1.0;
        for (int k = 0; k < n_; ++k) {
            int piv = k;
            for (int i = k + 1; i < n_; ++i)
                if (std::abs(lu.at(i, k)) > std::abs(lu.at(piv, k))) piv = i;
            if (piv != k) {
                for (int j = 0; j < n_; ++j) std::swap(lu.at(k, j), lu.at(piv, j));
                d = -d;
            }
            cdouble p = lu.at(k, k);
            if (p == cdouble{0.0, 0.0}) return 0.0;
            d *= p;
            for (int i = k + 1; i < n_; ++i) {
                cdouble f = lu.at(i, k) / p;
                for (int j = k; j < n_; ++j) lu.at(i, j) -= f * lu.at(k, j);
            }
        }
        return d;
    }

    CMat inverse() const {
        CMat a = *this;
        CMat inv = identity(n_);
        for (int k = 0; k < n_; ++k) {
            int piv = k;
            for (int i = k + 1; i < n_; ++i)
                if (std::abs(a.at(i, k)) > std::abs(a.at(piv, k))) piv = i;
            if (std::abs(a.at(piv, k)) == 0.0)
                throw std::invalid_argument("CMat::inverse: singular matrix");
            if (piv != k)
                for (int j = 0; j < n_; ++j) {
                    std::swap(a.at(k, j), a.at(piv, j));
                    std::swap(inv.at(k, j), inv.at(piv, j));
                }
            cdouble p = a.at(k, k);
            for (int j = 0; j < n_; ++j) {
                a.at(k, j) /= p;
                inv.at(k, j) /= p;
            }
            for (int i = 0; i < n_; ++i) {
                if (i == k) continue;
                cdouble f = a.at(i, k);
                if (f == cdouble{0.0, 0.0}) continue;
                for (int j = 0; j < n_; ++j) {
                    a.at(i, j) -= f * a.at(k, j);
                    inv.at(i, j) -= f * inv.at(k, j);
                }
            }
        }
        return inv;
    }

private:
    static int check_dim(int n) {
        if (n < 0 || n > CVec::kMaxDim) throw std::invalid_argument("CMat: dimension out of range");
        return n;
    }
    std::array<cdouble, CVec::kMaxDim * CVec::kMaxDim> a_;
    int n_;
};

// Hermitian quadratic form v* Q v (real for Hermitian Q).
inline double hermitian_form_value(const CMat& q, const CVec& v) {
    cdouble s = 0.0;
    for (int i = 0; i < v.dim(); ++i)
        for (int j = 0; j < v.dim(); ++j) s += std::conj(v[i]) * q.at(i, j) * v[j];
    return s.real();
}

}  // namespace suitalab
