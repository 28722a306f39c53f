#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace kawakac {

// Composite Simpson on [a,b] with n panels (n even).
template <class F>
double simpson(F&& f, double a, double b, int n) {
    if (n < 2) n = 2;
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n; i += 2) odd += f(a + i * h);
    for (int i = 2; i < n; i += 2) even += f(a + i * h);
    return (h / 3.0) * (f(a) + f(b) + 4.0 * odd + 2.0 * even);
}

// 4-point Gauss-Legendre nodes/weights on [-1,1].
struct Gauss4 {
    static constexpr double x0 = 0.3399810435848563;
    static constexpr double x1 = 0.8611363115940526;
    static constexpr double w0 = 0.6521451548625461;
    static constexpr double w1 = 0.3478548451374538;
};

// Integrate f over [a,b] with 4-point Gauss.
template <class F>
double gauss4(F&& f, double a, double b) {
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    return r * (Gauss4::w0 * (f(c - r * Gauss4::x0) + f(c + r * Gauss4::x0)) +
                Gauss4::w1 * (f(c - r * Gauss4::x1) + f(c + r * Gauss4::x1)));
}

inline std::uint64_t fnv1a64(const void* data, std::size_t n,
                             std::uint64_t h = 0xcbf29ce484222325ULL) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(const std::string& s) { return fnv1a64(s.data(), s.size()); }

// Dense symmetric matrix stored row-major.
struct SymMatrix {
    int n = 0;
    std::vector<double> a;
    SymMatrix() = default;
    explicit SymMatrix(int dim) : n(dim), a(std::size_t(dim) * dim, 0.0) {}
    double& operator()(int i, int j) { return a[std::size_t(i) * n + j]; }
    double operator()(int i, int j) const { return a[std::size_t(i) * n + j]; }
};

// Cyclic Jacobi eigenvalue iteration; returns eigenvalues ascending.
// Good enough for the Gram matrices handled here (dim <= a few hundred).
inline std::vector<double> sym_eigenvalues(SymMatrix m) {
    const int n = m.n;
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += m(i, j) * m(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m(p, q);
                if (std::fabs(apq) < 1e-300) continue;
                const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = m(k, p), akq = m(k, q);
                    m(k, p) = c * akp - s * akq;
                    m(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = m(p, k), aqk = m(q, k);
                    m(p, k) = c * apk - s * aqk;
                    m(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Solves (A + ridge I) x = b for symmetric positive definite A via Cholesky.
inline std::vector<double> spd_solve(SymMatrix a, std::vector<double> b, double ridge) {
    const int n = a.n;
    if (int(b.size()) != n) throw std::invalid_argument("spd_solve: size mismatch");
    for (int i = 0; i < n; ++i) a(i, i) += ridge;
    // in-place Cholesky, lower triangle
    for (int j = 0; j < n; ++j) {
        double d = a(j, j);
        for (int k = 0; k < j; ++k) d -= a(j, k) * a(j, k);
        if (d <= 0.0) throw std::runtime_error("spd_solve: matrix not positive definite");
        const double ljj = std::sqrt(d);
        a(j, j) = ljj;
        for (int i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (int k = 0; k < j; ++k) s -= a(i, k) * a(j, k);
            a(i, j) = s / ljj;
        }
    }
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= a(i, k) * b[k];
        b[i] = s / a(i, i);
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int k = i + 1; k < n; ++k) s -= a(k, i) * b[k];
        b[i] = s / a(i, i);
    }
    return b;
}

// Thomas algorithm for a constant-coefficient tridiagonal system
// (sub, diag, sup constant). Factorization reused across solves.
class ConstTridiag {
public:
    ConstTridiag() = default;
    ConstTridiag(int n, double sub, double diag, double sup)
        : n_(n), sub_(sub), cp_(n) {
        double d = diag;
        for (int i = 0; i < n; ++i) {
            if (i > 0) d = diag - sub * cp_[i - 1];
            cp_[i] = sup / d;
            inv_d_.push_back(1.0 / d);
        }
    }
    void solve(std::vector<double>& rhs) const {
        rhs[0] *= inv_d_[0];
        for (int i = 1; i < n_; ++i) rhs[i] = (rhs[i] - sub_ * rhs[i - 1]) * inv_d_[i];
        for (int i = n_ - 2; i >= 0; --i) rhs[i] -= cp_[i] * rhs[i + 1];
    }

private:
    int n_ = 0;
    double sub_ = 0.0;
    std::vector<double> cp_, inv_d_;
};

// General tridiagonal solve (used by the per-slice energy maximization).
inline void tridiag_solve(std::vector<double>& sub, std::vector<double>& diag,
                          std::vector<double>& sup, std::vector<double>& rhs) {
    const int n = int(diag.size());
    for (int i = 1; i < n; ++i) {
        const double w = sub[i] / diag[i - 1];
        diag[i] -= w * sup[i - 1];
        rhs[i] -= w * rhs[i - 1];
    }
    rhs[n - 1] /= diag[n - 1];
    for (int i = n - 2; i >= 0; --i) rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / diag[i];
}

}  // namespace kawakac
