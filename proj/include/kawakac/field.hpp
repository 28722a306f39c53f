#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace kawakac {

// Uniform node grid on [-1,1] including both endpoints: u_j = -1 + j h.
struct Grid {
    int n = 0;  // number of intervals; n+1 nodes
    double h = 0.0;
    Grid() = default;
    explicit Grid(int intervals) : n(intervals), h(2.0 / intervals) {
        if (intervals < 2) throw std::invalid_argument("Grid: need at least 2 intervals");
    }
    double node(int j) const { return -1.0 + j * h; }
    int nodes() const { return n + 1; }
    bool operator==(const Grid& o) const { return n == o.n; }
};

// Macroscopic density on grid nodes with Dirichlet endpoint data.
// Values are allowed a 1e-6 band around [0,1]; anything further is a
// hard failure (silent clipping would mask scheme defects).
struct DensityField {
    Grid grid;
    double rho_minus = 0.0, rho_plus = 0.0;
    std::vector<double> v;

    DensityField() = default;
    DensityField(Grid g, double rm, double rp)
        : grid(g), rho_minus(rm), rho_plus(rp), v(std::size_t(g.nodes()), 0.0) {
        v.front() = rm;
        v.back() = rp;
    }

    void validate() const {
        if (int(v.size()) != grid.nodes())
            throw std::invalid_argument("DensityField: value/grid size mismatch");
        if (v.front() != rho_minus || v.back() != rho_plus)
            throw std::runtime_error("DensityField: endpoints detached from Dirichlet data");
        for (double x : v)
            if (!(x >= -1e-6 && x <= 1.0 + 1e-6))
                throw std::runtime_error("DensityField: value outside [-1e-6, 1+1e-6]");
    }

    // piecewise-linear evaluation
    double at(double u) const {
        const double s = (u + 1.0) / grid.h;
        int j = int(std::floor(s));
        j = std::clamp(j, 0, grid.n - 1);
        const double t = s - j;
        return v[j] * (1.0 - t) + v[j + 1] * t;
    }

    // exact integral of the piecewise-linear interpolant over [a,b]
    double integral(double a, double b) const {
        a = std::max(a, -1.0);
        b = std::min(b, 1.0);
        if (b <= a) return 0.0;
        auto prim = [&](double u) {  // antiderivative from -1
            const double s = (u + 1.0) / grid.h;
            int j = std::clamp(int(std::floor(s)), 0, grid.n - 1);
            double acc = 0.0;
            for (int k = 0; k < j; ++k) acc += 0.5 * (v[k] + v[k + 1]) * grid.h;
            const double t = (u - grid.node(j));
            const double slope = (v[j + 1] - v[j]) / grid.h;
            return acc + v[j] * t + 0.5 * slope * t * t;
        };
        return prim(b) - prim(a);
    }
};

// Time-indexed density fields on a uniform time grid.
struct DensityPath {
    Grid grid;
    double rho_minus = 0.0, rho_plus = 0.0;
    double dt = 0.0;  // spacing of stored slices
    std::vector<std::vector<double>> fields;

    int slices() const { return int(fields.size()); }
    double time_of(int m) const { return m * dt; }
    double horizon() const { return dt * (slices() - 1); }

    // linear interpolation between stored slices
    std::vector<double> at_time(double t) const {
        const double s = t / dt;
        int m = std::clamp(int(std::floor(s)), 0, slices() - 2);
        const double w = s - m;
        std::vector<double> out(fields[m].size());
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = fields[m][j] * (1.0 - w) + fields[m + 1][j] * w;
        return out;
    }
};

// Piecewise-constant field on the lattice cells
// [x/N - 1/2N, x/N + 1/2N), x = -N+1,...,N-1; zero on the two boundary
// half-cells, matching the empirical density convention.
struct CellField {
    int N = 0;
    std::vector<double> v;  // size 2N-1

    CellField() = default;
    explicit CellField(int half_width)
        : N(half_width), v(std::size_t(2 * half_width - 1), 0.0) {}

    int cells() const { return 2 * N - 1; }
    int site_of(int j) const { return j - N + 1; }
    double center(int j) const { return double(site_of(j)) / N; }
    double left_edge(int j) const { return (site_of(j) - 0.5) / N; }

    double at(double u) const {
        const int x = int(std::lround(u * N));
        if (x <= -N || x >= N) return 0.0;
        // membership check against the half-open cell
        const double l = (x - 0.5) / N;
        if (u < l || u >= l + 1.0 / N) {
            const int x2 = (u < l) ? x - 1 : x + 1;
            if (x2 <= -N || x2 >= N) return 0.0;
            return v[std::size_t(x2 + N - 1)];
        }
        return v[std::size_t(x + N - 1)];
    }

    double integral(double a, double b) const {
        a = std::max(a, -1.0);
        b = std::min(b, 1.0);
        if (b <= a) return 0.0;
        const double w = 1.0 / N;
        double acc = 0.0;
        for (int j = 0; j < cells(); ++j) {
            const double l = left_edge(j), r = l + w;
            const double lo = std::max(a, l), hi = std::min(b, r);
            if (hi > lo) acc += v[std::size_t(j)] * (hi - lo);
        }
        return acc;
    }
};

// m^eps(u) = (2 eps)^-1 int_{[u-eps,u+eps] cap [-1,1]} m ; the divisor is
// always 2 eps, so the window is genuinely truncated at the boundary.
template <class Field>
double mollified_at(const Field& f, double u, double eps) {
    return f.integral(u - eps, u + eps) / (2.0 * eps);
}

inline CellField mollify(const CellField& f, double eps) {
    if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("mollify: eps in (0,1)");
    CellField out(f.N);
    // exact window integrals via a prefix over cell edges
    const double w = 1.0 / f.N;
    std::vector<double> prefix(std::size_t(f.cells()) + 1, 0.0);
    for (int j = 0; j < f.cells(); ++j) prefix[j + 1] = prefix[j] + f.v[j] * w;
    auto prim = [&](double u) {  // integral from -1 to u
        u = std::clamp(u, -1.0, 1.0);
        const double l0 = f.left_edge(0);
        if (u <= l0) return 0.0;
        const double s = (u - l0) / w;
        const int j = std::min(int(std::floor(s)), f.cells() - 1);
        const double frac = u - (l0 + j * w);
        if (s >= f.cells()) return prefix[f.cells()];
        return prefix[j] + f.v[std::size_t(j)] * frac;
    };
    for (int j = 0; j < out.cells(); ++j) {
        const double c = out.center(j);
        out.v[std::size_t(j)] = (prim(c + eps) - prim(c - eps)) / (2.0 * eps);
    }
    return out;
}

// L1 distance between two callables on [-1,1] (midpoint rule).
inline double l1_distance(const std::function<double(double)>& a,
                          const std::function<double(double)>& b, int n = 4000) {
    const double h = 2.0 / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = -1.0 + (i + 0.5) * h;
        acc += std::fabs(a(u) - b(u));
    }
    return acc * h;
}

inline double l2_norm_nodes(const std::vector<double>& a, const Grid& g) {
    double acc = 0.0;
    for (int j = 0; j <= g.n; ++j) {
        const double wgt = (j == 0 || j == g.n) ? 0.5 : 1.0;
        acc += wgt * a[std::size_t(j)] * a[std::size_t(j)];
    }
    return std::sqrt(acc * g.h);
}

}  // namespace kawakac
