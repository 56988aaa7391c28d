#include "sumrules/quadrature.hpp"

#include <cmath>
#include <vector>

namespace sumrules::detail {

GaussLegendre::GaussLegendre(int n) {
    x.resize(n);
    w.resize(n);
    const double pi = 3.14159265358979323846;
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double xi = std::cos(pi * (k + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // Legendre P_n(xi) and P'_n(xi) by recurrence
            double p0 = 1.0, p1 = xi;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * xi * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (xi * p1 - p0) / (xi * xi - 1.0);
            const double dx = p1 / pp;
            xi -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        x[n - 1 - k] = xi;
        x[k] = -xi;
        w[k] = w[n - 1 - k] = 2.0 / ((1.0 - xi * xi) * pp * pp);
    }
    if (n % 2 == 1) x[n / 2] = 0.0;
}

namespace {

const GaussLegendre& rule12() {
    static const GaussLegendre g(12);
    return g;
}

template <typename T, typename Norm>
struct AdaptiveEngine {
    const std::function<T(double)>& f;
    const QuadOptions& opt;
    Norm norm;
    int evals = 0;

    T panel(double a, double b) {
        const GaussLegendre& g = rule12();
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        T acc{};
        for (size_t i = 0; i < g.x.size(); ++i)
            acc += T(g.w[i]) * f(mid + half * g.x[i]);
        evals += int(g.x.size());
        return T(half) * acc;
    }

    // returns {value, err}; controlled_scale reports the panel magnitude
    // the local tolerances were enforced against
    double controlled_scale = 0.0;

    std::pair<T, double> run(double a, double b) {
        struct Seg { double a, b; T whole; };
        std::vector<Seg> stack;
        stack.push_back({a, b, panel(a, b)});
        T total{};
        double err_total = 0.0;
        int panels = 0;
        const double span = std::abs(b - a);
        double scale = 0.0;
        while (!stack.empty()) {
            if (++panels > opt.max_panels)
                throw QuadFailure("adaptive quadrature: panel budget exhausted");
            const Seg s = stack.back();
            stack.pop_back();
            const double m = 0.5 * (s.a + s.b);
            const T left = panel(s.a, m);
            const T right = panel(m, s.b);
            const T sum2 = left + right;
            const double err = norm(sum2 - s.whole);
            scale = std::max(scale, norm(sum2));
            const double local_tol =
                std::max(opt.abs_tol, opt.rel_tol * scale) *
                std::max(std::abs(s.b - s.a) / span, 1e-3);
            if (err < local_tol || std::abs(s.b - s.a) < 1e-15 * span) {
                total += sum2;
                err_total += err / 63.0 + 1e-17 * norm(sum2);
            } else {
                stack.push_back({s.a, m, left});
                stack.push_back({m, s.b, right});
            }
        }
        controlled_scale = scale;
        return {total, err_total};
    }
};

} // namespace

QuadOutcome integrate_adaptive(const std::function<double(double)>& f,
                               double a, double b, const QuadOptions& opt) {
    if (!(b > a)) {
        if (a == b) return {0.0, 0.0, 0, true};
        throw std::invalid_argument("integrate_adaptive: requires b >= a");
    }
    auto norm = [](double v) { return std::abs(v); };
    AdaptiveEngine<double, decltype(norm)> eng{f, opt, norm};
    auto [value, err] = eng.run(a, b);
    QuadOutcome out;
    out.value = value;
    out.abs_err = err;
    out.scale = eng.controlled_scale;
    out.evals = eng.evals;
    out.converged =
        err <= std::max(opt.abs_tol, opt.rel_tol * eng.controlled_scale) * 8.0;
    return out;
}

QuadOutcomeC integrate_adaptive_complex(
    const std::function<std::complex<double>(double)>& f,
    double a, double b, const QuadOptions& opt) {
    if (!(b > a)) {
        if (a == b) return {{0.0, 0.0}, 0.0, 0, true};
        throw std::invalid_argument("integrate_adaptive_complex: requires b >= a");
    }
    auto norm = [](std::complex<double> v) { return std::abs(v); };
    AdaptiveEngine<std::complex<double>, decltype(norm)> eng{f, opt, norm};
    auto [value, err] = eng.run(a, b);
    QuadOutcomeC out;
    out.value = value;
    out.abs_err = err;
    out.scale = eng.controlled_scale;
    out.evals = eng.evals;
    out.converged =
        err <= std::max(opt.abs_tol, opt.rel_tol * eng.controlled_scale) * 8.0;
    return out;
}


QuadOutcome integrate_power_origin(const std::function<double(double)>& f,
                                   double q, double t0, double b,
                                   const QuadOptions& opt) {
    if (q <= -1.0)
        throw std::invalid_argument("integrate_power_origin: requires q > -1");
    // cubic fit of f/t^q through four nested sample points
    const double rs[4] = {t0, 0.5 * t0, 0.25 * t0, 0.125 * t0};
    double A[4][5];
    for (int i = 0; i < 4; ++i) {
        double p = 1.0;
        for (int j = 0; j < 4; ++j) {
            A[i][j] = p;
            p *= rs[i];
        }
        A[i][4] = f(rs[i]) / std::pow(rs[i], q);
    }
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int i = col + 1; i < 4; ++i)
            if (std::abs(A[i][col]) > std::abs(A[piv][col])) piv = i;
        for (int j = 0; j < 5; ++j) std::swap(A[col][j], A[piv][j]);
        for (int i = col + 1; i < 4; ++i) {
            const double fac = A[i][col] / A[col][col];
            for (int j = col; j < 5; ++j) A[i][j] -= fac * A[col][j];
        }
    }
    double c[4];
    for (int i = 3; i >= 0; --i) {
        double s = A[i][4];
        for (int j = i + 1; j < 4; ++j) s -= A[i][j] * c[j];
        c[i] = s / A[i][i];
    }
    double near = 0.0;
    for (int j = 0; j < 4; ++j)
        near += c[j] * std::pow(t0, q + 1 + j) / (q + 1 + j);
    const double near_err = 3.0 * std::abs(c[3] * std::pow(t0, q + 4) / (q + 4));

    QuadOutcome bulk = integrate_adaptive(f, t0, b, opt);
    bulk.value += near;
    bulk.abs_err += near_err;
    bulk.evals += 4;
    return bulk;
}

} // namespace sumrules::detail

