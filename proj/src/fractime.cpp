#include "hstokes/fractime.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "hstokes/fft.hpp"
#include "hstokes/multiplier.hpp"

namespace hstokes {

FracConstants frac_constants(double sigma) {
    if (!(sigma > 0.0 && sigma < 1.0))
        throw OrderOutOfRange("frac_constants needs 0 < sigma < 1");
    FracConstants c;
    const double gamma = std::tgamma(1.0 - sigma);
    c.a = gamma * std::sin(0.5 * M_PI * sigma);
    c.b = gamma * std::cos(0.5 * M_PI * sigma);
    const double d = c.a * c.a + c.b * c.b;
    c.A = (c.a * c.a - c.b * c.b) / d;
    c.B = 2.0 * c.a * c.b / d;
    return c;
}

FracOpSpec make_frac_op(double sigma, FracSide side) {
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw OrderOutOfRange("order must lie in (0, 1]");
    FracOpSpec s;
    s.sigma = sigma;
    s.side = side;
    if (sigma < 1.0) s.constants = frac_constants(sigma);
    return s;
}

FracWeights::FracWeights(double sigma, double dt, int steps)
    : steps_(steps), dt_(dt) {
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw OrderOutOfRange("quadrature order must lie in (0, 1]");
    if (steps < 1 || dt <= 0.0) throw InvalidSpec("bad time grid");
    coeff_ = std::pow(dt, sigma) / std::tgamma(sigma);
    g0_.resize(steps + 2);
    g1_.resize(steps + 2);
    // cell moments M0(r) = int_{r-1}^r u^{s-1} du,
    // M1(r) = int_{r-1}^r u^{s-1} (r-u) du; node weights follow by
    // splitting each cell's linear interpolant.
    for (int r = 1; r <= steps + 1; ++r) {
        const double rp = std::pow(r, sigma);
        const double rm = std::pow(r - 1.0, sigma);
        const double m0 = (rp - rm) / sigma;
        const double m1 =
            r * m0 - (rp * r - rm * (r - 1.0)) / (sigma + 1.0);
        g0_[r] = m0 - m1;
        g1_[r] = m1;
    }
}

double FracWeights::weight(int k, int j) const {
    if (k < 1 || j < 0 || j > k) return 0.0;
    double w = 0.0;
    if (j < k) w += g0_[k - j];
    if (j > 0) w += g1_[k - j + 1];
    if (j == k) w += g1_[1];
    return coeff_ * w;
}

namespace {

std::vector<double> left_integral(const std::vector<double>& f, double dt,
                                  double sigma) {
    const int n = static_cast<int>(f.size()) - 1;
    FracWeights w(sigma, dt, n);
    std::vector<double> out(f.size(), 0.0);
#pragma omp parallel for schedule(static)
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        for (int j = 0; j <= k; ++j) s += w.weight(k, j) * f[j];
        out[k] = s;
    }
    return out;
}

std::vector<double> right_integral(const std::vector<double>& f, double dt,
                                   double sigma) {
    const int n = static_cast<int>(f.size()) - 1;
    double scale = 0.0;
    for (double v : f) scale = std::max(scale, std::abs(v));
    if (std::abs(f[n]) > 1e-12 * std::max(scale, 1.0))
        throw UnsupportedSignal("right-sided operator needs f(T) = 0");
    std::vector<double> rev(f.rbegin(), f.rend());
    std::vector<double> out = left_integral(rev, dt, sigma);
    std::reverse(out.begin(), out.end());
    return out;
}

std::vector<double> time_derivative(const std::vector<double>& g, double dt) {
    const int n = static_cast<int>(g.size()) - 1;
    std::vector<double> out(g.size());
    out[0] = (-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * dt);
    for (int k = 1; k < n; ++k) out[k] = (g[k + 1] - g[k - 1]) / (2.0 * dt);
    out[n] = (3.0 * g[n] - 4.0 * g[n - 1] + g[n - 2]) / (2.0 * dt);
    return out;
}

} // namespace

std::vector<double> frac_apply(const std::vector<double>& f, double T,
                               const FracOpSpec& spec) {
    if (f.size() < 4) throw InvalidSpec("signal too short");
    if (!(T > 0.0)) throw InvalidSpec("nonpositive horizon");
    const double dt = T / (static_cast<double>(f.size()) - 1.0);
    const double sigma = spec.sigma;
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw OrderOutOfRange("order must lie in (0, 1]");

    switch (spec.side) {
    case FracSide::left_integral:
        return left_integral(f, dt, sigma);
    case FracSide::right_integral:
        return right_integral(f, dt, sigma);
    case FracSide::derivative:
        if (sigma == 1.0) return time_derivative(f, dt);
        return time_derivative(left_integral(f, dt, 1.0 - sigma), dt);
    case FracSide::adjoint_derivative:
        if (sigma == 1.0) return time_derivative(f, dt);
        return time_derivative(right_integral(f, dt, 1.0 - sigma), dt);
    }
    throw InvalidSpec("frac side");
}

std::vector<double> frac_apply_periodic(const std::vector<double>& f, double T,
                                        const FracOpSpec& spec) {
    // the last sample duplicates f(0) on the periodized interval
    const int m = static_cast<int>(f.size()) - 1;
    if (m < 4) throw InvalidSpec("signal too short");
    const double sigma = spec.sigma;
    if (!(sigma > 0.0 && sigma <= 1.0))
        throw OrderOutOfRange("order must lie in (0, 1]");

    Lattice lat;
    lat.shape = {m};
    lat.period = {T};
    SpectralField s = fft::forward(lat, std::vector<double>(f.begin(),
                                                            f.begin() + m));
    MultiplierSymbol sym;
    switch (spec.side) {
    case FracSide::left_integral: {
        FracConstants c = frac_constants(sigma);
        sym = symbols::riemann_liouville(sigma, c.a, c.b, false);
        break;
    }
    case FracSide::right_integral: {
        FracConstants c = frac_constants(sigma);
        sym = symbols::riemann_liouville(sigma, c.a, c.b, true);
        break;
    }
    case FracSide::derivative:
    case FracSide::adjoint_derivative: {
        const bool conj = spec.side == FracSide::adjoint_derivative;
        if (sigma == 1.0) {
            sym = symbols::derivative(0);
        } else {
            FracConstants c = frac_constants(1.0 - sigma);
            MultiplierSymbol base =
                symbols::riemann_liouville(1.0 - sigma, c.a, c.b, conj);
            sym = {"frac_derivative",
                   [base](const double* xi, int rank) {
                       return cplx(0.0, xi[0]) * base.eval(xi, rank);
                   },
                   ZeroModePolicy::zero};
        }
        break;
    }
    }
    apply_multiplier(s, sym);
    std::vector<double> out = fft::inverse_real(s);
    out.push_back(out[0]);
    return out;
}

DualityResult frac_duality_check(const std::vector<double>& f,
                                 const std::vector<double>& g, double T,
                                 double sigma) {
    if (f.size() != g.size()) throw InvalidSpec("signal length mismatch");
    const double dt = T / (static_cast<double>(f.size()) - 1.0);
    std::vector<double> If =
        frac_apply(f, T, make_frac_op(sigma, FracSide::left_integral));
    std::vector<double> Jg =
        frac_apply(g, T, make_frac_op(sigma, FracSide::right_integral));
    auto pair = [dt](const std::vector<double>& u,
                     const std::vector<double>& v) {
        double s = 0.5 * (u.front() * v.front() + u.back() * v.back());
        for (std::size_t k = 1; k + 1 < u.size(); ++k) s += u[k] * v[k];
        return s * dt;
    };
    DualityResult r;
    r.lhs = pair(If, g);
    r.rhs = pair(f, Jg);
    const double denom = std::max({std::abs(r.lhs), std::abs(r.rhs), 1e-300});
    r.gap = std::abs(r.lhs - r.rhs) / denom;
    return r;
}

} // namespace hstokes
