#pragma once

#include <vector>

#include "hstokes/errors.hpp"

namespace hstokes {

enum class FracSide : int {
    left_integral,      // I_sigma, integrates the causal past
    right_integral,     // J_sigma, integrates the future up to T
    derivative,         // D^sigma = d/dt I_{1-sigma}
    adjoint_derivative  // D^{*sigma} = d/dt J_{1-sigma}
};

struct FracConstants {
    double a = 0.0, b = 0.0, A = 0.0, B = 0.0;
};

// a_sigma = int_0^inf cos(t) t^-sigma dt = Gamma(1-sigma) sin(pi sigma/2),
// b_sigma the sine analogue; A,B the induced rotation coefficients with
// A^2 + B^2 = 1.
FracConstants frac_constants(double sigma);

struct FracOpSpec {
    double sigma = 0.5;
    FracSide side = FracSide::left_integral;
    FracConstants constants;   // populated for 0 < sigma < 1
};

FracOpSpec make_frac_op(double sigma, FracSide side);

// Product-integration weights for the left fractional integral of order
// sigma on a uniform grid: exact on piecewise-linear signals (the singular
// kernel is integrated analytically per cell).
class FracWeights {
public:
    FracWeights(double sigma, double dt, int steps);

    // weight of node j in I(t_k), 0 <= j <= k <= steps
    double weight(int k, int j) const;
    int steps() const { return steps_; }
    double dt() const { return dt_; }

private:
    double coeff_;
    int steps_;
    double dt_;
    std::vector<double> g0_, g1_;
};

// Signals are uniform samples f(k * T/(size-1)) on [0, T], zero-extended to
// the left of 0; right-sided operators require f(T) = 0.
std::vector<double> frac_apply(const std::vector<double>& f, double T,
                               const FracOpSpec& spec);

// Fourier-symbol route for T-periodic signals (used where signals are
// periodized): multiplier (a - i b sign tau) |tau|^-sigma and variants.
std::vector<double> frac_apply_periodic(const std::vector<double>& f, double T,
                                        const FracOpSpec& spec);

struct DualityResult {
    double lhs = 0.0, rhs = 0.0, gap = 0.0;
};

// Pairing int I_sigma f . g dt versus int f . J_sigma g dt by trapezoid on
// the nodal values.
DualityResult frac_duality_check(const std::vector<double>& f,
                                 const std::vector<double>& g, double T,
                                 double sigma);

} // namespace hstokes
