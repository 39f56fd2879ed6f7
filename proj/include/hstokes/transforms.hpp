#pragma once

#include "hstokes/multiplier.hpp"

namespace hstokes {

enum class RieszKind : std::uint8_t { riesz_full, riesz_tan };
enum class HeatMode : std::uint8_t { full, dirichlet, reflected };
enum class DuhamelMode : std::uint8_t { direct, dirichlet, reflected };

// Riesz transforms: full-space symbol -i xi_i/|xi| on the doubled box, or
// the tangential version acting slice-wise in x_n.  Zero modes are dropped.
ScalarField singular_transform(const ScalarField& f, RieszKind kind, int axis);

// Hilbert transform in time, sample-wise in space, on the periodized
// interval [0, T).  Multiplier -i sign(tau).
ScalarSeries hilbert_time(const ScalarSeries& f);

// Harmonic extension of boundary data, multiplier e^{-x_n |xi'|} per level.
ScalarField poisson_extend(const BoundaryField& g);

// Heat flow at time t.  full acts on the doubled box; dirichlet is the
// zero-boundary semigroup (odd extension); reflected keeps only the image
// kernel (reflected zero extension).
ScalarField heat_semigroup(const ScalarField& f, double t, HeatMode mode);

// Volume heat potential u(t) = int_0^t e^{(t-s) Delta} f(s) ds by composite
// trapezoid in s, evaluated through the exact stepwise recursion
// u(t+dt) = E u(t) + dt/2 (E f(t) + f(t+dt)), E = e^{-dt |xi|^2}.
ScalarSeries duhamel_heat(const ScalarSeries& f, DuhamelMode mode);

// Dirichlet solve Delta w = g, w = 0 on {x_n = 0}, via odd extension and
// the -1/|xi|^2 multiplier.
ScalarField newtonian_dirichlet(const ScalarField& g);

// Slice-wise tangential convolution with the Newtonian kernel restricted to
// the boundary plane; symbol -1/(2 |xi'|).
ScalarField calI_tangential(const ScalarField& g);

// Applies a symbol over the tangential axes only (the symbol sees the
// tangential lattice of rank n-1).
ScalarField apply_tangential_multiplier(const ScalarField& f,
                                        const MultiplierSymbol& m);

// Spectral trapezoid accumulator for streaming Duhamel pipelines.
class DuhamelStream {
public:
    DuhamelStream(const Lattice& lat, double dt);

    // feed the spectrum of f(t_k); after the k-th call state() is the
    // spectrum of u(t_k) (the first call pins u(0) = 0).
    void feed(const std::vector<cplx>& f_hat);
    const std::vector<cplx>& state() const { return state_; }

private:
    std::vector<double> decay_;
    std::vector<cplx> state_, fprev_;
    double dt_;
    bool started_ = false;
};

} // namespace hstokes
