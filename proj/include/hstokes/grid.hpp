#pragma once

#include <utility>

#include "hstokes/errors.hpp"

namespace hstokes {

// Discretization of the truncated half-space box
//   [-L_tan, L_tan]^{n-1} x [0, L_nrm].
//
// Tangential axes carry N samples at x = -L_tan + i*h_tan and are periodic
// with period 2*L_tan.  The normal axis carries N/2+1 samples at
// x_n = m*h_nrm, m = 0..N/2, so that {x_n = 0} and {x_n = L_nrm} are sample
// planes and even/odd/zero extensions land exactly on a periodic box of
// period 2*L_nrm with N samples.  Full (doubled) fields store the normal
// axis in wrap-around order: index k maps to x_n = k*h_nrm for k <= N/2 and
// to (k-N)*h_nrm above.
struct GridSpec {
    int n = 3;          // spatial dimension, 2 or 3
    double L_tan = 4.0; // tangential half-width
    double L_nrm = 4.0; // normal depth
    int N = 64;         // samples per axis, power of two

    double h_tan() const { return 2.0 * L_tan / N; }
    double h_nrm() const { return L_nrm / (N / 2); }
    int half_normal_count() const { return N / 2 + 1; }

    double tan_coord(int i) const { return -L_tan + i * h_tan(); }
    double half_normal_coord(int m) const { return m * h_nrm(); }
    double full_normal_coord(int k) const {
        return (k <= N / 2 ? k : k - N) * h_nrm();
    }

    bool operator==(const GridSpec& o) const {
        return n == o.n && L_tan == o.L_tan && L_nrm == o.L_nrm && N == o.N;
    }
};

struct TimeSpec {
    double T = 1.0;
    int N_t = 64;

    double dt() const { return T / N_t; }
    bool operator==(const TimeSpec& o) const { return T == o.T && N_t == o.N_t; }
};

// Validates and assembles the pair of discretization specs.
std::pair<GridSpec, TimeSpec> make_grid(int n, double L_tan, double L_nrm,
                                        int N, double T, int N_t);

} // namespace hstokes
