#include "hstokes/multiplier.hpp"

#include <cmath>

namespace hstokes {

namespace {

// Iterates flat index -> per-axis frequencies without re-deriving the
// multi-index each time.
struct FreqIter {
    const Lattice& lat;
    std::vector<std::vector<double>> axis_freq;
    std::vector<int> idx;
    std::vector<double> xi;

    explicit FreqIter(const Lattice& l) : lat(l) {
        const int r = l.rank();
        axis_freq.resize(r);
        for (int d = 0; d < r; ++d) {
            axis_freq[d].resize(l.shape[d]);
            for (int j = 0; j < l.shape[d]; ++j)
                axis_freq[d][j] = l.freq(d, j);
        }
        idx.assign(r, 0);
        xi.resize(r);
        for (int d = 0; d < r; ++d) xi[d] = axis_freq[d][0];
    }
    bool is_zero_mode() const {
        for (int v : idx)
            if (v != 0) return false;
        return true;
    }
    void advance() {
        for (int d = lat.rank() - 1; d >= 0; --d) {
            if (++idx[d] < lat.shape[d]) {
                xi[d] = axis_freq[d][idx[d]];
                return;
            }
            idx[d] = 0;
            xi[d] = axis_freq[d][0];
        }
    }
};

bool finite(cplx v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

} // namespace

std::vector<cplx> multiplier_table(const Lattice& lat,
                                   const MultiplierSymbol& m) {
    std::vector<cplx> table(lat.size());
    FreqIter it(lat);
    for (std::size_t i = 0; i < table.size(); ++i, it.advance()) {
        cplx v = m.eval(it.xi.data(), lat.rank());
        if (!finite(v)) {
            if (it.is_zero_mode() && m.policy == ZeroModePolicy::zero)
                v = 0.0;
            else
                throw SymbolSingularity(m.name +
                                        " at a resolved frequency");
        } else if (it.is_zero_mode() && m.policy == ZeroModePolicy::zero) {
            v = 0.0;
        }
        table[i] = v;
    }
    return table;
}

void apply_multiplier(SpectralField& s, const MultiplierSymbol& m) {
    FreqIter it(s.lat);
    for (std::size_t i = 0; i < s.c.size(); ++i, it.advance()) {
        cplx v = m.eval(it.xi.data(), s.lat.rank());
        if (!finite(v)) {
            if (it.is_zero_mode() && m.policy == ZeroModePolicy::zero)
                v = 0.0;
            else
                throw SymbolSingularity(m.name +
                                        " at a resolved frequency");
        } else if (it.is_zero_mode() && m.policy == ZeroModePolicy::zero) {
            v = 0.0;
        }
        s.c[i] *= v;
    }
}

ScalarField apply_multiplier(const ScalarField& f, const MultiplierSymbol& m,
                             double* imag_resid) {
    Lattice lat = f.lattice();
    SpectralField s = fft::forward(lat, f.samples());
    apply_multiplier(s, m);
    std::vector<double> out = fft::inverse_real(s, imag_resid);
    return ScalarField(f.grid(), Extent::full, std::move(out));
}

namespace symbols {

namespace {
double norm2(const double* xi, int rank) {
    double s = 0.0;
    for (int d = 0; d < rank; ++d) s += xi[d] * xi[d];
    return s;
}
double tan_norm2(const double* xi, int rank) {
    double s = 0.0;
    for (int d = 0; d < rank - 1; ++d) s += xi[d] * xi[d];
    return s;
}
} // namespace

MultiplierSymbol identity() {
    return {"identity", [](const double*, int) { return cplx(1.0, 0.0); },
            ZeroModePolicy::preserve};
}

MultiplierSymbol heat(double t) {
    if (t < 0.0) throw NegativeTime("heat symbol");
    return {"heat",
            [t](const double* xi, int rank) {
                return cplx(std::exp(-t * norm2(xi, rank)), 0.0);
            },
            ZeroModePolicy::preserve};
}

MultiplierSymbol riesz_full(int axis) {
    return {"riesz_full",
            [axis](const double* xi, int rank) {
                double r = std::sqrt(norm2(xi, rank));
                if (r == 0.0) return cplx(0.0, 0.0);
                return cplx(0.0, -xi[axis] / r);
            },
            ZeroModePolicy::zero};
}

MultiplierSymbol riesz_tan(int axis) {
    return {"riesz_tan",
            [axis](const double* xi, int rank) {
                double r = std::sqrt(tan_norm2(xi, rank));
                if (r == 0.0) return cplx(0.0, 0.0);
                return cplx(0.0, -xi[axis] / r);
            },
            ZeroModePolicy::zero};
}

MultiplierSymbol inv_neg_laplace() {
    return {"inv_neg_laplace",
            [](const double* xi, int rank) {
                double r2 = norm2(xi, rank);
                if (r2 == 0.0) return cplx(0.0, 0.0);
                return cplx(-1.0 / r2, 0.0);
            },
            ZeroModePolicy::zero};
}

MultiplierSymbol laplace() {
    return {"laplace",
            [](const double* xi, int rank) {
                return cplx(-norm2(xi, rank), 0.0);
            },
            ZeroModePolicy::preserve};
}

MultiplierSymbol derivative(int axis) {
    return {"derivative",
            [axis](const double* xi, int rank) {
                (void)rank;
                return cplx(0.0, xi[axis]);
            },
            ZeroModePolicy::preserve};
}

MultiplierSymbol tangential_newtonian() {
    return {"tangential_newtonian",
            [](const double* xi, int rank) {
                double r = std::sqrt(tan_norm2(xi, rank));
                if (r == 0.0) return cplx(0.0, 0.0);
                return cplx(-0.5 / r, 0.0);
            },
            ZeroModePolicy::zero};
}

MultiplierSymbol sobolev(double alpha, bool homogeneous) {
    if (homogeneous) {
        return {"sobolev_homogeneous",
                [alpha](const double* xi, int rank) {
                    double r2 = norm2(xi, rank);
                    if (r2 == 0.0)
                        return alpha == 0.0
                                   ? cplx(1.0, 0.0)
                                   : cplx(alpha > 0.0
                                              ? 0.0
                                              : std::numeric_limits<
                                                    double>::quiet_NaN(),
                                          0.0);
                    return cplx(std::pow(r2, 0.5 * alpha), 0.0);
                },
                ZeroModePolicy::zero};
    }
    return {"sobolev",
            [alpha](const double* xi, int rank) {
                return cplx(std::pow(1.0 + norm2(xi, rank), 0.5 * alpha), 0.0);
            },
            ZeroModePolicy::preserve};
}

MultiplierSymbol ukai_composite() {
    return {"ukai_composite",
            [](const double* xi, int rank) {
                double full2 = norm2(xi, rank);
                if (full2 == 0.0) return cplx(0.0, 0.0);
                double tan = std::sqrt(tan_norm2(xi, rank));
                // (R'.S)(R'.S + R_n) with R = -i xi/|xi|, S = -i xi/|xi'|
                return tan * cplx(tan, xi[rank - 1]) / full2;
            },
            ZeroModePolicy::zero};
}

MultiplierSymbol hilbert(double sign_factor) {
    return {"hilbert",
            [sign_factor](const double* xi, int rank) {
                (void)rank;
                if (xi[0] == 0.0) return cplx(0.0, 0.0);
                double s = xi[0] > 0.0 ? 1.0 : -1.0;
                return cplx(0.0, -sign_factor * s);
            },
            ZeroModePolicy::zero};
}

MultiplierSymbol riemann_liouville(double sigma, double a, double b,
                                   bool conjugate) {
    double bs = conjugate ? -b : b;
    return {"riemann_liouville",
            [sigma, a, bs](const double* xi, int rank) {
                (void)rank;
                double t = std::abs(xi[0]);
                if (t == 0.0)
                    return cplx(std::numeric_limits<double>::quiet_NaN(), 0.0);
                double s = xi[0] > 0.0 ? 1.0 : -1.0;
                return cplx(a, -bs * s) * std::pow(t, -sigma);
            },
            ZeroModePolicy::zero};
}

} // namespace symbols
} // namespace hstokes
