#include "hstokes/forcing.hpp"

#include <cmath>
#include <random>

#include "hstokes/multiplier.hpp"

namespace hstokes {

namespace {

double plateau(double x, double a, double b, double s) {
    const double r2 = std::sqrt(2.0);
    return 0.5 * (std::erf((x - a) / (s * r2)) - std::erf((x - b) / (s * r2)));
}

} // namespace

Envelope::Envelope(const GridSpec& grid, const FieldFamily& fam) {
    const int n = grid.n;
    lo_.resize(n);
    hi_.resize(n);
    s_.resize(n);
    for (int d = 0; d < n - 1; ++d) {
        lo_[d] = -0.55 * grid.L_tan;
        hi_[d] = 0.55 * grid.L_tan;
        s_[d] = 0.07 * grid.L_tan;
    }
    if (fam.family == "boundary") {
        const double h = grid.h_nrm();
        lo_[n - 1] = 4.0 * h;
        hi_[n - 1] = 4.0 * h + 0.15 * grid.L_nrm;
        s_[n - 1] = 0.9 * h;
    } else {
        lo_[n - 1] = 0.45 * grid.L_nrm;
        hi_[n - 1] = 0.55 * grid.L_nrm;
        s_[n - 1] = 0.05 * grid.L_nrm;
    }
}

double Envelope::operator()(const double* x, int n) const {
    double v = 1.0;
    for (int d = 0; d < n; ++d) {
        double s = s_[d];
        if (d == n - 1 && lo_[d] > 0.0 && x[d] < 0.5 * lo_[d]) return 0.0;
        v *= plateau(x[d], lo_[d], hi_[d], s);
    }
    return v;
}

namespace {

// Band-limited random real field on the doubled box: random coefficients on
// modes with 0 < |xi| <= bandwidth (tangential frequencies below
// min_tan_freq dropped unless exactly zero).
ScalarField random_band_field(std::mt19937_64& gen, const GridSpec& grid,
                              const FieldFamily& fam) {
    ScalarField out(grid, Extent::full);
    Lattice lat = out.lattice();
    SpectralField s;
    s.lat = lat;
    s.c.assign(lat.size(), cplx(0.0, 0.0));

    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);

    const int r = lat.rank();
    std::vector<std::size_t> stride(r, 1);
    for (int d = r - 2; d >= 0; --d)
        stride[d] = stride[d + 1] * lat.shape[d + 1];

    std::vector<int> idx(r, 0);
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        double r2 = 0.0, rt2 = 0.0;
        bool principal = true;   // take one representative of each +-k pair
        for (int d = 0; d < r; ++d) {
            int kk = lat.freq_index(d, idx[d]);
            if (principal && kk != 0) principal = kk > 0;
            if (kk != 0 && idx[d] == lat.shape[d] / 2) principal = false;
            double x = lat.freq(d, idx[d]);
            r2 += x * x;
            if (d < r - 1) rt2 += x * x;
        }
        // first nonzero signed index decides the representative
        bool lead_pos = false;
        for (int d = 0; d < r; ++d) {
            int kk = lat.freq_index(d, idx[d]);
            if (kk != 0) {
                lead_pos = kk > 0;
                break;
            }
        }
        const double rr = std::sqrt(r2);
        const double rt = std::sqrt(rt2);
        if (rr > 0.0 && rr <= fam.bandwidth && lead_pos && principal &&
            (rt == 0.0 || rt >= fam.min_tan_freq)) {
            double amp = gauss(gen);
            double phase = unif(gen);
            cplx c = 0.5 * amp * std::polar(1.0, phase);
            s.c[i] = c * static_cast<double>(lat.size());
            // conjugate partner at -k
            std::size_t jrev = 0;
            for (int d = 0; d < r; ++d) {
                int v = (lat.shape[d] - idx[d]) % lat.shape[d];
                jrev += static_cast<std::size_t>(v) * stride[d];
            }
            s.c[jrev] = std::conj(s.c[i]);
        }
        for (int d = r - 1; d >= 0; --d) {
            if (++idx[d] < lat.shape[d]) break;
            idx[d] = 0;
        }
    }
    out.samples() = fft::inverse_real(s);
    return out;
}

void multiply_envelope(ScalarField& f, const Envelope& env) {
    const GridSpec& g = f.grid();
    const int n = g.n;
    const std::size_t tcount = f.tangential_count();
    const std::size_t M = f.normal_count();
    std::vector<double> x(n);
    std::vector<int> tidx(n - 1, 0);
    for (std::size_t ti = 0; ti < tcount; ++ti) {
        for (int d = 0; d < n - 1; ++d) x[d] = g.tan_coord(tidx[d]);
        double* row = f.samples().data() + ti * M;
        for (std::size_t k = 0; k < M; ++k) {
            x[n - 1] = (f.extent() == Extent::half)
                           ? g.half_normal_coord(static_cast<int>(k))
                           : g.full_normal_coord(static_cast<int>(k));
            row[k] *= env(x.data(), n);
        }
        for (int d = n - 2; d >= 0; --d) {
            if (++tidx[d] < g.N) break;
            tidx[d] = 0;
        }
    }
}

// spectral curl of a gridded potential; exactly divergence-free
VectorField spectral_curl(const std::vector<ScalarField>& pot) {
    const GridSpec& g = pot[0].grid();
    const int n = g.n;
    Lattice lat = pot[0].lattice();
    VectorField out(g, Extent::full);
    if (n == 2) {
        SpectralField s = fft::forward(lat, pot[0].samples());
        SpectralField s1 = s, s2 = s;
        apply_multiplier(s1, symbols::derivative(1));
        apply_multiplier(s2, symbols::derivative(0));
        out.comp[0].samples() = fft::inverse_real(s1);
        ScalarField tmp(g, Extent::full, fft::inverse_real(s2));
        scale(tmp, -1.0);
        out.comp[1] = tmp;
        return out;
    }
    std::vector<SpectralField> sp(3);
    for (int c = 0; c < 3; ++c) sp[c] = fft::forward(lat, pot[c].samples());
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        SpectralField a = sp[k], b = sp[j];
        apply_multiplier(a, symbols::derivative(j));
        apply_multiplier(b, symbols::derivative(k));
        for (std::size_t m = 0; m < a.c.size(); ++m) a.c[m] -= b.c[m];
        out.comp[i].samples() = fft::inverse_real(a);
    }
    return out;
}

std::vector<ScalarField> enveloped_potential(std::mt19937_64& gen,
                                             const GridSpec& grid,
                                             const FieldFamily& fam) {
    Envelope env(grid, fam);
    const int ncomp = grid.n == 2 ? 1 : 3;
    std::vector<ScalarField> pot;
    pot.reserve(ncomp);
    for (int c = 0; c < ncomp; ++c) {
        ScalarField a = random_band_field(gen, grid, fam);
        multiply_envelope(a, env);
        pot.push_back(std::move(a));
    }
    return pot;
}

double full_l2(const VectorField& f) {
    double s = 0.0;
    for (const auto& c : f.comp)
        for (double v : c.samples()) s += v * v;
    const GridSpec& g = f.grid();
    return std::sqrt(s * g.h_nrm() * std::pow(g.h_tan(), g.n - 1));
}

void normalize(VectorField& f, double target) {
    double s = full_l2(f);
    if (s == 0.0) return;
    for (auto& c : f.comp) scale(c, target / s);
}

double ramp(double t, double T) {
    return 0.5 * (1.0 + std::erf((t - 0.28 * T) / (0.04 * T * std::sqrt(2.0))));
}

} // namespace

VectorField random_static_divfree(std::uint64_t seed, const GridSpec& grid,
                                  const FieldFamily& fam) {
    std::mt19937_64 gen(seed);
    VectorField f = spectral_curl(enveloped_potential(gen, grid, fam));
    normalize(f, fam.amplitude);
    return f;
}

ForcingSpec random_divfree_forcing(std::uint64_t seed, const GridSpec& grid,
                                   const TimeSpec& time, const FieldFamily& fam,
                                   bool with_tensor) {
    ForcingSpec spec;
    spec.f.time = time;
    const int n = grid.n;
    if (fam.family == "zero") {
        spec.f.snap.assign(time.N_t + 1, VectorField(grid, Extent::half));
        if (with_tensor)
            spec.tensor.assign(n * n, ScalarSeries{time, std::vector<ScalarField>(
                time.N_t + 1, ScalarField(grid, Extent::half))});
        return spec;
    }

    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> wave(1, std::max(1, fam.time_waves));
    std::uniform_real_distribution<double> unif(0.0, 2.0 * M_PI);
    auto pot_x = enveloped_potential(gen, grid, fam);
    auto pot_y = enveloped_potential(gen, grid, fam);
    const double w1 = wave(gen) * M_PI / time.T, p1 = unif(gen);
    const double w2 = wave(gen) * M_PI / time.T, p2 = unif(gen);

    VectorField X = spectral_curl(pot_x);
    VectorField Y = spectral_curl(pot_y);
    // one common scale so ensembles are comparable across seeds
    double raw = std::max(full_l2(X), full_l2(Y));
    const double scl = raw > 0.0 ? fam.amplitude / raw : 1.0;
    for (auto* f : {&X, &Y})
        for (auto& c : f->comp) scale(c, scl);

    spec.f.snap.reserve(time.N_t + 1);
    for (int k = 0; k <= time.N_t; ++k) {
        const double t = k * time.dt();
        const double a = ramp(t, time.T) * std::cos(w1 * t + p1);
        const double b = ramp(t, time.T) * std::cos(w2 * t + p2);
        VectorField snap(grid, Extent::half);
        for (int c = 0; c < n; ++c) {
            ScalarField full = X.comp[c];
            scale(full, a);
            axpy(b, Y.comp[c], full);
            snap.comp[c] = restrict_half(full);
        }
        spec.f.snap.push_back(std::move(snap));
    }

    if (with_tensor) {
        // F_ij = eps_{ijk} (phi A)_k so that div F reproduces f through the
        // same spectral derivatives (n = 2 packs the scalar potential into
        // the antisymmetric slot)
        spec.tensor.assign(
            n * n, ScalarSeries{time, std::vector<ScalarField>()});
        for (auto& tsr : spec.tensor) tsr.snap.reserve(time.N_t + 1);
        for (int k = 0; k <= time.N_t; ++k) {
            const double t = k * time.dt();
            const double a = scl * ramp(t, time.T) * std::cos(w1 * t + p1);
            const double b = scl * ramp(t, time.T) * std::cos(w2 * t + p2);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    ScalarField entry(grid, Extent::full);
                    if (n == 2) {
                        if (i == 0 && j == 1) {
                            entry = pot_x[0];
                            scale(entry, a);
                            axpy(b, pot_y[0], entry);
                        } else if (i == 1 && j == 0) {
                            entry = pot_x[0];
                            scale(entry, -a);
                            axpy(-b, pot_y[0], entry);
                        }
                    } else {
                        auto eps = [](int a1, int b1, int c1) {
                            if (a1 == b1 || b1 == c1 || a1 == c1) return 0;
                            if ((a1 + 1) % 3 == b1) return 1;
                            return -1;
                        };
                        for (int kk = 0; kk < 3; ++kk) {
                            int e = eps(i, j, kk);
                            if (e != 0) {
                                axpy(e * a, pot_x[kk], entry);
                                axpy(e * b, pot_y[kk], entry);
                            }
                        }
                    }
                    spec.tensor[i * n + j].snap.push_back(
                        restrict_half(entry));
                }
            }
        }
    }
    return spec;
}

VectorField random_divfree_initial(std::uint64_t seed, const GridSpec& grid,
                                   const FieldFamily& fam) {
    VectorField full = random_static_divfree(seed, grid, fam);
    return restrict_half(full);
}

VectorSeries random_velocity_series(std::uint64_t seed, const GridSpec& grid,
                                    const TimeSpec& time,
                                    const FieldFamily& fam) {
    ForcingSpec spec = random_divfree_forcing(seed, grid, time, fam, false);
    return std::move(spec.f);
}

double divergence_rel(const VectorField& f) {
    const GridSpec& g = f.grid();
    const int n = g.n;
    ScalarField probe(g, Extent::full);
    Lattice lat = probe.lattice();
    std::vector<SpectralField> sp(n);
    for (int c = 0; c < n; ++c) {
        ScalarField full = f.comp[c].extent() == Extent::full
                               ? f.comp[c]
                               : extend(f.comp[c], ExtendMode::zero);
        sp[c] = fft::forward(lat, full.samples());
    }
    std::vector<int> idx(lat.rank(), 0);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < lat.size(); ++i) {
        cplx dv(0.0, 0.0);
        double mag2 = 0.0, r2 = 0.0;
        for (int d = 0; d < n; ++d) {
            double x = lat.freq(d, idx[d]);
            r2 += x * x;
            dv += cplx(0.0, x) * sp[d].c[i];
            mag2 += std::norm(sp[d].c[i]);
        }
        num += std::norm(dv);
        den += r2 * mag2;
        for (int d = lat.rank() - 1; d >= 0; --d) {
            if (++idx[d] < lat.shape[d]) break;
            idx[d] = 0;
        }
    }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

} // namespace hstokes
