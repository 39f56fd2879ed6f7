#include "hstokes/norms.hpp"

#include <algorithm>
#include <cmath>

#include "hstokes/fractime.hpp"

namespace hstokes {

double lattice_lp(const Lattice& lat, const std::vector<double>& a, double p) {
    if (std::isinf(p)) {
        double m = 0.0;
        for (double v : a) m = std::max(m, std::abs(v));
        return m;
    }
    double s = 0.0;
    for (double v : a) s += std::pow(std::abs(v), p);
    return std::pow(s * lat.cell_volume(), 1.0 / p);
}

namespace {

ScalarField to_full(const ScalarField& f, bool zero_class) {
    if (f.extent() == Extent::full) return f;
    return extend(f, zero_class ? ExtendMode::zero : ExtendMode::even);
}

std::vector<double> apply_table_real(const Lattice& lat,
                                     const SpectralField& s,
                                     const std::vector<cplx>& table) {
    SpectralField t;
    t.lat = lat;
    t.c.resize(s.c.size());
    for (std::size_t i = 0; i < s.c.size(); ++i) t.c[i] = s.c[i] * table[i];
    return fft::inverse_real(t);
}

} // namespace

double besov_lattice(const Lattice& lat, const std::vector<double>& a,
                     const NormSpec& spec, const DyadicPartition& part) {
    SpectralField sf = fft::forward(lat, a);
    const double q = spec.q;
    double shell_sum = 0.0;
    const int lo = spec.homogeneous ? part.shell_lo() : 1;
    for (int j = lo; j <= part.j_max(); ++j) {
        std::vector<cplx> table = multiplier_table(lat, part.shell_symbol(j));
        double lp = lattice_lp(lat, apply_table_real(lat, sf, table), spec.p);
        shell_sum += std::pow(std::pow(2.0, spec.alpha * j) * lp, q);
    }
    double value = std::pow(shell_sum, 1.0 / q);
    if (!spec.homogeneous) {
        std::vector<cplx> table =
            multiplier_table(lat, part.lowpass_symbol());
        value += lattice_lp(lat, apply_table_real(lat, sf, table), spec.p);
    }
    return value;
}

double besov_norm(const ScalarField& f, const NormSpec& spec,
                  const DyadicPartition& part) {
    ScalarField full = to_full(f, spec.zero_class);
    return besov_lattice(full.lattice(), full.samples(), spec, part);
}

double besov_norm(const BoundaryField& f, const NormSpec& spec,
                  const DyadicPartition& part) {
    return besov_lattice(f.lattice(), f.samples(), spec, part);
}

double gagliardo_constant(int n, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw OrderOutOfRange("gagliardo constant needs 0 < alpha < 1");
    return 2.0 * std::pow(M_PI, 0.5 * n) * std::tgamma(1.0 - alpha) /
           (alpha * std::pow(4.0, alpha) * std::tgamma(0.5 * n + alpha));
}

double besov_differences_lattice(const Lattice& lat,
                                 const std::vector<double>& a, double alpha,
                                 double p, double q, double cutoff) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw OrderOutOfRange("difference norm needs 0 < alpha < 1");
    const int r = lat.rank();
    if (cutoff <= 0.0) {
        cutoff = lat.period[0];
        for (double per : lat.period) cutoff = std::min(cutoff, per);
        cutoff *= 0.25;
    }
    std::vector<double> h(r);
    std::vector<int> reach(r);
    double vol_h = 1.0;
    for (int d = 0; d < r; ++d) {
        h[d] = lat.period[d] / lat.shape[d];
        reach[d] = std::min<int>(lat.shape[d] / 2 - 1,
                                 static_cast<int>(cutoff / h[d]));
        vol_h *= h[d];
    }

    // strides for periodic shifting
    std::vector<std::size_t> stride(r, 1);
    for (int d = r - 2; d >= 0; --d)
        stride[d] = stride[d + 1] * lat.shape[d + 1];
    const std::size_t total = lat.size();

    std::vector<int> off(r, 0);
    for (int d = 0; d < r; ++d) off[d] = -reach[d];
    double acc = 0.0;
    std::vector<double> diff(total);
    while (true) {
        double hn2 = 0.0;
        for (int d = 0; d < r; ++d) hn2 += off[d] * h[d] * off[d] * h[d];
        const double hnorm = std::sqrt(hn2);
        if (hnorm > 0.0 && hnorm <= cutoff) {
            // periodic shifted difference
            std::vector<int> idx(r, 0);
            for (std::size_t i = 0; i < total; ++i) {
                std::size_t js = 0;
                for (int d = 0; d < r; ++d) {
                    int v = idx[d] + off[d];
                    v = (v % lat.shape[d] + lat.shape[d]) % lat.shape[d];
                    js += static_cast<std::size_t>(v) * stride[d];
                }
                diff[i] = a[js] - a[i];
                for (int d = r - 1; d >= 0; --d) {
                    if (++idx[d] < lat.shape[d]) break;
                    idx[d] = 0;
                }
            }
            double lp = lattice_lp(lat, diff, p);
            acc += vol_h * std::pow(hnorm, -r - alpha * q) * std::pow(lp, q);
        }
        int d = r - 1;
        for (; d >= 0; --d) {
            if (++off[d] <= reach[d]) break;
            off[d] = -reach[d];
        }
        if (d < 0) break;
    }
    const double A = gagliardo_constant(r, alpha);
    return std::pow(acc / A, 1.0 / q);
}

double besov_norm_differences(const ScalarField& f, double alpha, double p,
                              double q, double cutoff) {
    ScalarField full = to_full(f, false);
    return besov_differences_lattice(full.lattice(), full.samples(), alpha, p,
                                     q, cutoff);
}

double sobolev_norm(const ScalarField& f, double alpha, double p,
                    bool homogeneous, bool zero_class) {
    const bool half = (f.extent() == Extent::half);
    ScalarField full = to_full(f, zero_class);
    ScalarField g =
        apply_multiplier(full, symbols::sobolev(alpha, homogeneous));
    if (half) return lp_norm(restrict_half(g), p);
    return lattice_lp(g.lattice(), g.samples(), p);
}

double plancherel_sobolev(const ScalarField& f, double alpha) {
    ScalarField full = to_full(f, false);
    Lattice lat = full.lattice();
    SpectralField s = fft::forward(lat, full.samples());
    std::vector<int> idx(lat.rank(), 0);
    double acc = 0.0;
    for (std::size_t i = 0; i < s.c.size(); ++i) {
        double r2 = 0.0;
        for (int d = 0; d < lat.rank(); ++d) {
            double x = lat.freq(d, idx[d]);
            r2 += x * x;
        }
        if (r2 > 0.0) acc += std::pow(r2, alpha) * std::norm(s.c[i]);
        for (int d = lat.rank() - 1; d >= 0; --d) {
            if (++idx[d] < lat.shape[d]) break;
            idx[d] = 0;
        }
    }
    return std::sqrt(acc * lat.cell_volume() / static_cast<double>(lat.size()));
}

namespace {

// Time block of the mixed norm: accumulates sum_x |D^{alpha/2} u|^p per
// time index, chunked over spatial points.
template <typename GetComp>
std::vector<double> time_term_ppow(const GetComp& get, int ncomp,
                                   std::size_t npts, const TimeSpec& time,
                                   double alpha, double p) {
    const int nt = time.N_t;
    const double dt = time.dt();
    const double sigma = 0.5 * alpha;
    std::vector<std::vector<double>> W;   // weight matrix for I_{1-sigma}
    if (sigma < 1.0) {
        FracWeights fw(1.0 - sigma, dt, nt);
        W.assign(nt + 1, std::vector<double>(nt + 1, 0.0));
        for (int k = 1; k <= nt; ++k)
            for (int j = 0; j <= k; ++j) W[k][j] = fw.weight(k, j);
    }

    std::vector<double> acc(nt + 1, 0.0);
    const std::size_t chunk = 1024;
    std::vector<double> row((nt + 1));
    std::vector<double> gi(nt + 1), di(nt + 1);
    std::vector<double> mag2(chunk * static_cast<std::size_t>(nt + 1));
    for (std::size_t i0 = 0; i0 < npts; i0 += chunk) {
        const std::size_t nb = std::min(chunk, npts - i0);
        std::fill(mag2.begin(), mag2.end(), 0.0);
        for (int c = 0; c < ncomp; ++c) {
            for (std::size_t i = 0; i < nb; ++i) {
                for (int k = 0; k <= nt; ++k) row[k] = get(c, k, i0 + i);
                if (sigma < 1.0) {
                    for (int k = 0; k <= nt; ++k) {
                        double s = 0.0;
                        const std::vector<double>& wk = W[k];
                        for (int j = 0; j <= k; ++j) s += wk[j] * row[j];
                        gi[k] = s;
                    }
                } else {
                    gi = row;
                }
                di[0] = (-3.0 * gi[0] + 4.0 * gi[1] - gi[2]) / (2.0 * dt);
                for (int k = 1; k < nt; ++k)
                    di[k] = (gi[k + 1] - gi[k - 1]) / (2.0 * dt);
                di[nt] = (3.0 * gi[nt] - 4.0 * gi[nt - 1] + gi[nt - 2]) /
                         (2.0 * dt);
                for (int k = 0; k <= nt; ++k)
                    mag2[i * (nt + 1) + k] += di[k] * di[k];
            }
        }
        for (std::size_t i = 0; i < nb; ++i)
            for (int k = 0; k <= nt; ++k)
                acc[k] += std::pow(mag2[i * (nt + 1) + k], 0.5 * p);
    }
    return acc;
}

double mixed_norm_impl(const std::vector<const ScalarField*>& comps_by_time,
                       int ncomp, const TimeSpec& time, double alpha, double p,
                       double q, bool homogeneous, bool zero_class) {
    if (!(alpha > 0.0 && alpha <= 2.0))
        throw OrderOutOfRange("mixed norm needs 0 < alpha <= 2");
    const int nt = time.N_t;
    const double dt = time.dt();
    const std::size_t npts = comps_by_time[0]->size();
    const GridSpec grid = comps_by_time[0]->grid();

    auto get = [&](int c, int k, std::size_t i) {
        return (*comps_by_time[static_cast<std::size_t>(k) * ncomp + c])[i];
    };
    std::vector<double> tp =
        time_term_ppow(get, ncomp, npts, time, alpha, p);

    const double vol = grid.h_nrm() * std::pow(grid.h_tan(), grid.n - 1);
    double total = 0.0;
    for (int k = 2; k <= nt; ++k) {
        double lp_t = std::pow(tp[k] * vol, 1.0 / p);
        double sx = 0.0;
        if (ncomp == 1) {
            sx = sobolev_norm(*comps_by_time[k], alpha, p, homogeneous,
                              zero_class);
        } else {
            // vector: euclidean magnitude of the smoothed components
            std::vector<ScalarField> sm;
            sm.reserve(ncomp);
            for (int c = 0; c < ncomp; ++c) {
                const ScalarField& fc =
                    *comps_by_time[static_cast<std::size_t>(k) * ncomp + c];
                ScalarField full = to_full(fc, zero_class);
                ScalarField g = apply_multiplier(
                    full, symbols::sobolev(alpha, homogeneous));
                sm.push_back(restrict_half(g));
            }
            VectorField vf;
            vf.comp = std::move(sm);
            sx = lp_norm(vf, p);
        }
        total += dt * (std::pow(lp_t, q) + std::pow(sx, q));
    }
    return std::pow(total, 1.0 / q);
}

} // namespace

double mixed_aniso_norm(const ScalarSeries& u, double alpha, double p,
                        double q, bool homogeneous, bool zero_class) {
    std::vector<const ScalarField*> ptr;
    ptr.reserve(u.snap.size());
    for (const auto& f : u.snap) ptr.push_back(&f);
    return mixed_norm_impl(ptr, 1, u.time, alpha, p, q, homogeneous,
                           zero_class);
}

double mixed_aniso_norm(const VectorSeries& u, double alpha, double p,
                        double q, bool homogeneous, bool zero_class) {
    const int ncomp = u.snap.at(0).dim();
    std::vector<const ScalarField*> ptr;
    ptr.reserve(u.snap.size() * ncomp);
    for (const auto& f : u.snap)
        for (const auto& c : f.comp) ptr.push_back(&c);
    return mixed_norm_impl(ptr, ncomp, u.time, alpha, p, q, homogeneous,
                           zero_class);
}

namespace {

struct ProxyPipeline {
    Lattice lat;
    int M;             // N_t
    double T;
    double alpha;
    std::vector<double> r2;      // |xi|^2 per spatial index
    std::vector<double> tau;     // |tau| per time-frequency index (2M)

    ProxyPipeline(const Lattice& l, int m, double t, double a)
        : lat(l), M(m), T(t), alpha(a) {
        r2.resize(lat.size());
        std::vector<int> idx(lat.rank(), 0);
        for (std::size_t i = 0; i < r2.size(); ++i) {
            double s = 0.0;
            for (int d = 0; d < lat.rank(); ++d) {
                double x = lat.freq(d, idx[d]);
                s += x * x;
            }
            r2[i] = s;
            for (int d = lat.rank() - 1; d >= 0; --d) {
                if (++idx[d] < lat.shape[d]) break;
                idx[d] = 0;
            }
        }
        tau.resize(2 * M);
        for (int m2 = 0; m2 < 2 * M; ++m2) {
            int mm = m2 <= M ? m2 : m2 - 2 * M;
            tau[m2] = std::abs(M_PI * mm / T);
        }
    }

    double weight(std::size_t xi_idx, int m2) const {
        if (alpha == 2.0) return 1.0;
        const double e = 2.0 - alpha;
        double denom = std::pow(r2[xi_idx], e) + std::pow(tau[m2], e);
        if (denom == 0.0) return 0.0;
        return 1.0 / std::sqrt(denom);
    }

    // forward spectra of the zero-extended snapshots
    std::vector<std::vector<cplx>> spectra(const ScalarSeries& f) const {
        std::vector<std::vector<cplx>> sp(M + 1);
        for (int k = 0; k <= M; ++k) {
            ScalarField full = f.snap[k].extent() == Extent::full
                                   ? f.snap[k]
                                   : extend(f.snap[k], ExtendMode::zero);
            sp[k] = fft::forward(lat, full.samples()).c;
        }
        return sp;
    }

    // odd-periodized time transform, multiply, transform back; also
    // accumulates the spectral sum of |W F|^2 when asked
    void filter(std::vector<std::vector<cplx>>& sp, double* spectral_sum) const {
        const int rows_len = 2 * M;
        const std::size_t nsp = lat.size();
        const std::size_t block = std::max<std::size_t>(
            1, (1u << 21) / static_cast<std::size_t>(rows_len));
        std::vector<cplx> buf(block * static_cast<std::size_t>(rows_len));
        double acc = 0.0;
        for (std::size_t b0 = 0; b0 < nsp; b0 += block) {
            const std::size_t nb = std::min(block, nsp - b0);
            for (std::size_t i = 0; i < nb; ++i) {
                cplx* row = buf.data() + i * rows_len;
                row[0] = 0.0;
                row[M] = 0.0;
                for (int k = 1; k < M; ++k) {
                    row[k] = sp[k][b0 + i];
                    row[2 * M - k] = -sp[k][b0 + i];
                }
            }
            fft::forward_rows(static_cast<int>(nb), rows_len, buf.data());
            for (std::size_t i = 0; i < nb; ++i) {
                cplx* row = buf.data() + i * rows_len;
                for (int m2 = 0; m2 < rows_len; ++m2) {
                    double w = weight(b0 + i, m2);
                    row[m2] *= w;
                    acc += std::norm(row[m2]);
                }
            }
            if (!spectral_sum) {
                fft::inverse_rows(static_cast<int>(nb), rows_len, buf.data());
                for (std::size_t i = 0; i < nb; ++i) {
                    const cplx* row = buf.data() + i * rows_len;
                    for (int k = 0; k <= M; ++k) sp[k][b0 + i] = row[k];
                }
            }
        }
        if (spectral_sum) *spectral_sum = acc;
    }
};

} // namespace

double negative_norm_proxy(const VectorSeries& f, double alpha, double p,
                           double q) {
    if (!(alpha >= 0.0 && alpha <= 2.0))
        throw OrderOutOfRange("proxy norm needs 0 <= alpha <= 2");
    const GridSpec grid = f.snap.at(0).grid();
    ScalarField probe(grid, Extent::full);
    Lattice lat = probe.lattice();
    ProxyPipeline pipe(lat, f.time.N_t, f.time.T, alpha);

    const int M = f.time.N_t;
    std::vector<std::vector<double>> mag2(
        M + 1, std::vector<double>(lat.size(), 0.0));
    for (int c = 0; c < f.snap[0].dim(); ++c) {
        ScalarSeries comp;
        comp.time = f.time;
        comp.snap.reserve(M + 1);
        for (const auto& vf : f.snap) comp.snap.push_back(vf.comp[c]);
        auto sp = pipe.spectra(comp);
        pipe.filter(sp, nullptr);
        for (int k = 0; k <= M; ++k) {
            SpectralField s{lat, std::move(sp[k])};
            std::vector<double> g = fft::inverse_real(s);
            for (std::size_t i = 0; i < g.size(); ++i)
                mag2[k][i] += g[i] * g[i];
        }
    }
    const double dt = f.time.dt();
    double total = 0.0;
    std::vector<double> mg(lat.size());
    for (int k = 0; k <= M; ++k) {
        for (std::size_t i = 0; i < mg.size(); ++i)
            mg[i] = std::sqrt(mag2[k][i]);
        const double w = (k == 0 || k == M) ? 0.5 : 1.0;
        total += w * dt * std::pow(lattice_lp(lat, mg, p), q);
    }
    return std::pow(total, 1.0 / q);
}

double negative_norm_proxy(const ScalarSeries& f, double alpha, double p,
                           double q) {
    VectorSeries v;
    v.time = f.time;
    v.snap.reserve(f.snap.size());
    for (const auto& s : f.snap) {
        VectorField vf;
        vf.comp.push_back(s);
        v.snap.push_back(std::move(vf));
    }
    return negative_norm_proxy(v, alpha, p, q);
}

double negative_norm_proxy_spectral(const ScalarSeries& f, double alpha) {
    const GridSpec grid = f.snap.at(0).grid();
    ScalarField probe(grid, Extent::full);
    Lattice lat = probe.lattice();
    ProxyPipeline pipe(lat, f.time.N_t, f.time.T, alpha);
    auto sp = pipe.spectra(f);
    double acc = 0.0;
    pipe.filter(sp, &acc);
    const int M = f.time.N_t;
    const double dt = f.time.dt();
    const double norm2 = 0.5 * lat.cell_volume() * dt * acc /
                         (2.0 * M * static_cast<double>(lat.size()));
    return std::sqrt(norm2);
}

} // namespace hstokes
