#include "hstokes/stokes.hpp"

#include <cmath>

namespace hstokes {

namespace {

struct BoxCtx {
    GridSpec grid;
    Lattice lat;   // doubled box
    int n = 3, N = 0, Mh = 0;
    std::size_t tcount = 0, size = 0;
    std::vector<std::vector<double>> freqs;   // per-axis frequency tables
    std::vector<double> tan_mod;              // |xi'| per tangential index
    std::vector<double> xi2;                  // |xi|^2 per full index

    explicit BoxCtx(const GridSpec& g) : grid(g) {
        n = g.n;
        N = g.N;
        Mh = g.half_normal_count();
        ScalarField probe(g, Extent::full);
        lat = probe.lattice();
        size = lat.size();
        tcount = probe.tangential_count();
        freqs.resize(n);
        for (int d = 0; d < n; ++d) {
            freqs[d].resize(lat.shape[d]);
            for (int j = 0; j < lat.shape[d]; ++j)
                freqs[d][j] = lat.freq(d, j);
        }
        tan_mod.resize(tcount);
        std::vector<int> ti(n - 1, 0);
        for (std::size_t i = 0; i < tcount; ++i) {
            double s = 0.0;
            for (int d = 0; d < n - 1; ++d) {
                double x = freqs[d][ti[d]];
                s += x * x;
            }
            tan_mod[i] = std::sqrt(s);
            for (int d = n - 2; d >= 0; --d) {
                if (++ti[d] < N) break;
                ti[d] = 0;
            }
        }
        xi2.resize(size);
        for (std::size_t t = 0; t < tcount; ++t) {
            double s2 = tan_mod[t] * tan_mod[t];
            for (int k = 0; k < N; ++k)
                xi2[t * N + k] = s2 + freqs[n - 1][k] * freqs[n - 1][k];
        }
    }

    // walks the tangential multi-index alongside a flat tangential loop
    template <typename Fn>
    void for_tangential(Fn&& fn) const {
        std::vector<int> ti(n - 1, 0);
        for (std::size_t t = 0; t < tcount; ++t) {
            fn(t, ti);
            for (int d = n - 2; d >= 0; --d) {
                if (++ti[d] < N) break;
                ti[d] = 0;
            }
        }
    }

    void reflect_spec(const std::vector<cplx>& in,
                      std::vector<cplx>& out) const {
        for (std::size_t t = 0; t < tcount; ++t) {
            const cplx* a = in.data() + t * N;
            cplx* b = out.data() + t * N;
            b[0] = a[0];
            for (int k = 1; k < N; ++k) b[k] = a[N - k];
        }
    }

    // tangential-spectral boundary trace (1/N) sum_{xi_n}
    void trace(const std::vector<cplx>& s, std::vector<cplx>& out) const {
        const double inv = 1.0 / N;
        for (std::size_t t = 0; t < tcount; ++t) {
            cplx acc(0.0, 0.0);
            const cplx* a = s.data() + t * N;
            for (int k = 0; k < N; ++k) acc += a[k];
            out[t] = acc * inv;
        }
    }

    // trace of the normal derivative, (1/N) sum i xi_n
    void trace_dn(const std::vector<cplx>& s, std::vector<cplx>& out) const {
        const double inv = 1.0 / N;
        for (std::size_t t = 0; t < tcount; ++t) {
            cplx acc(0.0, 0.0);
            const cplx* a = s.data() + t * N;
            for (int k = 0; k < N; ++k)
                acc += cplx(0.0, freqs[n - 1][k]) * a[k];
            out[t] = acc * inv;
        }
    }

    std::vector<cplx> forward_zero_ext(const ScalarField& f) const {
        ScalarField full = extend(f, ExtendMode::zero);
        return fft::forward(lat, full.samples()).c;
    }

    std::vector<cplx> forward_odd_ext(const ScalarField& f) const {
        ScalarField full = extend(f, ExtendMode::odd);
        return fft::forward(lat, full.samples()).c;
    }

    ScalarField inverse_to_half(const std::vector<cplx>& s) const {
        SpectralField sf{lat, s};
        return restrict_half(
            ScalarField(grid, Extent::full, fft::inverse_real(sf)));
    }

    // half field from a boundary spectrum and a per-mode level profile
    // mul(t, |xi'|, x_n)
    template <typename LevelMul>
    ScalarField assemble_levels(const std::vector<cplx>& bdry,
                                LevelMul&& mul) const {
        Lattice batched;
        batched.shape.assign(lat.shape.begin(), lat.shape.end());
        batched.shape.back() = Mh;
        batched.period.assign(n, 2.0 * grid.L_tan);
        batched.period.back() = 1.0;
        std::vector<cplx> buf(tcount * static_cast<std::size_t>(Mh));
        for_tangential([&](std::size_t t, const std::vector<int>& ti) {
            const double s = tan_mod[t];
            for (int m = 0; m < Mh; ++m)
                buf[t * Mh + m] =
                    bdry[t] * mul(ti, s, grid.half_normal_coord(m));
        });
        fft::inverse_tangential(batched, buf.data());
        ScalarField out(grid, Extent::half);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf[i].real();
        return out;
    }
};

// exact stepwise heat evolution of a fixed spectral state
struct HeatState {
    std::vector<cplx> c;
    void step(const std::vector<double>& decay) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] *= decay[i];
    }
};

std::vector<double> heat_table(const Lattice& lat, double dt) {
    std::vector<cplx> tab = multiplier_table(lat, symbols::heat(dt));
    std::vector<double> out(tab.size());
    for (std::size_t i = 0; i < tab.size(); ++i) out[i] = tab[i].real();
    return out;
}

struct GradientStep {
    std::vector<cplx> theta;     // sum_j d_j Ustar f_j, full spectrum
    std::vector<cplx> wpart;     // box particular solution of Delta w = div F
    std::vector<cplx> w_trace;   // boundary spectrum of wpart

    void compute(const BoxCtx& ctx,
                 const std::vector<const std::vector<cplx>*>& ustar) {
        const int n = ctx.n, N = ctx.N;
        theta.assign(ctx.size, cplx(0.0, 0.0));
        for (int j = 0; j + 1 < n; ++j) {
            const std::vector<cplx>& s = *ustar[j];
            ctx.for_tangential([&](std::size_t t, const std::vector<int>& ti) {
                const cplx fac(0.0, ctx.freqs[j][ti[j]]);
                const cplx* a = s.data() + t * N;
                cplx* b = theta.data() + t * N;
                for (int k = 0; k < N; ++k) b[k] += fac * a[k];
            });
        }
        wpart.assign(ctx.size, cplx(0.0, 0.0));
        for (std::size_t t = 0; t < ctx.tcount; ++t) {
            const double s = ctx.tan_mod[t];
            const double e = s > 0.0 ? -0.5 / s : 0.0;
            for (int k = 0; k < N; ++k) {
                const std::size_t i = t * N + k;
                const cplx divF =
                    (cplx(0.5, 0.0) + cplx(0.0, ctx.freqs[n - 1][k]) * e) *
                    theta[i];
                wpart[i] =
                    ctx.xi2[i] > 0.0 ? -divF / ctx.xi2[i] : cplx(0.0, 0.0);
            }
        }
        w_trace.assign(ctx.tcount, cplx(0.0, 0.0));
        ctx.trace(wpart, w_trace);
    }
};

double vec_max(const VectorField& f) { return max_abs(f); }

} // namespace

VectorSeries velocity_part_u(const VectorSeries& f) {
    VectorSeries out;
    out.time = f.time;
    out.snap.assign(f.snap.size(),
                    VectorField(f.snap.at(0).grid(), Extent::half));
    for (int c = 0; c < f.snap[0].dim(); ++c) {
        ScalarSeries comp;
        comp.time = f.time;
        for (const auto& vf : f.snap) comp.snap.push_back(vf.comp[c]);
        ScalarSeries u = duhamel_heat(comp, DuhamelMode::dirichlet);
        for (std::size_t k = 0; k < u.snap.size(); ++k)
            out.snap[k].comp[c] = std::move(u.snap[k]);
    }
    return out;
}

ScalarSeries velocity_part_w(const VectorSeries& f) {
    const GridSpec& g = f.snap.at(0).grid();
    BoxCtx ctx(g);
    const int n = ctx.n;

    std::vector<DuhamelStream> refl;
    for (int j = 0; j + 1 < n; ++j) refl.emplace_back(ctx.lat, f.time.dt());

    ScalarSeries out;
    out.time = f.time;
    out.snap.reserve(f.snap.size());
    std::vector<cplx> scratch(ctx.size);
    GradientStep step;
    for (std::size_t k = 0; k < f.snap.size(); ++k) {
        for (int j = 0; j + 1 < n; ++j) {
            std::vector<cplx> z = ctx.forward_zero_ext(f.snap[k].comp[j]);
            ctx.reflect_spec(z, scratch);
            refl[j].feed(scratch);
        }
        std::vector<const std::vector<cplx>*> ustar;
        for (int j = 0; j + 1 < n; ++j) ustar.push_back(&refl[j].state());
        step.compute(ctx, ustar);

        ScalarField w = ctx.inverse_to_half(step.wpart);
        ScalarField lift = ctx.assemble_levels(
            step.w_trace, [](const std::vector<int>&, double s, double xn) {
                return cplx(-std::exp(-xn * s), 0.0);
            });
        axpy(1.0, lift, w);
        out.snap.push_back(std::move(w));
    }
    return out;
}

namespace {

// pressure boundary spectra from the direct-potential traces
void pressure_accumulate(const BoxCtx& ctx, int j,
                         const std::vector<cplx>& state,
                         std::vector<cplx>& acc1, std::vector<cplx>& acc2) {
    std::vector<cplx> tr(ctx.tcount), tr2(ctx.tcount);
    ctx.trace(state, tr);
    ctx.trace_dn(state, tr2);
    ctx.for_tangential([&](std::size_t t, const std::vector<int>& ti) {
        const double xj = ctx.freqs[j][ti[j]];
        const double s = ctx.tan_mod[t];
        acc1[t] += 2.0 * cplx(0.0, xj) * tr[t];
        // U2 f_j is the trace of minus the normal derivative
        if (s > 0.0) acc2[t] += 2.0 * cplx(0.0, -xj / s) * (-tr2[t]);
    });
}

} // namespace

std::pair<ScalarSeries, ScalarSeries> pressure_forced(const VectorSeries& f) {
    const GridSpec& g = f.snap.at(0).grid();
    BoxCtx ctx(g);
    const int n = ctx.n;

    std::vector<DuhamelStream> direct;
    for (int j = 0; j + 1 < n; ++j) direct.emplace_back(ctx.lat, f.time.dt());

    ScalarSeries p1, p2;
    p1.time = p2.time = f.time;
    std::vector<cplx> acc1(ctx.tcount), acc2(ctx.tcount);
    for (std::size_t k = 0; k < f.snap.size(); ++k) {
        std::fill(acc1.begin(), acc1.end(), cplx(0.0, 0.0));
        std::fill(acc2.begin(), acc2.end(), cplx(0.0, 0.0));
        for (int j = 0; j + 1 < n; ++j) {
            direct[j].feed(ctx.forward_zero_ext(f.snap[k].comp[j]));
            pressure_accumulate(ctx, j, direct[j].state(), acc1, acc2);
        }
        auto poisson = [](const std::vector<int>&, double s, double xn) {
            return cplx(std::exp(-xn * s), 0.0);
        };
        p1.snap.push_back(ctx.assemble_levels(acc1, poisson));
        p2.snap.push_back(ctx.assemble_levels(acc2, poisson));
    }
    return {std::move(p1), std::move(p2)};
}

std::pair<ScalarSeries, ScalarSeries> pressure_p2_split(
    const VectorSeries& f) {
    const GridSpec& g = f.snap.at(0).grid();
    if (f.snap.size() > 1 && divergence_rel(f.snap[f.snap.size() / 2]) > 1e-6)
        throw NotDivergenceFree("p2 split needs div f = 0");
    BoxCtx ctx(g);
    const int n = ctx.n;
    DuhamelStream direct(ctx.lat, f.time.dt());
    ScalarSeries Q, P;
    Q.time = P.time = f.time;
    std::vector<cplx> tr(ctx.tcount);
    for (std::size_t k = 0; k < f.snap.size(); ++k) {
        direct.feed(ctx.forward_zero_ext(f.snap[k].comp[n - 1]));
        ctx.trace(direct.state(), tr);
        Q.snap.push_back(ctx.assemble_levels(
            tr, [](const std::vector<int>&, double s, double xn) {
                return cplx(2.0 * s * std::exp(-xn * s), 0.0);
            }));
        P.snap.push_back(ctx.assemble_levels(
            tr, [](const std::vector<int>&, double s, double xn) {
                return s > 0.0 ? cplx(2.0 / s * std::exp(-xn * s), 0.0)
                               : cplx(0.0, 0.0);
            }));
    }
    return {std::move(Q), std::move(P)};
}

StokesSolution solve_forced(const ForcingSpec& fs, const SolveOptions& opt) {
    const VectorSeries& f = fs.f;
    const GridSpec& g = f.snap.at(0).grid();
    BoxCtx ctx(g);
    const int n = ctx.n, N = ctx.N;
    const double dt = f.time.dt();

    {
        double d = divergence_rel(f.snap[f.snap.size() / 2]);
        if (d > opt.div_tol)
            throw NotDivergenceFree("forcing divergence " + std::to_string(d));
    }

    StokesSolution sol;
    sol.grid = g;
    sol.time = f.time;
    sol.provenance = "forced";
    sol.v.time = f.time;
    sol.v.snap.assign(f.snap.size(), VectorField(g, Extent::half));
    sol.p.time = f.time;
    sol.p.snap.reserve(f.snap.size());

    std::vector<DuhamelStream> dir, refl, direct;
    for (int c = 0; c < n; ++c) dir.emplace_back(ctx.lat, dt);
    for (int j = 0; j + 1 < n; ++j) {
        refl.emplace_back(ctx.lat, dt);
        direct.emplace_back(ctx.lat, dt);
    }

    const double c4 = 4.0 * opt.correction_factor;
    std::vector<cplx> scratch(ctx.size), odd(ctx.size), deriv(ctx.size);
    std::vector<cplx> acc1(ctx.tcount), acc2(ctx.tcount);
    GradientStep step;
    double div_worst = 0.0;

    for (std::size_t k = 0; k < f.snap.size(); ++k) {
        // one forward transform per component feeds every kernel
        std::vector<std::vector<cplx>> z(n);
        for (int c = 0; c < n; ++c)
            z[c] = ctx.forward_zero_ext(f.snap[k].comp[c]);
        div_worst = std::max(div_worst, divergence_rel(f.snap[k]));

        for (int c = 0; c < n; ++c) {
            ctx.reflect_spec(z[c], scratch);
            for (std::size_t i = 0; i < ctx.size; ++i)
                odd[i] = z[c][i] - scratch[i];
            dir[c].feed(odd);
            sol.v.snap[k].comp[c] = ctx.inverse_to_half(dir[c].state());
            if (c + 1 < n) {
                refl[c].feed(scratch);
                direct[c].feed(z[c]);
            }
        }

        std::vector<const std::vector<cplx>*> ustar;
        for (int j = 0; j + 1 < n; ++j) ustar.push_back(&refl[j].state());
        step.compute(ctx, ustar);

        // correction 4 grad w - 4 e_n calI(theta); w = particular + lift
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) {
                ctx.for_tangential([&](std::size_t t,
                                       const std::vector<int>& ti) {
                    const cplx fac(0.0, ctx.freqs[c][ti[c]]);
                    for (int kk = 0; kk < N; ++kk)
                        deriv[t * N + kk] = fac * step.wpart[t * N + kk];
                });
                ScalarField dw = ctx.inverse_to_half(deriv);
                ScalarField dl = ctx.assemble_levels(
                    step.w_trace,
                    [&ctx, c](const std::vector<int>& ti, double s,
                              double xn) {
                        return cplx(0.0, -ctx.freqs[c][ti[c]]) *
                               std::exp(-xn * s);
                    });
                axpy(c4, dw, sol.v.snap[k].comp[c]);
                axpy(c4, dl, sol.v.snap[k].comp[c]);
            } else {
                for (std::size_t t = 0; t < ctx.tcount; ++t)
                    for (int kk = 0; kk < N; ++kk) {
                        const std::size_t i = t * N + kk;
                        deriv[i] =
                            cplx(0.0, ctx.freqs[n - 1][kk]) * step.wpart[i];
                    }
                ScalarField dw = ctx.inverse_to_half(deriv);
                ScalarField dl = ctx.assemble_levels(
                    step.w_trace,
                    [](const std::vector<int>&, double s, double xn) {
                        return cplx(s * std::exp(-xn * s), 0.0);
                    });
                for (std::size_t t = 0; t < ctx.tcount; ++t) {
                    const double s = ctx.tan_mod[t];
                    const double e = s > 0.0 ? -0.5 / s : 0.0;
                    for (int kk = 0; kk < N; ++kk)
                        deriv[t * N + kk] = e * step.theta[t * N + kk];
                }
                ScalarField calI = ctx.inverse_to_half(deriv);
                axpy(c4, dw, sol.v.snap[k].comp[c]);
                axpy(c4, dl, sol.v.snap[k].comp[c]);
                axpy(-c4, calI, sol.v.snap[k].comp[c]);
            }
        }

        std::fill(acc1.begin(), acc1.end(), cplx(0.0, 0.0));
        std::fill(acc2.begin(), acc2.end(), cplx(0.0, 0.0));
        for (int j = 0; j + 1 < n; ++j)
            pressure_accumulate(ctx, j, direct[j].state(), acc1, acc2);
        for (std::size_t t = 0; t < ctx.tcount; ++t) acc1[t] += acc2[t];
        sol.p.snap.push_back(ctx.assemble_levels(
            acc1, [](const std::vector<int>&, double s, double xn) {
                return cplx(std::exp(-xn * s), 0.0);
            }));
    }

    if (div_worst > opt.div_tol)
        throw NotDivergenceFree("forcing divergence " +
                                std::to_string(div_worst));

    // the kernels define the pressure for t > 0 only
    if (sol.p.snap.size() >= 3) {
        ScalarField p0 = sol.p.snap[1];
        scale(p0, 2.0);
        axpy(-1.0, sol.p.snap[2], p0);
        sol.p.snap[0] = std::move(p0);
    }
    return sol;
}

ScalarField ukai_V1(const VectorField& v0) {
    const int n = v0.grid().n;
    ScalarField out = v0.comp[n - 1];
    for (int j = 0; j + 1 < n; ++j) {
        ScalarField s =
            apply_tangential_multiplier(v0.comp[j], symbols::riesz_full(j));
        axpy(-1.0, s, out);
    }
    return out;
}

std::vector<ScalarField> ukai_V2(const VectorField& v0) {
    const int n = v0.grid().n;
    std::vector<ScalarField> out;
    out.reserve(n - 1);
    for (int j = 0; j + 1 < n; ++j) {
        ScalarField s = apply_tangential_multiplier(v0.comp[n - 1],
                                                    symbols::riesz_full(j));
        axpy(1.0, v0.comp[j], s);
        out.push_back(std::move(s));
    }
    return out;
}

ScalarField ukai_U(const ScalarField& g) {
    if (g.extent() != Extent::half)
        throw GridMismatch("ukai_U expects a half-space field");
    return restrict_half(apply_multiplier(extend(g, ExtendMode::zero),
                                          symbols::ukai_composite()));
}

StokesSolution solve_initial(const VectorField& v0, const TimeSpec& time,
                             const SolveOptions& opt) {
    const GridSpec& g = v0.grid();
    BoxCtx ctx(g);
    const int n = ctx.n;

    {
        double tr = 0.0, mx = vec_max(v0);
        for (const auto& c : v0.comp) {
            BoundaryField b = boundary_trace(c);
            for (double x : b.samples()) tr = std::max(tr, std::abs(x));
        }
        if (mx > 0.0 && tr > opt.trace_tol * mx)
            throw NonzeroTrace("initial trace " + std::to_string(tr / mx));
        double d = divergence_rel(v0);
        if (d > opt.div_tol)
            throw NotDivergenceFree("initial divergence " +
                                    std::to_string(d));
    }

    std::vector<double> decay = heat_table(ctx.lat, time.dt());
    std::vector<cplx> u_table =
        multiplier_table(ctx.lat, symbols::ukai_composite());

    HeatState A{ctx.forward_odd_ext(ukai_V1(v0))};
    std::vector<HeatState> B;
    for (ScalarField& b : ukai_V2(v0))
        B.push_back(HeatState{ctx.forward_odd_ext(b)});

    StokesSolution sol;
    sol.grid = g;
    sol.time = time;
    sol.provenance = "initial";
    sol.v.time = time;
    sol.v.snap.assign(time.N_t + 1, VectorField(g, Extent::half));
    sol.p.time = time;
    sol.p.snap.reserve(time.N_t + 1);

    std::vector<cplx> work(ctx.size);
    std::vector<cplx> gtr(ctx.tcount);
    for (int k = 0; k <= time.N_t; ++k) {
        if (k > 0) {
            A.step(decay);
            for (auto& b : B) b.step(decay);
        }
        // v_n = U r E(t) e V1
        ScalarField a_half = ctx.inverse_to_half(A.c);
        std::vector<cplx> za = ctx.forward_zero_ext(a_half);
        for (std::size_t i = 0; i < ctx.size; ++i) work[i] = u_table[i] * za[i];
        ScalarField vn = ctx.inverse_to_half(work);
        // v' = E(t) V2 - S v_n
        std::vector<cplx> zn = ctx.forward_zero_ext(vn);
        for (int j = 0; j + 1 < n; ++j) {
            ctx.for_tangential([&](std::size_t t, const std::vector<int>& ti) {
                const double s = ctx.tan_mod[t];
                const cplx fac =
                    s > 0.0 ? cplx(0.0, -ctx.freqs[j][ti[j]] / s)
                            : cplx(0.0, 0.0);
                for (int kk = 0; kk < ctx.N; ++kk)
                    work[t * ctx.N + kk] = fac * zn[t * ctx.N + kk];
            });
            ScalarField svn = ctx.inverse_to_half(work);
            ScalarField vj = ctx.inverse_to_half(B[j].c);
            axpy(-1.0, svn, vj);
            sol.v.snap[k].comp[j] = std::move(vj);
        }
        sol.v.snap[k].comp[n - 1] = std::move(vn);
        // p = -D gamma d_n E(t) e V1
        ctx.trace_dn(A.c, gtr);
        sol.p.snap.push_back(ctx.assemble_levels(
            gtr, [](const std::vector<int>&, double s, double xn) {
                return cplx(-std::exp(-xn * s), 0.0);
            }));
    }

    if (sol.p.snap.size() >= 3) {
        ScalarField p0 = sol.p.snap[1];
        scale(p0, 2.0);
        axpy(-1.0, sol.p.snap[2], p0);
        sol.p.snap[0] = std::move(p0);
    }
    return sol;
}

StokesSolution solve_full(const ForcingSpec& f, const VectorField& v0,
                          const SolveOptions& opt) {
    StokesSolution a = solve_forced(f, opt);
    StokesSolution b = solve_initial(v0, f.f.time, opt);
    for (std::size_t k = 0; k < a.v.snap.size(); ++k) {
        for (int c = 0; c < a.grid.n; ++c)
            axpy(1.0, b.v.snap[k].comp[c], a.v.snap[k].comp[c]);
        axpy(1.0, b.p.snap[k], a.p.snap[k]);
    }
    a.provenance = "combined";
    return a;
}

std::pair<ScalarSeries, VectorSeries> helmholtz_split(
    const std::vector<ScalarSeries>& tensor) {
    if (tensor.empty()) throw InvalidSpec("empty tensor");
    const GridSpec& g = tensor[0].snap.at(0).grid();
    const int n = g.n;
    if (static_cast<int>(tensor.size()) != n * n)
        throw InvalidSpec("tensor needs n*n components");
    BoxCtx ctx(g);

    ScalarSeries pi;
    VectorSeries w;
    pi.time = w.time = tensor[0].time;
    const std::size_t nk = tensor[0].snap.size();
    w.snap.assign(nk, VectorField(g, Extent::half));

    std::vector<cplx> acc(ctx.size), tmp(ctx.size);
    std::vector<int> idx(n, 0);
    for (std::size_t k = 0; k < nk; ++k) {
        std::vector<std::vector<cplx>> sp(n * n);
        for (int i = 0; i < n * n; ++i)
            sp[i] = ctx.forward_zero_ext(tensor[i].snap[k]);

        // rhs = -d_i d_j T_ij = + xi_i xi_j T_hat
        std::fill(idx.begin(), idx.end(), 0);
        for (std::size_t m = 0; m < ctx.size; ++m) {
            cplx s(0.0, 0.0);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    s += ctx.freqs[i][idx[i]] * ctx.freqs[j][idx[j]] *
                         sp[i * n + j][m];
            acc[m] = s;
            for (int d = n - 1; d >= 0; --d) {
                if (++idx[d] < ctx.lat.shape[d]) break;
                idx[d] = 0;
            }
        }
        ScalarField rhs = ctx.inverse_to_half(acc);
        ScalarField pik = newtonian_dirichlet(rhs);

        std::vector<cplx> pih =
            fft::forward(ctx.lat, extend(pik, ExtendMode::odd).samples()).c;
        for (int i = 0; i < n; ++i) {
            std::fill(idx.begin(), idx.end(), 0);
            for (std::size_t m = 0; m < ctx.size; ++m) {
                cplx s = cplx(0.0, ctx.freqs[i][idx[i]]) * pih[m];
                for (int j = 0; j < n; ++j)
                    s += cplx(0.0, ctx.freqs[j][idx[j]]) * sp[i * n + j][m];
                tmp[m] = s;
                for (int d = n - 1; d >= 0; --d) {
                    if (++idx[d] < ctx.lat.shape[d]) break;
                    idx[d] = 0;
                }
            }
            w.snap[k].comp[i] = ctx.inverse_to_half(tmp);
        }
        pi.snap.push_back(std::move(pik));
    }
    return {std::move(pi), std::move(w)};
}

} // namespace hstokes
