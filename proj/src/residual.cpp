#include "hstokes/residual.hpp"

#include <cmath>

namespace hstokes {

namespace {

// flat-index helper over the half-space layout [N]^(n-1) x Mh
struct HalfWalk {
    int n, N, Mh;
    std::vector<std::size_t> tstride;   // tangential axis strides

    explicit HalfWalk(const GridSpec& g)
        : n(g.n), N(g.N), Mh(g.half_normal_count()) {
        tstride.assign(n - 1, static_cast<std::size_t>(Mh));
        for (int d = n - 3; d >= 0; --d)
            tstride[d] = tstride[d + 1] * static_cast<std::size_t>(N);
    }

    std::size_t shift_tan(std::size_t i, const std::vector<int>& ti, int axis,
                          int delta) const {
        int v = ti[axis] + delta;
        std::size_t j = i;
        if (v >= N)
            j -= tstride[axis] * static_cast<std::size_t>(N - 1);
        else if (v < 0)
            j += tstride[axis] * static_cast<std::size_t>(N - 1);
        else
            j += static_cast<std::size_t>(delta) * tstride[axis];
        return j;
    }
};

} // namespace

ResidualRecord pde_residual(const StokesSolution& sol, const VectorSeries* f,
                            const VectorField* v0) {
    const GridSpec& g = sol.grid;
    const TimeSpec& time = sol.time;
    if (f && !(f->snap.at(0).grid() == g))
        throw GridMismatch("forcing grid differs from solution grid");
    if (v0 && !(v0->grid() == g))
        throw GridMismatch("initial data grid differs from solution grid");

    const int n = g.n, N = g.N, Mh = g.half_normal_count();
    const int nt = time.N_t;
    const double dt = time.dt();
    const double ht = g.h_tan(), hn = g.h_nrm();
    const double vol = hn * std::pow(ht, n - 1);
    HalfWalk walk(g);
    const std::size_t tcount = sol.v.snap[0].comp[0].tangential_count();

    ResidualRecord r;

    // data scale
    if (f) {
        double s = 0.0;
        for (const auto& vf : f->snap)
            for (const auto& c : vf.comp)
                for (double v : c.samples()) s += v * v;
        r.data_scale = std::sqrt(s * vol * dt);
    } else if (v0) {
        double s = 0.0;
        for (const auto& c : v0->comp)
            for (double v : c.samples()) s += v * v;
        r.data_scale = std::sqrt(s * vol);
    }

    double mom2 = 0.0, mom_max = 0.0;
    double div2 = 0.0, div_max = 0.0, gradv2 = 0.0;
    double harm2 = 0.0, gradp2 = 0.0;
    double bmax = 0.0, vmax = 0.0;

    std::vector<int> ti(n - 1, 0);
    for (int k = 0; k <= nt; ++k) {
        const VectorField& vk = sol.v.snap[k];
        const ScalarField& pk = sol.p.snap[k];
        const bool mom_k = (k >= 2 && k + 1 <= nt);
        const bool div_k = (k >= 2);
        const bool harm_k = (k >= 1);

        for (const auto& c : vk.comp) vmax = std::max(vmax, max_abs(c));
        for (std::size_t t = 0; t < tcount; ++t) {
            for (const auto& c : vk.comp)
                bmax = std::max(bmax, std::abs(c[t * Mh]));
        }
        if (!(mom_k || div_k || harm_k)) continue;

        std::fill(ti.begin(), ti.end(), 0);
        for (std::size_t t = 0; t < tcount; ++t) {
            const std::size_t base = t * static_cast<std::size_t>(Mh);
            for (int m = 1; m + 1 < Mh; ++m) {
                const std::size_t i = base + m;
                // divergence and velocity gradient
                if (div_k) {
                    double dv = 0.0;
                    for (int d = 0; d < n; ++d) {
                        const ScalarField& c = vk.comp[d];
                        double der;
                        if (d < n - 1) {
                            std::size_t ip = walk.shift_tan(i, ti, d, +1);
                            std::size_t im = walk.shift_tan(i, ti, d, -1);
                            der = (c[ip] - c[im]) / (2.0 * ht);
                        } else {
                            der = (c[i + 1] - c[i - 1]) / (2.0 * hn);
                        }
                        dv += der;
                        gradv2 += der * der * vol * dt;
                    }
                    div2 += dv * dv * vol * dt;
                    div_max = std::max(div_max, std::abs(dv));
                }
                // pressure harmonicity
                if (harm_k) {
                    double lap = 0.0, gp2 = 0.0;
                    for (int d = 0; d < n; ++d) {
                        double up, dn, h;
                        if (d < n - 1) {
                            up = pk[walk.shift_tan(i, ti, d, +1)];
                            dn = pk[walk.shift_tan(i, ti, d, -1)];
                            h = ht;
                        } else {
                            up = pk[i + 1];
                            dn = pk[i - 1];
                            h = hn;
                        }
                        lap += (up - 2.0 * pk[i] + dn) / (h * h);
                        double der = (up - dn) / (2.0 * h);
                        gp2 += der * der;
                    }
                    harm2 += lap * lap * vol * dt;
                    gradp2 += gp2 * vol * dt;
                }
                // momentum
                if (mom_k) {
                    for (int d = 0; d < n; ++d) {
                        const ScalarField& c = vk.comp[d];
                        double vt = (sol.v.snap[k + 1].comp[d][i] -
                                     sol.v.snap[k - 1].comp[d][i]) /
                                    (2.0 * dt);
                        double lap = 0.0;
                        for (int e = 0; e < n; ++e) {
                            double up, dn, h;
                            if (e < n - 1) {
                                up = c[walk.shift_tan(i, ti, e, +1)];
                                dn = c[walk.shift_tan(i, ti, e, -1)];
                                h = ht;
                            } else {
                                up = c[i + 1];
                                dn = c[i - 1];
                                h = hn;
                            }
                            lap += (up - 2.0 * c[i] + dn) / (h * h);
                        }
                        double gp;
                        if (d < n - 1) {
                            gp = (pk[walk.shift_tan(i, ti, d, +1)] -
                                  pk[walk.shift_tan(i, ti, d, -1)]) /
                                 (2.0 * ht);
                        } else {
                            gp = (pk[i + 1] - pk[i - 1]) / (2.0 * hn);
                        }
                        double res = vt - lap + gp;
                        if (f) res -= f->snap[k].comp[d][i];
                        mom2 += res * res * vol * dt;
                        mom_max = std::max(mom_max, std::abs(res));
                    }
                }
            }
            for (int d = n - 2; d >= 0; --d) {
                if (++ti[d] < N) break;
                ti[d] = 0;
            }
        }
    }

    const double scale = r.data_scale > 0.0 ? r.data_scale : 1.0;
    r.momentum_l2 = std::sqrt(mom2) / scale;
    r.momentum_max = mom_max / scale;
    const double gv = std::sqrt(gradv2);
    r.divergence_l2 = gv > 0.0 ? std::sqrt(div2) / gv : std::sqrt(div2);
    r.divergence_max = div_max / (gv > 0.0 ? gv : 1.0);
    r.boundary_rel = vmax > 0.0 ? bmax / vmax : 0.0;
    const double gp = std::sqrt(gradp2);
    r.pressure_harmonic = gp > 0.0 ? std::sqrt(harm2) / gp : std::sqrt(harm2);

    if (v0) {
        double diff2 = 0.0, ref2 = 0.0;
        for (int c = 0; c < n; ++c) {
            const ScalarField& a = sol.v.snap[0].comp[c];
            const ScalarField& b = v0->comp[c];
            for (std::size_t i = 0; i < a.size(); ++i) {
                double d = a[i] - b[i];
                diff2 += d * d;
                ref2 += b[i] * b[i];
            }
        }
        r.initial_rel = ref2 > 0.0 ? std::sqrt(diff2 / ref2) : std::sqrt(diff2);
    } else {
        double s = 0.0;
        for (const auto& c : sol.v.snap[0].comp)
            for (double v : c.samples()) s += v * v;
        r.initial_rel = vmax > 0.0 ? std::sqrt(s * vol) / (vmax) : 0.0;
    }
    return r;
}

ResidualGate ResidualGate::thresholds(const GridSpec& g, const TimeSpec& t) {
    const double h = std::max(g.h_tan(), g.h_nrm());
    const double dt = t.dt();
    ResidualGate gate;
    gate.momentum = 10.0 * (dt * dt + h * h);
    gate.divergence = 10.0 * h * h;
    gate.boundary = 1e-8;
    gate.initial = 10.0 * h * h;
    gate.harmonic = 10.0 * h * h;
    return gate;
}

std::string ResidualGate::check(const ResidualRecord& r) const {
    std::string bad;
    auto add = [&bad](const char* what, double v, double tol) {
        if (v > tol) {
            if (!bad.empty()) bad += ", ";
            bad += what;
            bad += "=" + std::to_string(v) + ">" + std::to_string(tol);
        }
    };
    add("momentum", r.momentum_l2, momentum);
    add("divergence", r.divergence_l2, divergence);
    add("boundary", r.boundary_rel, boundary);
    add("initial", r.initial_rel, initial);
    add("pressure_harmonic", r.pressure_harmonic, harmonic);
    return bad;
}

} // namespace hstokes
