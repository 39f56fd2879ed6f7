#include "hstokes/transforms.hpp"

#include <cmath>

namespace hstokes {

namespace {

Lattice tangential_lattice(const GridSpec& g) {
    Lattice l;
    l.shape.assign(g.n - 1, g.N);
    l.period.assign(g.n - 1, 2.0 * g.L_tan);
    return l;
}

// -1/(2|xi|) evaluated on the tangential lattice itself.
MultiplierSymbol newtonian_slice_symbol() {
    return {"newtonian_slice",
            [](const double* xi, int rank) {
                double s = 0.0;
                for (int d = 0; d < rank; ++d) s += xi[d] * xi[d];
                if (s == 0.0) return cplx(0.0, 0.0);
                return cplx(-0.5 / std::sqrt(s), 0.0);
            },
            ZeroModePolicy::zero};
}

} // namespace

ScalarField apply_tangential_multiplier(const ScalarField& f,
                                        const MultiplierSymbol& m) {
    const GridSpec& g = f.grid();
    Lattice tl = tangential_lattice(g);
    const std::size_t levels = f.normal_count();
    const std::size_t tcount = f.tangential_count();

    // full-box layout keeps the normal axis fastest, which is exactly the
    // batched-column layout the tangential plans expect
    Lattice batched = tl;
    batched.shape.push_back(static_cast<int>(levels));
    batched.period.push_back(1.0);

    std::vector<cplx> buf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) buf[i] = f[i];
    fft::forward_tangential(batched, buf.data(), buf.data());

    std::vector<cplx> table = multiplier_table(tl, m);
    const std::size_t L = levels;
#pragma omp parallel for schedule(static)
    for (long long ti = 0; ti < static_cast<long long>(tcount); ++ti) {
        cplx w = table[ti];
        cplx* row = buf.data() + static_cast<std::size_t>(ti) * L;
        for (std::size_t k = 0; k < L; ++k) row[k] *= w;
    }
    fft::inverse_tangential(batched, buf.data());

    ScalarField out(g, f.extent());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = buf[i].real();
    return out;
}

ScalarField singular_transform(const ScalarField& f, RieszKind kind,
                               int axis) {
    const int n = f.grid().n;
    if (kind == RieszKind::riesz_full) {
        if (axis < 0 || axis >= n) throw InvalidSpec("riesz axis");
        return apply_multiplier(f, symbols::riesz_full(axis));
    }
    if (axis < 0 || axis >= n - 1) throw InvalidSpec("tangential riesz axis");
    return apply_tangential_multiplier(f, symbols::riesz_full(axis));
}

ScalarSeries hilbert_time(const ScalarSeries& f) {
    const int m = f.time.N_t;
    const std::size_t npts = f.snap.at(0).size();
    ScalarSeries out;
    out.time = f.time;
    out.snap.assign(f.snap.size(),
                    ScalarField(f.snap[0].grid(), f.snap[0].extent()));

    const double dtau = 2.0 * M_PI / f.time.T;
    std::vector<cplx> weight(m);
    for (int k = 0; k < m; ++k) {
        int kk = k <= m / 2 ? k : k - m;
        double tau = dtau * kk;
        weight[k] = (tau == 0.0) ? cplx(0.0, 0.0)
                                 : cplx(0.0, tau > 0.0 ? -1.0 : 1.0);
    }

    const std::size_t chunk = 4096;
    std::vector<cplx> buf(chunk * static_cast<std::size_t>(m));
    for (std::size_t i0 = 0; i0 < npts; i0 += chunk) {
        const std::size_t nb = std::min(chunk, npts - i0);
        for (std::size_t i = 0; i < nb; ++i)
            for (int k = 0; k < m; ++k)
                buf[i * m + k] = f.snap[k][i0 + i];
        fft::forward_rows(static_cast<int>(nb), m, buf.data());
        for (std::size_t i = 0; i < nb; ++i)
            for (int k = 0; k < m; ++k) buf[i * m + k] *= weight[k];
        fft::inverse_rows(static_cast<int>(nb), m, buf.data());
        for (std::size_t i = 0; i < nb; ++i)
            for (int k = 0; k < m; ++k)
                out.snap[k][i0 + i] = buf[i * m + k].real();
    }
    for (std::size_t i = 0; i < npts; ++i) out.snap[m][i] = out.snap[0][i];
    return out;
}

ScalarField poisson_extend(const BoundaryField& g) {
    const GridSpec& gr = g.grid();
    Lattice tl = g.lattice();
    SpectralField gh = fft::forward(tl, g.samples());

    std::vector<double> mod(tl.size());
    {
        std::vector<int> idx(tl.rank(), 0);
        for (std::size_t i = 0; i < mod.size(); ++i) {
            double s = 0.0;
            for (int d = 0; d < tl.rank(); ++d) {
                double x = tl.freq(d, idx[d]);
                s += x * x;
            }
            mod[i] = std::sqrt(s);
            for (int d = tl.rank() - 1; d >= 0; --d) {
                if (++idx[d] < tl.shape[d]) break;
                idx[d] = 0;
            }
        }
    }

    const int Mh = gr.half_normal_count();
    ScalarField out(gr, Extent::half);
    std::vector<cplx> level(tl.size());
    for (int mlev = 0; mlev < Mh; ++mlev) {
        const double xn = gr.half_normal_coord(mlev);
        for (std::size_t i = 0; i < level.size(); ++i)
            level[i] = gh.c[i] * std::exp(-xn * mod[i]);
        fft::inverse(tl, level.data());
        for (std::size_t ti = 0; ti < level.size(); ++ti)
            out[ti * Mh + mlev] = level[ti].real();
    }
    return out;
}

ScalarField heat_semigroup(const ScalarField& f, double t, HeatMode mode) {
    if (t < 0.0) throw NegativeTime("heat_semigroup");
    switch (mode) {
    case HeatMode::full:
        return apply_multiplier(f, symbols::heat(t));
    case HeatMode::dirichlet:
        return restrict_half(
            apply_multiplier(extend(f, ExtendMode::odd), symbols::heat(t)));
    case HeatMode::reflected:
        return restrict_half(apply_multiplier(
            reflect(extend(f, ExtendMode::zero)), symbols::heat(t)));
    }
    throw InvalidSpec("heat mode");
}

DuhamelStream::DuhamelStream(const Lattice& lat, double dt) : dt_(dt) {
    if (dt <= 0.0) throw NegativeTime("duhamel step");
    std::vector<cplx> tab =
        multiplier_table(lat, symbols::heat(dt));
    decay_.resize(tab.size());
    for (std::size_t i = 0; i < tab.size(); ++i) decay_[i] = tab[i].real();
    state_.assign(lat.size(), cplx(0.0, 0.0));
    fprev_.assign(lat.size(), cplx(0.0, 0.0));
}

void DuhamelStream::feed(const std::vector<cplx>& f_hat) {
    if (f_hat.size() != state_.size()) throw GridMismatch("duhamel feed");
    if (!started_) {
        started_ = true;
        fprev_ = f_hat;
        return;
    }
    const double half = 0.5 * dt_;
    const std::size_t n = state_.size();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
        state_[i] = decay_[i] * (state_[i] + half * fprev_[i]) +
                    half * f_hat[i];
        fprev_[i] = f_hat[i];
    }
}

ScalarSeries duhamel_heat(const ScalarSeries& f, DuhamelMode mode) {
    if (f.snap.empty()) throw InvalidSpec("empty series");
    const GridSpec& g = f.snap[0].grid();
    const Extent in_extent = f.snap[0].extent();
    const bool half_io = (in_extent == Extent::half);
    if (!half_io && mode != DuhamelMode::direct)
        throw GridMismatch("reflected/dirichlet modes expect half fields");

    ScalarField probe(g, Extent::full);
    Lattice lat = probe.lattice();
    DuhamelStream stream(lat, f.time.dt());

    ScalarSeries out;
    out.time = f.time;
    out.snap.reserve(f.snap.size());

    for (std::size_t k = 0; k < f.snap.size(); ++k) {
        ScalarField ext;
        switch (mode) {
        case DuhamelMode::direct:
            ext = half_io ? extend(f.snap[k], ExtendMode::zero) : f.snap[k];
            break;
        case DuhamelMode::dirichlet:
            ext = extend(f.snap[k], ExtendMode::odd);
            break;
        case DuhamelMode::reflected:
            ext = reflect(extend(f.snap[k], ExtendMode::zero));
            break;
        }
        SpectralField fh = fft::forward(lat, ext.samples());
        stream.feed(fh.c);
        SpectralField uh{lat, stream.state()};
        ScalarField ufull(g, Extent::full, fft::inverse_real(uh));
        out.snap.push_back(half_io ? restrict_half(ufull) : std::move(ufull));
    }
    return out;
}

ScalarField newtonian_dirichlet(const ScalarField& g) {
    if (g.extent() != Extent::half)
        throw GridMismatch("newtonian_dirichlet expects a half-space field");
    return restrict_half(apply_multiplier(extend(g, ExtendMode::odd),
                                          symbols::inv_neg_laplace()));
}

ScalarField calI_tangential(const ScalarField& g) {
    return apply_tangential_multiplier(g, newtonian_slice_symbol());
}

} // namespace hstokes
