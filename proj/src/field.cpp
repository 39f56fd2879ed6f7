#include "hstokes/field.hpp"

#include <algorithm>
#include <cmath>

namespace hstokes {

double Lattice::freq(int axis, int index) const {
    return 2.0 * M_PI * freq_index(axis, index) / period[axis];
}

int Lattice::freq_index(int axis, int index) const {
    int m = shape[axis];
    return index <= m / 2 ? index : index - m;
}

std::size_t ScalarField::expected_size(const GridSpec& g, Extent e) {
    std::size_t s = 1;
    for (int d = 0; d < g.n - 1; ++d) s *= static_cast<std::size_t>(g.N);
    s *= (e == Extent::half) ? static_cast<std::size_t>(g.half_normal_count())
                             : static_cast<std::size_t>(g.N);
    return s;
}

ScalarField::ScalarField(const GridSpec& grid, Extent extent, double fill)
    : grid_(grid), extent_(extent), a_(expected_size(grid, extent), fill) {}

ScalarField::ScalarField(const GridSpec& grid, Extent extent,
                         std::vector<double> samples)
    : grid_(grid), extent_(extent), a_(std::move(samples)) {
    if (a_.size() != expected_size(grid, extent))
        throw InvalidSpec("sample count does not match grid cardinality");
}

std::vector<int> ScalarField::shape() const {
    std::vector<int> s(grid_.n, grid_.N);
    if (extent_ == Extent::half) s.back() = grid_.half_normal_count();
    return s;
}

Lattice ScalarField::lattice() const {
    if (extent_ != Extent::full)
        throw GridMismatch("lattice() requires a full (doubled box) field");
    Lattice l;
    l.shape.assign(grid_.n, grid_.N);
    l.period.assign(grid_.n, 2.0 * grid_.L_tan);
    l.period.back() = 2.0 * grid_.L_nrm;
    return l;
}

std::size_t ScalarField::normal_count() const {
    return extent_ == Extent::half
               ? static_cast<std::size_t>(grid_.half_normal_count())
               : static_cast<std::size_t>(grid_.N);
}

std::size_t ScalarField::tangential_count() const {
    std::size_t s = 1;
    for (int d = 0; d < grid_.n - 1; ++d) s *= static_cast<std::size_t>(grid_.N);
    return s;
}

BoundaryField::BoundaryField(const GridSpec& grid, double fill) : grid_(grid) {
    std::size_t s = 1;
    for (int d = 0; d < grid.n - 1; ++d) s *= static_cast<std::size_t>(grid.N);
    a_.assign(s, fill);
}

BoundaryField::BoundaryField(const GridSpec& grid, std::vector<double> samples)
    : grid_(grid), a_(std::move(samples)) {
    std::size_t s = 1;
    for (int d = 0; d < grid.n - 1; ++d) s *= static_cast<std::size_t>(grid.N);
    if (a_.size() != s) throw InvalidSpec("boundary sample count mismatch");
}

Lattice BoundaryField::lattice() const {
    Lattice l;
    l.shape.assign(grid_.n - 1, grid_.N);
    l.period.assign(grid_.n - 1, 2.0 * grid_.L_tan);
    return l;
}

VectorField::VectorField(const GridSpec& grid, Extent extent) {
    comp.assign(grid.n, ScalarField(grid, extent));
}

ScalarField extend(const ScalarField& f, ExtendMode mode) {
    if (f.extent() != Extent::half)
        throw GridMismatch("extend expects a half-space field");
    const GridSpec& g = f.grid();
    const int N = g.N;
    const int Mh = g.half_normal_count();
    ScalarField out(g, Extent::full);
    const std::size_t T = f.tangential_count();
    const double* src = f.samples().data();
    double* dst = out.samples().data();
#pragma omp parallel for schedule(static)
    for (long long ti = 0; ti < static_cast<long long>(T); ++ti) {
        const double* s = src + ti * Mh;
        double* d = dst + ti * static_cast<std::size_t>(N);
        switch (mode) {
        case ExtendMode::even:
            for (int k = 0; k <= N / 2; ++k) d[k] = s[k];
            for (int k = N / 2 + 1; k < N; ++k) d[k] = s[N - k];
            break;
        case ExtendMode::odd:
            d[0] = 0.0;
            d[N / 2] = 0.0;
            for (int k = 1; k < N / 2; ++k) d[k] = s[k];
            for (int k = N / 2 + 1; k < N; ++k) d[k] = -s[N - k];
            break;
        case ExtendMode::zero:
            for (int k = 0; k <= N / 2; ++k) d[k] = s[k];
            for (int k = N / 2 + 1; k < N; ++k) d[k] = 0.0;
            break;
        }
    }
    return out;
}

ScalarField reflect(const ScalarField& f) {
    if (f.extent() != Extent::full)
        throw GridMismatch("reflect expects a full (doubled box) field");
    const GridSpec& g = f.grid();
    const int N = g.N;
    ScalarField out(g, Extent::full);
    const std::size_t T = f.tangential_count();
    const double* src = f.samples().data();
    double* dst = out.samples().data();
#pragma omp parallel for schedule(static)
    for (long long ti = 0; ti < static_cast<long long>(T); ++ti) {
        const double* s = src + ti * static_cast<std::size_t>(N);
        double* d = dst + ti * static_cast<std::size_t>(N);
        d[0] = s[0];
        for (int k = 1; k < N; ++k) d[k] = s[N - k];
    }
    return out;
}

ScalarField restrict_half(const ScalarField& f) {
    if (f.extent() != Extent::full)
        throw GridMismatch("restrict expects a full (doubled box) field");
    const GridSpec& g = f.grid();
    const int N = g.N;
    const int Mh = g.half_normal_count();
    ScalarField out(g, Extent::half);
    const std::size_t T = f.tangential_count();
    const double* src = f.samples().data();
    double* dst = out.samples().data();
#pragma omp parallel for schedule(static)
    for (long long ti = 0; ti < static_cast<long long>(T); ++ti) {
        const double* s = src + ti * static_cast<std::size_t>(N);
        double* d = dst + ti * static_cast<std::size_t>(Mh);
        for (int m = 0; m < Mh; ++m) d[m] = s[m];
    }
    return out;
}

VectorField extend(const VectorField& f, ExtendMode mode) {
    VectorField out;
    out.comp.reserve(f.comp.size());
    for (const auto& c : f.comp) out.comp.push_back(extend(c, mode));
    return out;
}

VectorField restrict_half(const VectorField& f) {
    VectorField out;
    out.comp.reserve(f.comp.size());
    for (const auto& c : f.comp) out.comp.push_back(restrict_half(c));
    return out;
}

BoundaryField boundary_trace(const ScalarField& f) {
    const std::size_t T = f.tangential_count();
    const std::size_t M = f.normal_count();
    BoundaryField out(f.grid());
    for (std::size_t ti = 0; ti < T; ++ti) out.samples()[ti] = f[ti * M];
    return out;
}

double lp_norm(const ScalarField& f, double p) {
    const double vol = f.grid().h_nrm() *
                       std::pow(f.grid().h_tan(), f.grid().n - 1);
    if (std::isinf(p)) return max_abs(f);
    double s = 0.0;
    for (double v : f.samples()) s += std::pow(std::abs(v), p);
    return std::pow(s * vol, 1.0 / p);
}

double lp_norm(const VectorField& f, double p) {
    const GridSpec& g = f.grid();
    const double vol = g.h_nrm() * std::pow(g.h_tan(), g.n - 1);
    const std::size_t m = f.comp[0].size();
    if (std::isinf(p)) return max_abs(f);
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double q = 0.0;
        for (const auto& c : f.comp) q += c[i] * c[i];
        s += std::pow(std::sqrt(q), p);
    }
    return std::pow(s * vol, 1.0 / p);
}

double max_abs(const ScalarField& f) {
    double m = 0.0;
    for (double v : f.samples()) m = std::max(m, std::abs(v));
    return m;
}

double max_abs(const VectorField& f) {
    double m = 0.0;
    for (const auto& c : f.comp) m = std::max(m, max_abs(c));
    return m;
}

void axpy(double a, const ScalarField& x, ScalarField& y) {
    if (x.size() != y.size()) throw GridMismatch("axpy size mismatch");
    const double* xs = x.samples().data();
    double* ys = y.samples().data();
    const std::size_t m = x.size();
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(m); ++i)
        ys[i] += a * xs[i];
}

void scale(ScalarField& x, double a) {
    for (double& v : x.samples()) v *= a;
}

} // namespace hstokes
