#include "hstokes/dyadic.hpp"

#include <algorithm>
#include <cmath>

namespace hstokes {

DyadicPartition::DyadicPartition(int j_min, int j_max)
    : j_min_(j_min), j_max_(j_max) {
    if (!(j_min < 0 && 0 < j_max))
        throw BandTooNarrow("dyadic range must straddle 0");
    if (j_max - j_min + 1 < 3)
        throw BandTooNarrow("fewer than 3 dyadic shells");
}

double DyadicPartition::eta(double r) {
    r = std::abs(r);
    if (r <= 1.0) return 1.0;
    if (r >= 2.0) return 0.0;
    auto q = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
    const double up = q(2.0 - r);
    const double dn = q(r - 1.0);
    return up / (up + dn);
}

double DyadicPartition::phi_hat(double r) const {
    return eta(0.5 * r) - eta(r);
}

double DyadicPartition::psi_hat(double r) const { return eta(0.5 * r); }

double DyadicPartition::fat_phi(double r) const {
    return phi_hat(0.5 * r) + phi_hat(r) + phi_hat(2.0 * r);
}

MultiplierSymbol DyadicPartition::shell_symbol(int j) const {
    const double scale = std::ldexp(1.0, -j);
    return {"dyadic_shell",
            [this, scale](const double* xi, int rank) {
                double s = 0.0;
                for (int d = 0; d < rank; ++d) s += xi[d] * xi[d];
                return cplx(phi_hat(scale * std::sqrt(s)), 0.0);
            },
            ZeroModePolicy::preserve};
}

MultiplierSymbol DyadicPartition::lowpass_symbol() const {
    return {"dyadic_lowpass",
            [this](const double* xi, int rank) {
                double s = 0.0;
                for (int d = 0; d < rank; ++d) s += xi[d] * xi[d];
                return cplx(psi_hat(std::sqrt(s)), 0.0);
            },
            ZeroModePolicy::preserve};
}

double DyadicPartition::partition_deviation(const Lattice& lat) const {
    const double lo = std::ldexp(1.0, j_min_);
    const double hi = std::ldexp(1.0, j_max_);
    double dev = 0.0;
    std::vector<int> idx(lat.rank(), 0);
    const std::size_t total = lat.size();
    for (std::size_t i = 0; i < total; ++i) {
        double s = 0.0;
        for (int d = 0; d < lat.rank(); ++d) {
            double x = lat.freq(d, idx[d]);
            s += x * x;
        }
        double r = std::sqrt(s);
        if (r >= lo && r <= hi) {
            double sum = 0.0;
            for (int j = shell_lo(); j <= j_max_; ++j)
                sum += phi_hat(std::ldexp(r, -j));
            dev = std::max(dev, std::abs(sum - 1.0));
        }
        for (int d = lat.rank() - 1; d >= 0; --d) {
            if (++idx[d] < lat.shape[d]) break;
            idx[d] = 0;
        }
    }
    return dev;
}

DyadicPartition DyadicPartition::for_lattice(const Lattice& lat) {
    double fund = std::numeric_limits<double>::infinity();
    double nyq = std::numeric_limits<double>::infinity();
    for (int d = 0; d < lat.rank(); ++d) {
        fund = std::min(fund, 2.0 * M_PI / lat.period[d]);
        nyq = std::min(nyq, M_PI * lat.shape[d] / lat.period[d]);
    }
    int j_min = static_cast<int>(std::floor(std::log2(fund)));
    int j_max = static_cast<int>(std::floor(std::log2(nyq))) - 1;
    if (j_min >= 0) j_min = -1;
    if (j_max <= 0) throw BandTooNarrow("lattice resolves no dyadic band");
    return DyadicPartition(j_min, j_max);
}

} // namespace hstokes
