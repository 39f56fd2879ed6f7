#include "hstokes/probes.hpp"

#include <cmath>
#include <random>

#include "hstokes/norms.hpp"

namespace hstokes {

std::vector<double> shell_probe(const Lattice& lat, const DyadicPartition& part,
                                int j, double p, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> white(lat.size());
    for (double& v : white) v = gauss(gen);
    SpectralField s = fft::forward(lat, white);
    apply_multiplier(s, part.shell_symbol(j));
    std::vector<double> f = fft::inverse_real(s);
    double lp = lattice_lp(lat, f, p);
    if (lp == 0.0) throw BandTooNarrow("shell carries no resolved modes");
    for (double& v : f) v /= lp;
    return f;
}

double multiplier_decay_probe(const Lattice& lat, const DyadicPartition& part,
                              int j, double t, DecayKind kind, double sigma,
                              double p, int n_probes, std::uint64_t seed) {
    if (t < 0.0) throw NegativeTime("decay probe");
    MultiplierSymbol rho;
    if (kind == DecayKind::heat) {
        rho = {"decay_heat",
               [&part, j, t](const double* xi, int rank) {
                   double r2 = 0.0;
                   for (int d = 0; d < rank; ++d) r2 += xi[d] * xi[d];
                   double r = std::sqrt(r2);
                   return cplx(part.fat_phi(std::ldexp(r, -j)) *
                                   std::exp(-t * r2),
                               0.0);
               },
               ZeroModePolicy::preserve};
    } else {
        if (!(sigma > 0.0 && sigma < 1.0))
            throw OrderOutOfRange("frac_heat probe needs 0 < sigma < 1");
        const double gam = std::tgamma(1.0 - sigma);
        rho = {"decay_frac_heat",
               [&part, j, t, sigma, gam](const double* xi, int rank) {
                   double r2 = 0.0;
                   for (int d = 0; d < rank; ++d) r2 += xi[d] * xi[d];
                   double r = std::sqrt(r2);
                   return cplx(gam * std::pow(r2, sigma) *
                                   part.fat_phi(std::ldexp(r, -j)) *
                                   std::exp(-t * r2),
                               0.0);
               },
               ZeroModePolicy::zero};
    }
    std::vector<cplx> table = multiplier_table(lat, rho);

    double worst = 0.0;
    for (int k = 0; k < n_probes; ++k) {
        std::vector<double> f =
            shell_probe(lat, part, j, p, seed + 977u * (k + 1));
        SpectralField s = fft::forward(lat, f);
        for (std::size_t i = 0; i < s.c.size(); ++i) s.c[i] *= table[i];
        double num = lattice_lp(lat, fft::inverse_real(s), p);
        worst = std::max(worst, num);   // probes have unit L^p norm
    }
    return worst;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw InvalidSpec("fit needs matched samples");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= x.size();
    my /= y.size();
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    return sxy / sxx;
}

} // namespace hstokes
