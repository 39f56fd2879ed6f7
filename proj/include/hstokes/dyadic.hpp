#pragma once

#include "hstokes/multiplier.hpp"

namespace hstokes {

// Littlewood-Paley family built telescopically from a smooth radial cutoff
// eta (piecewise exp(-1/x) smoothstep, 1 on r<=1, 0 on r>=2):
//   phi_hat(r) = eta(r/2) - eta(r),   supp in (1, 4)
//   phi_j(xi)  = phi_hat(2^-j |xi|)
//   psi_hat(r) = eta(r/2)             (low pass for the inhomogeneous sum)
// so any finite dyadic sum telescopes exactly and the partition-of-unity
// identities hold to rounding on the covered band.
class DyadicPartition {
public:
    DyadicPartition(int j_min, int j_max);

    int j_min() const { return j_min_; }
    int j_max() const { return j_max_; }
    // shells tabulated for the homogeneous sum, [shell_lo, j_max]
    int shell_lo() const { return j_min_ - 2; }

    static double eta(double r);
    double phi_hat(double r) const;             // radial profile
    double psi_hat(double r) const;
    double phi_j(int j, double r) const { return phi_hat(std::ldexp(r, -j)); }

    // fattened bump Phi = phi(./2) + phi + phi(2.), equal to 1 on supp phi
    double fat_phi(double r) const;

    MultiplierSymbol shell_symbol(int j) const;
    MultiplierSymbol lowpass_symbol() const;

    // max |sum_j phi_j(xi) - 1| over resolved nonzero frequencies of the
    // lattice whose modulus lies in [2^j_min, 2^j_max]
    double partition_deviation(const Lattice& lat) const;

    // partition range adapted to a lattice's resolved band
    static DyadicPartition for_lattice(const Lattice& lat);

private:
    int j_min_, j_max_;
};

} // namespace hstokes
