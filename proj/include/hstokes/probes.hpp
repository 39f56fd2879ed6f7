#pragma once

#include <cstdint>

#include "hstokes/dyadic.hpp"

namespace hstokes {

enum class DecayKind : std::uint8_t { heat, frac_heat };

// Random real field with spectrum confined to dyadic shell j, normalized to
// unit L^p.
std::vector<double> shell_probe(const Lattice& lat, const DyadicPartition& part,
                                int j, double p, std::uint64_t seed);

// max over a probe family of || IFFT(rho_tj . FFT(f)) ||_p / ||f||_p with
//   rho_tj = Phi_j(xi) e^{-t |xi|^2}                       (heat)
//   rho_tj = Gamma(1-sigma) Phi_j |xi|^{2 sigma} e^{-t|xi|^2}   (frac_heat,
// the closed form of Phi_j |xi|^2 int_t^inf e^{-s|xi|^2} (s-t)^{-sigma} ds).
double multiplier_decay_probe(const Lattice& lat, const DyadicPartition& part,
                              int j, double t, DecayKind kind, double sigma,
                              double p, int n_probes, std::uint64_t seed);

// least-squares slope of y against x
double fit_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace hstokes
