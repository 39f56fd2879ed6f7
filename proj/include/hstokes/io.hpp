#pragma once

#include <string>

#include "hstokes/field.hpp"

namespace hstokes {

// "HSF1" field files: 4-byte magic, u32 version=1, u32 n, u32 rank
// (1 = scalar, n = vector), u32 per-axis sample counts (normal axis last),
// then little-endian f64 samples, row-major, component-major for vectors.
// Time-series files insert a u32 N_t after the header and concatenate
// N_t + 1 sample records.  Round-trips are bit-exact.

void write_field(const std::string& path, const ScalarField& f);
void write_field(const std::string& path, const VectorField& f);
void write_series(const std::string& path, const ScalarSeries& s);
void write_series(const std::string& path, const VectorSeries& s);

ScalarField read_scalar(const std::string& path, const GridSpec& grid);
VectorField read_vector(const std::string& path, const GridSpec& grid);
ScalarSeries read_scalar_series(const std::string& path, const GridSpec& grid,
                                double T);
VectorSeries read_vector_series(const std::string& path, const GridSpec& grid,
                                double T);

} // namespace hstokes
