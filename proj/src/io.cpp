#include "hstokes/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

namespace hstokes {

namespace {

constexpr char kMagic[4] = {'H', 'S', 'F', '1'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is) throw FormatError("truncated header");
    return static_cast<std::uint32_t>(b[0]) |
           (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) |
           (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_samples(std::ostream& os, const std::vector<double>& a) {
    for (double v : a)
        if (!std::isfinite(v)) throw InvalidSpec("non-finite sample in write");
    static_assert(sizeof(double) == 8);
    os.write(reinterpret_cast<const char*>(a.data()),
             static_cast<std::streamsize>(a.size() * sizeof(double)));
}

void get_samples(std::istream& is, std::vector<double>& a) {
    is.read(reinterpret_cast<char*>(a.data()),
            static_cast<std::streamsize>(a.size() * sizeof(double)));
    if (!is) throw FormatError("truncated sample block");
}

void write_header(std::ostream& os, const GridSpec& g,
                  const std::vector<int>& axes, std::uint32_t rank) {
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, static_cast<std::uint32_t>(g.n));
    put_u32(os, rank);
    for (int m : axes) put_u32(os, static_cast<std::uint32_t>(m));
}

struct Header {
    std::uint32_t n = 0, rank = 0;
    std::vector<std::uint32_t> axes;
};

Header read_header(std::istream& is) {
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("bad magic");
    if (get_u32(is) != kVersion) throw FormatError("unsupported version");
    Header h;
    h.n = get_u32(is);
    if (h.n < 2 || h.n > 3) throw FormatError("bad dimension");
    h.rank = get_u32(is);
    h.axes.resize(h.n);
    for (auto& m : h.axes) m = get_u32(is);
    return h;
}

Extent check_axes(const Header& h, const GridSpec& g) {
    if (h.n != static_cast<std::uint32_t>(g.n))
        throw FormatError("dimension mismatch");
    for (std::uint32_t d = 0; d + 1 < h.n; ++d)
        if (h.axes[d] != static_cast<std::uint32_t>(g.N))
            throw FormatError("tangential axis count mismatch");
    const std::uint32_t last = h.axes.back();
    if (last == static_cast<std::uint32_t>(g.N)) return Extent::full;
    if (last == static_cast<std::uint32_t>(g.half_normal_count()))
        return Extent::half;
    throw FormatError("normal axis count mismatch");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw FormatError("cannot open for writing: " + path);
    return os;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw FormatError("cannot open: " + path);
    return is;
}

void expect_eof(std::istream& is) {
    char c;
    if (is.read(&c, 1)) throw FormatError("trailing bytes");
}

} // namespace

void write_field(const std::string& path, const ScalarField& f) {
    auto os = open_out(path);
    write_header(os, f.grid(), f.shape(), 1);
    put_samples(os, f.samples());
}

void write_field(const std::string& path, const VectorField& f) {
    auto os = open_out(path);
    write_header(os, f.grid(), f.comp[0].shape(),
                 static_cast<std::uint32_t>(f.dim()));
    for (const auto& c : f.comp) put_samples(os, c.samples());
}

void write_series(const std::string& path, const ScalarSeries& s) {
    auto os = open_out(path);
    write_header(os, s.snap.at(0).grid(), s.snap[0].shape(), 1);
    put_u32(os, static_cast<std::uint32_t>(s.time.N_t));
    for (const auto& f : s.snap) put_samples(os, f.samples());
}

void write_series(const std::string& path, const VectorSeries& s) {
    auto os = open_out(path);
    const VectorField& f0 = s.snap.at(0);
    write_header(os, f0.grid(), f0.comp[0].shape(),
                 static_cast<std::uint32_t>(f0.dim()));
    put_u32(os, static_cast<std::uint32_t>(s.time.N_t));
    for (const auto& f : s.snap)
        for (const auto& c : f.comp) put_samples(os, c.samples());
}

ScalarField read_scalar(const std::string& path, const GridSpec& grid) {
    auto is = open_in(path);
    Header h = read_header(is);
    if (h.rank != 1) throw FormatError("expected scalar rank");
    Extent e = check_axes(h, grid);
    ScalarField f(grid, e);
    get_samples(is, f.samples());
    expect_eof(is);
    return f;
}

VectorField read_vector(const std::string& path, const GridSpec& grid) {
    auto is = open_in(path);
    Header h = read_header(is);
    if (h.rank != static_cast<std::uint32_t>(grid.n))
        throw FormatError("expected vector rank");
    Extent e = check_axes(h, grid);
    VectorField f(grid, e);
    for (auto& c : f.comp) get_samples(is, c.samples());
    expect_eof(is);
    return f;
}

ScalarSeries read_scalar_series(const std::string& path, const GridSpec& grid,
                                double T) {
    auto is = open_in(path);
    Header h = read_header(is);
    if (h.rank != 1) throw FormatError("expected scalar rank");
    Extent e = check_axes(h, grid);
    std::uint32_t nt = get_u32(is);
    if (nt < 1 || nt > (1u << 24)) throw FormatError("bad step count");
    ScalarSeries s;
    s.time = TimeSpec{T, static_cast<int>(nt)};
    s.snap.assign(nt + 1, ScalarField(grid, e));
    for (auto& f : s.snap) get_samples(is, f.samples());
    expect_eof(is);
    return s;
}

VectorSeries read_vector_series(const std::string& path, const GridSpec& grid,
                                double T) {
    auto is = open_in(path);
    Header h = read_header(is);
    if (h.rank != static_cast<std::uint32_t>(grid.n))
        throw FormatError("expected vector rank");
    Extent e = check_axes(h, grid);
    std::uint32_t nt = get_u32(is);
    if (nt < 1 || nt > (1u << 24)) throw FormatError("bad step count");
    VectorSeries s;
    s.time = TimeSpec{T, static_cast<int>(nt)};
    s.snap.assign(nt + 1, VectorField(grid, e));
    for (auto& f : s.snap)
        for (auto& c : f.comp) get_samples(is, c.samples());
    expect_eof(is);
    return s;
}

} // namespace hstokes
