#include "hstokes/grid.hpp"

namespace hstokes {

static bool power_of_two(int v) { return v > 0 && (v & (v - 1)) == 0; }

std::pair<GridSpec, TimeSpec> make_grid(int n, double L_tan, double L_nrm,
                                        int N, double T, int N_t) {
    if (n != 2 && n != 3)
        throw InvalidSpec("spatial dimension must be 2 or 3");
    if (!(L_tan > 0.0) || !(L_nrm > 0.0))
        throw InvalidSpec("box extents must be positive");
    if (N < 8 || !power_of_two(N))
        throw InvalidSpec("N must be a power of two >= 8");
    if (!(T > 0.0))
        throw InvalidSpec("final time must be positive");
    if (N_t < 4)
        throw InvalidSpec("N_t must be >= 4");
    GridSpec g{n, L_tan, L_nrm, N};
    TimeSpec t{T, N_t};
    return {g, t};
}

} // namespace hstokes
