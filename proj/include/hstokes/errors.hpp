#pragma once

#include <stdexcept>
#include <string>

namespace hstokes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define HSTOKES_ERROR_TYPE(Name)                                  \
    struct Name : Error {                                         \
        explicit Name(const std::string& what)                    \
            : Error(std::string(#Name) + ": " + what) {}          \
    }

HSTOKES_ERROR_TYPE(InvalidSpec);
HSTOKES_ERROR_TYPE(FormatError);
HSTOKES_ERROR_TYPE(SymbolSingularity);
HSTOKES_ERROR_TYPE(NegativeTime);
HSTOKES_ERROR_TYPE(OrderOutOfRange);
HSTOKES_ERROR_TYPE(UnsupportedSignal);
HSTOKES_ERROR_TYPE(BandTooNarrow);
HSTOKES_ERROR_TYPE(NotDivergenceFree);
HSTOKES_ERROR_TYPE(NonzeroTrace);
HSTOKES_ERROR_TYPE(GridMismatch);
HSTOKES_ERROR_TYPE(InadmissibleExponents);
HSTOKES_ERROR_TYPE(DegenerateInput);
HSTOKES_ERROR_TYPE(ConfigError);

#undef HSTOKES_ERROR_TYPE

} // namespace hstokes
