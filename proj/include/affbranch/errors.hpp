#pragma once

#include <stdexcept>
#include <string>

namespace affbranch {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInvolution : Error {
    using Error::Error;
};
struct UnsupportedType : Error {
    using Error::Error;
};
struct ChartMismatch : Error {
    using Error::Error;
};
struct NotApplicable : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct HasCenter : Error {
    using Error::Error;
};
struct NotDominant : Error {
    using Error::Error;
};
struct CapExceeded : Error {
    using Error::Error;
};

} // namespace affbranch
