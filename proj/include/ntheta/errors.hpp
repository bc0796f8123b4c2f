#ifndef NTHETA_ERRORS_HPP
#define NTHETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ntheta
{

// Base of every domain error raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// puiseux
struct EmptySeries : Error {
    using Error::Error;
};
struct DivergentTheta : Error {
    using Error::Error;
};

// numeric
struct PrecisionUnreachable : Error {
    using Error::Error;
};
struct UnsupportedInvariant : Error {
    using Error::Error;
};
struct RequestedPrecisionExceedsConstants : Error {
    using Error::Error;
};
struct CatalogMiss : Error {
    using Error::Error;
};

// cubicalg
struct NonRealRoots : Error {
    using Error::Error;
};
struct IllConditioned : Error {
    using Error::Error;
};
struct NoValidOrder : Error {
    using Error::Error;
};
struct AmbiguousOrder : Error {
    using Error::Error;
};
struct ComplexQuadraticRoots : Error {
    using Error::Error;
};

} // namespace ntheta

#endif
