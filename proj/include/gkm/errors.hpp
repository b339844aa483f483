#ifndef GKM_ERRORS_HPP
#define GKM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gkm {

/// Base class for all domain errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Structural problems in graph input: dangling endpoints, rank mismatches,
/// malformed JSON values.
struct MalformedGraph : Error {
    using Error::Error;
};

/// Builder parameters outside their valid range.
struct InvalidParams : Error {
    using Error::Error;
};

/// Restriction along the zero form is undefined.
struct ZeroForm : Error {
    using Error::Error;
};

/// A direction vector annihilates some edge weight.
struct NonGenericDirection : Error {
    using Error::Error;
};

/// An operation requiring a valid action graph was given one that fails
/// validation.
struct InvalidGraph : Error {
    using Error::Error;
};

/// Fiber Poincare data with b_0 = 0 or negative entries.
struct InvalidFiber : Error {
    using Error::Error;
};

/// A graded convolution was requested beyond the depth of the supplied
/// solution.
struct InsufficientDepth : Error {
    using Error::Error;
};

/// Connection matching failure; `kind` tells which guarantee broke and
/// `edge`/`star_edge` locate the offending pair of oriented edges.
struct ConnectionError : Error {
    enum class Kind { NotThreeIndependent, NoMatch, AmbiguousMatch, NotBijective };

    ConnectionError(Kind k, std::string message, int edge_key = -1, int star_edge_key = -1)
        : Error(std::move(message)), kind(k), edge(edge_key), star_edge(star_edge_key) {}

    Kind kind;
    int edge;
    int star_edge;
};

/// Edge geometry (length or Chern label) absent where an operation needs it.
struct MissingChernData : Error {
    using Error::Error;
};

/// A path whose consecutive edges do not chain, or a cycle that does not
/// close.
struct BrokenPath : Error {
    using Error::Error;
};

} // namespace gkm

#endif // GKM_ERRORS_HPP
