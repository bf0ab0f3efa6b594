#ifndef DRC_ERRORS_HPP
#define DRC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace drc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};
struct FactorizationFailure : Error {
    using Error::Error;
};
struct InvalidParameter : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct InstanceTooLarge : Error {
    using Error::Error;
};
struct CliqueExplosion : Error {
    using Error::Error;
};
struct EmptyBoard : Error {
    using Error::Error;
};
struct UnassignedNode : Error {
    using Error::Error;
};
struct EmptyAdmissibleList : Error {
    using Error::Error;
};
struct QTooLarge : Error {
    using Error::Error;
};
struct NoEdges : Error {
    using Error::Error;
};
struct NodeNotFound : Error {
    using Error::Error;
};
struct ConflictingGivens : Error {
    using Error::Error;
};
struct MissingCliques : Error {
    using Error::Error;
};
struct TooManyQueens : Error {
    using Error::Error;
};
struct MalformedFormulation : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct MissingTrace : Error {
    using Error::Error;
};
struct NoSuccessfulRuns : Error {
    using Error::Error;
};

} // namespace drc

#endif
