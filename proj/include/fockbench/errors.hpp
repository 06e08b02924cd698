#ifndef FOCKBENCH_ERRORS_HPP
#define FOCKBENCH_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fockbench {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One-particle dimensions or matrix shapes do not line up.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Two vectors from different workspaces were combined.
struct WorkspaceMismatch : Error {
    using Error::Error;
};

/// An operation would produce a term above the workspace grade cutoff.
/// Raised instead of silently truncating, which would corrupt adjointness.
struct GradeOverflow : Error {
    using Error::Error;
};

/// A kernel was asked to run above its configured size guard.
struct SizeLimit : Error {
    using Error::Error;
};

/// Sequence-spec text failed to parse; `position` is the 0-based offset of
/// the offending character.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

}  // namespace fockbench

#endif
