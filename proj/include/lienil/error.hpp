#pragma once

#include <stdexcept>
#include <string>

namespace lienil {

struct Error : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// Malformed input: files, rational literals, bad command lines.
struct ParseError : Error {
	using Error::Error;
};

/// Precondition violations: dimension mismatches, invalid or non-nilpotent
/// algebras where nilpotency is required, and similar caller errors.
struct DomainError : Error {
	using Error::Error;
};

/// A broken internal invariant, e.g. two supposedly equivalent computation
/// routes disagreeing. Always a bug, never a caller error.
struct InternalError : Error {
	using Error::Error;
};

} // namespace lienil
