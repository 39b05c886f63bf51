#pragma once

#include <stdexcept>
#include <string>

namespace burau {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Caller violated a precondition (mismatched alphabets, bad index, missing
/// assignment, unknown check id, ...).
class UsageError : public Error {
public:
	using Error::Error;
};

/// Malformed word or fraction text.
class ParseError : public UsageError {
public:
	ParseError(const std::string &what, std::size_t position)
	    : UsageError(what + " (at offset " + std::to_string(position) + ")"),
	      position_(position)
	{
	}
	std::size_t position() const noexcept { return position_; }

private:
	std::size_t position_;
};

/// Division by zero in a field.
class ArithmeticError : public Error {
public:
	using Error::Error;
};

/// Determinant is not a unit of the coefficient ring.
class SingularMatrixError : public ArithmeticError {
public:
	using ArithmeticError::ArithmeticError;
};

/// A configured bound (depth, closure cap) was exceeded.
class ResourceError : public Error {
public:
	using Error::Error;
};

/// An internal identity that must hold by construction failed.
class ConsistencyError : public Error {
public:
	using Error::Error;
};

} // namespace burau
