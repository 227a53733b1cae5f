#pragma once

#include <stdexcept>
#include <string>

namespace posetkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Invalid input or a violated operation precondition.
class DomainError : public Error {
public:
	using Error::Error;
};

class ParseError : public DomainError {
public:
	using DomainError::DomainError;
};

class UnknownElement : public DomainError {
public:
	explicit UnknownElement(const std::string& token)
		: DomainError("unknown element '" + token + "'") { }
};

class DuplicateElement : public DomainError {
public:
	explicit DuplicateElement(const std::string& token)
		: DomainError("duplicate element '" + token + "'") { }
};

class CycleDetected : public DomainError {
public:
	using DomainError::DomainError;
};

class WouldCreateCycle : public DomainError {
public:
	using DomainError::DomainError;
};

class NotAChain : public DomainError {
public:
	using DomainError::DomainError;
};

class PreconditionViolated : public DomainError {
public:
	using DomainError::DomainError;
};

class NotNFree : public DomainError {
public:
	using DomainError::DomainError;
};

class HiddenNotAnExtension : public DomainError {
public:
	using DomainError::DomainError;
};

/// A configured size or memory budget was exceeded.
class CapacityExceeded : public Error {
public:
	using Error::Error;
};

/// The constructive balanced-pair search found no balanced candidate on an
/// N-free input. Unreachable on a correct implementation.
class TheoremViolation : public Error {
public:
	using Error::Error;
};

} // namespace posetkit
