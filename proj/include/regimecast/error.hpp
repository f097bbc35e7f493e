#pragma once

#include <stdexcept>
#include <string>

namespace regimecast {

/// Malformed configuration or command-line usage.
class ConfigError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// Input data that violates a documented contract (bad rows, non-finite values, degenerate series).
class DataError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

namespace detail {

[[noreturn]] inline void fail(const std::string &message) {
	throw std::invalid_argument(message);
}

inline void require(bool condition, const std::string &message) {
	if (!condition) {
		fail(message);
	}
}

} // namespace detail
} // namespace regimecast
