#pragma once

#include <stdexcept>
#include <string>

namespace hardcore {

/// Error classes used across the library. The CLI maps them onto exit codes
/// (parse -> 2, size -> 3, numeric -> 4, logic -> 1).
enum class ErrorKind { parse, size, numeric, logic };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error parse_error(const std::string& msg) { return Error(ErrorKind::parse, msg); }
inline Error size_error(const std::string& msg) { return Error(ErrorKind::size, msg); }
inline Error numeric_error(const std::string& msg) { return Error(ErrorKind::numeric, msg); }
inline Error logic_error(const std::string& msg) { return Error(ErrorKind::logic, msg); }

} // namespace hardcore
