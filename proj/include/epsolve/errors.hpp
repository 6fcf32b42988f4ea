#ifndef EPSOLVE_ERRORS_HPP
#define EPSOLVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace epsolve {

// Error taxonomy mirrored by the C API status codes and the CLI exit codes.
enum class errc : int {
    ok = 0,
    internal = 1,
    constraint = 2,   // malformed input, dimension/overlap violations
    domain = 3,       // parameters outside the unitarity domain (|lambda| >= 1, poles of f)
    fixture = 4,      // embedded fixture integrity failure
};

class error : public std::runtime_error {
public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

struct constraint_error : error {
    explicit constraint_error(const std::string& msg) : error(errc::constraint, msg) {}
};

struct domain_error : error {
    explicit domain_error(const std::string& msg) : error(errc::domain, msg) {}
};

struct fixture_error : error {
    explicit fixture_error(const std::string& msg) : error(errc::fixture, msg) {}
};

} // namespace epsolve

#endif
