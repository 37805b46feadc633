// errors.hpp
// Error taxonomy for the library. Every error carries a stable machine
// kind; the CLI surfaces failures as "error:<kind>: <message>".

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace frobpow {

class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// Argument outside the mathematical domain of an operation (n < 0, k < 2, ...).
struct domain_error : error {
    explicit domain_error(const std::string& msg) : error("domain", msg) {}
};

// Request exceeds what the process can materialize or an input exceeds a
// documented size cap (sieve limits, 64-bit overflow guards, ...).
struct capacity_error : error {
    explicit capacity_error(const std::string& msg) : error("capacity", msg) {}
};

// Semigroup generators share a common factor.
struct not_coprime_error : error {
    explicit not_coprime_error(const std::string& msg) : error("not-coprime", msg) {}
};

// Semigroup generators violate 1 < c < d.
struct ordering_error : error {
    explicit ordering_error(const std::string& msg) : error("ordering", msg) {}
};

struct io_error : error {
    explicit io_error(const std::string& msg) : error("io", msg) {}
};

} // namespace frobpow
