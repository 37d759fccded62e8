// Exception types shared by all sarshadow modules.
#pragma once

#include <stdexcept>
#include <string>

namespace sarshadow {

// A file could not be opened, read, or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A file opened fine but its contents do not match the expected format.
class format_error : public io_error {
public:
    explicit format_error(const std::string& msg) : io_error(msg) {}
};

// A precondition on a domain value was violated: bad geometry, mismatched
// dimensions, sensor below terrain, and the like.
class contract_error : public std::runtime_error {
public:
    explicit contract_error(const std::string& msg) : std::runtime_error(msg) {}
};

// An invalid synthetic-terrain description.
class spec_error : public contract_error {
public:
    explicit spec_error(const std::string& msg) : contract_error(msg) {}
};

} // namespace sarshadow
