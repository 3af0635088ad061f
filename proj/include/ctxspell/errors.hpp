#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctxspell {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A file could not be opened or read.
struct IoError : Error {
    using Error::Error;
};

// File contents violate the expected format (bad UTF-8, wrong column or
// vector counts, duplicate entries). Messages carry path and line number.
struct FormatError : Error {
    using Error::Error;
};

// A documented precondition was violated by the caller.
struct ContractError : Error {
    using Error::Error;
};

// Error-corpus generation could not satisfy its contract. `achieved` holds
// the number of instances produced before giving up.
struct GenerationError : Error {
    GenerationError(const std::string& msg, std::size_t achieved_count = 0)
        : Error(msg), achieved(achieved_count) {}

    std::size_t achieved = 0;
};

} // namespace ctxspell
