#pragma once

#include <stdexcept>
#include <string>

namespace dibound {

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct SizeError : std::length_error {
    using std::length_error::length_error;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace dibound
