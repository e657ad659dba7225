#pragma once

#include <stdexcept>
#include <string>

namespace holo {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// two group values with incompatible descriptors were combined
struct DescriptorMismatchError : Error {
    using Error::Error;
};

// log requested at a point on (or too close to) the branch cut
struct BranchCutError : Error {
    using Error::Error;
};

// kappa applied to points over different base points
struct FiberMismatchError : Error {
    using Error::Error;
};

// argument outside the domain of a connection / log / lift
struct DomainError : Error {
    using Error::Error;
};

// a cochain was evaluated on a simplex that is not small for its region
struct NotSmallError : Error {
    using Error::Error;
};

struct NotALoopError : Error {
    using Error::Error;
};

// expression parse failure; offset is a byte offset into the source text
struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off) : Error(msg), offset(off) {}
};

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace holo
