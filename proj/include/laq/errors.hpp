#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace laq {

// Base for all precondition violations thrown by this library. Checks that
// report mathematical counterexamples (Jacobi failures, relatedness failures,
// ...) do not throw; they return result structs carrying a witness instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FrameMismatch : Error {
    using Error::Error;
};

struct AmbientMismatch : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct DegreeMismatch : Error {
    using Error::Error;
};

// inner subspace not contained in outer when forming a subquotient
struct ContainmentViolation : Error {
    using Error::Error;
};

// requested truncation window cannot certify the requested degree
struct WindowTooSmall : Error {
    using Error::Error;
};

// structural defect in input tables (bad labels, dimension clashes, ...)
struct MalformedInput : Error {
    using Error::Error;
};

// builder input whose lifts are not Lie algebra automorphisms or do not
// compose along the groupoid multiplication
struct ActionInvalid : Error {
    using Error::Error;
};

// linear action data that does not commute with the complex differentials
struct ActionNotCompatible : Error {
    using Error::Error;
};

struct EmptySet : Error {
    using Error::Error;
};

// a double complex whose assembled squares fail d^2 = 0 / commutation;
// carries the offending block coordinates
struct IdentityViolation : Error {
    IdentityViolation(const std::string& msg, std::size_t p, std::size_t q)
        : Error(msg), block_p(p), block_q(q) {}
    std::size_t block_p;
    std::size_t block_q;
};

// document-level failure: malformed JSON or a table that does not match the
// declared shape; carries a position when the underlying parser provides one
struct ParseError : Error {
    explicit ParseError(const std::string& msg, std::size_t byte = 0)
        : Error(msg), byte_offset(byte) {}
    std::size_t byte_offset;
};

}  // namespace laq
