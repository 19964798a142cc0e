#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsg {

// Base class for all user-input errors raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failures (a closed form disagreeing with its oracle,
// a rational that should have been an integer). These indicate a bug, not
// bad input, and map to exit code 2 in the CLI.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct EmptyGenerators : Error {
    EmptyGenerators() : Error("generator list is empty") {}
};

struct ZeroGenerator : Error {
    ZeroGenerator() : Error("generators must be positive") {}
};

struct NonCoprimeGenerators : Error {
    std::uint64_t gcd;
    explicit NonCoprimeGenerators(std::uint64_t g)
        : Error("gcd of generators is " + std::to_string(g) + ", expected 1"), gcd(g) {}
};

struct ZeroModulus : Error {
    ZeroModulus() : Error("Apery modulus must be nonzero") {}
};

struct ModulusNotInSemigroup : Error {
    std::uint64_t t;
    explicit ModulusNotInSemigroup(std::uint64_t t_)
        : Error("modulus " + std::to_string(t_) + " is not an element of the semigroup"), t(t_) {}
};

struct NonIntegralResult : InternalError {
    explicit NonIntegralResult(const std::string& where)
        : InternalError("non-integral result in " + where) {}
};

struct EmptySequence : Error {
    EmptySequence() : Error("sequence is empty") {}
};

struct ZeroEntry : Error {
    ZeroEntry() : Error("sequence entries must be positive") {}
};

struct NotSmooth : Error {
    NotSmooth() : Error("sequence is not smooth") {}
};

struct NotCoprime : Error {
    NotCoprime() : Error("sequence gcd is not 1") {}
};

struct UnsuitablePair : Error {
    std::size_t i, j;
    std::uint64_t gcd;
    UnsuitablePair(std::size_t i_, std::size_t j_, std::uint64_t g)
        : Error("pair is not suitable: gcd(a_" + std::to_string(i_) + ", b_" +
                std::to_string(j_) + ") = " + std::to_string(g)),
          i(i_), j(j_), gcd(g) {}
};

struct NotCompoundInput : Error {
    NotCompoundInput() : Error("sequence is not compound") {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange() : Error("index out of range") {}
};

struct SequenceTooLongForSetSearch : Error {
    SequenceTooLongForSetSearch()
        : Error("set-level compound search is limited to 8 elements") {}
};

struct EvenSecondArgument : Error {
    EvenSecondArgument() : Error("second generator must be odd (swap the arguments)") {}
};

struct EnumerationCapExceeded : Error {
    explicit EnumerationCapExceeded(const std::string& what) : Error(what) {}
};

} // namespace nsg
