#pragma once

#include <stdexcept>
#include <string>

namespace congr {

// Input is not an odd prime in the supported range.
class NotPrime : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Argument outside a documented bound (power k, oracle bound, binomial bound, ...).
class OutOfRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested inverse of a residue divisible by p.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Scan or sieve range fails its precondition.
class InvalidRange : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Output sink could not be written.
class SinkWriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic between residues with different moduli.
class ModulusMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// A condition that valid inputs can never trigger; signals a bug, not bad input.
class InternalInvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace congr
