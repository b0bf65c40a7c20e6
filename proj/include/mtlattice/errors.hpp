#pragma once

#include <stdexcept>
#include <string>

namespace mtlat {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A raw multiplication table fails the group axioms.
class AxiomViolation : public Error {
public:
    using Error::Error;
};

// Requested group would exceed the supported order (96).
class OrderTooLarge : public Error {
public:
    using Error::Error;
};

// subgroup order requested does not divide the group order.
class NonDivisorOrder : public Error {
public:
    using Error::Error;
};

// rho lies in the subgroup H, so it acts trivially on H\G.
class RhoInSubgroup : public Error {
public:
    using Error::Error;
};

// A coset set is not a CM type (wrong size or contains a conjugate pair).
class NotACMType : public Error {
public:
    using Error::Error;
};

// Two CM types live on different coset spaces.
class SpaceMismatch : public Error {
public:
    using Error::Error;
};

// The element supplied does not conjugate the source subgroup onto the target.
class NotAConjugation : public Error {
public:
    using Error::Error;
};

// family_types called for a dimension outside its construction range.
class UnsupportedG : public Error {
public:
    using Error::Error;
};

// Malformed input (JSON or CLI); carries the offending field name.
class InputError : public Error {
public:
    InputError(std::string field, const std::string& what)
        : Error("invalid field \"" + field + "\": " + what), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

}  // namespace mtlat
