#pragma once

#include <stdexcept>
#include <string>

namespace eaq {

// Field construction / arithmetic
struct NonPrimeCharacteristic : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DegreeOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SizeCapExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct FieldMismatch : std::logic_error {
    using std::logic_error::logic_error;
};
struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};
struct NoSuchRoot : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix shapes / parameters
struct ShapeMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotSquare : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ParameterOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyMatrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Linear codes
struct MethodDisagreement : std::logic_error {
    using std::logic_error::logic_error;
};
struct InexactDistance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct EmptyCode : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Constacyclic machinery
struct NotCoprime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidDefiningSet : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct CoefficientNotInBaseField : std::logic_error {
    using std::logic_error::logic_error;
};
struct ConstructionNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// GRS constructions
struct InvalidGrsData : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SubgroupOrderInvalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct PreconditionViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LcdVerificationFailed : std::logic_error {
    using std::logic_error::logic_error;
};

// EAQECC derivations
struct LengthMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NegativeLogicalDimension : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotLcd : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RankMismatch : std::logic_error {
    using std::logic_error::logic_error;
};
struct BoundViolated : std::logic_error {
    using std::logic_error::logic_error;
};
struct EbitCountOutOfRange : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Certificate parsing
struct MalformedCertificate : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eaq
