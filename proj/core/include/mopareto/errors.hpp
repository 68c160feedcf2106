#ifndef MOPARETO_ERRORS_HPP
#define MOPARETO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mopareto {

/// Malformed textual input: rationals, JSON documents, relation names.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally valid input that violates an instance invariant
/// (duplicate ids, nonpositive values, ragged vectors).
class InstanceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructor was asked for a relation it has no guarantee for.
class UnsupportedRelation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The exact dominating-set solver refused an input above its node limit.
class SolverLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An input set that was required to verify did not.
class VerificationFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A gap query asked for more precision than the adversary answers.
class PrecisionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace mopareto

#endif  // MOPARETO_ERRORS_HPP
