#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace congruent {

/// Bad arguments: out-of-range family parameters, K < 1, malformed matrices.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A recurrence whose supplied prefix cannot start it.
class SpecError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Evaluation point outside the map's interval.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Power series of a rational function with a zero constant term in the denominator.
class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Power series that leaves the integers.
class ExactnessError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A map whose anchors do not sit on the integer lattice.
class NotMarkovError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Piece-count guard exceeded while refining an iterate.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed (e.g. periodic points not divisible into orbits).
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// f^k(x) = ±x holds on a whole interval, so there is no finite count.
class InfiniteSolutions : public std::runtime_error {
public:
    InfiniteSolutions(mpq_class lo, mpq_class hi)
        : std::runtime_error("infinitely many solutions on [" + lo.get_str() + ", " +
                             hi.get_str() + "]"),
          lo_(std::move(lo)),
          hi_(std::move(hi)) {}

    const mpq_class& witness_lo() const noexcept { return lo_; }
    const mpq_class& witness_hi() const noexcept { return hi_; }

private:
    mpq_class lo_;
    mpq_class hi_;
};

}  // namespace congruent
