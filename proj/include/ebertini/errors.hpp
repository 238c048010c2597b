#ifndef EBERTINI_ERRORS_HPP
#define EBERTINI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ebertini {

// Precondition or input violations: mismatched variable lists, mixed scalar
// domains, malformed exponents, out-of-range arguments.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested verification class is not supported (explicit, never silent).
class CapabilityError : public std::runtime_error {
public:
    explicit CapabilityError(const std::string& what) : std::runtime_error(what) {}
};

// All r x r minors of the T-matrix vanish identically.  Either the projection
// covers the whole target space or the working exponent is insufficient for a
// non-prime input ideal; the caller cannot distinguish the two from here.
class NoNonzeroMinor : public std::runtime_error {
public:
    explicit NoNonzeroMinor(const std::string& what) : std::runtime_error(what) {}
};

class ProjectionMayCoverSpace : public std::runtime_error {
public:
    explicit ProjectionMayCoverSpace(const std::string& what) : std::runtime_error(what) {}
};

class BadLocusCoversSpace : public std::runtime_error {
public:
    explicit BadLocusCoversSpace(const std::string& what) : std::runtime_error(what) {}
};

class PointInBaseLocus : public std::runtime_error {
public:
    explicit PointInBaseLocus(const std::string& what) : std::runtime_error(what) {}
};

// The grid was exhausted with every evaluation zero: the oracle was the zero
// function or its declared degree was understated.
class OracleContractViolation : public std::runtime_error {
public:
    explicit OracleContractViolation(const std::string& what) : std::runtime_error(what) {}
};

// Every section of the supplied basis vanishes at some residue point.
class BasePointAtResidue : public std::runtime_error {
public:
    explicit BasePointAtResidue(const std::string& what) : std::runtime_error(what) {}
};

// Offset search gave up within its budget at this level; retry at a larger
// level (the underlying existence statement only holds for large levels).
class OffsetSearchExhausted : public std::runtime_error {
public:
    explicit OffsetSearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

// The level range was exhausted without reaching norm < 1; retryable.
class NormBudgetNotReached : public std::runtime_error {
public:
    explicit NormBudgetNotReached(const std::string& what) : std::runtime_error(what) {}
};

// Document parsing / schema problems; message names the offending field.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ebertini

#endif
