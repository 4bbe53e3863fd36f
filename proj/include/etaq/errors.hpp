#ifndef ETAQ_ERRORS_HPP
#define ETAQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace etaq
{

/// Base class of every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Arguments outside the mathematical domain of an operation (k < 2, i > 2k, t not dividing 12, ...).
class DomainError : public Error
{
public:
    using Error::Error;
};

class SingularMatrix : public Error
{
public:
    using Error::Error;
};

class NonUnitLeadingCoefficient : public Error
{
public:
    using Error::Error;
};

/// A coefficient was requested at or beyond the precision of a series.
class InsufficientPrecision : public Error
{
public:
    using Error::Error;
};

/// The eta quotient's leading q-power is not an integer (24 does not divide sum of delta*r_delta).
class FractionalLeadingPower : public Error
{
public:
    using Error::Error;
};

class CuspNotOnLevel : public Error
{
public:
    using Error::Error;
};

class ResourceLimit : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    using Error::Error;
};

} // namespace etaq

#endif
