#pragma once

#include <stdexcept>
#include <string>

namespace tetradf
{

// Geometry or configuration parameter outside its domain (non-positive edge, bad grid, ...).
class InvalidParameter : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite TDOA sample values.
class InvalidSample : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

// Readings sum to (numerically) zero, so the source distance is unrecoverable.
class AtInfinity : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Triangle readings carry no in-plane component; the bearing is undefined.
class DegenerateReadings : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

// Elevation too close to zero for a height-based range.
class Coplanar : public std::domain_error
{
public:
  using std::domain_error::domain_error;
};

} // namespace tetradf
