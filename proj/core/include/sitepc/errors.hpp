#pragma once

#include <stdexcept>
#include <string>

namespace sitepc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Series algebra.
class TagMismatchError : public Error {
 public:
  using Error::Error;
};
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};
class NoConvergenceError : public Error {
 public:
  using Error::Error;
};

// Input outside an operation's domain (odd cycle length, supercritical p, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

// A size budget (DP table, subset count, BFS volume) would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

class NotPolynomialError : public Error {
 public:
  using Error::Error;
};

}  // namespace sitepc
