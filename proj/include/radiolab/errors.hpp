#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radiolab {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPrimePower : public Error {
 public:
  explicit NotPrimePower(long long q)
      : Error("not a prime power: " + std::to_string(q)), value_(q) {}
  long long value() const { return value_; }

 private:
  long long value_;
};

class ZeroInverse : public Error {
 public:
  ZeroInverse() : Error("zero has no multiplicative inverse") {}
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

class Disconnected : public Error {
 public:
  Disconnected() : Error("graph is disconnected") {}
  explicit Disconnected(const std::string& what) : Error(what) {}
};

class LoopError : public Error {
 public:
  explicit LoopError(int vertex, std::size_t line = 0)
      : Error(line ? "self-loop at vertex " + std::to_string(vertex) + " on line " + std::to_string(line)
                   : "self-loop at vertex " + std::to_string(vertex)),
        vertex_(vertex),
        line_(line) {}
  int vertex() const { return vertex_; }
  std::size_t line() const { return line_; }

 private:
  int vertex_;
  std::size_t line_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class BadPermutation : public Error {
 public:
  using Error::Error;
};

class NotInjective : public Error {
 public:
  using Error::Error;
};

class UnsupportedDiameter : public Error {
 public:
  using Error::Error;
};

class BadCertificate : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class NoGluingIndex : public Error {
 public:
  NoGluingIndex() : Error("no gluing index satisfies the distance conditions") {}
};

class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  TooLarge(int order, int limit)
      : Error("graph has " + std::to_string(order) + " vertices; exact oracle limit is " +
              std::to_string(limit)) {}
};

// A bounded search ran out of budget before reaching an answer.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace radiolab
