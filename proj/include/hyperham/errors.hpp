#pragma once

#include <stdexcept>
#include <string>

namespace hyperham {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class EdgeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Two faulty edges share an endpoint.
class NotDisjoint : public Error {
 public:
  NotDisjoint(const std::string& what, unsigned shared_vertex)
      : Error(what), shared_vertex_(shared_vertex) {}
  unsigned shared_vertex() const noexcept { return shared_vertex_; }

 private:
  unsigned shared_vertex_;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Raised by build_hc when the fault set carries a disconnected-halfway subcube.
class NotHamiltonian : public Error {
 public:
  using Error::Error;
};

class DimensionTooLarge : public Error {
 public:
  using Error::Error;
};

/// The oracle ran out of its node-expansion budget. Never reported as "no".
class SearchTimeout : public Error {
 public:
  using Error::Error;
};

/// No partition direction leaves both halves trap-free. Indicates a bug.
class NoDimensionFound : public Error {
 public:
  using Error::Error;
};

class ConstraintUnsatisfiable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace hyperham
