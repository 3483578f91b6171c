#pragma once

#include <stdexcept>
#include <string>

namespace loopkit {

// Base error. `code()` is a stable machine-readable tag; the CLI prints it
// and maps it to an exit status.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

class SyntaxError : public Error {
public:
  explicit SyntaxError(const std::string& m) : Error("syntax", m) {}
};

class NotLatinError : public Error {
public:
  explicit NotLatinError(const std::string& m) : Error("not-latin", m) {}
};

class NoIdentityError : public Error {
public:
  explicit NoIdentityError(const std::string& m) : Error("no-identity", m) {}
};

// Resource cap (max order, subloop count, queue size) exceeded. Never a
// silent truncation: callers see the cap and the count reached.
class CapacityError : public Error {
public:
  explicit CapacityError(const std::string& m) : Error("capacity", m) {}
};

class OracleBoundError : public Error {
public:
  explicit OracleBoundError(const std::string& m) : Error("oracle-bound", m) {}
};

class NotASubloopError : public Error {
public:
  explicit NotASubloopError(const std::string& m) : Error("not-a-subloop", m) {}
};

class NotNormalError : public Error {
public:
  explicit NotNormalError(const std::string& m) : Error("not-normal", m) {}
};

class NotAGroupError : public Error {
public:
  explicit NotAGroupError(const std::string& m) : Error("not-a-group", m) {}
};

class NucleusNotNormalError : public Error {
public:
  explicit NucleusNotNormalError(const std::string& m)
      : Error("nucleus-not-normal", m) {}
};

class NotPowerAssociativeError : public Error {
public:
  explicit NotPowerAssociativeError(const std::string& m)
      : Error("not-power-associative", m) {}
};

class UnsupportedOrderError : public Error {
public:
  explicit UnsupportedOrderError(const std::string& m)
      : Error("unsupported-order", m) {}
};

class BoundExceededError : public Error {
public:
  explicit BoundExceededError(const std::string& m)
      : Error("bound-exceeded", m) {}
};

class SearchExhaustedError : public Error {
public:
  explicit SearchExhaustedError(const std::string& m)
      : Error("search-exhausted", m) {}
};

// A construction finished but failed one of its own post-checks.
class OracleFailureError : public Error {
public:
  explicit OracleFailureError(const std::string& m)
      : Error("oracle-failure", m) {}
};

class InvalidCertificateError : public Error {
public:
  InvalidCertificateError(std::string path, const std::string& m)
      : Error("invalid-certificate", "at " + path + ": " + m),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

}  // namespace loopkit
