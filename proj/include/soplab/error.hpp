#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace soplab {

enum class ErrorKind {
  UnsupportedBasis,
  Domain,
  Range,
  Structural,
  Shape,
  Construction,
  Consistency,
  ProviderInvariant,
  Falsification,
  Parse,
  Usage,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Base exception for every failure raised by the library. The kind tags the
/// error family so callers (the CLI in particular) can map it to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A verification produced a counterexample. Carries the witness so the
/// report layer can print it verbatim.
class FalsificationError : public Error {
 public:
  FalsificationError(std::string const& what, nlohmann::json witness)
      : Error(ErrorKind::Falsification, what), witness_(std::move(witness)) {}

  nlohmann::json const& witness() const noexcept { return witness_; }

 private:
  nlohmann::json witness_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string const& what) { throw Error(kind, what); }

}  // namespace soplab
