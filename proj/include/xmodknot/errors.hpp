#pragma once

#include <stdexcept>
#include <string>

namespace xmodknot {

enum class ErrorKind {
  SizeLimit,
  InvalidModulus,
  NotAGroup,
  NotAHomomorphism,
  NotCentral,
  NotNormal,
  NotAbelian,
  GroupMismatch,
  NonComposable,
  XmodMismatch,
  KernelNotCentral,
  NotASection,
  NotSurjective,
  NotClosed,
  NotBijective,
  InvalidAxioms,
  ParseError,
  WidthMismatch,
  OrientationMismatch,
  IndexOutOfRange,
  NonClosable,
  EnhancementMismatch,
  DiagramNotClosed,
  MultiComponent,
  UnknownName,
  Io,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace xmodknot
