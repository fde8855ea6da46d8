#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "clustervd/pattern.hpp"

namespace clustervd {

enum class ErrorKind {
  Input,          // invalid argument or out-of-range vertex
  Parse,          // malformed text; message carries the location
  Structure,      // well-formed text describing an invalid object
  NotCograph,     // witness holds an induced P4
  Unsupported,    // variant/flag combination that is refused
  NoSet,          // extraction requested for an infinite value
  Guard,          // oracle size or depth limit exceeded
  Rejected,       // a solution map was given a set that fails verification
  Triangle,       // witness holds a triangle
  NotBipartite,   // witness holds an odd cycle when one is known
  NotNormalized,  // gadget restriction on a set missing black vertices
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<PatternWitness> witness = std::nullopt)
      : std::runtime_error(message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<PatternWitness>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::optional<PatternWitness> witness_;
};

}  // namespace clustervd
