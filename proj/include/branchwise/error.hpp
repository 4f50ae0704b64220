#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace branchwise {

enum class Errc {
  OutOfRange,
  SelfLoop,
  ParseError,
  Disconnected,
  TooLarge,
  MalformedTree,
  TooFewVertices,
  InconsistentBounds,
  Unreachable,
  SearchBudgetExceeded,
  // The remaining codes indicate a bug rather than bad input.
  NoCover,
  StuckExploration,
  NoAdoptableEndpoint,
  InternalAssertion,
};

std::string_view errc_name(Errc code);

// True for codes that can only be raised by a defect in the library.
bool is_internal(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace branchwise
