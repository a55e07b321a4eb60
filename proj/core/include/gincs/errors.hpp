#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gincs {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An operation was called outside its precondition (e.g. a non-radical
/// ideal handed to the Borel test).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("computation exceeded its time budget") {}
};

}  // namespace gincs
