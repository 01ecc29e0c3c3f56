#include "fracon/errors.hpp"

#include <sstream>

namespace fracon {

namespace {

std::string tag_message(double lhs, double rhs) {
  std::ostringstream msg;
  msg << "alpha tag mismatch: " << lhs << " vs " << rhs;
  return msg.str();
}

} // namespace

TagMismatch::TagMismatch(double lhs, double rhs) : Error(tag_message(lhs, rhs)) {}

ParseError::ParseError(std::size_t offset, const std::string& message)
    : Error("parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset), detail_(message) {}

} // namespace fracon
