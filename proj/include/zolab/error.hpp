#ifndef ZOLAB_ERROR_HPP
#define ZOLAB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zolab {

/// Base class for all domain errors raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Raised by the formula parser; carries the byte offset of the failure.
class parse_error : public error {
 public:
  parse_error(std::size_t pos, const std::string& what)
      : error("parse error at offset " + std::to_string(pos) + ": " + what), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

}  // namespace zolab

#endif
