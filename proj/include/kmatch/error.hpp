#ifndef KMATCH_ERROR_HPP
#define KMATCH_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kmatch {

// Malformed or out-of-range arguments (bad vertex ids, self-loops, q > m, ...).
class input_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force routine was asked for an instance beyond its enumeration guard.
class capacity_error : public std::length_error {
public:
  using std::length_error::length_error;
};

class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace kmatch

#endif // KMATCH_ERROR_HPP
