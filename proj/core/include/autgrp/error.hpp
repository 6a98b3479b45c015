#ifndef AUTGRP_ERROR_HPP_
#define AUTGRP_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autgrp {

  // Malformed or inconsistent user input: unknown symbols, bad files,
  // violated preconditions on values supplied from outside.
  class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Parse failure with the offending (1-based) line.
  class ParseError : public InputError {
   public:
    ParseError(std::size_t line, std::string const& what)
        : InputError("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const noexcept {
      return line_;
    }

   private:
    std::size_t line_;
  };

  // A configured size or iteration cap was reached.
  class LimitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Internal contract violation (e.g. stepping a padded history with a
  // non-padding symbol).
  class LogicError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace autgrp

#endif  // AUTGRP_ERROR_HPP_
