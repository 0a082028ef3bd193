#ifndef UNIFORMPT_ERRORS_HPP_
#define UNIFORMPT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uniformpt {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed text handed to one of the parsers.
  class ParseError : public Error {
   public:
    using Error::Error;
  };

  // An enumeration grew past its configured element or node cap.
  class LimitExceeded : public Error {
   public:
    explicit LimitExceeded(std::size_t limit)
        : Error("limit exceeded: more than " + std::to_string(limit)
                + " elements"),
          _limit(limit) {}

    std::size_t limit() const noexcept {
      return _limit;
    }

   private:
    std::size_t _limit;
  };

}  // namespace uniformpt

#endif  // UNIFORMPT_ERRORS_HPP_
