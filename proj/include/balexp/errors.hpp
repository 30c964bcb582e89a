#ifndef BALEXP_ERRORS_HPP
#define BALEXP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace balexp {

// Rejection of user-supplied data (malformed slope or spec text, a period
// that is not constant gap, overlapping colour alphabets, ...). The CLI maps
// this to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace balexp

#endif  // BALEXP_ERRORS_HPP
