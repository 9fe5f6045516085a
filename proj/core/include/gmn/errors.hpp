#ifndef GMN_ERRORS_HPP_
#define GMN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gmn {

// Invalid model parameters or malformed inputs (dimension mismatch,
// non-SPD scale matrix, parameter out of its admissible range).
class ModelError : public std::invalid_argument {
 public:
  explicit ModelError(const std::string& what) : std::invalid_argument(what) {}
};

// A numerical routine failed to reach its accuracy contract. Carries the
// error estimate it did achieve so callers can report it.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double achieved_error)
      : std::runtime_error(what + " (achieved error " +
                           std::to_string(achieved_error) + ")"),
        achieved_error_(achieved_error) {}
  double achieved_error() const { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace gmn

#endif  // GMN_ERRORS_HPP_
