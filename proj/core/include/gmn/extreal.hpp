#ifndef GMN_EXTREAL_HPP_
#define GMN_EXTREAL_HPP_

#include <stdexcept>

namespace gmn {

// Extended-real moment value: finite, +infinite, or undefined.
// Moment nonexistence is data, never an exception or a silent NaN.
class ExtReal {
 public:
  enum class Kind { kFinite, kInfinite, kUndefined };

  ExtReal() : kind_(Kind::kUndefined), value_(0.0) {}

  static ExtReal finite(double v) { return ExtReal(Kind::kFinite, v); }
  static ExtReal infinite() { return ExtReal(Kind::kInfinite, 0.0); }
  static ExtReal undefined() { return ExtReal(Kind::kUndefined, 0.0); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }
  bool is_undefined() const { return kind_ == Kind::kUndefined; }

  // Finite value; throws on infinite/undefined so nonexistence can never
  // leak into arithmetic unnoticed.
  double value() const {
    if (!is_finite()) throw std::logic_error("ExtReal: value() on non-finite");
    return value_;
  }
  double value_or(double fallback) const { return is_finite() ? value_ : fallback; }

 private:
  ExtReal(Kind k, double v) : kind_(k), value_(v) {}
  Kind kind_;
  double value_;
};

}  // namespace gmn

#endif  // GMN_EXTREAL_HPP_
