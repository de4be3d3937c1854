#include "padicexp/rational.hpp"

#include <stdexcept>

namespace padicexp {

ReducedRational::ReducedRational(Int numerator, Int denominator) {
  if (denominator == 0) throw std::invalid_argument("reduce: zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  if (numerator == 0) return;  // stays 0/1
  Int g = gcd(abs(numerator), denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string ReducedRational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

ReducedRational reduce(const Int& numerator, const Int& denominator) {
  return ReducedRational(numerator, denominator);
}

}  // namespace padicexp
