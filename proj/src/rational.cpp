#include "delsarte/rational.hpp"

#include <ostream>

namespace delsarte {

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace delsarte
