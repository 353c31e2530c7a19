#include "coxeter/rational.hpp"

#include <ostream>

namespace coxeter {

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

} // namespace coxeter
