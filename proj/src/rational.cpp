#include "tkem/rational.hpp"

namespace tkem {

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tkem
