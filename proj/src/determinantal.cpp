#include "tdpp/determinantal.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tdpp {

namespace detail {

std::complex<double> determinant(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 1.0;
  return m.partialPivLu().determinant();
}

double real_determinant(const Eigen::MatrixXcd& m) {
  const std::complex<double> d = determinant(m);
  if (std::abs(d.imag()) > kNonRealTol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "determinant has imaginary part " << d.imag();
    throw NonRealDeterminant(msg.str());
  }
  return d.real();
}

void check_distinct(std::span<const long> positions) {
  std::vector<long> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicatePositions("kernel positions must be distinct");
}

}  // namespace detail
}  // namespace tdpp
