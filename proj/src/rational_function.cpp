#include "srgft/rational_function.hpp"

namespace srgft {

template class SlicePolynomial<Rational>;
template class SlicePolynomial<double>;
template class SliceRational<Rational>;
template class SliceRational<double>;

}  // namespace srgft
