#include "srgft/series.hpp"

namespace srgft {

template class SliceSeries<Rational>;
template class SliceSeries<double>;

}  // namespace srgft
