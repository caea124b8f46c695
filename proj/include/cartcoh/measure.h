#ifndef CARTCOH_MEASURE_H_
#define CARTCOH_MEASURE_H_

#include <boost/multiprecision/cpp_int.hpp>

namespace cartcoh {

// The reduction measures grow multiplicatively with composition, so they are
// unbounded.
using Measure = boost::multiprecision::cpp_int;

}  // namespace cartcoh

#endif  // CARTCOH_MEASURE_H_
