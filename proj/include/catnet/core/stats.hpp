#ifndef CATNET_CORE_STATS_HPP
#define CATNET_CORE_STATS_HPP

#include <cmath>

namespace catnet {

// Inverse of the standard normal CDF (Acklam's rational approximation,
// refined with one Halley step; |relative error| < 1e-9 over (0,1)).
double normal_quantile(double p);

inline double log2x(double x) { return std::log(x) * 1.4426950408889634; }

// x*log2(x) with the 0*log(0)=0 convention.
inline double xlog2x(double x) { return x > 0.0 ? x * log2x(x) : 0.0; }

// Upper confidence bound on the error count of a leaf that holds n instances
// of which e are misclassified: returns the expected extra errors to add.
// This is the pessimistic-error device used by confidence-factor pruning.
double pessimistic_extra_errors(double n, double e, double confidence);

} // namespace catnet

#endif
