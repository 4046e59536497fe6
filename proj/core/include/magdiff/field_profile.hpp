#ifndef MAGDIFF_FIELD_PROFILE_HPP
#define MAGDIFF_FIELD_PROFILE_HPP

#include <limits>
#include <vector>

namespace magdiff {

/// Physical-space samples at one instant. For simulator snapshots `x` holds
/// cell centres and `xc` the extracted front (NaN when there is none yet).
struct FieldProfile {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> B;
  std::vector<double> e;
  double xc = std::numeric_limits<double>::quiet_NaN();
};

}  // namespace magdiff

#endif  // MAGDIFF_FIELD_PROFILE_HPP
