#pragma once

#include <vector>

#include "youngschur/partition.hpp"
#include "youngschur/polynomial.hpp"

namespace youngschur {

/// Interlacing contents of an ordinary diagram: maxima (addable) x_1 < y_1 < x_2 < ... < y_{d-1} < x_d
/// with minima (removable) y.
struct KerovCoordsOrdinary {
  std::vector<int> maxima;
  std::vector<int> minima;

  bool operator==(const KerovCoordsOrdinary&) const = default;
};

/// Shifted diagram: removable contents y_1 < x_1 < ... < y_k < x_k with x the nonzero addable contents.
struct KerovCoordsShifted {
  std::vector<int> addable;
  std::vector<int> removable;

  bool operator==(const KerovCoordsShifted&) const = default;
};

KerovCoordsOrdinary kerov_coords(const Partition& p);
/// Throws Error(bad_interlacing) unless the coordinates describe a diagram.
Partition diagram_from_coords(const KerovCoordsOrdinary& c);

KerovCoordsShifted shifted_kerov_coords(const StrictPartition& s);

/// prod (u - y_t) / prod (u - x_s).
RationalFunction r_up(const Partition& p);
/// prod (v - y_t(y_t+1)) / (v * prod (v - x_t(x_t+1))).
RationalFunction r_up_shifted(const StrictPartition& s);

/// Checks (u-1) * R_shifted(u(u-1); lambda) == R(u; D lambda) by cross multiplication.
bool compose_and_check_prop2(const StrictPartition& lambda);

}  // namespace youngschur
