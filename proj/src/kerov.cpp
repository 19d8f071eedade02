#include "youngschur/kerov.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "youngschur/error.hpp"

namespace youngschur {

namespace {

std::vector<int> sorted_contents(const std::vector<Box>& bs) {
  std::vector<int> out;
  for (Box b : bs) out.push_back(content(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ExactRational> as_rationals(const std::vector<int>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

KerovCoordsOrdinary kerov_coords(const Partition& p) {
  return {sorted_contents(addable_boxes(p)), sorted_contents(removable_boxes(p))};
}

Partition diagram_from_coords(const KerovCoordsOrdinary& c) {
  const auto& x = c.maxima;
  const auto& y = c.minima;
  if (x.empty() || y.size() + 1 != x.size()) throw Error(Errc::bad_interlacing, "need d maxima and d-1 minima");
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!(x[i] < y[i] && y[i] < x[i + 1])) throw Error(Errc::bad_interlacing, "coordinates do not interlace");
  if (std::accumulate(x.begin(), x.end(), 0L) != std::accumulate(y.begin(), y.end(), 0L))
    throw Error(Errc::bad_interlacing, "sum of maxima differs from sum of minima");

  // Walk the rim from the bottom-left corner (content x_1): east to each minimum, north to each maximum.
  std::vector<int> rows_bottom_up;
  int width = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    width += y[i] - x[i];
    rows_bottom_up.insert(rows_bottom_up.end(), static_cast<std::size_t>(x[i + 1] - y[i]), width);
  }
  if (static_cast<int>(rows_bottom_up.size()) != -x.front() || width != x.back())
    throw Error(Errc::bad_interlacing, "rim does not close");
  return Partition(std::vector<int>(rows_bottom_up.rbegin(), rows_bottom_up.rend()));
}

KerovCoordsShifted shifted_kerov_coords(const StrictPartition& s) {
  std::vector<int> addable;
  for (int c : sorted_contents(shifted_addable_boxes(s)))
    if (c != 0) addable.push_back(c);
  return {addable, sorted_contents(shifted_removable_boxes(s))};
}

RationalFunction r_up(const Partition& p) {
  const KerovCoordsOrdinary c = kerov_coords(p);
  RationalFunction f(PolynomialQ::from_roots(as_rationals(c.minima)), PolynomialQ::from_roots(as_rationals(c.maxima)));
  if (f.numerator().degree() + 1 != f.denominator().degree())
    throw std::logic_error("r_up degree mismatch for " + p.to_string());
  return f;
}

RationalFunction r_up_shifted(const StrictPartition& s) {
  const KerovCoordsShifted c = shifted_kerov_coords(s);
  std::vector<ExactRational> zeros;
  for (int y : c.removable) zeros.emplace_back(y * (y + 1));
  std::vector<ExactRational> poles{ExactRational(0)};
  for (int x : c.addable) poles.emplace_back(x * (x + 1));
  return RationalFunction(PolynomialQ::from_roots(zeros), PolynomialQ::from_roots(poles));
}

bool compose_and_check_prop2(const StrictPartition& lambda) {
  const PolynomialQ quadratic{0, -1, 1};  // u(u-1)
  const PolynomialQ shift{-1, 1};         // u-1
  const RationalFunction lhs = r_up_shifted(lambda).compose(quadratic) * shift;
  return lhs.equals_by_cross_multiplication(r_up(double_diagram(lambda)));
}

}  // namespace youngschur
