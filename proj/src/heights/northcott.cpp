#include "ceresa/heights/northcott.hpp"

#include <algorithm>
#include <numeric>

namespace ceresa {

namespace {

std::vector<Rational> scan_grid(unsigned B) {
  std::vector<Rational> ts;
  const long bound = B;
  for (long n = 1; n <= bound; ++n) {
    for (long m = -bound; m <= bound; ++m) {
      if (std::gcd(m, n) != 1) continue;
      if (n == 1 && (m == 1 || m == -1)) continue;
      ts.push_back(make_rational(m, n));
    }
  }
  std::sort(ts.begin(), ts.end());
  return ts;
}

NorthcottRow scan_row(const Rational& t) {
  NorthcottRow row{t, decide_ceresa_t(t), {}};
  const AssociatedCurves ac = associated_curves(picard_from_t(t));
  row.height = canonical_height(ac.EDelta, ac.Q);
  return row;
}

std::vector<NorthcottRow> filter(std::vector<NorthcottRow> rows, double bound) {
  std::erase_if(rows, [bound](const NorthcottRow& r) { return r.height.value > bound; });
  return rows;
}

}  // namespace

std::vector<NorthcottRow> northcott_scan_serial(unsigned B, double bound) {
  std::vector<NorthcottRow> rows;
  for (const Rational& t : scan_grid(B)) rows.push_back(scan_row(t));
  return filter(std::move(rows), bound);
}

std::vector<NorthcottRow> northcott_scan(unsigned B, double bound) {
  const std::vector<Rational> ts = scan_grid(B);
  std::vector<NorthcottRow> rows(ts.size());
  const auto count = static_cast<long>(ts.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long i = 0; i < count; ++i) rows[i] = scan_row(ts[i]);
  return filter(std::move(rows), bound);
}

}  // namespace ceresa
