#include "ceresa/ffcert/counting.hpp"

#include "ceresa/errors.hpp"
#include "ceresa/ffcert/extension_field.hpp"

namespace ceresa {

namespace {

void check_reduction(const PrimeFieldElement& a, const PrimeFieldElement& b, unsigned i) {
  if (i < 1 || i > 3) throw std::invalid_argument("count_curve: extension degree must be 1, 2 or 3");
  const PrimeFieldElement four(4, a.modulus());
  if (b.is_zero() || (a * a - four * b).is_zero()) {
    throw BadReduction("bad reduction at p = " + std::to_string(a.modulus()));
  }
}

unsigned fiber(const ExtensionField& f, const ExtensionField::Element& x, const ExtensionField::Element& a,
               const ExtensionField::Element& b) {
  const ExtensionField::Element x2 = f.mul(x, x);
  const ExtensionField::Element rhs = f.add(f.mul(x2, f.add(x2, a)), b);
  return f.cube_root_count(rhs);
}

// Σ over the elements whose top coefficient is `top`, enumerated by incrementing the lower digits.
std::uint64_t count_slice(const ExtensionField& f, std::uint64_t top, const ExtensionField::Element& a,
                          const ExtensionField::Element& b) {
  const std::uint64_t p = f.characteristic();
  const unsigned k = f.degree();
  ExtensionField::Element x{};
  x[k - 1] = top;
  const std::uint64_t inner = f.size() / p;
  std::uint64_t total = 0;
  for (std::uint64_t n = 0; n < inner; ++n) {
    total += fiber(f, x, a, b);
    for (unsigned d = 0; d + 1 < k; ++d) {
      if (++x[d] < p) break;
      x[d] = 0;
    }
  }
  return total;
}

}  // namespace

CountRecord count_curve_serial(const PrimeFieldElement& a, const PrimeFieldElement& b, unsigned i) {
  check_reduction(a, b, i);
  const ExtensionField f(a.modulus(), i);
  const auto ea = f.constant(a.value());
  const auto eb = f.constant(b.value());
  std::uint64_t total = 1;
  for (std::uint64_t top = 0; top < f.characteristic(); ++top) total += count_slice(f, top, ea, eb);
  return {a, b, a.modulus(), i, total};
}

CountRecord count_curve(const PrimeFieldElement& a, const PrimeFieldElement& b, unsigned i) {
  check_reduction(a, b, i);
  const ExtensionField f(a.modulus(), i);
  const auto ea = f.constant(a.value());
  const auto eb = f.constant(b.value());
  const auto n = static_cast<long long>(f.characteristic());
  std::uint64_t total = 1;
#pragma omp parallel for reduction(+ : total) schedule(dynamic)
  for (long long top = 0; top < n; ++top) total += count_slice(f, static_cast<std::uint64_t>(top), ea, eb);
  return {a, b, a.modulus(), i, total};
}

std::pair<PrimeFieldElement, PrimeFieldElement> reduce_model(const PicardCurve& c, std::uint64_t p) {
  if (!has_good_reduction(c, p)) throw BadReduction("bad reduction at p = " + std::to_string(p));
  const PicardCurve m = integral_model(c).curve;
  return {PrimeFieldElement::from_rational(m.a(), p), PrimeFieldElement::from_rational(m.b(), p)};
}

}  // namespace ceresa
