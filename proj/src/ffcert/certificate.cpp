#include "ceresa/ffcert/certificate.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "ceresa/elliptic/genus1.hpp"
#include "ceresa/errors.hpp"
#include "ceresa/ffcert/lpoly.hpp"

namespace ceresa {

namespace {

constexpr const char* kHeader = "ceresa-certificate 1";

std::string evidence_text(std::uint64_t v, std::uint64_t ell, std::uint64_t q, std::uint64_t order) {
  std::ostringstream os;
  os << "sigma has order " << order << " at v = " << v << ", divisible by ell = " << ell
     << "; ker(pi^*) has order dividing 4 and ell > 3 is odd, so ell divides the order of D = "
        "sum_{c in C(F_v)} (c - infinity) in J(F_v); det(Fr_"
     << q << " - 1) on V is an ell-adic unit, so H^1(Gal_Q, V) is torsion-free and the Ceresa "
        "cycle kappa_infinity(C) has infinite order";
  return os.str();
}

// Checks that need only (a, b, v, ell, q); empty when all pass.
std::string precondition_failure(const PicardCurve& c, std::uint64_t v, std::uint64_t ell, std::uint64_t q) {
  if (ell <= 3) return "ell must exceed 3";
  if (!is_prime(ell)) return "ell must be prime";
  if (!is_prime(v)) return "v must be prime";
  if (!is_prime(q)) return "q must be prime";
  if (ell == v) return "ell must differ from v";
  if (ell == q) return "ell must differ from q";
  if (!has_good_reduction(c, v)) return "v must be a prime of good reduction";
  if (!has_good_reduction(c, q)) return "q must be a prime of good reduction";
  return {};
}

std::string claim_failure(const PicardCurve& c, const InfinitudeCertificate& cert) {
  const LiftSumResult lift = lift_sum(c, cert.v);
  const Genus1PointFp& claimed = cert.lift.sigma;
  if (!claimed.is_infinity()) {
    if (claimed.x().modulus() != cert.v || claimed.y().modulus() != cert.v) return "sigma not on curve";
    const PicardCurve m = integral_model(c).curve;
    const auto a = PrimeFieldElement::from_rational(m.a(), cert.v);
    const auto b = PrimeFieldElement::from_rational(m.b(), cert.v);
    if (!genus1_contains(a, b, claimed)) return "sigma not on curve";
  }
  if (claimed != lift.sigma) return "sigma mismatch";
  if (cert.lift.sigma_order != lift.sigma_order) return "sigma_order mismatch";
  if (lift.sigma_order % cert.ell != 0) return "ell must divide sigma_order";
  const FrobeniusDetResult det = frobenius_det(c, cert.q, cert.ell);
  if (cert.det.det_value != det.det_value) return "det_value mismatch";
  if (cert.det.twisted_det_value != det.twisted_det_value) return "det_value_twisted mismatch";
  if (!det.unit_mod_ell) return "det_value must be an ell-adic unit";
  return {};
}

InfinitudeCertificate assemble(const PicardCurve& c, LiftSumResult lift, FrobeniusDetResult det, std::uint64_t ell) {
  InfinitudeCertificate cert;
  cert.a = c.a();
  cert.b = c.b();
  cert.v = lift.v;
  cert.ell = ell;
  cert.q = det.q;
  det.ell = ell;
  det.unit_mod_ell = is_ell_adic_unit(det.det_value, ell) && is_ell_adic_unit(det.twisted_det_value, ell);
  cert.evidence = evidence_text(cert.v, ell, cert.q, lift.sigma_order);
  cert.lift = std::move(lift);
  cert.det = std::move(det);
  return cert;
}

std::vector<std::uint64_t> prime_factors_above_3(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const auto& [p, e] : factor_integer(Integer(static_cast<unsigned long>(n)))) {
    (void)e;
    if (p > 3) out.push_back(p.get_ui());
  }
  return out;
}

}  // namespace

InfinitudeCertificate certify_infinite(const PicardCurve& c, const CertificateHints& hints, std::uint64_t v_max) {
  if (hints.complete()) {
    InfinitudeCertificate cert;
    cert.a = c.a();
    cert.b = c.b();
    cert.v = *hints.v;
    cert.ell = *hints.ell;
    cert.q = *hints.q;
    if (const std::string f = precondition_failure(c, cert.v, cert.ell, cert.q); !f.empty()) {
      throw InvalidHint(f, f);
    }
    LiftSumResult lift = lift_sum(c, cert.v);
    if (lift.sigma_order % cert.ell != 0) {
      throw InvalidHint("ell must divide sigma_order",
                        "ell = " + std::to_string(cert.ell) + " does not divide sigma_order = " +
                            std::to_string(lift.sigma_order));
    }
    FrobeniusDetResult det = frobenius_det(c, cert.q, cert.ell);
    if (!det.unit_mod_ell) {
      throw InvalidHint("det_value must be an ell-adic unit",
                        "det(Fr_" + std::to_string(cert.q) + " - 1) is not a unit mod " + std::to_string(cert.ell));
    }
    return assemble(c, std::move(lift), std::move(det), cert.ell);
  }

  std::vector<std::uint64_t> vs;
  for (std::uint64_t v : primes_between(5, v_max)) {
    if ((!hints.v || *hints.v == v) && has_good_reduction(c, v)) vs.push_back(v);
  }
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q : primes_between(5, v_max)) {
    if ((!hints.q || *hints.q == q) && has_good_reduction(c, q)) qs.push_back(q);
  }
  if (hints.v && vs.empty()) throw InvalidHint("v must be a prime of good reduction", "v is not usable");
  if (hints.q && qs.empty()) throw InvalidHint("q must be a prime of good reduction", "q is not usable");

  std::vector<LiftSumResult> lifts(vs.size());
  const auto nv = static_cast<long>(vs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < nv; ++i) lifts[i] = lift_sum(c, vs[i]);

  // det(Fr_q − 1) does not depend on ell; compute each q at most once.
  std::map<std::uint64_t, FrobeniusDetResult> dets;
  for (LiftSumResult& lift : lifts) {
    for (std::uint64_t ell : prime_factors_above_3(lift.sigma_order)) {
      if (ell == lift.v || (hints.ell && *hints.ell != ell)) continue;
      for (std::uint64_t q : qs) {
        if (q == ell) continue;
        auto it = dets.find(q);
        if (it == dets.end()) it = dets.emplace(q, frobenius_det(lpoly(c, q).L_C, q, ell)).first;
        const FrobeniusDetResult& d = it->second;
        if (is_ell_adic_unit(d.det_value, ell) && is_ell_adic_unit(d.twisted_det_value, ell)) {
          return assemble(c, lift, d, ell);
        }
      }
    }
  }
  throw NoCertificateFound("no certificate with v, q <= " + std::to_string(v_max) +
                           " (search exhausted; this is not a proof of torsion)");
}

std::string serialize(const InfinitudeCertificate& cert) {
  std::ostringstream os;
  os << kHeader << "\n";
  os << "a " << to_string(cert.a) << "\n";
  os << "b " << to_string(cert.b) << "\n";
  os << "v " << cert.v << "\n";
  os << "ell " << cert.ell << "\n";
  os << "q " << cert.q << "\n";
  os << "sigma ";
  if (cert.lift.sigma.is_infinity()) {
    os << "O";
  } else {
    os << cert.lift.sigma.x().value() << " " << cert.lift.sigma.y().value();
  }
  os << "\n";
  os << "sigma_order " << cert.lift.sigma_order << "\n";
  os << "det_value " << to_string(cert.det.det_value) << "\n";
  os << "det_value_twisted " << to_string(cert.det.twisted_det_value) << "\n";
  os << "evidence " << cert.evidence << "\n";
  return os.str();
}

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19) {
    throw std::invalid_argument("certificate: bad integer for " + key + ": '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace

InfinitudeCertificate parse_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kHeader) throw std::invalid_argument("certificate: missing header");
  static const char* keys[] = {"a", "b", "v", "ell", "q", "sigma", "sigma_order", "det_value", "det_value_twisted"};
  std::map<std::string, std::string> fields;
  for (const char* key : keys) {
    if (!std::getline(in, line)) throw std::invalid_argument(std::string("certificate: missing field ") + key);
    const auto space = line.find(' ');
    if (space == std::string::npos || line.substr(0, space) != key) {
      throw std::invalid_argument(std::string("certificate: expected field ") + key);
    }
    fields[key] = line.substr(space + 1);
  }
  InfinitudeCertificate cert;
  if (std::getline(in, line)) {
    if (line.rfind("evidence ", 0) != 0) throw std::invalid_argument("certificate: unexpected trailing line");
    cert.evidence = line.substr(9);
  }
  cert.a = parse_rational(fields["a"]);
  cert.b = parse_rational(fields["b"]);
  cert.v = parse_u64("v", fields["v"]);
  cert.ell = parse_u64("ell", fields["ell"]);
  cert.q = parse_u64("q", fields["q"]);
  cert.lift.v = cert.v;
  const std::string& sigma = fields["sigma"];
  if (sigma != "O") {
    const auto space = sigma.find(' ');
    if (space == std::string::npos) throw std::invalid_argument("certificate: sigma needs two coordinates");
    const std::uint64_t x = parse_u64("sigma", sigma.substr(0, space));
    const std::uint64_t y = parse_u64("sigma", sigma.substr(space + 1));
    if (cert.v < 5 || cert.v >= (1ULL << 32) || !is_prime(cert.v) || x >= cert.v || y >= cert.v) {
      throw std::invalid_argument("certificate: sigma coordinates must lie in [0, v) for a prime v > 3");
    }
    cert.lift.sigma = Genus1PointFp(PrimeFieldElement(static_cast<std::int64_t>(x), cert.v),
                                    PrimeFieldElement(static_cast<std::int64_t>(y), cert.v));
  }
  cert.lift.sigma_order = parse_u64("sigma_order", fields["sigma_order"]);
  cert.det.q = cert.q;
  cert.det.ell = cert.ell;
  cert.det.det_value = parse_rational(fields["det_value"]);
  cert.det.twisted_det_value = parse_rational(fields["det_value_twisted"]);
  return cert;
}

ValidationResult validate_certificate(const InfinitudeCertificate& cert) {
  ValidationResult r;
  if (discriminant(cert.a, cert.b) == 0) {
    r.failed_check = "curve is degenerate";
    return r;
  }
  const PicardCurve c(cert.a, cert.b);
  r.failed_check = precondition_failure(c, cert.v, cert.ell, cert.q);
  if (r.failed_check.empty()) r.failed_check = claim_failure(c, cert);
  r.ok = r.failed_check.empty();
  return r;
}

}  // namespace ceresa
