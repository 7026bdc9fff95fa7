#include "canondeg/degrees.hpp"

#include <string>

#include "canondeg/error.hpp"
#include "canondeg/relative_ideal.hpp"

namespace canondeg {

namespace {

[[noreturn]] void mismatch(const NumericalSemigroup& h, const std::string& what) {
  throw SemigroupError(ErrorKind::InternalMismatch, h.to_string() + ": " + what);
}

// k[[t]] is Gorenstein: its canonical ideal is the unit ideal.
RelativeIdeal canonical_or_unit(const NumericalSemigroup& h) {
  return h.is_full() ? RelativeIdeal::principal(h, 0) : RelativeIdeal::canonical(h);
}

int as_int(long long v) { return static_cast<int>(v); }

}  // namespace

int canonical_degree(const NumericalSemigroup& h) {
  const RelativeIdeal k = canonical_or_unit(h);
  const int by_ideal = as_int(length_quotient(k, RelativeIdeal::principal(h, 0)));
  const int by_gaps = h.genus() - h.profile().n_of;
  if (by_ideal != by_gaps)
    mismatch(h, "lambda(K/H) = " + std::to_string(by_ideal) + " but g - n = " + std::to_string(by_gaps));
  return by_ideal;
}

int bicanonical_degree(const NumericalSemigroup& h) {
  const RelativeIdeal k = canonical_or_unit(h);
  const int by_bidual = as_int(length_quotient(bidual(k), k));
  const int by_trace = as_int(length_quotient(RelativeIdeal::principal(h, 0), trace(k)));
  if (by_bidual != by_trace)
    mismatch(h, "lambda(K**/K) = " + std::to_string(by_bidual) + " but lambda(H/tr K) = " + std::to_string(by_trace));
  return by_bidual;
}

CanonicalPowers canonical_powers(const NumericalSemigroup& h) {
  const RelativeIdeal k = canonical_or_unit(h);
  CanonicalPowers out;
  RelativeIdeal prev = RelativeIdeal::principal(h, 0);
  RelativeIdeal cur = k;
  if (cur == prev) {
    out.rho = 1;
    out.steps = {0};
    return out;
  }
  // K^j ⊆ K^{j+1} ⊆ Z>=0, so the chain stabilizes within conductor + 1 steps.
  const int limit = h.conductor() + 2;
  while (!(cur == prev)) {
    if (out.rho > limit) mismatch(h, "powers of K did not stabilize");
    out.steps.push_back(as_int(length_quotient(cur, prev)));
    ++out.rho;
    prev = cur;
    cur = product(k, cur);
  }
  for (int s : out.steps) out.e1 += s;
  out.s0 = out.e1 - out.steps.front();
  return out;
}

Comparison comparison(const NumericalSemigroup& h) {
  Comparison c;
  c.cdeg = canonical_degree(h);
  c.bideg = bicanonical_degree(h);
  c.holds = c.bideg <= c.cdeg;
  return c;
}

DegreeReport classify(const NumericalSemigroup& h) {
  const SemigroupProfile p = h.profile();
  DegreeReport r;
  r.generators = h.generators();
  r.type = p.type;
  r.multiplicity = p.multiplicity;
  r.frobenius = h.frobenius();
  r.genus = h.genus();
  r.n_of = p.n_of;
  r.cdeg = canonical_degree(h);
  r.bideg = bicanonical_degree(h);

  const CanonicalPowers pw = canonical_powers(h);
  r.rho = pw.rho;
  r.power_steps = pw.steps;
  r.e1 = pw.e1;
  r.s0 = pw.s0;
  r.agl_level = pw.s0;
  r.rho_by_convention = p.is_symmetric;

  const RelativeIdeal k = canonical_or_unit(h);
  const int residue = as_int(length_quotient(RelativeIdeal::principal(h, 0), trace(k)));
  r.is_goto = r.bideg == 1;
  r.is_nearly_gorenstein = residue == 1;
  r.is_far_flung = r.cdeg > 0 && r.bideg == r.n_of;
  r.comparison_holds = r.bideg <= r.cdeg;

  // Theorems that hold for every one-dimensional semigroup ring.
  if (r.power_steps.front() != r.cdeg) mismatch(h, "first power step differs from cdeg");
  if (r.s0 < 0) mismatch(h, "negative Sally multiplicity");
  if (r.cdeg < r.type - 1) mismatch(h, "cdeg < type - 1");
  if ((r.cdeg == 0) != (r.type == 1) || (r.bideg == 0) != (r.type == 1) || p.is_symmetric != (r.type == 1))
    mismatch(h, "Gorenstein characterizations disagree");
  if ((r.cdeg == r.type - 1) != (r.agl_level <= 1)) mismatch(h, "AGL by cdeg and by s0 disagree");
  if (r.agl_level == 1 && (r.bideg != 1 || r.rho != 2)) mismatch(h, "AGL ring that is not Goto or has rho != 2");
  if (!p.is_symmetric && r.rho < 2) mismatch(h, "non-Gorenstein ring with rho < 2");
  if (r.bideg > r.n_of) mismatch(h, "bideg exceeds n(H)");
  return r;
}

AugmentedPrediction augmented_predictions(const DegreeReport& report) {
  AugmentedPrediction a;
  if (report.genus > 0) {
    a.cdeg = 2 * report.cdeg + 2;
    a.type = 2 * report.type + 1;
  }
  if (report.type > 1) a.bideg = 2 * report.bideg - 1;
  return a;
}

AugmentedPrediction augmented_predictions(const NumericalSemigroup& h) { return augmented_predictions(classify(h)); }

MmAnalysis mm_analysis(const NumericalSemigroup& h) {
  NumericalSemigroup a = h.m_colon_m();
  MmAnalysis out{a, canonical_degree(a), bicanonical_degree(a), 0, false};
  out.predicted_cdeg = canonical_degree(h) + h.multiplicity() - 2 * h.profile().type;
  out.matches = out.predicted_cdeg == out.cdeg;
  return out;
}

}  // namespace canondeg
