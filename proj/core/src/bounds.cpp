#include "cover_ramsey/bounds.hpp"

#include <ios>
#include <map>
#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "cover_ramsey/error.hpp"

namespace cover_ramsey {

namespace mp = boost::multiprecision;
using Decimal = mp::cpp_dec_float_50;

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  BigInt out = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    out *= n - r + i;
    out /= i;
  }
  return out;
}

Rational e_upper_bound() {
  return Rational(BigInt("27182818284590453"), BigInt("10000000000000000"));
}

std::string to_fraction_string(const Rational& value) {
  const BigInt num = mp::numerator(value);
  const BigInt den = mp::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal_string(const Rational& value, int digits) {
  const Decimal d = Decimal(mp::numerator(value)) / Decimal(mp::denominator(value));
  return d.str(digits, std::ios_base::fmtflags(0));
}

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

BoundReport make_report(std::string id, std::vector<std::pair<std::string, std::string>> inputs) {
  BoundReport r;
  r.formula_id = std::move(id);
  r.inputs = std::move(inputs);
  return r;
}

void set_exact(BoundReport& r, const Rational& v) {
  r.exact = v;
  r.decimal = to_decimal_string(v);
}

const char* kENote = "e replaced by the rational upper bound 27182818284590453/10^16";

}  // namespace

std::string render(const BoundReport& report) {
  std::ostringstream out;
  out << "formula: " << report.formula_id << "\n";
  for (const auto& [key, value] : report.inputs) out << "input " << key << ": " << value << "\n";
  if (report.exact) out << "value: " << to_fraction_string(*report.exact) << "\n";
  out << "approx: " << report.decimal << "\n";
  if (report.satisfied) out << "satisfied: " << (*report.satisfied ? "true" : "false") << "\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  return out.str();
}

BigInt thm1_value(std::size_t k, std::size_t r) {
  const BigInt product = BigInt(k) * k * k * r * r * r;
  return (product + 11) / 12;
}

bool thm1_sufficiency(std::size_t k, std::size_t s) {
  const BigInt lhs = BigInt(k) * k * k * s * s * s;
  const BigInt rhs = 36 * (binomial(k, 3) + 1) * (binomial(s, 3) + 1);
  return lhs >= rhs;
}

BoundReport thm1_upper_bound(std::size_t k, std::size_t r) {
  if (k < 2 || r < 2) fail(ErrorCode::kPrecondition, "thm1 needs k >= 2 and r >= 2");
  auto report = make_report("thm1-upper", {{"k", num(k)}, {"r", num(r)}});
  set_exact(report, Rational(thm1_value(k, r)));
  report.satisfied = thm1_sufficiency(k, r);
  report.notes.push_back("value = ceil(k^3 r^3 / 12)");
  report.notes.push_back("satisfied = [k^3 s^3 / 12 >= 3 (C(k,3)+1)(C(s,3)+1)] at s = r");
  return report;
}

Rational scatter_failure_bound(std::size_t n, std::size_t s, std::size_t k) {
  if (n < 3) fail(ErrorCode::kPrecondition, "scatter bound needs n >= 3");
  return Rational(3 * binomial(k, 3) * binomial(s, 3), BigInt(n - 2));
}

BoundReport scatter_bound_report(std::size_t n, std::size_t s, std::size_t k) {
  auto report = make_report("scatter-union-bound", {{"n", num(n)}, {"s", num(s)}, {"k", num(k)}});
  const Rational v = scatter_failure_bound(n, s, k);
  set_exact(report, v);
  report.satisfied = v < 1;
  report.notes.push_back("value = 3 C(k,3) C(s,3) / (n - 2); satisfied = [value < 1]");
  return report;
}

namespace {

void check_lll_args(std::size_t n, std::size_t t, std::size_t k) {
  if (t < 3 || n < t || k < 2) fail(ErrorCode::kPrecondition, "LLL inequality needs n >= t >= 3 and k >= 2");
}

}  // namespace

Rational lll_lhs(std::size_t n, std::size_t t, std::size_t k, const Rational& e_bound) {
  check_lll_args(n, t, k);
  const std::size_t pairs = t * (t - 1) / 2;
  const BigInt numer = 2 * binomial(t, 2) * binomial(k, 2) * binomial(n - 2, t - 2);
  return e_bound * Rational(numer, BigInt(1) << pairs);
}

bool lll_inequality_holds(std::size_t n, std::size_t t, std::size_t k, const Rational& e_bound) {
  check_lll_args(n, t, k);
  const std::size_t pairs = t * (t - 1) / 2;
  const BigInt lhs = mp::numerator(e_bound) * 2 * binomial(t, 2) * binomial(k, 2) * binomial(n - 2, t - 2);
  const BigInt rhs = mp::denominator(e_bound) << pairs;
  return lhs < rhs;
}

BoundReport lll_inequality(std::size_t n, std::size_t t, std::size_t k) {
  auto report = make_report("lll", {{"n", num(n)}, {"t", num(t)}, {"k", num(k)}});
  set_exact(report, lll_lhs(n, t, k));
  report.satisfied = lll_inequality_holds(n, t, k);
  report.notes.push_back("value = e C(t,2) C(k,2) C(n-2,t-2) 2^(1-C(t,2)); satisfied = [value < 1]");
  report.notes.push_back(kENote);
  return report;
}

std::size_t lll_threshold_n(std::size_t t, std::size_t k, bool admissible_only) {
  if (t < 3 || k < 2) fail(ErrorCode::kPrecondition, "threshold search needs t >= 3 and k >= 2");
  if (!lll_inequality_holds(t, t, k)) {
    fail(ErrorCode::kNoValidN, "LLL inequality fails already at n = t = " + num(t));
  }
  // Downward closed in n: double until it fails, then bisect.
  std::size_t lo = t;
  std::size_t hi = 2 * t;
  while (lll_inequality_holds(hi, t, k)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (lll_inequality_holds(mid, t, k) ? lo : hi) = mid;
  }
  if (!admissible_only) return lo;
  const std::size_t modulus = k * (k - 1);
  if (lo < k) fail(ErrorCode::kNoValidN, "no n = k (mod k(k-1)) below the threshold");
  const std::size_t n = lo - (lo - k) % modulus;
  if (n < t) {
    fail(ErrorCode::kNoValidN, "no n >= t with n = " + num(k) + " (mod " + num(modulus) + ") satisfies the inequality");
  }
  return n;
}

BoundReport lll_threshold_report(std::size_t t, std::size_t k, bool admissible_only) {
  auto report = make_report("lll-threshold", {{"t", num(t)}, {"k", num(k)},
                                              {"admissible_only", admissible_only ? "true" : "false"}});
  const std::size_t n = lll_threshold_n(t, k, admissible_only);
  set_exact(report, Rational(n));
  report.satisfied = true;
  report.notes.push_back("value = largest n with the LLL inequality satisfied" +
                         std::string(admissible_only ? " and n = k (mod k(k-1))" : ""));
  report.notes.push_back("asymptote (sqrt2/e) t 2^(t/2) = " + asymptotic_lower(t));
  report.notes.push_back(kENote);
  return report;
}

namespace {

Decimal asymptote(std::size_t t) {
  const Decimal two = 2;
  return mp::sqrt(two) / mp::exp(Decimal(1)) * Decimal(t) * mp::pow(two, Decimal(t) / 2);
}

}  // namespace

std::string asymptotic_lower(std::size_t t, int digits) {
  return asymptote(t).str(digits, std::ios_base::fmtflags(0));
}

double asymptotic_lower_value(std::size_t t) { return asymptote(t).convert_to<double>(); }

BoundReport asymptotic_report(std::size_t t) {
  if (t < 1) fail(ErrorCode::kPrecondition, "asymptote needs t >= 1");
  auto report = make_report("asymptotic-lower", {{"t", num(t)}});
  report.decimal = asymptotic_lower(t);
  report.notes.push_back("value = (sqrt2/e) t 2^(t/2), display only");
  return report;
}

std::optional<std::size_t> known_classical_ramsey(std::size_t s, std::size_t t) {
  if (s > t) std::swap(s, t);
  if (s == 0) return std::nullopt;
  if (s == 1) return 1;
  if (s == 2) return t;
  static const std::map<std::pair<std::size_t, std::size_t>, std::size_t> table{
      {{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14}, {{3, 6}, 18}, {{3, 7}, 23},
      {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25},
  };
  const auto it = table.find({s, t});
  if (it == table.end()) return std::nullopt;
  return it->second;
}

}  // namespace cover_ramsey
