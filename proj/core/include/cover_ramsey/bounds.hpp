#ifndef COVER_RAMSEY_BOUNDS_HPP
#define COVER_RAMSEY_BOUNDS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cover_ramsey/exact.hpp"

namespace cover_ramsey {

/// Evaluation of one named formula. `exact` is set for every formula that
/// has a rational value; `decimal` is always filled for display.
struct BoundReport {
  std::string formula_id;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::optional<Rational> exact;
  std::string decimal;
  std::optional<bool> satisfied;
  std::vector<std::string> notes;
};

/// Structured text record, one "key: value" line each.
std::string render(const BoundReport& report);

/// ceil(k^3 r^3 / 12).
BigInt thm1_value(std::size_t k, std::size_t r);

/// k^3 s^3 / 12 >= 3 (C(k,3) + 1)(C(s,3) + 1).
bool thm1_sufficiency(std::size_t k, std::size_t s);

/// Requires k >= 2 and r >= 2. `satisfied` carries the sufficiency check at s = r.
BoundReport thm1_upper_bound(std::size_t k, std::size_t r);

/// 3 C(k,3) C(s,3) / (n - 2); requires n >= 3.
Rational scatter_failure_bound(std::size_t n, std::size_t s, std::size_t k);
BoundReport scatter_bound_report(std::size_t n, std::size_t s, std::size_t k);

/// e C(t,2) C(k,2) C(n-2,t-2) 2^(1 - C(t,2)) with e replaced by `e_bound`.
Rational lll_lhs(std::size_t n, std::size_t t, std::size_t k, const Rational& e_bound = e_upper_bound());

/// lll_lhs(...) < 1, decided in integer arithmetic. Requires n >= t >= 3, k >= 2.
bool lll_inequality_holds(std::size_t n, std::size_t t, std::size_t k,
                          const Rational& e_bound = e_upper_bound());
BoundReport lll_inequality(std::size_t n, std::size_t t, std::size_t k);

/// Largest n for which the inequality holds; with `admissible_only` the
/// largest such n with n = k (mod k(k-1)). Throws kNoValidN when none is >= t.
std::size_t lll_threshold_n(std::size_t t, std::size_t k, bool admissible_only = false);
BoundReport lll_threshold_report(std::size_t t, std::size_t k, bool admissible_only = false);

/// (sqrt 2 / e) t 2^(t/2) as a decimal string with `digits` significant digits.
std::string asymptotic_lower(std::size_t t, int digits = 12);
double asymptotic_lower_value(std::size_t t);
BoundReport asymptotic_report(std::size_t t);

/// Known two-color Ramsey numbers R(K_s, K_t) for small s, t.
std::optional<std::size_t> known_classical_ramsey(std::size_t s, std::size_t t);

}  // namespace cover_ramsey

#endif  // COVER_RAMSEY_BOUNDS_HPP
