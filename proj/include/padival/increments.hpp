#pragma once

#include "padival/digits.hpp"
#include "padival/valuation.hpp"

#include <cstdint>

namespace padival {

// Every increment operation below evaluates both its definitional route
// (a difference of two evaluations) and its closed-form route, and throws
// inconsistency_error if they disagree.

/// Delta s_p(n) = s_p(n+1) - s_p(n); closed form 1 - (p-1) v_p(n+1).
/// n = 0 is admitted (s_p(0) = 0 makes the closed form hold there too).
mpz_class delta_weight(const Natural& n, const Prime& p);

/// Delta v_p(n!) = v_p((n+1)!) - v_p(n!); closed form
/// (1 - Delta s_p(n)) / (p-1). n >= 1.
mpz_class delta_val_factorial(const Natural& n, const Prime& p);

/// v_p(n) recovered from a weight increment: (1 - Delta s_p(n-1)) / (p-1),
/// asserted equal to the trial-division valuation. n >= 1.
Valuation val_via_delta(const Natural& n, const Prime& p);

/// Delta v_p(n) = v_p(n+1) - v_p(n); digit route
/// (Delta s_p(n-1) - Delta s_p(n)) / (p-1). n >= 1.
mpz_class delta_val(const Natural& n, const Prime& p);

/// Delta s_p(kn - 1) for p not dividing k; equals Delta s_p(n-1) and
/// 1 - (p-1) v_p(n). Rejects p | k. k, n >= 1.
mpz_class delta_weight_scaled(const Natural& k, const Natural& n,
                              const Prime& p);

/// Group increment: s_p(n+k) - s_p(n), asserted equal to the telescoped
/// sum of k single increments and to k - (p-1) * sum_{j=1..k} v_p(n+j).
/// k >= 1 counts steps, so it is a machine word.
mpz_class group_delta_weight(const Natural& n, std::uint64_t k,
                             const Prime& p);

/// One row of increment data at n; satisfies
/// delta_weight + (p-1) v_p(n+1) = 1. n >= 1.
struct IncrementReport {
  Natural n;
  Natural p;
  mpz_class delta_weight;
  mpz_class delta_val_factorial;
  mpz_class delta_val;
};

IncrementReport increment_report(const Natural& n, const Prime& p);

}  // namespace padival
