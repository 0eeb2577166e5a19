#pragma once

#include "padival/digits.hpp"
#include "padival/valuation.hpp"

namespace padival {

/// v_p of the middle binomial coefficient C(2n, n):
/// (2 s_p(n) - s_p(2n)) / (p-1). n >= 0.
Valuation val_mbc(const Natural& n, const Prime& p);

/// v_p(Cat(n)) = (s_p(n) + s_p(n+1) - s_p(2n) - 1) / (p-1). n >= 0.
Valuation val_catalan(const Natural& n, const Prime& p);

/// Cat(n) is odd exactly when s_2(n+1) = 1, i.e. n+1 is a power of two.
bool catalan_is_odd(const Natural& n);

/// The extreme v_2(C(2n, n)) cases at scale k: minimal at n = 2^k (value
/// 1, since s_2(2^k) = 1) and maximal at n = 2^k - 1 (value k). Each pair
/// is verified against val_mbc before being returned.
struct MbcVal2Extremes {
  Natural min_index;
  Valuation min_value;
  Natural max_index;
  Valuation max_value;
};

MbcVal2Extremes mbc_val2_extremes(unsigned long k);  // k >= 1

}  // namespace padival
