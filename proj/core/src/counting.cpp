#include "kunzcount/counting.hpp"

#include <stdexcept>

#include "checked.hpp"

namespace kunzcount {

namespace {

// The quasi-polynomial pieces below mix squares of floor terms that grow like
// (2g/5)^2, so partial sums stay well inside int64 for g up to this bound.
constexpr Int kMaxClosedFormGenus = 100'000'000;

void require_genus(Int g) {
  if (g < 0) throw std::invalid_argument("genus must be nonnegative");
}

void require_closed_form_range(Int g) {
  require_genus(g);
  if (g > kMaxClosedFormGenus) {
    throw std::overflow_error("closed form evaluated outside its exact integer range");
  }
}

Int sq(Int x) { return checked::mul(x, x); }

// All coefficients have denominator dividing 8; formulas below compute the
// value scaled by 8 and this projects back, insisting on integrality.
Int unscale8(Int v8) {
  if (v8 % 8 != 0) throw std::logic_error("quasi-polynomial evaluated to a non-integer");
  return v8 / 8;
}

// Frobenius congruent with 1 mod 4. Quasi-polynomial regime from g = 10.
Int mult4_residue1(Int g) {
  if (g < 4) return 0;
  if (g == 4) return 1;
  if (g == 9) return 5;
  const Int q2 = g / 2;
  const Int a13 = (g + 1) / 3;
  if (g <= 8) {
    return unscale8((22 - 4 * g) * q2 + 8 * (g - 8) * a13 + g * g - 9 * g + 72);
  }
  const Int a15 = (g + 1) / 5;
  const Int a26 = (g + 2) / 6;
  const Int b245 = (2 * g + 4) / 5;
  const Int v8 = 8 * sq(a15) - 12 * sq(a13) - 12 * sq(a26) - 8 * sq(b245)
               + (10 - 4 * g) * q2 + 8 * a15 + (8 * g - 4) * a13 + (8 * q2 - 4) * a26
               + 8 * (g + 1 - a15) * b245 - g * g - 7 * g;
  return unscale8(v8);
}

// Frobenius congruent with 2 mod 4. Quasi-polynomial regime from g = 8.
Int mult4_residue2(Int g) {
  if (g < 4) return 0;
  if (g <= 5) return 1;
  if (g <= 7) {
    return unscale8(8 * (7 - g) * ((2 * g + 1) / 5) - 2 * g * g + 50 * g - 236);
  }
  const Int q2 = g / 2;
  const Int q3 = g / 3;
  const Int q4 = g / 4;
  const Int q5 = g / 5;
  const Int b25 = 2 * g / 5;
  const Int a25 = (g + 2) / 5;
  const Int a24 = (g + 2) / 4;
  const Int b251 = (2 * g + 1) / 5;
  const Int v8 = -8 * sq(q5) + 8 * sq(q4) - 12 * sq(q3) + 8 * sq(b25) - 8 * sq(a25)
               + 8 * sq(a24) + 8 * sq(b251)
               - 8 * q5 + (8 * g - 12) * q3 + 8 * (1 - g) * b25 + 8 * q4 * (1 - q2)
               + (4 * g - 2) * q2 + 8 * b25 * a25 - 8 * q2 * a24
               + 8 * (q5 - g + 1) * b251 + g * g - g;
  return unscale8(v8);
}

// Frobenius congruent with 3 mod 4. Quasi-polynomial regime from g = 7.
Int mult4_residue3(Int g) {
  if (g < 3) return 0;
  if (g == 3) return 1;
  if (g <= 5) return unscale8(-84 + 35 * g - 3 * g * g);
  if (g == 6) return 3;
  const Int q2 = g / 2;
  const Int q5 = g / 5;
  const Int b25 = 2 * g / 5;
  const Int a23 = (g + 2) / 3;
  const Int a56 = (g + 5) / 6;
  const Int v8 = 8 * sq(q5) - 8 * sq(b25) - 12 * sq(a23) - 12 * sq(a56)
               + 8 * q5 + 8 * (g - 1 - q5) * b25 + (4 * g - 6) * q2
               + (8 * g + 4) * a23 + (8 * g + 4 - 8 * q2) * a56 - 5 * g * g + 5 * g;
  return unscale8(v8);
}

}  // namespace

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::closed_form: return "closed_form";
    case CountMethod::enumeration: return "enumeration";
    case CountMethod::partition: return "partition";
    case CountMethod::residue_sum: return "residue_sum";
  }
  throw std::invalid_argument("unknown count method");
}

CountReport count_enumerated(Int m, Int g, int threads) {
  return CountReport{m, g, CountMethod::enumeration, count_kunz(m, g, threads)};
}

Int count_mult2(Int g) {
  require_genus(g);
  return g == 0 ? 0 : 1;
}

Int count_mult3_closed(Int g) {
  require_genus(g);
  return g < 2 ? 0 : g / 3 + 1;
}

Int count_mult4_residue(Int g, Int r) {
  require_closed_form_range(g);
  switch (r) {
    case 1: return mult4_residue1(g);
    case 2: return mult4_residue2(g);
    case 3: return mult4_residue3(g);
    default: throw std::invalid_argument("Frobenius residue mod 4 must be 1, 2 or 3");
  }
}

Int count_mult4_closed(Int g) {
  require_closed_form_range(g);
  static constexpr Int kSmall[] = {0, 0, 0, 1, 3, 4, 6, 7, 9, 11};
  if (g <= 9) return kSmall[g];
  const Int q2 = g / 2;
  const Int q3 = g / 3;
  const Int q4 = g / 4;
  const Int q5 = g / 5;
  const Int a13 = (g + 1) / 3;
  const Int a15 = (g + 1) / 5;
  const Int a23 = (g + 2) / 3;
  const Int a24 = (g + 2) / 4;
  const Int a25 = (g + 2) / 5;
  const Int a26 = (g + 2) / 6;
  const Int a56 = (g + 5) / 6;
  const Int b25 = 2 * g / 5;
  const Int b251 = (2 * g + 1) / 5;
  const Int b254 = (2 * g + 4) / 5;
  const Int v8 = 8 * sq(q4) - 12 * sq(q3) + 8 * sq(a15) - 12 * sq(a13) - 12 * sq(a26)
               - 8 * sq(a25) + 8 * sq(a24) - 12 * sq(a23) - 12 * sq(a56)
               + 8 * sq(b251) - 8 * sq(b254)
               + (8 * g - 12) * q3 - 8 * q5 * b25 + 8 * q4 * (1 - q2) + (2 + 4 * g) * q2
               + 8 * a15 + (8 * g - 4) * a13 + (8 * q2 - 4) * a26 + 8 * b25 * a25
               - 8 * q2 * a24 + (8 * g + 4) * a23 + (8 * g + 4 - 8 * q2) * a56
               + (8 * q5 - 8 * g + 8) * b251 + (8 * g + 8 - 8 * a15) * b254
               - 5 * g * g - 3 * g;
  return unscale8(v8);
}

Int partition_count_enumerated(Int n) {
  if (n < 0) throw std::invalid_argument("partition argument must be nonnegative");
  Int count = 0;
  for (Int x = 2; 3 * x <= n; ++x) {
    for (Int y = std::max<Int>(x, 3); x + 2 * y <= n; ++y) {
      const Int z = n - x - y;
      if (z >= y && z >= 4) ++count;
    }
  }
  return count;
}

Int partition_count_closed(Int n) {
  if (n < 0) throw std::invalid_argument("partition argument must be nonnegative");
  if (n > kMaxClosedFormGenus) {
    throw std::overflow_error("closed form evaluated outside its exact integer range");
  }
  if (n < 9) return 0;
  if (n == 9) return 1;
  if (n <= 12) return (n - 12) + n / 2;
  const Int a3 = (n + 2) / 3;
  const Int v8 = 12 * sq(a3) + 4 * (n / 2) + (-8 * n - 12) * a3 + 2 * n * n - 2 * n;
  return unscale8(v8);
}

Int count_mult5_enumerated(Int g) {
  return count_kunz(5, g);
}

std::optional<Int> WindowMonotonicityResult::violation_window() const {
  if (!first_violation) return std::nullopt;
  const Int g = *first_violation;
  return g >= 0 ? g / period : (g - period + 1) / period;
}

WindowMonotonicityResult verify_nondecreasing(const std::function<Int(Int)>& f,
                                              Int g0, Int g1, Int period) {
  if (period < 1) throw std::invalid_argument("period must be positive");
  if (g0 > g1) throw std::invalid_argument("empty verification range");
  WindowMonotonicityResult result{period, g0, g1, true, std::nullopt};
  Int prev = f(g0);
  for (Int g = g0; g < g1; ++g) {
    const Int next = f(g + 1);
    if (prev > next) {
      result.ok = false;
      result.first_violation = g;
      return result;
    }
    prev = next;
  }
  return result;
}

}  // namespace kunzcount
