#include "padival/verify.hpp"

#include "padival/digits.hpp"
#include "padival/errors.hpp"
#include "padival/increments.hpp"
#include "padival/odd_factorial.hpp"
#include "padival/oracle.hpp"
#include "padival/special.hpp"
#include "padival/valuations.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace padival::verify {
namespace {

struct Shard {
  std::uint64_t checked = 0;
  std::vector<Failure> failures;
};

void merge_into(Shard& into, Shard&& from) {
  into.checked += from.checked;
  into.failures.insert(into.failures.end(),
                       std::make_move_iterator(from.failures.begin()),
                       std::make_move_iterator(from.failures.end()));
}

unsigned thread_count(const Options& opts) {
  unsigned t = opts.threads ? opts.threads : std::thread::hardware_concurrency();
  return t ? t : 1;
}

// Splits [lo, hi] into contiguous chunks and runs body(chunk_lo, chunk_hi,
// shard) on up to `threads` workers; shards merge in chunk order, so the
// result is independent of scheduling.
Shard parallel_sweep(
    std::uint64_t lo, std::uint64_t hi, unsigned threads,
    const std::function<void(std::uint64_t, std::uint64_t, Shard&)>& body) {
  Shard merged;
  if (lo > hi) return merged;
  const std::uint64_t count = hi - lo + 1;
  const auto workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
  if (workers <= 1) {
    body(lo, hi, merged);
    return merged;
  }
  std::vector<Shard> shards(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = count / workers;
  const std::uint64_t extra = count % workers;
  std::uint64_t begin = lo;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t len = chunk + (w < extra ? 1 : 0);
    const std::uint64_t end = begin + len - 1;
    pool.emplace_back(
        [&body, &shards, w, begin, end] { body(begin, end, shards[w]); });
    begin = end + 1;
  }
  for (auto& t : pool) t.join();
  for (auto& s : shards) merge_into(merged, std::move(s));
  return merged;
}

std::vector<unsigned long> primes_for(const Options& opts, bool odd_only,
                                      std::vector<unsigned long> defaults) {
  if (!opts.prime) return defaults;
  detail::require_arg(is_prime(*opts.prime),
                      "p must be prime, got " + opts.prime->get_str());
  detail::require_arg(!odd_only || *opts.prime != 2,
                      "this identity is stated for odd primes only");
  return {to_uint64(*opts.prime)};
}

std::uint64_t resolved_n_hi(const Options& opts, std::uint64_t def) {
  if (opts.n_hi) return *opts.n_hi;
  return opts.cap ? std::min(def, *opts.cap) : def;
}

std::uint64_t resolved_n_lo(const Options& opts, std::uint64_t def) {
  return opts.n_lo ? std::max(def, *opts.n_lo) : def;
}

std::string describe_grid(const std::vector<unsigned long>& primes,
                          std::uint64_t lo, std::uint64_t hi,
                          const std::string& extra = {}) {
  std::ostringstream os;
  if (primes.size() == 1) {
    os << "p=" << primes.front();
  } else {
    os << "p in {";
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (i) os << ",";
      os << primes[i];
    }
    os << "}";
  }
  os << ", n in " << lo << ".." << hi;
  if (!extra.empty()) os << ", " << extra;
  return os.str();
}

Failure make_failure(const Natural& p, const Natural& n, std::string lhs,
                     std::string rhs) {
  return Failure{{{"p", p}, {"n", n}}, std::move(lhs), std::move(rhs)};
}

Failure make_failure_k(const Natural& p, const Natural& n, const Natural& k,
                       std::string lhs, std::string rhs) {
  return Failure{{{"p", p}, {"n", n}, {"k", k}}, std::move(lhs),
                 std::move(rhs)};
}

// Sweeps n in [lo, hi] for each prime; check(p, n, shard) does its own
// checked-counting so one n may contribute several tuples.
Report sweep_primes_n(
    const Options& opts, bool odd_only, std::vector<unsigned long> defaults,
    std::uint64_t def_lo, std::uint64_t def_hi,
    const std::function<void(const Prime&, std::uint64_t, Shard&)>& check,
    const std::string& grid_extra = {}) {
  Report report;
  const auto primes = primes_for(opts, odd_only, std::move(defaults));
  const std::uint64_t lo = resolved_n_lo(opts, def_lo);
  const std::uint64_t hi = resolved_n_hi(opts, def_hi);
  detail::require_arg(lo <= hi, "empty n range");
  report.grid = describe_grid(primes, lo, hi, grid_extra);
  for (unsigned long pv : primes) {
    const Prime p(pv);
    Shard s = parallel_sweep(
        lo, hi, thread_count(opts),
        [&check, &p](std::uint64_t a, std::uint64_t b, Shard& shard) {
          for (std::uint64_t n = a; n <= b; ++n) check(p, n, shard);
        });
    report.checked += s.checked;
    report.failures.insert(report.failures.end(),
                           std::make_move_iterator(s.failures.begin()),
                           std::make_move_iterator(s.failures.end()));
  }
  return report;
}

// Runs fn(p, shard) once per prime, primes in parallel (for sweeps that
// carry sequential state such as running oracle sums).
Report sweep_primes_whole(
    const Options& opts, bool odd_only, std::vector<unsigned long> defaults,
    std::uint64_t lo, std::uint64_t hi,
    const std::function<void(const Prime&, std::uint64_t, std::uint64_t,
                             Shard&)>& fn,
    const std::string& grid_extra = {}) {
  Report report;
  const auto primes = primes_for(opts, odd_only, std::move(defaults));
  detail::require_arg(lo <= hi, "empty n range");
  report.grid = describe_grid(primes, lo, hi, grid_extra);
  std::vector<Shard> shards(primes.size());
  std::vector<std::thread> pool;
  pool.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    pool.emplace_back([&, i] {
      const Prime p(primes[i]);
      fn(p, lo, hi, shards[i]);
    });
  }
  for (auto& t : pool) t.join();
  for (auto& s : shards) {
    report.checked += s.checked;
    report.failures.insert(report.failures.end(),
                           std::make_move_iterator(s.failures.begin()),
                           std::make_move_iterator(s.failures.end()));
  }
  return report;
}

const std::vector<unsigned long> kAllPrimes = {2, 3, 5, 7, 11, 13};
const std::vector<unsigned long> kOddPrimes = {3, 5, 7, 11, 13};
const std::vector<unsigned long> kSpecialPrimes = {2, 3, 5, 7};

// --- identity implementations -------------------------------------------

Report run_eq_1_11(const Options& opts) {
  return sweep_primes_n(
      opts, false, kAllPrimes, 1, 100000,
      [](const Prime& p, std::uint64_t n, Shard& shard) {
        ++shard.checked;
        const auto [vpart, wpart] = split(Natural(n), p);
        if (vpart + wpart != n) {
          shard.failures.push_back(make_failure(
              p.value(), Natural(n), Natural(vpart + wpart).get_str(),
              Natural(n).get_str()));
          return;
        }
        const Natural direct =
            (p.value() - 1) * val_factorial_direct(Natural(n), p).value();
        if (vpart != direct) {
          shard.failures.push_back(make_failure(
              p.value(), Natural(n), vpart.get_str(), direct.get_str()));
        }
      });
}

Report run_eq_5_1(const Options& opts) {
  return sweep_primes_n(
      opts, false, kAllPrimes, 0, 100000,
      [](const Prime& p, std::uint64_t n, Shard& shard) {
        ++shard.checked;
        const Natural nn(n);
        const mpz_class lhs = weight(nn + 1, p) - weight(nn, p) +
                              (p.value() - 1) * val(nn + 1, p).value();
        if (lhs != 1) {
          shard.failures.push_back(
              make_failure(p.value(), nn, lhs.get_str(), "1"));
        }
      });
}

Report run_eq_5_2(const Options& opts) {
  return sweep_primes_n(
      opts, false, kAllPrimes, 1, 100000,
      [](const Prime& p, std::uint64_t n, Shard& shard) {
        ++shard.checked;
        const Natural nn(n);
        const mpz_class ds_n = weight(nn + 1, p) - weight(nn, p);
        const mpz_class ds_n1 = weight(nn + 2, p) - weight(nn + 1, p);
        const mpz_class dv_n1 =
            val(nn + 2, p).value() - val(nn + 1, p).value();
        const mpz_class lhs = ds_n - ds_n1 - (p.value() - 1) * dv_n1;
        if (lhs != 0) {
          shard.failures.push_back(
              make_failure(p.value(), nn, lhs.get_str(), "0"));
        }
      });
}

Report run_eq_1_12(const Options& opts) {
  return sweep_primes_n(
      opts, false, kAllPrimes, 1, 10000,
      [](const Prime& p, std::uint64_t n, Shard& shard) {
        ++shard.checked;
        const Natural nn(n);
        const mpz_class lhs =
            (p.value() - 1) * (val_factorial_direct(nn + 1, p).value() -
                               val_factorial_direct(nn, p).value());
        const mpz_class rhs = 1 - (weight(nn + 1, p) - weight(nn, p));
        if (lhs != rhs) {
          shard.failures.push_back(
              make_failure(p.value(), nn, lhs.get_str(), rhs.get_str()));
        }
      });
}

Report run_eq_3_3(const Options& opts) {
  return sweep_primes_n(
      opts, true, kOddPrimes, 1, 3000,
      [](const Prime& p, std::uint64_t n, Shard& shard) {
        ++shard.checked;
        const Natural nn(n);
        const Valuation log_form =
            val_oddfact_log_form(OddNatural::from_index(nn), p);
        const Valuation direct = val_oddfact_direct(nn, p);
        if (log_form != direct) {
          shard.failures.push_back(make_failure(p.value(), nn,
                                                log_form.str(),
                                                direct.str()));
        }
      });
}

Report run_oddfact_routes(const Options& opts) {
  return sweep_primes_n(
      opts, true, kOddPrimes, 1, 3000,
      [](const Prime& p, std::uint64_t n, Shard& shard) {
        ++shard.checked;
        const Natural nn(n);
        const Valuation direct = val_oddfact_direct(nn, p);
        const Valuation alt = val_oddfact_alt(nn, p);
        const Valuation alt2 = val_oddfact_alt2(nn, p);
        if (!(direct == alt && alt == alt2)) {
          shard.failures.push_back(make_failure(
              p.value(), nn, direct.str(),
              alt.str() + " / " + alt2.str()));
        }
      });
}

Report run_eq_3_7(const Options& opts) {
  return sweep_primes_n(
      opts, true, kOddPrimes, 1, 10000,
      [](const Prime& p, std::uint64_t n, Shard& shard) {
        ++shard.checked;
        const Natural nn(n);
        const mpz_class lhs = weight(nn, p) - weight(nn - 1, p);
        const mpz_class rhs = weight(2 * nn, p) - weight(2 * nn - 1, p);
        if (lhs != rhs) {
          shard.failures.push_back(
              make_failure(p.value(), nn, lhs.get_str(), rhs.get_str()));
        }
      });
}

Report run_thm_4(const Options& opts) {
  const std::uint64_t k_max = opts.k_max ? *opts.k_max : 50;
  detail::require_arg(k_max >= 1, "k bound must be at least 1");
  return sweep_primes_n(
      opts, false, kAllPrimes, 1, 2000,
      [k_max](const Prime& p, std::uint64_t n, Shard& shard) {
        const Natural nn(n);
        const mpz_class base = weight(nn, p) - weight(nn - 1, p);
        const mpz_class closed =
            1 - (p.value() - 1) * val(nn, p).value();
        for (std::uint64_t k = 1; k <= k_max; ++k) {
          if (Natural(k) % p.value() == 0) continue;
          ++shard.checked;
          const Natural kn = Natural(k) * nn;
          const mpz_class scaled = weight(kn, p) - weight(kn - 1, p);
          if (scaled != base || base != closed) {
            shard.failures.push_back(make_failure_k(
                p.value(), nn, Natural(k), scaled.get_str(),
                base.get_str()));
          }
        }
      },
      "k in 1.." + std::to_string(k_max) + " with p not dividing k");
}

// Deterministic sample: dense at the start of the axis, strided beyond.
std::vector<std::uint64_t> sampled_axis(std::uint64_t dense_to,
                                        std::uint64_t lo, std::uint64_t hi,
                                        std::uint64_t stride) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = lo; v <= hi && v <= dense_to; ++v) out.push_back(v);
  std::uint64_t v = std::max(dense_to + stride, lo > dense_to ? lo : 0);
  for (; v <= hi; v += stride) out.push_back(v);
  return out;
}

Report run_group_increments(const Options& opts) {
  Report report;
  const auto primes = primes_for(opts, false, kAllPrimes);
  const std::uint64_t n_lo = resolved_n_lo(opts, 0);
  const std::uint64_t n_hi = resolved_n_hi(opts, 10000);
  detail::require_arg(n_lo <= n_hi, "empty n range");
  const std::uint64_t k_max = opts.k_max ? *opts.k_max : 100;
  detail::require_arg(k_max >= 1, "k bound must be at least 1");
  const auto ns = sampled_axis(32, n_lo, n_hi, 97);
  const auto ks = sampled_axis(16, 1, k_max, 7);
  report.grid =
      describe_grid(primes, n_lo, n_hi,
                    "sampled, k sampled in 1.." + std::to_string(k_max));
  for (unsigned long pv : primes) {
    const Prime p(pv);
    Shard s = parallel_sweep(
        0, ns.size() - 1, thread_count(opts),
        [&](std::uint64_t a, std::uint64_t b, Shard& shard) {
          for (std::uint64_t i = a; i <= b; ++i) {
            const Natural n(ns[i]);
            for (std::uint64_t k : ks) {
              ++shard.checked;
              const mpz_class direct = weight(n + Natural(k), p) - weight(n, p);
              mpz_class telescoped = 0;
              mpz_class val_sum = 0;
              for (std::uint64_t j = 0; j < k; ++j) {
                telescoped +=
                    weight(n + Natural(j + 1), p) - weight(n + Natural(j), p);
                val_sum += val(n + Natural(j + 1), p).value();
              }
              const mpz_class via_vals =
                  Natural(k) - (p.value() - 1) * val_sum;
              if (direct != telescoped || direct != via_vals) {
                shard.failures.push_back(make_failure_k(
                    p.value(), n, Natural(k), direct.get_str(),
                    telescoped.get_str() + " / " + via_vals.get_str()));
              }
            }
          }
        });
    report.checked += s.checked;
    report.failures.insert(report.failures.end(),
                           std::make_move_iterator(s.failures.begin()),
                           std::make_move_iterator(s.failures.end()));
  }
  return report;
}

Report run_eq_4_1(const Options& opts) {
  Report report;
  const std::uint64_t lo = resolved_n_lo(opts, 0);
  const std::uint64_t hi = resolved_n_hi(opts, 200);
  detail::require_arg(lo <= hi, "empty n range");
  report.grid = "n in " + std::to_string(lo) + ".." + std::to_string(hi) +
                " (prime-free)";
  for (std::uint64_t n = lo; n <= hi; ++n) {
    ++report.checked;
    const auto mbc = oracle::oracle_product(oracle::ProductKind::mbc, n);
    const auto cat = oracle::oracle_product(oracle::ProductKind::catalan, n);
    if (mbc.value != (Natural(n) + 1) * cat.value) {
      report.failures.push_back(
          Failure{{{"n", Natural(n)}},
                  mbc.value.get_str(),
                  Natural((Natural(n) + 1) * cat.value).get_str()});
    }
  }
  return report;
}

Report run_mbc_catalan_p2(const Options& opts) {
  if (opts.prime) {
    detail::require_arg(*opts.prime == 2,
                        "mbc-catalan-p2 is a p = 2 specialization");
  }
  return sweep_primes_n(
      opts, false, {2}, 0, 10000,
      [](const Prime& p, std::uint64_t n, Shard& shard) {
        ++shard.checked;
        const Natural nn(n);
        const Valuation mbc = val_mbc(nn, p);
        const Valuation cat = val_catalan(nn, p);
        const Natural s_n = weight(nn, p);
        const mpz_class cat_expect = weight(nn + 1, p) - 1;
        const bool mbc_ok = mbc.value() == s_n;
        const bool cat_ok = cat.value() == cat_expect;
        const bool even_ok = n == 0 || mbc.value() >= 1;
        if (!mbc_ok || !cat_ok || !even_ok) {
          shard.failures.push_back(make_failure(
              p.value(), nn, mbc.str() + " / " + cat.str(),
              s_n.get_str() + " / " + cat_expect.get_str()));
        }
      });
}

Report run_oracle_factorial(const Options& opts) {
  const std::uint64_t lo = resolved_n_lo(opts, 0);
  const std::uint64_t hi = resolved_n_hi(opts, 2000);
  return sweep_primes_whole(
      opts, false, kAllPrimes, lo, hi,
      [](const Prime& p, std::uint64_t a, std::uint64_t b, Shard& shard) {
        // Oracle sum_{i<=n} v_p(i), built incrementally; pre-accumulate the
        // prefix when the range does not start at zero.
        Natural running = 0;
        for (std::uint64_t i = 1; i < a; ++i) {
          running += oracle::oracle_val(Natural(i), p).value();
        }
        for (std::uint64_t n = a; n <= b; ++n) {
          if (n >= 1) running += oracle::oracle_val(Natural(n), p).value();
          ++shard.checked;
          const Natural nn(n);
          const Valuation direct = val_factorial_direct(nn, p);
          const Valuation alt = val_factorial_alt(nn, p);
          const Valuation digits = val_factorial_from_digits(expand(nn, p));
          if (!(direct.value() == running && alt == direct &&
                digits == direct)) {
            shard.failures.push_back(make_failure(
                p.value(), nn, direct.str() + " / " + alt.str() + " / " +
                                   digits.str(),
                running.get_str()));
          }
        }
      });
}

Report run_oracle_oddfact(const Options& opts) {
  const std::uint64_t lo = std::max<std::uint64_t>(1, resolved_n_lo(opts, 1));
  const std::uint64_t hi = resolved_n_hi(opts, 1500);
  return sweep_primes_whole(
      opts, true, kOddPrimes, lo, hi,
      [](const Prime& p, std::uint64_t a, std::uint64_t b, Shard& shard) {
        // Oracle sum of v_p over odd numbers <= 2n-1, with prefix.
        Natural running = 0;
        for (std::uint64_t i = 1; i < a; ++i) {
          running += oracle::oracle_val(Natural(2 * i - 1), p).value();
        }
        for (std::uint64_t n = a; n <= b; ++n) {
          running += oracle::oracle_val(Natural(2 * n - 1), p).value();
          ++shard.checked;
          const Natural nn(n);
          const Valuation direct = val_oddfact_direct(nn, p);
          const Valuation alt = val_oddfact_alt(nn, p);
          const Valuation alt2 = val_oddfact_alt2(nn, p);
          const Valuation log_form =
              val_oddfact_log_form(OddNatural::from_index(nn), p);
          if (!(direct.value() == running && alt == direct &&
                alt2 == direct && log_form == direct)) {
            shard.failures.push_back(make_failure(
                p.value(), nn,
                direct.str() + " / " + alt.str() + " / " + alt2.str() +
                    " / " + log_form.str(),
                running.get_str()));
          }
        }
      });
}

Report run_oracle_special(const Options& opts) {
  Report report;
  const auto primes = primes_for(opts, false, kSpecialPrimes);
  const std::uint64_t lo = resolved_n_lo(opts, 0);
  const std::uint64_t hi = resolved_n_hi(opts, 200);
  detail::require_arg(lo <= hi, "empty n range");
  report.grid = describe_grid(primes, lo, hi);
  for (std::uint64_t n = lo; n <= hi; ++n) {
    const auto mbc_prod = oracle::oracle_product(oracle::ProductKind::mbc, n);
    const auto cat_prod =
        oracle::oracle_product(oracle::ProductKind::catalan, n);
    const bool cat_odd_oracle = mpz_odd_p(cat_prod.value.get_mpz_t());
    for (unsigned long pv : primes) {
      const Prime p(pv);
      ++report.checked;
      const Natural nn(n);
      Natural mbc_count = 0, cat_count = 0;
      {
        Natural v = mbc_prod.value, q, r;
        for (;;) {
          mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(),
                      p.value().get_mpz_t());
          if (r != 0) break;
          v = q;
          ++mbc_count;
        }
        v = cat_prod.value;
        for (;;) {
          mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(),
                      p.value().get_mpz_t());
          if (r != 0) break;
          v = q;
          ++cat_count;
        }
      }
      const Valuation mbc_v = val_mbc(nn, p);
      const Valuation cat_v = val_catalan(nn, p);
      const bool parity_ok =
          !p.is_two() || (catalan_is_odd(nn) == cat_odd_oracle);
      if (mbc_v.value() != mbc_count || cat_v.value() != cat_count ||
          !parity_ok) {
        report.failures.push_back(make_failure(
            p.value(), nn, mbc_v.str() + " / " + cat_v.str(),
            mbc_count.get_str() + " / " + cat_count.get_str()));
      }
    }
  }
  return report;
}

// --- registry -------------------------------------------------------------

struct IdentityDef {
  const char* name;
  const char* summary;
  std::vector<const char*> aliases;
  Report (*fn)(const Options&);
  bool odd_primes_only = false;
  bool p2_only = false;
};

const std::vector<IdentityDef>& registry() {
  static const std::vector<IdentityDef> defs = {
      {"eq-1.11", "n = (p-1) v_p(n!) + s_p(n)", {}, run_eq_1_11},
      {"eq-5.1",
       "delta s_p(n) + (p-1) v_p(n+1) = 1",
       {"eq-2.2"},
       run_eq_5_1},
      {"eq-5.2",
       "delta s_p(n) - delta s_p(n+1) - (p-1) delta v_p(n+1) = 0",
       {"eq-2.3"},
       run_eq_5_2},
      {"eq-1.12",
       "(p-1) delta v_p(n!) = 1 - delta s_p(n)",
       {},
       run_eq_1_12},
      {"eq-3.3",
       "2 v_p(m!!) = floor(log_p m) + sum floor_odd(m, p^j)",
       {},
       run_eq_3_3,
       true},
      {"eq-3.4-vs-3.5-vs-3.6",
       "the three odd-factorial valuation routes agree",
       {"eq-3.5-vs-3.6"},
       run_oddfact_routes,
       true},
      {"eq-3.7",
       "delta s_p(n-1) = delta s_p(2n-1) for odd p",
       {},
       run_eq_3_7,
       true},
      {"thm-4",
       "delta s_p(kn-1) = delta s_p(n-1) = 1 - (p-1) v_p(n) for p not "
       "dividing k",
       {},
       run_thm_4},
      {"eq-5.4-vs-5.5",
       "s_p(n+k) - s_p(n) = telescoped increments = k - (p-1) sum v_p(n+j)",
       {"eq-5.4", "eq-5.5"},
       run_group_increments},
      {"eq-4.1", "oracle: C(2n, n) = (n+1) Cat(n) exactly", {}, run_eq_4_1},
      {"mbc-catalan-p2",
       "v_2(C(2n,n)) = s_2(n), v_2(Cat(n)) = s_2(n+1) - 1, MBC even",
       {},
       run_mbc_catalan_p2,
       false,
       true},
      {"oracle-val-factorial",
       "factorial valuation routes match the trial-division oracle",
       {},
       run_oracle_factorial},
      {"oracle-val-oddfact",
       "odd-factorial valuation routes match the trial-division oracle",
       {},
       run_oracle_oddfact,
       true},
      {"oracle-special",
       "val_mbc / val_catalan / catalan_is_odd match the materialized "
       "oracle",
       {},
       run_oracle_special},
  };
  return defs;
}

const IdentityDef& find_identity(const std::string& name_or_alias) {
  for (const auto& def : registry()) {
    if (name_or_alias == def.name) return def;
    for (const char* alias : def.aliases) {
      if (name_or_alias == alias) return def;
    }
  }
  throw std::invalid_argument("unknown identity '" + name_or_alias + "'");
}

void sort_failures(std::vector<Failure>& failures) {
  std::sort(failures.begin(), failures.end(),
            [](const Failure& a, const Failure& b) {
              const std::size_t len = std::min(a.inputs.size(), b.inputs.size());
              for (std::size_t i = 0; i < len; ++i) {
                if (a.inputs[i].second != b.inputs[i].second) {
                  return a.inputs[i].second < b.inputs[i].second;
                }
              }
              return a.inputs.size() < b.inputs.size();
            });
}

}  // namespace

std::vector<std::string> identity_names() {
  std::vector<std::string> names;
  names.reserve(registry().size());
  for (const auto& def : registry()) names.emplace_back(def.name);
  return names;
}

bool is_identity(const std::string& name_or_alias) {
  for (const auto& def : registry()) {
    if (name_or_alias == def.name) return true;
    for (const char* alias : def.aliases) {
      if (name_or_alias == alias) return true;
    }
  }
  return false;
}

std::string canonical_identity(const std::string& name_or_alias) {
  return find_identity(name_or_alias).name;
}

std::string identity_summary(const std::string& name_or_alias) {
  return find_identity(name_or_alias).summary;
}

Report run_identity(const std::string& name_or_alias, const Options& opts) {
  const IdentityDef& def = find_identity(name_or_alias);
  const auto start = std::chrono::steady_clock::now();
  Report report = def.fn(opts);
  report.identity = def.name;
  sort_failures(report.failures);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::vector<Report> run_all(const Options& opts) {
  std::vector<Report> reports;
  for (const auto& def : registry()) {
    // With a restricted prime, skip identities outside that prime's scope.
    if (opts.prime) {
      if (def.odd_primes_only && *opts.prime == 2) continue;
      if (def.p2_only && *opts.prime != 2) continue;
    }
    reports.push_back(run_identity(def.name, opts));
  }
  return reports;
}

}  // namespace padival::verify
