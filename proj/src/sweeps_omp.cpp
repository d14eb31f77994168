#include "combcert/sweeps.hpp"

#include "sweeps_detail.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace combcert::sweeps {

using detail::ScaledWallis;

namespace {

struct ChunkBounds {
  int first;
  int last;
};

// Fixed chunk layout over 1..n_max, independent of the thread count so the
// decomposition (and everything derived from it) is reproducible.
std::vector<ChunkBounds> chunk_layout(int n_max) {
  const int chunk = std::max(32, n_max / 128);
  std::vector<ChunkBounds> chunks;
  for (int a = 1; a <= n_max; a += chunk)
    chunks.push_back({a, std::min(n_max, a + chunk - 1)});
  return chunks;
}

// Multiplicative growth of every scaled component across one chunk.
struct ChunkProducts {
  BigInt central_num = 1;  // prod 2(2i-1)
  BigInt central_den = 1;  // prod i
  BigInt odd = 1;          // prod (2i-1)
  BigInt even_df = 1;      // prod 2i
  BigInt odd_df = 1;       // prod (2i+1)
  BigInt pow4 = 1;         // 4^len
  BigInt pow16 = 1;        // 16^len
};

ChunkProducts chunk_products(const ChunkBounds& c) {
  ChunkProducts p;
  for (int i = c.first; i <= c.last; ++i) {
    p.central_num *= 2 * (2 * i - 1);
    p.central_den *= i;
    p.odd *= 2 * i - 1;
    p.even_df *= 2 * i;
    p.odd_df *= 2 * i + 1;
    p.pow4 *= 4;
    p.pow16 *= 16;
  }
  return p;
}

// Advances the multiplicative part of a seed across a whole chunk. The
// division is exact (the seed central is C(2a,a) for the chunk end a).
void apply_products(ScaledWallis& seed, const ChunkProducts& p, int chunk_len) {
  seed.central *= p.central_num;
  seed.central /= p.central_den;
  seed.central_sq = seed.central * seed.central;
  seed.pow4 *= p.pow4;
  seed.pow16 *= p.pow16;
  seed.odd_prod *= p.odd;
  seed.even_df *= p.even_df;
  seed.odd_df *= p.odd_df;
  seed.sq_scale *= p.pow16 * p.odd;
  seed.n += chunk_len;
}

struct ChunkSums {
  BigInt lin = 0;
  BigInt sq = 0;
  BigInt tel = 0;
};

struct ChunkFailures {
  long long identity = 0, linear = 0, telescope = 0, summand = 0;
  int first_n = 0;
};

}  // namespace

IdentitySweepResult identity_sweep_parallel(int n_max) {
  if (n_max < 1) throw std::invalid_argument("identity_sweep: n_max must be >= 1");
  const auto chunks = chunk_layout(n_max);
  const int n_chunks = static_cast<int>(chunks.size());

  // Phase 1 (parallel): per-chunk growth products (all small numbers).
  std::vector<ChunkProducts> products(chunks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < n_chunks; ++c)
    products[static_cast<size_t>(c)] = chunk_products(chunks[static_cast<size_t>(c)]);

  // Phase 2 (serial): multiplicative seeds at every chunk start.
  std::vector<ScaledWallis> seeds(chunks.size());
  {
    ScaledWallis run;
    for (int c = 0; c < n_chunks; ++c) {
      seeds[static_cast<size_t>(c)] = run;
      apply_products(run, products[static_cast<size_t>(c)],
                     chunks[static_cast<size_t>(c)].last -
                         chunks[static_cast<size_t>(c)].first + 1);
    }
  }

  // Phase 3 (parallel): chunk-local sum contributions. Sweeping with the
  // sums zeroed leaves exactly the chunk's contribution in end-of-chunk
  // scale, because each sum update is linear in the running sum.
  std::vector<ChunkSums> local(chunks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < n_chunks; ++c) {
    ScaledWallis s = seeds[static_cast<size_t>(c)];
    s.sum_lin = 0;
    s.sum_sq = 0;
    s.sum_tel = 0;
    for (int n = chunks[static_cast<size_t>(c)].first;
         n <= chunks[static_cast<size_t>(c)].last; ++n)
      s.step();
    local[static_cast<size_t>(c)] = ChunkSums{s.sum_lin, s.sum_sq, s.sum_tel};
  }

  // Phase 4 (serial): scan the sums into the seeds.
  {
    BigInt lin = 0, sq = 0, tel = 0;
    for (int c = 0; c < n_chunks; ++c) {
      seeds[static_cast<size_t>(c)].sum_lin = lin;
      seeds[static_cast<size_t>(c)].sum_sq = sq;
      seeds[static_cast<size_t>(c)].sum_tel = tel;
      const auto& p = products[static_cast<size_t>(c)];
      lin = lin * (p.pow4 * p.odd) + local[static_cast<size_t>(c)].lin;
      sq = sq * (p.pow16 * p.odd) + local[static_cast<size_t>(c)].sq;
      tel = tel * p.odd_df + local[static_cast<size_t>(c)].tel;
    }
  }

  // Phase 5 (parallel): full re-sweep per chunk with every check.
  std::vector<ChunkFailures> failures(chunks.size());
  std::vector<ScaledWallis> finals(chunks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < n_chunks; ++c) {
    ScaledWallis s = seeds[static_cast<size_t>(c)];
    IdentitySweepResult chunk_result;
    for (int n = chunks[static_cast<size_t>(c)].first;
         n <= chunks[static_cast<size_t>(c)].last; ++n) {
      s.step();
      detail::check_state(s, chunk_result);
    }
    failures[static_cast<size_t>(c)] =
        ChunkFailures{chunk_result.identity_failures, chunk_result.linear_failures,
                      chunk_result.telescope_failures, chunk_result.summand_failures,
                      chunk_result.first_failure_n};
    finals[static_cast<size_t>(c)] = std::move(s);
  }

  IdentitySweepResult result;
  result.n_max = n_max;
  for (const auto& f : failures) {
    result.identity_failures += f.identity;
    result.linear_failures += f.linear;
    result.telescope_failures += f.telescope;
    result.summand_failures += f.summand;
    if (f.first_n != 0 &&
        (result.first_failure_n == 0 || f.first_n < result.first_failure_n))
      result.first_failure_n = f.first_n;
  }
  result.final_state = finals.back().to_state();
  return result;
}

std::vector<wallis::CertResult> certify_sweep_parallel(int n_max, int start_bits,
                                                       int cap_bits) {
  if (n_max < 1) throw std::invalid_argument("certify_sweep: n_max must be >= 1");
  const auto chunks = chunk_layout(n_max);
  const int n_chunks = static_cast<int>(chunks.size());
  const RationalInterval pi = pi_enclosure(start_bits);

  // Central-binomial and 16^n seeds via chunk products.
  std::vector<ChunkProducts> products(chunks.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < n_chunks; ++c)
    products[static_cast<size_t>(c)] = chunk_products(chunks[static_cast<size_t>(c)]);

  std::vector<BigInt> central_seeds(chunks.size()), pow16_seeds(chunks.size());
  {
    BigInt central = 1, pow16 = 1;
    for (int c = 0; c < n_chunks; ++c) {
      central_seeds[static_cast<size_t>(c)] = central;
      pow16_seeds[static_cast<size_t>(c)] = pow16;
      central *= products[static_cast<size_t>(c)].central_num;
      central /= products[static_cast<size_t>(c)].central_den;
      pow16 *= products[static_cast<size_t>(c)].pow16;
    }
  }

  std::vector<wallis::CertResult> results(static_cast<size_t>(n_max));
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < n_chunks; ++c) {
    BigInt central = central_seeds[static_cast<size_t>(c)];
    BigInt pow16 = pow16_seeds[static_cast<size_t>(c)];
    for (int n = chunks[static_cast<size_t>(c)].first;
         n <= chunks[static_cast<size_t>(c)].last; ++n) {
      central *= 2 * (2 * n - 1);
      central /= n;
      pow16 *= 16;
      results[static_cast<size_t>(n) - 1] = wallis::certify_inequality_scaled(
          n, central * central, pow16, start_bits, cap_bits, &pi);
    }
  }
  return results;
}

GridCheckResult series_grid_parallel(int n_max, int r_max,
                                     const std::vector<Rational>& xs) {
  GridCheckResult result;
  const long long nx = static_cast<long long>(xs.size());
  result.cases = static_cast<long long>(n_max) * r_max * nx;
  std::vector<char> ok(static_cast<size_t>(result.cases), 1);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long idx = 0; idx < result.cases; ++idx) {
    int n = static_cast<int>(idx / (r_max * nx)) + 1;
    int r = static_cast<int>((idx / nx) % r_max) + 1;
    const Rational& x = xs[static_cast<size_t>(idx % nx)];
    series::SeriesParams p{n, r, x};
    series::SeriesParams p_neg{n, r, -x};
    bool good = series::s_direct(p) == series::s_closed(p);
    if (good) {
      Rational m = series::m_direct(p);
      good = m == series::m_closed(p);
      if (good) {
        Rational reflected = series::s_direct(p_neg);
        good = m == ((r % 2 == 0) ? reflected : -reflected);
      }
    }
    ok[static_cast<size_t>(idx)] = good ? 1 : 0;
  }
  for (long long idx = 0; idx < result.cases; ++idx)
    if (!ok[static_cast<size_t>(idx)]) {
      ++result.mismatches;
      if (result.first_mismatch < 0) result.first_mismatch = idx;
    }
  return result;
}

GridCheckResult power_sum_grid_parallel(
    int k_max, int n_max,
    const std::vector<std::tuple<Rational, Rational, Rational>>& abm) {
  GridCheckResult result;
  const long long ng = static_cast<long long>(abm.size());
  result.cases = static_cast<long long>(k_max) * n_max * ng;
  std::vector<char> ok(static_cast<size_t>(result.cases), 1);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long idx = 0; idx < result.cases; ++idx) {
    int k = static_cast<int>(idx / (n_max * ng)) + 1;
    int n = static_cast<int>((idx / ng) % n_max) + 1;
    const auto& [a, b, m] = abm[static_cast<size_t>(idx % ng)];
    auto [lhs, rhs] = series::power_sum_both_sides(series::PowerSumParams{a, b, m, n, k});
    ok[static_cast<size_t>(idx)] = (lhs == rhs) ? 1 : 0;
  }
  for (long long idx = 0; idx < result.cases; ++idx)
    if (!ok[static_cast<size_t>(idx)]) {
      ++result.mismatches;
      if (result.first_mismatch < 0) result.first_mismatch = idx;
    }
  return result;
}

std::vector<BigInt> forest_counts_parallel(int n_max) {
  if (n_max < 0 || n_max > circles::ForestCatalog::kMaxNodes)
    throw std::invalid_argument("forest_counts: n_max out of range");
  circles::ForestCatalog catalog(n_max);

  // One task per (total, first choice); every forest has a unique maximal
  // first choice, so the per-task counts partition each total's count.
  struct Task {
    int total;
    int size;
    int index;
  };
  std::vector<Task> tasks;
  for (int n = 1; n <= n_max; ++n)
    for (auto [s, i] : catalog.first_choices(n)) tasks.push_back({n, s, i});

  std::vector<unsigned long long> task_counts(tasks.size(), 0);
  const long long n_tasks = static_cast<long long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long long t = 0; t < n_tasks; ++t) {
    const Task& task = tasks[static_cast<size_t>(t)];
    task_counts[static_cast<size_t>(t)] =
        catalog.count_forests_with_first(task.total, task.size, task.index);
  }

  std::vector<BigInt> counts(static_cast<size_t>(n_max) + 1, BigInt(0));
  counts[0] = 1;  // the empty forest
  for (size_t t = 0; t < tasks.size(); ++t)
    counts[static_cast<size_t>(tasks[t].total)] += task_counts[t];
  return counts;
}

std::vector<circles::BoundsRow> bounds_sweep_parallel(int n_max, int start_bits,
                                                      int cap_bits) {
  if (n_max < 1) throw std::invalid_argument("bounds_sweep: n_max must be >= 1");
  const auto b = circles::b_by_partition_sum(n_max);
  const RationalInterval pi = pi_enclosure(start_bits);
  std::vector<circles::BoundsRow> rows(static_cast<size_t>(n_max));
#pragma omp parallel for schedule(dynamic, 4)
  for (int n = 1; n <= n_max; ++n)
    rows[static_cast<size_t>(n) - 1] =
        circles::bounds_row(n, b.at(n), start_bits, cap_bits, &pi);
  return rows;
}

}  // namespace combcert::sweeps
