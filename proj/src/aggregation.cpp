#include "axtcp/aggregation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "axtcp/errors.hpp"

namespace axtcp {

std::int64_t AmpduSchedule::total_mpdus() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0},
                         [](std::int64_t acc, const AmpduEntry& e) { return acc + e.mpdus; });
}

std::int64_t AmpduSchedule::total_msdus() const {
  return std::accumulate(entries.begin(), entries.end(), std::int64_t{0},
                         [](std::int64_t acc, const AmpduEntry& e) { return acc + e.msdus; });
}

void derive_capacities(AggregationLimits& lim) {
  if (!lim.entry_feasible(1, 1)) {
    throw ZeroCapacity("a single-MSDU MPDU does not fit in the PPDU time limit");
  }
  // Largest k with k full MPDUs feasible. The budget is monotone in k, so a
  // direct division works; the byte and MPDU-count caps clamp it.
  const std::int64_t full_mpdu_bytes = lim.a_data * lim.msdu_bytes + lim.mpdu_overhead_bytes;
  const std::int64_t budget_bits = lim.budget_millibits / 1000 - lim.service_bits;
  std::int64_t by_time = budget_bits / (full_mpdu_bytes * 8);
  std::int64_t by_bytes = lim.max_ampdu_bytes / full_mpdu_bytes;
  lim.f_data = std::min({by_time, by_bytes, lim.max_mpdus});

  if (lim.f_data >= lim.max_mpdus) {
    // The MPDU-count cap binds; no room for a further partial MPDU.
    lim.f_data = lim.max_mpdus;
    lim.partial_top_up = 0;
  } else {
    std::int64_t m = 0;
    while (m + 1 < lim.a_data &&
           lim.entry_feasible(lim.f_data + 1, lim.f_data * lim.a_data + m + 1)) {
      ++m;
    }
    lim.partial_top_up = m;
  }
  lim.full_ampdu_msdus = lim.a_data * lim.f_data + lim.partial_top_up;
  if (lim.full_ampdu_msdus < 1) {
    throw ZeroCapacity("A-MPDU capacity is zero MSDUs at this operating point");
  }
}

AggregationLimits compute_limits(const McsProfile& profile, const SegmentProfile& seg,
                                 Direction direction,
                                 std::int64_t mu_per_mpdu_extra_bytes) {
  const PhyRate rate = direction == Direction::kDownlink ? profile.r_dl : profile.r_ul;
  const Duration tsym = direction == Direction::kDownlink ? profile.tsym_dl : profile.tsym_ul;
  const Duration pr =
      direction == Direction::kDownlink ? profile.pr_data_dl : profile.pr_data_ul;

  if (pr >= proto::kMaxPpduTime) {
    throw ZeroCapacity("preamble alone exceeds the PPDU time limit");
  }
  const std::int64_t avail_symbols =
      (proto::kMaxPpduTime - pr).in_ticks() / tsym.in_ticks();

  AggregationLimits lim;
  lim.a_data = seg.msdus_per_mpdu;
  lim.msdu_bytes = seg.msdu_bytes;
  lim.mpdu_overhead_bytes = proto::kMpduOverheadBytes + mu_per_mpdu_extra_bytes;
  lim.budget_millibits = avail_symbols * millibits_per_symbol(tsym, rate);
  derive_capacities(lim);
  return lim;
}

AmpduCountBounds ampdu_count_bounds(std::int64_t n, const AggregationLimits& lim) {
  if (n < 1) throw ConfigError("MSDU count must be positive");
  if (lim.full_ampdu_msdus < 1) throw ZeroCapacity("A-MPDU capacity is zero MSDUs");
  AmpduCountBounds b;
  b.lower = ceil_div(n, lim.full_ampdu_msdus);
  if (lim.f_data > 0) {
    const std::int64_t min_mpdus = ceil_div(n, lim.a_data);
    b.upper = std::max(b.lower, ceil_div(min_mpdus, lim.f_data));
  } else {
    b.upper = b.lower;
  }
  return b;
}

AmpduSchedule schedule_alpha(std::int64_t n, std::int64_t x,
                             const AggregationLimits& lim) {
  const AmpduCountBounds b = ampdu_count_bounds(n, lim);
  if (x < b.lower || x > b.upper) {
    throw InfeasibleX("A-MPDU count " + std::to_string(x) + " outside [" +
                      std::to_string(b.lower) + ", " + std::to_string(b.upper) +
                      "] for " + std::to_string(n) + " MSDUs");
  }

  AmpduSchedule sched;
  sched.entries.reserve(static_cast<std::size_t>(x));

  if (lim.f_data == 0) {
    // No full MPDU fits: one partial MPDU per A-MPDU.
    std::int64_t rem = n;
    for (std::int64_t i = 0; i < x; ++i) {
      const std::int64_t take = std::min(lim.partial_top_up, rem - (x - 1 - i));
      sched.entries.push_back({1, take});
      rem -= take;
    }
  } else if (x == b.upper) {
    const std::int64_t full_each = lim.a_data * lim.f_data;
    for (std::int64_t i = 0; i + 1 < x; ++i) {
      sched.entries.push_back({lim.f_data, full_each});
    }
    const std::int64_t rem = n - (x - 1) * full_each;
    sched.entries.push_back({ceil_div(rem, lim.a_data), rem});
  } else {
    // Every A-MPDU carries f_data full MPDUs; the leftover MSDUs ride
    // top-up MPDUs appended to the earliest A-MPDUs.
    const std::int64_t leftover = n - lim.a_data * lim.f_data * x;
    if (leftover <= 0 || lim.partial_top_up <= 0) {
      throw InfeasibleX("inconsistent A-MPDU count below the upper bound");
    }
    const std::int64_t partials = ceil_div(leftover, lim.partial_top_up);
    assert(partials <= x);
    for (std::int64_t i = 0; i < x; ++i) {
      AmpduEntry e{lim.f_data, lim.a_data * lim.f_data};
      if (i < partials) {
        const std::int64_t extra =
            i + 1 < partials ? lim.partial_top_up
                             : leftover - (partials - 1) * lim.partial_top_up;
        e.mpdus += 1;
        e.msdus += extra;
      }
      sched.entries.push_back(e);
    }
  }

  assert(sched.total_msdus() == n);
  for (const AmpduEntry& e : sched.entries) {
    assert(lim.entry_feasible(e.mpdus, e.msdus));
    (void)e;
  }
  return sched;
}

AmpduSchedule optimal_schedule(
    std::int64_t n, const AggregationLimits& lim,
    const std::function<Duration(const AmpduSchedule&)>& cycle_cost) {
  const AmpduCountBounds b = ampdu_count_bounds(n, lim);
  AmpduSchedule best;
  Duration best_cost;
  for (std::int64_t x = b.lower; x <= b.upper; ++x) {
    AmpduSchedule cand = schedule_alpha(n, x, lim);
    const Duration cost = cycle_cost(cand);
    if (best.entries.empty() || cost < best_cost) {
      best = std::move(cand);
      best_cost = cost;
    }
  }
  return best;
}

namespace {

// Smallest feasible MPDU count for m MSDUs in one A-MPDU, or -1. Overhead
// grows with the MPDU count, so only the minimal count can be feasible.
std::int64_t min_mpdus_single(std::int64_t m, const AggregationLimits& lim) {
  const std::int64_t a = ceil_div(m, lim.a_data);
  return lim.entry_feasible(a, m) ? a : -1;
}

struct OracleSearch {
  const AggregationLimits& lim;
  std::int64_t per_ampdu_cap;
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> memo;

  // Minimum total MPDUs to place rem MSDUs into the remaining a A-MPDUs,
  // all non-empty; -1 when impossible.
  std::int64_t solve(std::int64_t ampdus_left, std::int64_t rem) {
    if (ampdus_left == 0) return rem == 0 ? 0 : -1;
    const auto key = std::make_pair(ampdus_left, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t best = -1;
    const std::int64_t hi = std::min(per_ampdu_cap, rem - (ampdus_left - 1));
    for (std::int64_t m = 1; m <= hi; ++m) {
      if (rem - m > (ampdus_left - 1) * per_ampdu_cap) continue;
      const std::int64_t own = min_mpdus_single(m, lim);
      if (own < 0) continue;
      const std::int64_t rest = solve(ampdus_left - 1, rem - m);
      if (rest < 0) continue;
      if (best < 0 || own + rest < best) best = own + rest;
    }
    memo[key] = best;
    return best;
  }
};

}  // namespace

std::int64_t oracle_min_mpdus(std::int64_t n, std::int64_t x,
                              const AggregationLimits& lim) {
  if (n < 1 || x < 1) throw ConfigError("oracle needs positive n and x");
  if (lim.a_data * std::max<std::int64_t>(lim.f_data, 1) * x > 64 || n > 512) {
    throw TooLarge("instance too large for exhaustive search");
  }
  // Independent per-A-MPDU MSDU cap: feasibility at the minimal MPDU count
  // is monotone in the MSDU count, so scan upward.
  std::int64_t cap = 0;
  while (cap < n && min_mpdus_single(cap + 1, lim) >= 0) ++cap;
  OracleSearch search{lim, cap, {}};
  const std::int64_t best = search.solve(x, n);
  if (best < 0) {
    throw InfeasibleX("no placement of " + std::to_string(n) + " MSDUs into " +
                      std::to_string(x) + " A-MPDUs");
  }
  return best;
}

}  // namespace axtcp
