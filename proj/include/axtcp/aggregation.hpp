#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "axtcp/phy_tables.hpp"
#include "axtcp/units.hpp"

namespace axtcp {

enum class Direction { kDownlink, kUplink };

// Per-A-MPDU packing capacities for one (profile, segment, direction)
// operating point, together with the underlying bit/byte budget so that
// arbitrary (mpdus, msdus) entries can be checked for feasibility.
struct AggregationLimits {
  std::int64_t a_data = 0;          // MSDUs in a full MPDU
  std::int64_t f_data = 0;          // full MPDUs per A-MPDU (0 when none fits)
  std::int64_t partial_top_up = 0;  // MSDUs in the one extra partial MPDU
  std::int64_t full_ampdu_msdus = 0;  // a_data * f_data + partial_top_up

  // Underlying model.
  std::int64_t msdu_bytes = 0;
  std::int64_t mpdu_overhead_bytes = 0;
  std::int64_t service_bits = proto::kServiceTailBits;
  std::int64_t budget_millibits = 0;  // PSDU budget after the preamble
  std::int64_t max_mpdus = proto::kMaxMpdusPerAmpdu;
  std::int64_t max_ampdu_bytes = proto::kMaxAmpduBytes;

  std::int64_t ampdu_bytes(std::int64_t mpdus, std::int64_t msdus) const {
    return msdus * msdu_bytes + mpdus * mpdu_overhead_bytes;
  }
  bool entry_feasible(std::int64_t mpdus, std::int64_t msdus) const {
    if (mpdus < 1 || msdus < mpdus || msdus > mpdus * a_data) return false;
    if (mpdus > max_mpdus) return false;
    if (ampdu_bytes(mpdus, msdus) > max_ampdu_bytes) return false;
    return (ampdu_bytes(mpdus, msdus) * 8 + service_bits) * 1000 <= budget_millibits;
  }
};

// Fills f_data, partial_top_up and full_ampdu_msdus from the budget fields.
// Throws ZeroCapacity when not even a single-MSDU MPDU fits.
void derive_capacities(AggregationLimits& limits);

// Builds the limits for data A-MPDUs of the given profile and segment.
// mu_per_mpdu_extra_bytes is 0 in SU and the HE control element size in MU.
AggregationLimits compute_limits(const McsProfile& profile, const SegmentProfile& seg,
                                 Direction direction,
                                 std::int64_t mu_per_mpdu_extra_bytes);

struct AmpduEntry {
  std::int64_t mpdus = 0;
  std::int64_t msdus = 0;
  friend bool operator==(const AmpduEntry&, const AmpduEntry&) = default;
};

struct AmpduSchedule {
  std::vector<AmpduEntry> entries;

  std::int64_t ampdus() const { return static_cast<std::int64_t>(entries.size()); }
  std::int64_t total_mpdus() const;
  std::int64_t total_msdus() const;
};

struct AmpduCountBounds {
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

// Feasible range of A-MPDU counts for n MSDUs under the given limits.
AmpduCountBounds ampdu_count_bounds(std::int64_t n, const AggregationLimits& limits);

// Deterministic minimal-MPDU packing of n MSDUs into exactly x A-MPDUs:
// every A-MPDU gets f_data full MPDUs; at the top of the range the last
// A-MPDU takes the remainder in as few MPDUs as possible, below it the
// leftover MSDUs ride partial top-up MPDUs appended to the earliest A-MPDUs.
AmpduSchedule schedule_alpha(std::int64_t n, std::int64_t x,
                             const AggregationLimits& limits);

// Scans the feasible A-MPDU counts and returns the schedule minimizing
// cycle_cost; ties resolve toward fewer A-MPDUs.
AmpduSchedule optimal_schedule(
    std::int64_t n, const AggregationLimits& limits,
    const std::function<Duration(const AmpduSchedule&)>& cycle_cost);

// Reference search: minimum MPDU count over all placements of n MSDUs into
// exactly x non-empty A-MPDUs. Guarded to small instances (TooLarge).
std::int64_t oracle_min_mpdus(std::int64_t n, std::int64_t x,
                              const AggregationLimits& limits);

}  // namespace axtcp
