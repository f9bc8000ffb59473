#pragma once

#include <cstdint>
#include <vector>

#include "axtcp/aggregation.hpp"
#include "axtcp/phy_tables.hpp"
#include "axtcp/units.hpp"

namespace axtcp {

enum class Strategy { kSuReverseDirection, kSuContention, kMu };

struct Scenario {
  Strategy strategy = Strategy::kSuReverseDirection;
  int stations = 1;
  int mcs = 11;
  SegmentProfile segment = kSegment1460;
  bool delayed_acks = false;
  std::int64_t n = 1;  // TCP data segments per station per cycle
  // Inter-frame spaces charged to the MU ack sequence. The reference
  // formula counts two; three is exposed for sensitivity analysis.
  int mu_ack_sifs = 2;
};

// Itemized TXOP timing. `total` is the goodput denominator and
// `payload_bits` the numerator, both exact, so goodput * total == payload
// holds as an integer identity.
struct CycleBreakdown {
  Duration access_overhead;           // AIFS + mean backoff
  std::vector<Duration> data_cycles;  // one per data A-MPDU exchange
  Duration ack_cycle;
  Duration teardown;  // trailing legacy preamble + CF-End (SU RD only)
  Duration total;
  AmpduSchedule schedule;
  std::vector<Duration> ppdu_airtimes;  // every PPDU, preamble included
  std::int64_t ack_count = 0;
  std::int64_t ack_mpdus = 0;
  std::int64_t payload_bits = 0;

  double goodput_mbps() const {
    return static_cast<double>(payload_bits) * 100.0 /
           static_cast<double>(total.in_ticks());
  }
};

// PPDU airtime (preamble included) and full exchange duration of one
// data or ack transaction.
struct ExchangeTimes {
  Duration ppdu;
  Duration cycle;
};

ExchangeTimes data_exchange_times_su(std::int64_t mpdus, std::int64_t msdus,
                                     const McsProfile& profile,
                                     const SegmentProfile& seg);
ExchangeTimes ack_exchange_times_su(std::int64_t n_acks, const McsProfile& profile);
ExchangeTimes data_exchange_times_mu(std::int64_t mpdus, std::int64_t msdus,
                                     const McsProfile& profile,
                                     const SegmentProfile& seg);
ExchangeTimes ack_exchange_times_mu(std::int64_t n_acks, int stations,
                                    const McsProfile& profile, int sifs_count = 2);

// One downlink data A-MPDU exchange in SU: data PPDU, legacy block ack, two
// inter-frame spaces.
Duration t_data_cycle_su(std::int64_t mpdus, std::int64_t msdus,
                         const McsProfile& profile, const SegmentProfile& seg);

// The reverse-direction uplink ack exchange in SU: all acks in one A-MPDU
// of ceil(n/178) MPDUs, acknowledged by a legacy block ack.
Duration t_ack_cycle_su(std::int64_t n_acks, const McsProfile& profile);

// MU counterparts; rates are per spatial stream and stations transmit in
// parallel, so the per-station airtime is charged once.
Duration t_data_cycle_mu(std::int64_t mpdus, std::int64_t msdus,
                         const McsProfile& profile, const SegmentProfile& seg);
Duration t_ack_cycle_mu(std::int64_t n_acks, int stations, const McsProfile& profile,
                        int sifs_count = 2);

// Largest ack count (at most 256*178) whose uplink A-MPDU fits the PPDU
// time limit at this profile.
std::int64_t max_acks_ul(const McsProfile& profile);

// Upper bound on data segments per station per cycle; doubles with delayed
// acks since one ack then covers two segments.
std::int64_t data_segment_cap(const McsProfile& profile, bool delayed_acks);

std::int64_t ack_count_for(std::int64_t n, bool delayed_acks);

McsProfile profile_for(const Scenario& scn);
AggregationLimits data_limits_for(const Scenario& scn);

CycleBreakdown goodput_strategy1(const Scenario& scn);
CycleBreakdown goodput_strategy3(const Scenario& scn);

// Dispatch on scenario strategy (reverse direction or MU).
CycleBreakdown evaluate(const Scenario& scn);

}  // namespace axtcp
