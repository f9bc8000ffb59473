#include "axtcp/analytic.hpp"

#include <algorithm>
#include <string>

#include "axtcp/errors.hpp"

namespace axtcp {
namespace {

Duration checked_ppdu(Duration preamble, std::int64_t payload_bits, PhyRate rate,
                      Duration tsym, const char* what) {
  const Duration ppdu = preamble + tsym * symbols_for_bits(payload_bits, tsym, rate);
  if (ppdu > proto::kMaxPpduTime) {
    throw ExceedsPpduLimit(std::string(what) + " PPDU of " +
                           std::to_string(ppdu.in_ticks()) +
                           " ticks exceeds the 5484 us PPDU time limit");
  }
  return ppdu;
}

std::int64_t back_frame_bytes(std::int64_t acked_mpdus) {
  return acked_mpdus <= proto::kBackShortWindow ? proto::kBackBytesShort
                                                : proto::kBackBytesLong;
}

ExchangeTimes data_exchange_su(std::int64_t mpdus, std::int64_t msdus,
                               const McsProfile& p, const SegmentProfile& seg) {
  const std::int64_t bits =
      (msdus * seg.msdu_bytes + mpdus * proto::kMpduOverheadBytes) * 8 +
      proto::kServiceTailBits;
  const Duration ppdu = checked_ppdu(p.pr_data_dl, bits, p.r_dl, p.tsym_dl, "DL data");
  const Duration back = frame_airtime(back_frame_bytes(mpdus), p.r_leg, p.tsym_leg);
  return {ppdu, ppdu + p.pr_legacy + back + 2 * proto::kSifs};
}

ExchangeTimes ack_exchange_su(std::int64_t n_acks, const McsProfile& p) {
  const std::int64_t mpdus = ceil_div(n_acks, proto::kAcksPerMpdu);
  const std::int64_t bits =
      (n_acks * proto::kAckMsduBytes + mpdus * proto::kMpduOverheadBytes) * 8 +
      proto::kServiceTailBits;
  const Duration ppdu = checked_ppdu(p.pr_data_ul, bits, p.r_ul, p.tsym_ul, "UL ack");
  const Duration back = frame_airtime(back_frame_bytes(mpdus), p.r_leg, p.tsym_leg);
  return {ppdu, ppdu + p.pr_legacy + back + 2 * proto::kSifs};
}

ExchangeTimes data_exchange_mu(std::int64_t mpdus, std::int64_t msdus,
                               const McsProfile& p, const SegmentProfile& seg) {
  // Scheduling info for the parallel block acks rides either an HE control
  // element per MPDU or, above the threshold, one unicast trigger MPDU.
  std::int64_t bytes = msdus * seg.msdu_bytes;
  if (mpdus <= proto::kHeIeMpduLimit) {
    bytes += mpdus * (proto::kMpduOverheadBytes + proto::kHeIeBytes);
  } else {
    bytes += mpdus * proto::kMpduOverheadBytes + proto::kUnicastTfMpduBytes;
  }
  const std::int64_t bits = bytes * 8 + proto::kServiceTailBits;
  const Duration ppdu = checked_ppdu(p.pr_data_dl, bits, p.r_dl, p.tsym_dl, "DL data");
  const std::int64_t back_bits =
      back_frame_bytes(mpdus) * 8 + proto::kServiceTailBits;
  const Duration back = p.tsym_ul * symbols_for_bits(back_bits, p.tsym_ul, p.r_ul);
  return {ppdu, ppdu + p.pr_data_ul + back + 2 * proto::kSifs};
}

ExchangeTimes ack_exchange_mu(std::int64_t n_acks, int stations, const McsProfile& p,
                              int sifs_count) {
  const std::int64_t mpdus = ceil_div(n_acks, proto::kAcksPerMpdu);
  const std::int64_t bits =
      (n_acks * proto::kAckMsduBytes + mpdus * proto::kMpduOverheadBytes) * 8 +
      proto::kServiceTailBits;
  const Duration ul_ppdu = checked_ppdu(p.pr_data_ul, bits, p.r_ul, p.tsym_ul, "UL ack");

  const std::int64_t tf_bytes =
      proto::kTfBaseBytes + (stations / 2) * proto::kTfPerPairBytes;
  const Duration tf = frame_airtime(tf_bytes, p.r_leg, p.tsym_leg);

  const std::int64_t per_sta = mpdus <= proto::kBackShortWindow
                                   ? proto::kMulBackPerStaShort
                                   : proto::kMulBackPerStaLong;
  const std::int64_t mul_back_bytes = proto::kMulBackBaseBytes + stations * per_sta;
  const Duration mul_back = frame_airtime(mul_back_bytes, p.r_leg, p.tsym_leg);

  const Duration cycle = p.pr_legacy + tf + ul_ppdu + p.pr_legacy + mul_back +
                         sifs_count * proto::kSifs;
  return {ul_ppdu, cycle};
}

void validate_acks(std::int64_t n_acks) {
  if (n_acks < 1) throw ConfigError("ack count must be positive");
  if (n_acks > proto::kMaxAcksPerAmpdu) {
    throw ExceedsPpduLimit("ack count " + std::to_string(n_acks) +
                           " exceeds the 256-MPDU block-ack window (" +
                           std::to_string(proto::kMaxAcksPerAmpdu) + " acks)");
  }
}

void validate_n(const Scenario& scn, const McsProfile& profile) {
  if (scn.n < 1) throw ConfigError("segment count must be positive");
  const std::int64_t cap = data_segment_cap(profile, scn.delayed_acks);
  if (scn.n > cap) {
    throw ExceedsPpduLimit(
        "n=" + std::to_string(scn.n) + " exceeds the uplink ack capacity (max " +
        std::to_string(cap) + " segments per cycle at this operating point)");
  }
}

}  // namespace

ExchangeTimes data_exchange_times_su(std::int64_t mpdus, std::int64_t msdus,
                                     const McsProfile& profile,
                                     const SegmentProfile& seg) {
  return data_exchange_su(mpdus, msdus, profile, seg);
}

ExchangeTimes ack_exchange_times_su(std::int64_t n_acks, const McsProfile& profile) {
  validate_acks(n_acks);
  return ack_exchange_su(n_acks, profile);
}

ExchangeTimes data_exchange_times_mu(std::int64_t mpdus, std::int64_t msdus,
                                     const McsProfile& profile,
                                     const SegmentProfile& seg) {
  return data_exchange_mu(mpdus, msdus, profile, seg);
}

ExchangeTimes ack_exchange_times_mu(std::int64_t n_acks, int stations,
                                    const McsProfile& profile, int sifs_count) {
  validate_acks(n_acks);
  return ack_exchange_mu(n_acks, stations, profile, sifs_count);
}

Duration t_data_cycle_su(std::int64_t mpdus, std::int64_t msdus,
                         const McsProfile& profile, const SegmentProfile& seg) {
  return data_exchange_su(mpdus, msdus, profile, seg).cycle;
}

Duration t_ack_cycle_su(std::int64_t n_acks, const McsProfile& profile) {
  validate_acks(n_acks);
  return ack_exchange_su(n_acks, profile).cycle;
}

Duration t_data_cycle_mu(std::int64_t mpdus, std::int64_t msdus,
                         const McsProfile& profile, const SegmentProfile& seg) {
  return data_exchange_mu(mpdus, msdus, profile, seg).cycle;
}

Duration t_ack_cycle_mu(std::int64_t n_acks, int stations, const McsProfile& profile,
                        int sifs_count) {
  validate_acks(n_acks);
  return ack_exchange_mu(n_acks, stations, profile, sifs_count).cycle;
}

std::int64_t max_acks_ul(const McsProfile& p) {
  if (p.pr_data_ul >= proto::kMaxPpduTime) return 0;
  const std::int64_t avail_symbols =
      (proto::kMaxPpduTime - p.pr_data_ul).in_ticks() / p.tsym_ul.in_ticks();
  const std::int64_t budget_mb = avail_symbols * millibits_per_symbol(p.tsym_ul, p.r_ul);
  const auto fits = [&](std::int64_t k) {
    const std::int64_t bits =
        (k * proto::kAckMsduBytes +
         ceil_div(k, proto::kAcksPerMpdu) * proto::kMpduOverheadBytes) *
            8 +
        proto::kServiceTailBits;
    return bits * 1000 <= budget_mb;
  };
  std::int64_t lo = 0, hi = proto::kMaxAcksPerAmpdu;
  while (lo < hi) {
    const std::int64_t mid = (lo + hi + 1) / 2;
    if (fits(mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

std::int64_t data_segment_cap(const McsProfile& profile, bool delayed_acks) {
  const std::int64_t acks = std::min(proto::kMaxAcksPerAmpdu, max_acks_ul(profile));
  return delayed_acks ? 2 * acks : acks;
}

std::int64_t ack_count_for(std::int64_t n, bool delayed_acks) {
  return delayed_acks ? ceil_div(n, 2) : n;
}

McsProfile profile_for(const Scenario& scn) {
  const Mode mode = scn.strategy == Strategy::kMu ? Mode::kMu : Mode::kSu;
  return lookup_profile(mode, scn.stations, scn.mcs);
}

AggregationLimits data_limits_for(const Scenario& scn) {
  const McsProfile profile = profile_for(scn);
  const std::int64_t extra = scn.strategy == Strategy::kMu ? proto::kHeIeBytes : 0;
  return compute_limits(profile, scn.segment, Direction::kDownlink, extra);
}

namespace {

CycleBreakdown assemble(const Scenario& scn, const McsProfile& profile,
                        bool multi_user) {
  validate_n(scn, profile);
  const AggregationLimits limits = data_limits_for(scn);

  const auto entry_times = [&](const AmpduEntry& e) {
    return multi_user ? data_exchange_mu(e.mpdus, e.msdus, profile, scn.segment)
                      : data_exchange_su(e.mpdus, e.msdus, profile, scn.segment);
  };
  const auto cost = [&](const AmpduSchedule& sched) {
    Duration sum;
    for (const AmpduEntry& e : sched.entries) sum += entry_times(e).cycle;
    return sum;
  };

  CycleBreakdown out;
  out.schedule = optimal_schedule(scn.n, limits, cost);
  out.access_overhead = proto::kAifsAp + proto::kBackoffAverage;
  out.ack_count = ack_count_for(scn.n, scn.delayed_acks);
  out.ack_mpdus = ceil_div(out.ack_count, proto::kAcksPerMpdu);

  Duration total = out.access_overhead;
  for (const AmpduEntry& e : out.schedule.entries) {
    const ExchangeTimes t = entry_times(e);
    out.data_cycles.push_back(t.cycle);
    out.ppdu_airtimes.push_back(t.ppdu);
    total += t.cycle;
  }

  const ExchangeTimes ack =
      multi_user ? ack_exchange_mu(out.ack_count, scn.stations, profile, scn.mu_ack_sifs)
                 : ack_exchange_su(out.ack_count, profile);
  out.ack_cycle = ack.cycle;
  out.ppdu_airtimes.push_back(ack.ppdu);
  total += ack.cycle;

  if (!multi_user) {
    out.teardown = profile.pr_legacy +
                   frame_airtime(proto::kCfEndBytes, profile.r_leg, profile.tsym_leg);
    total += out.teardown;
  }
  out.total = total;
  out.payload_bits =
      scn.n * scn.segment.tcp_payload_bytes * 8 * (multi_user ? scn.stations : 1);
  return out;
}

}  // namespace

CycleBreakdown goodput_strategy1(const Scenario& scn) {
  if (scn.strategy != Strategy::kSuReverseDirection) {
    throw ConfigError("goodput_strategy1 expects the SU reverse-direction strategy");
  }
  return assemble(scn, profile_for(scn), /*multi_user=*/false);
}

CycleBreakdown goodput_strategy3(const Scenario& scn) {
  if (scn.strategy != Strategy::kMu) {
    throw ConfigError("goodput_strategy3 expects the MU strategy");
  }
  return assemble(scn, profile_for(scn), /*multi_user=*/true);
}

CycleBreakdown evaluate(const Scenario& scn) {
  switch (scn.strategy) {
    case Strategy::kSuReverseDirection:
      return goodput_strategy1(scn);
    case Strategy::kMu:
      return goodput_strategy3(scn);
    case Strategy::kSuContention:
      throw ConfigError("the contention strategy has no closed form; use the simulator");
  }
  throw ConfigError("unknown strategy");
}

}  // namespace axtcp
