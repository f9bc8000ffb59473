#pragma once

#include <cstdint>
#include <vector>

#include "axtcp/units.hpp"

namespace axtcp {

enum class Mode { kSu, kMu };

// Protocol constants shared by the closed-form engine and the simulator.
namespace proto {

inline constexpr std::int64_t kMaxMpduBytes = 11454;
inline constexpr std::int64_t kMaxAmpduBytes = 4194304;
inline constexpr Duration kMaxPpduTime = Duration::us(5484);
inline constexpr std::int64_t kMaxMpdusPerAmpdu = 256;

// SERVICE and TAIL bits appended by the PHY to every transmission.
inline constexpr std::int64_t kServiceTailBits = 22;

// MAC header (28) + FCS (4) + MPDU delimiter (4).
inline constexpr std::int64_t kMpduOverheadBytes = 36;
// HE control element carried by every data MPDU in MU mode...
inline constexpr std::int64_t kHeIeBytes = 4;
// ...or, above this MPDU count, one unicast trigger MPDU instead.
inline constexpr std::int64_t kHeIeMpduLimit = 18;
inline constexpr std::int64_t kUnicastTfMpduBytes = 72;

// Block-ack frame sizes; the short frame covers up to 64 MPDUs.
inline constexpr std::int64_t kBackBytesShort = 30;
inline constexpr std::int64_t kBackBytesLong = 54;
inline constexpr std::int64_t kBackShortWindow = 64;

inline constexpr std::int64_t kCfEndBytes = 20;

// Multi-station block ack: base plus a per-station record whose size depends
// on the acknowledgment window (64 vs 256 MPDUs).
inline constexpr std::int64_t kMulBackBaseBytes = 22;
inline constexpr std::int64_t kMulBackPerStaShort = 12;
inline constexpr std::int64_t kMulBackPerStaLong = 36;

// Broadcast trigger frame: base plus 5 bytes per pair of stations.
inline constexpr std::int64_t kTfBaseBytes = 28;
inline constexpr std::int64_t kTfPerPairBytes = 5;

inline constexpr Duration kAifsAp = Duration::us(43);
inline constexpr Duration kAifsSta = Duration::us(52);
inline constexpr Duration kSifs = Duration::us(16);
inline constexpr Duration kSlot = Duration::us(9);
inline constexpr int kCwMin = 16;
// ((CW_min - 1) / 2) slots = 7.5 * 9 us, exact in ticks.
inline constexpr Duration kBackoffAverage =
    Duration::ticks((kCwMin - 1) * kSlot.in_ticks() / 2);

// TCP ack MSDUs per MPDU and the 256-MPDU block-ack window give the hard
// per-A-MPDU ack budget.
inline constexpr std::int64_t kAcksPerMpdu = 178;
inline constexpr std::int64_t kBackWindow = 256;
inline constexpr std::int64_t kMaxAcksPerAmpdu = kBackWindow * kAcksPerMpdu;

// On-air TCP ack MSDU: 48 bytes payload + 14 subheader, rounded up to 4.
inline constexpr std::int64_t kAckMsduBytes = 64;

}  // namespace proto

// One row of the rate/preamble tables. Rates are per spatial stream; in MU
// mode each station is served by exactly one stream.
struct McsProfile {
  Mode mode;
  int stations;
  int mcs;
  PhyRate r_dl;
  PhyRate r_ul;
  PhyRate r_leg;
  Duration pr_data_dl;  // preamble of the downlink data PPDU
  Duration pr_data_ul;  // preamble of the uplink data PPDU
  Duration pr_legacy;   // preamble of legacy control PPDUs
  Duration tsym_dl;
  Duration tsym_ul;
  Duration tsym_leg;
};

// TCP data segment sizing: on-air MSDU length (subheader included, padded to
// a multiple of 4 bytes) and how many such MSDUs one MPDU carries.
struct SegmentProfile {
  std::int64_t tcp_payload_bytes;
  std::int64_t msdu_bytes;
  std::int64_t msdus_per_mpdu;
};

inline constexpr SegmentProfile kSegment1460{1460, 1524, 7};
inline constexpr SegmentProfile kSegment464{464, 528, 21};
inline constexpr SegmentProfile kSegment208{208, 272, 42};

// Throws UnknownCombination for payload sizes outside {1460, 464, 208}.
const SegmentProfile& segment_profile_for(std::int64_t tcp_payload_bytes);

// Table lookup. SU is defined for stations in {1,4,8,16,32,64} (the row does
// not depend on the station count); MU for {4,8,16,32,64}. Throws
// UnavailableMcs for N/A cells and UnknownCombination otherwise.
McsProfile lookup_profile(Mode mode, int stations, int mcs);

// Largest basic rate not exceeding r_tcp, never below 6 Mbps.
PhyRate legacy_rate_for(PhyRate r_tcp);

// Airtime of a standalone frame: whole symbols covering payload bits plus
// the PHY service/tail bits. Preamble not included.
Duration frame_airtime(std::int64_t frame_bytes, PhyRate rate, Duration tsym);

// Every defined table row (12 SU rows at stations=1 plus 58 MU rows).
std::vector<McsProfile> all_profiles();

}  // namespace axtcp
