#include "axtcp/phy_tables.hpp"

#include <array>
#include <string>

#include "axtcp/errors.hpp"

namespace axtcp {
namespace {

constexpr Duration kTsymHe = Duration::tenths_us(136);     // 12.8 us + 0.8 us GI
constexpr Duration kTsymHeLongGi = Duration::tenths_us(144);  // 12.8 us + 1.6 us GI
constexpr Duration kTsymLegacy = Duration::tenths_us(40);
constexpr Duration kPrLegacy = Duration::tenths_us(200);
constexpr Duration kPrHeSu = Duration::tenths_us(648);

// Tenths of Mbps, 160 MHz, 4 spatial streams, GI 0.8 us.
constexpr std::array<std::int64_t, 12> kSuRates = {
    2882, 5765, 8647, 11529, 17294, 23059, 25941, 28824, 34588, 38481, 43235, 48039};

struct MuRow {
  std::int64_t ul_rate;    // tenths of Mbps per spatial stream, GI 1.6 us
  std::int64_t ul_pr;      // tenths of us
  std::int64_t dl_rate;    // tenths of Mbps per spatial stream, GI 0.8 us
  std::int64_t dl_pr;      // tenths of us
  std::int64_t leg_rate;   // tenths of Mbps
};

constexpr std::int64_t kNa = -1;

constexpr std::array<MuRow, 12> kMu4 = {{
    {681, 648, 721, 728, 480},
    {1361, 648, 1441, 728, 480},
    {2042, 648, 2162, 688, 480},
    {2722, 648, 2882, 688, 480},
    {4083, 648, 4324, 688, 480},
    {5444, 648, 5765, 688, 480},
    {6125, 648, 6485, 688, 480},
    {6806, 648, 7206, 688, 480},
    {8167, 648, 8647, 688, 480},
    {9074, 648, 9607, 688, 480},
    {10208, 648, 10804, 688, 480},
    {11342, 648, 12010, 688, 480},
}};

constexpr std::array<MuRow, 12> kMu8 = {{
    {340, 648, 360, 768, 360},
    {681, 648, 721, 768, 480},
    {1021, 648, 1081, 728, 480},
    {1361, 648, 1441, 728, 480},
    {2042, 648, 2162, 688, 480},
    {2722, 648, 2882, 688, 480},
    {3063, 648, 3243, 688, 480},
    {3403, 648, 3603, 688, 480},
    {4083, 648, 4324, 688, 480},
    {4537, 648, 4804, 688, 480},
    {5104, 648, 5404, 688, 480},
    {5671, 648, 6004, 688, 480},
}};

constexpr std::array<MuRow, 12> kMu16 = {{
    {163, 648, 172, 848, 120},
    {325, 648, 344, 848, 120},
    {488, 648, 516, 768, 240},
    {650, 648, 688, 768, 480},
    {975, 648, 1032, 728, 480},
    {1300, 648, 1376, 728, 480},
    {1463, 648, 1549, 728, 480},
    {1625, 648, 1721, 728, 480},
    {1950, 648, 2065, 728, 480},
    {2167, 648, 2294, 728, 480},
    {2438, 648, 2581, 728, 480},
    {2708, 648, 2868, 728, 480},
}};

constexpr std::array<MuRow, 12> kMu32 = {{
    {81, 648, 86, 1048, 60},
    {163, 648, 172, 1048, 120},
    {244, 648, 258, 848, 240},
    {325, 648, 344, 848, 240},
    {488, 648, 516, 808, 480},
    {650, 648, 688, 808, 480},
    {731, 648, 774, 808, 480},
    {813, 648, 860, 808, 480},
    {975, 648, 1032, 808, 480},
    {1083, 648, 1147, 808, 480},
    {1219, 648, 1290, 808, 480},
    {1354, 648, 1434, 808, 480},
}};

constexpr std::array<MuRow, 12> kMu64 = {{
    {35, 648, 38, 1368, 60},
    {71, 648, 75, 1368, 60},
    {106, 648, 113, 1008, 90},
    {142, 648, 150, 1008, 120},
    {213, 648, 225, 888, 180},
    {283, 648, 300, 888, 240},
    {319, 648, 338, 888, 240},
    {354, 648, 375, 888, 240},
    {425, 648, 450, 888, 360},
    {472, 648, 500, 888, 360},
    {kNa, kNa, kNa, kNa, kNa},
    {kNa, kNa, kNa, kNa, kNa},
}};

const std::array<MuRow, 12>* mu_block(int stations) {
  switch (stations) {
    case 4:
      return &kMu4;
    case 8:
      return &kMu8;
    case 16:
      return &kMu16;
    case 32:
      return &kMu32;
    case 64:
      return &kMu64;
    default:
      return nullptr;
  }
}

bool valid_su_stations(int s) {
  return s == 1 || s == 4 || s == 8 || s == 16 || s == 32 || s == 64;
}

McsProfile su_profile(int stations, int mcs) {
  const PhyRate rate = PhyRate::tenths_mbps(kSuRates[static_cast<std::size_t>(mcs)]);
  return McsProfile{
      .mode = Mode::kSu,
      .stations = stations,
      .mcs = mcs,
      .r_dl = rate,
      .r_ul = rate,
      .r_leg = PhyRate::mbps(48),
      .pr_data_dl = kPrHeSu,
      .pr_data_ul = kPrHeSu,
      .pr_legacy = kPrLegacy,
      .tsym_dl = kTsymHe,
      .tsym_ul = kTsymHe,
      .tsym_leg = kTsymLegacy,
  };
}

McsProfile mu_profile(int stations, int mcs, const MuRow& row) {
  return McsProfile{
      .mode = Mode::kMu,
      .stations = stations,
      .mcs = mcs,
      .r_dl = PhyRate::tenths_mbps(row.dl_rate),
      .r_ul = PhyRate::tenths_mbps(row.ul_rate),
      .r_leg = PhyRate::tenths_mbps(row.leg_rate),
      .pr_data_dl = Duration::tenths_us(row.dl_pr),
      .pr_data_ul = Duration::tenths_us(row.ul_pr),
      .pr_legacy = kPrLegacy,
      .tsym_dl = kTsymHe,
      .tsym_ul = kTsymHeLongGi,
      .tsym_leg = kTsymLegacy,
  };
}

}  // namespace

const SegmentProfile& segment_profile_for(std::int64_t tcp_payload_bytes) {
  switch (tcp_payload_bytes) {
    case 1460:
      return kSegment1460;
    case 464:
      return kSegment464;
    case 208:
      return kSegment208;
    default:
      throw UnknownCombination("unsupported TCP segment size: " +
                               std::to_string(tcp_payload_bytes) +
                               " (expected 1460, 464 or 208)");
  }
}

McsProfile lookup_profile(Mode mode, int stations, int mcs) {
  if (mcs < 0 || mcs > 11) {
    throw UnknownCombination("MCS out of range: " + std::to_string(mcs));
  }
  if (mode == Mode::kSu) {
    if (!valid_su_stations(stations)) {
      throw UnknownCombination("unsupported station count: " +
                               std::to_string(stations));
    }
    return su_profile(stations, mcs);
  }
  const auto* block = mu_block(stations);
  if (block == nullptr) {
    throw UnknownCombination("unsupported MU station count: " +
                             std::to_string(stations));
  }
  const MuRow& row = (*block)[static_cast<std::size_t>(mcs)];
  if (row.ul_rate == kNa) {
    throw UnavailableMcs("MCS " + std::to_string(mcs) + " unavailable at " +
                         std::to_string(stations) + " stations");
  }
  return mu_profile(stations, mcs, row);
}

PhyRate legacy_rate_for(PhyRate r_tcp) {
  // Basic rates observed in use; 6 Mbps is the floor.
  static constexpr std::int64_t kBasicTenths[] = {60, 90, 120, 180, 240, 360, 480};
  std::int64_t best = 60;
  for (std::int64_t b : kBasicTenths) {
    if (b <= r_tcp.in_tenths_mbps()) best = b;
  }
  return PhyRate::tenths_mbps(best);
}

Duration frame_airtime(std::int64_t frame_bytes, PhyRate rate, Duration tsym) {
  const std::int64_t bits = frame_bytes * 8 + proto::kServiceTailBits;
  return tsym * symbols_for_bits(bits, tsym, rate);
}

std::vector<McsProfile> all_profiles() {
  std::vector<McsProfile> rows;
  for (int mcs = 0; mcs <= 11; ++mcs) rows.push_back(su_profile(1, mcs));
  for (int stations : {4, 8, 16, 32, 64}) {
    const auto* block = mu_block(stations);
    for (int mcs = 0; mcs <= 11; ++mcs) {
      const MuRow& row = (*block)[static_cast<std::size_t>(mcs)];
      if (row.ul_rate == kNa) continue;
      rows.push_back(mu_profile(stations, mcs, row));
    }
  }
  return rows;
}

}  // namespace axtcp
