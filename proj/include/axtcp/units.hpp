#pragma once

#include <cstdint>

namespace axtcp {

inline constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return (a + b - 1) / b;
}

// Time is kept as an integer count of 0.01 us ticks. Every duration in the
// model (4/13.6/14.4 us symbols, 64.8..136.8 us preambles, the 67.5 us mean
// backoff) is an exact multiple of the tick, so cycle lengths never touch
// floating point.
class Duration {
 public:
  constexpr Duration() = default;

  static constexpr Duration ticks(std::int64_t t) { return Duration(t); }
  static constexpr Duration us(std::int64_t v) { return Duration(v * 100); }
  static constexpr Duration tenths_us(std::int64_t v) { return Duration(v * 10); }

  constexpr std::int64_t in_ticks() const { return ticks_; }
  constexpr double in_us() const { return static_cast<double>(ticks_) / 100.0; }
  constexpr double in_ms() const { return static_cast<double>(ticks_) / 100000.0; }

  friend constexpr Duration operator+(Duration a, Duration b) {
    return Duration(a.ticks_ + b.ticks_);
  }
  friend constexpr Duration operator-(Duration a, Duration b) {
    return Duration(a.ticks_ - b.ticks_);
  }
  friend constexpr Duration operator*(Duration a, std::int64_t k) {
    return Duration(a.ticks_ * k);
  }
  friend constexpr Duration operator*(std::int64_t k, Duration a) { return a * k; }
  constexpr Duration& operator+=(Duration o) {
    ticks_ += o.ticks_;
    return *this;
  }
  friend constexpr bool operator==(Duration a, Duration b) = default;
  friend constexpr auto operator<=>(Duration a, Duration b) = default;

 private:
  constexpr explicit Duration(std::int64_t t) : ticks_(t) {}
  std::int64_t ticks_ = 0;
};

// PHY rates as integer tenths of Mbps. One tick times one rate unit is
// exactly one millibit, which keeps the symbol-count ceilings below exact.
class PhyRate {
 public:
  constexpr PhyRate() = default;

  static constexpr PhyRate tenths_mbps(std::int64_t v) { return PhyRate(v); }
  static constexpr PhyRate mbps(std::int64_t v) { return PhyRate(v * 10); }

  constexpr std::int64_t in_tenths_mbps() const { return units_; }
  constexpr double in_mbps() const { return static_cast<double>(units_) / 10.0; }

  friend constexpr bool operator==(PhyRate a, PhyRate b) = default;
  friend constexpr auto operator<=>(PhyRate a, PhyRate b) = default;

 private:
  constexpr explicit PhyRate(std::int64_t u) : units_(u) {}
  std::int64_t units_ = 0;
};

// Millibits carried by one OFDM symbol of length `tsym` at `rate`.
inline constexpr std::int64_t millibits_per_symbol(Duration tsym, PhyRate rate) {
  return tsym.in_ticks() * rate.in_tenths_mbps();
}

// Number of whole OFDM symbols needed for `bits` payload bits.
inline constexpr std::int64_t symbols_for_bits(std::int64_t bits, Duration tsym,
                                               PhyRate rate) {
  return ceil_div(bits * 1000, millibits_per_symbol(tsym, rate));
}

}  // namespace axtcp
