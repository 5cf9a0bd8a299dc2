#include <algorithm>
#include <array>
#include <string>

#include "vpfair/errors.hpp"
#include "vpfair/metrics.hpp"

namespace vpfair {

std::string to_string(Level level) {
  switch (level) {
    case Level::low:
      return "low";
    case Level::medium:
      return "medium";
    case Level::high:
      return "high";
  }
  return "?";
}

MetricId recommend_metric(Level balance, Level bias) {
  // rows: balance low/medium/high; columns: bias low/medium/high
  static constexpr std::array<std::array<MetricId, 3>, 3> kTable{{
      {MetricId::ndd, MetricId::ndd, MetricId::ndd},
      {MetricId::ndd, MetricId::ndd, MetricId::ndkl},
      {MetricId::ndd, MetricId::ndkl, MetricId::ndkl},
  }};
  return kTable[static_cast<std::size_t>(balance)][static_cast<std::size_t>(bias)];
}

Level categorize_balance(std::size_t protected_count, std::size_t total, const BalanceThresholds& thresholds) {
  if (protected_count == 0 || protected_count >= total) {
    throw ArgumentError("categorize_balance: need 0 < protected < total (got " + std::to_string(protected_count) +
                        " of " + std::to_string(total) + ")");
  }
  const double share = static_cast<double>(protected_count) / static_cast<double>(total);
  const double balance = std::min(share, 1.0 - share) / 0.5;
  if (balance < thresholds.low_below) return Level::low;
  if (balance > thresholds.high_above) return Level::high;
  return Level::medium;
}

}  // namespace vpfair
