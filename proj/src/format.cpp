#include "frontier/format.hpp"

#include <array>
#include <charconv>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace frontier {

std::string format_exact(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), res.ptr);
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 400> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                           std::chars_format::fixed, decimals);
  std::string text(buf.data(), res.ptr);
  if (text.starts_with('-') && text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

std::vector<std::string> format_shares(std::span<const double> values, int decimals) {
  const double scale = std::pow(10.0, decimals);
  std::vector<double> units(values.size());
  std::vector<double> remainders(values.size());
  double total = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double scaled = values[i] * scale;
    units[i] = std::floor(scaled);
    remainders[i] = scaled - units[i];
    total += scaled;
  }
  const double floor_sum = std::accumulate(units.begin(), units.end(), 0.0);
  auto missing = static_cast<std::size_t>(std::max(0.0, std::round(total) - floor_sum));

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainders[a] > remainders[b];
  });
  for (std::size_t k = 0; k < order.size() && missing > 0; ++k, --missing) units[order[k]] += 1.0;

  std::vector<std::string> out;
  out.reserve(values.size());
  for (double u : units) out.push_back(format_fixed(u / scale, decimals));
  return out;
}

}  // namespace frontier
