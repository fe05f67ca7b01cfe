#pragma once

#include <span>
#include <string>
#include <vector>

namespace frontier {

/// Shortest decimal text that parses back to exactly `value`.
std::string format_exact(double value);

/// Fixed-point text with `decimals` digits; negative zero prints as zero.
std::string format_fixed(double value, int decimals);

/// Fixed-point text for shares of a whole (largest-remainder rounding): each
/// entry is within one display unit of its own value, and the displayed
/// entries add up to the rounded total of `values`. Non-negative inputs only.
std::vector<std::string> format_shares(std::span<const double> values, int decimals);

}  // namespace frontier
