#pragma once

// Text renderings used by the command-line tool. Fractions appear as
// "num/den" next to 6-significant-digit decimals; JSON carries exact
// {"num": .., "den": ..} pairs.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rgvss/analytic.hpp"
#include "rgvss/oracle.hpp"

namespace rgvss::report {

enum class Format { kMarkdown, kCsv, kJson };

Format parse_format(std::string_view text);

nlohmann::json fraction_json(const Ratio& r);

std::string contrast_table(const std::vector<analytic::ContrastRow>& rows, Format format,
                           bool show_transmissions);

std::string corrigendum(const std::vector<analytic::CorrigendumRow>& rows, Format format);

/// Per-entry comparison of closed form, enumeration and Monte Carlo.
std::string verify(const oracle::VerifyReport& report, Format format);

}  // namespace rgvss::report
