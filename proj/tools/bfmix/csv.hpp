#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "bfmix/scan.hpp"

namespace bfmix::cli {

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_field(std::string_view value);

/// %.17g; NaN as "nan", infinities as "inf" / "-inf".
std::string csv_number(double value);

/// Header row then one line per row, LF endings.
void write_csv(std::ostream& out, const scan::ScanTable& table);

}  // namespace bfmix::cli
