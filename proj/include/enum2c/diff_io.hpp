#pragma once

#include <string>
#include <vector>

#include "enum2c/engine.hpp"

namespace enum2c {

// Text form of one record.  A root record prints as "= v1 v2 ..."; an op
// record prints its ops space-separated, each op as a sign immediately
// followed by comma-separated vertex ids, e.g. "+0 -1" or "-3,4".
std::string format_record(const DiffRecord& r);

// Inverse of format_record over a whole document; throws StreamError on a
// line that does not match the grammar.
std::vector<DiffRecord> parse_diff_text(const std::string& text);

}  // namespace enum2c
