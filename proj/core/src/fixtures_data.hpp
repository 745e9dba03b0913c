#pragma once

#include <vector>

namespace darboux::detail {

struct FixtureEntry {
  const char* id;
  const char* text;  // JSON document
};

// Bundled verification documents, in catalogue order.
const std::vector<FixtureEntry>& fixture_table();

}  // namespace darboux::detail
