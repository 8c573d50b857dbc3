#pragma once

#include <string>
#include <vector>

#include "lefschetz/presentation.hpp"

namespace corpus {

struct Entry {
  std::string name;
  lefschetz::GradedPresentation presentation;
};

/// Complete intersections and circulant examples.
std::vector<Entry> families();

/// Seeded random Artinian presentations with d <= 14, n in {1, 2}.
std::vector<Entry> random_presentations(int count, std::uint64_t seed = 1729);

/// families() followed by random_presentations(count).
std::vector<Entry> full(int random_count = 36);

}  // namespace corpus
