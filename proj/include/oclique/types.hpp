#pragma once

#include <cstddef>
#include <cstdint>

namespace oclique {

using Vertex = std::size_t;

// Arc counts are exact integers everywhere; no floating point leaks into
// stored values. Wide enough for every index this project can reach.
using ArcCount = std::uint64_t;

}  // namespace oclique
