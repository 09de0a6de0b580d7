#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "persrep/graded.hpp"

namespace persrep {

struct Bar {
  std::uint64_t birth = 0;
  std::optional<std::uint64_t> death;  // nullopt is ∞
  std::uint64_t multiplicity = 1;

  friend bool operator==(const Bar&, const Bar&) = default;
};

// Sorted by birth, then death with ∞ last; equal intervals merged.
using Barcode = std::vector<Bar>;

// Requires G = ℕ and a field; throws Unsupported otherwise.
void require_barcode_input(const GradedPresentation& p);

// Rank of component(p,i) → component(p,j), i ≤ j.
std::size_t rank_invariant(const GradedPresentation& p, std::uint64_t i, std::uint64_t j);

// Largest generator or relation degree.
std::uint64_t stability_bound(const GradedPresentation& p);

Barcode barcode(const GradedPresentation& p);

// Number of bars (with multiplicity) containing every degree in [i, j].
std::size_t bars_containing(const Barcode& b, std::uint64_t i, std::uint64_t j);

nlohmann::json barcode_to_json(const Barcode& b);
// One row per bar over degrees 0..horizon, "[b,d)" label then a track.
std::string barcode_ascii(const Barcode& b, std::uint64_t horizon);

}  // namespace persrep
