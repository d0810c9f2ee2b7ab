#pragma once

// Named lattices and configurations, and the JSON lattice file format.

#include "k3lat/beauville.hpp"
#include "k3lat/cone.hpp"
#include "k3lat/cubic.hpp"
#include "k3lat/qlattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

enum class DisplayBasis { raw, k3, cubic };

struct Preset {
  std::string name;
  LatticePtr lattice;
  std::optional<DivisibilityProfile> profile;
  std::optional<IntVec> polarization;
  std::optional<CubicLatticeData> cubic;
  DisplayBasis display = DisplayBasis::raw;
  std::vector<std::string> notes;

  // Throws ValidationError when the preset cannot carry cone computations.
  Rank2Config rank2() const;
};

std::vector<std::string> preset_names();
// k3-hilb-2n:<n> is accepted for any n >= 1.
Preset resolve_preset(const std::string& name);

// {"rank": n, "gram": [[...]], "labels": [...], "even": bool, "profile": [...],
//  "polarization": [...]}; only gram is required.
Preset parse_lattice_json(const std::string& text, const std::string& source);
Preset load_lattice_file(const std::string& path);

// A preset name, or a path to a lattice file.
Preset resolve_input(const std::string& spec);

}  // namespace k3lat
