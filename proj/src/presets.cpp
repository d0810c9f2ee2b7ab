#include "k3lat/presets.hpp"

#include "k3lat/errors.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace k3lat {

namespace {

Preset k3_hilb(long n) {
  if (n < 1) throw ValidationError("k3-hilb-2n:<n> needs n >= 1");
  PicardData p = hilbert_square_picard(GramLattice({{Integer(2 * n)}}, {"f"}, true));
  Preset out;
  out.name = "k3-hilb-" + std::to_string(2 * n);
  out.lattice = std::make_shared<const GramLattice>(std::move(p.lattice));
  out.profile = std::move(p.profile);
  out.polarization = n == 1 ? IntVec{2, -1} : IntVec{1, -1};
  out.display = DisplayBasis::k3;
  return out;
}

Preset cubic(const CubicLatticeData& k) {
  PicardData p = abel_jacobi_transfer(k);
  Preset out;
  out.name = k.name;
  out.lattice = std::make_shared<const GramLattice>(std::move(p.lattice));
  out.profile = std::move(p.profile);
  out.polarization = IntVec{1, 0};
  out.cubic = k;
  out.display = DisplayBasis::cubic;
  out.notes.push_back("divisibility profile (2,1) on (g, " + k.t_label + ") is inferred, not stated");
  return out;
}

Preset plain(std::string name, GramLattice l) {
  Preset out;
  out.name = std::move(name);
  out.lattice = std::make_shared<const GramLattice>(std::move(l));
  return out;
}

std::string registry_list() {
  std::string s;
  for (const auto& n : preset_names()) s += (s.empty() ? "" : ", ") + n;
  return s;
}

Integer json_integer(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw ValidationError(where + ": expected an integer, got " + j.dump());
}

IntVec json_vector(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array()) throw ValidationError(where + ": expected an array");
  IntVec v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(json_integer(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

}  // namespace

Rank2Config Preset::rank2() const {
  if (!polarization)
    throw ValidationError(name + " has no polarization; cone computations need a rank-2 lattice with one");
  DivisibilityProfile p;
  if (profile) {
    p = *profile;
  } else {
    for (const auto& row : lattice->gram()) p.divisors.push_back(gcd(row));
  }
  return Rank2Config::make(name, *lattice, p, *polarization);
}

std::vector<std::string> preset_names() {
  return {"k3-hilb-2", "k3-hilb-4", "k3-hilb-8", "k3-hilb-2n:<n>", "cubic-8", "cubic-12", "cubic-14",
          "cubic-20",  "cubic-26",  "sigma-F0",  "sigma-F1",       "sigma-F4", "beauville", "U",
          "E8",        "minusE8"};
}

Preset resolve_preset(const std::string& name) {
  if (name == "k3-hilb-2") return k3_hilb(1);
  if (name == "k3-hilb-4") return k3_hilb(2);
  if (name == "k3-hilb-8") return k3_hilb(4);
  const std::string family = "k3-hilb-2n:";
  if (name.rfind(family, 0) == 0) {
    std::string rest = name.substr(family.size());
    long n = 0;
    std::size_t used = 0;
    try {
      n = std::stol(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size()) throw ValidationError("bad n in " + name);
    return k3_hilb(n);
  }
  for (const auto& k : cubic_presets())
    if (k.name == name) return cubic(k);
  for (const auto& s : section6_presets()) {
    if (s.name != name) continue;
    Preset out = plain(name, s.rho_lattice.lattice);
    out.profile = s.rho_lattice.profile;
    out.notes.push_back("Gram on the classes " + s.rho_labels[0] + ", " + s.rho_labels[1] +
                        " computed from the K3 intersection data");
    return out;
  }
  if (name == "beauville") {
    Preset out = plain(name, *build_beauville_lattice().lattice);
    return out;
  }
  if (name == "U" || name == "E8" || name == "minusE8") return plain(name, standard_lattice(name));
  throw ValidationError("unknown preset '" + name + "'; known presets: " + registry_list());
}

Preset parse_lattice_json(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ValidationError(source + ":" + std::to_string(line) + ": invalid JSON: " + e.what());
  }
  if (!j.is_object()) throw ValidationError(source + ": expected a JSON object");
  if (!j.contains("gram")) throw ValidationError(source + ": missing field 'gram'");
  const auto& g = j["gram"];
  if (!g.is_array() || g.empty()) throw ValidationError(source + ": field 'gram' must be a nonempty array of rows");
  IntMat gram;
  for (std::size_t i = 0; i < g.size(); ++i)
    gram.push_back(json_vector(g[i], source + ": gram[" + std::to_string(i) + "]"));
  if (j.contains("rank")) {
    Integer r = json_integer(j["rank"], source + ": rank");
    if (r != Integer(gram.size()))
      throw ValidationError(source + ": rank " + r.str() + " does not match " + std::to_string(gram.size()) +
                            " Gram rows");
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) throw ValidationError(source + ": field 'labels' must be an array of strings");
    for (const auto& l : j["labels"]) {
      if (!l.is_string()) throw ValidationError(source + ": field 'labels' must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  bool even = false;
  if (j.contains("even")) {
    if (!j["even"].is_boolean()) throw ValidationError(source + ": field 'even' must be a boolean");
    even = j["even"].get<bool>();
  }
  Preset out;
  std::filesystem::path p(source);
  out.name = p.stem().string().empty() ? source : p.stem().string();
  try {
    out.lattice = std::make_shared<const GramLattice>(GramLattice(std::move(gram), std::move(labels), even));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
  if (j.contains("profile")) {
    DivisibilityProfile prof{json_vector(j["profile"], source + ": profile")};
    if (static_cast<int>(prof.divisors.size()) != out.lattice->rank())
      throw ValidationError(source + ": profile length does not match rank");
    try {
      prof.check_against(*out.lattice);
    } catch (const ValidationError& e) {
      throw ValidationError(source + ": " + e.what());
    }
    out.profile = std::move(prof);
  }
  if (j.contains("polarization")) {
    IntVec pol = json_vector(j["polarization"], source + ": polarization");
    if (static_cast<int>(pol.size()) != out.lattice->rank())
      throw ValidationError(source + ": polarization length does not match rank");
    out.polarization = std::move(pol);
  }
  return out;
}

Preset load_lattice_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_lattice_json(ss.str(), path);
}

Preset resolve_input(const std::string& spec) {
  const bool looks_like_path = spec.find('/') != std::string::npos || spec.ends_with(".json");
  if (looks_like_path || (std::filesystem::exists(spec) && std::filesystem::is_regular_file(spec)))
    return load_lattice_file(spec);
  return resolve_preset(spec);
}

}  // namespace k3lat
