#include "k3lat/beauville.hpp"

#include "k3lat/errors.hpp"

namespace k3lat {

LatticeVector BeauvilleLattice::basis(int i) const {
  IntVec c(lattice->rank(), Integer(0));
  c.at(i) = 1;
  return LatticeVector(lattice, std::move(c));
}

LatticeVector BeauvilleLattice::e() const { return basis(e_index); }

BeauvilleLattice build_beauville_lattice() {
  auto relabel = [](GramLattice l, const std::string& prefix) {
    std::vector<std::string> labels;
    for (const auto& s : l.labels()) labels.push_back(prefix + s);
    return GramLattice(l.gram(), std::move(labels), l.flagged_even());
  };
  GramLattice acc = GramLattice::empty();
  for (int i = 1; i <= 3; ++i) acc = orthogonal_sum(acc, relabel(hyperbolic_plane(), "U" + std::to_string(i) + "."));
  for (int i = 1; i <= 2; ++i)
    acc = orthogonal_sum(acc, relabel(standard_lattice("minusE8"), "E8_" + std::to_string(i) + "."));
  acc = orthogonal_sum(acc, GramLattice({{-2}}, {"e"}, true));
  BeauvilleLattice out;
  out.e_index = acc.rank() - 1;
  out.lattice = std::make_shared<const GramLattice>(std::move(acc));
  return out;
}

OrbitInvariants orbit_invariants(const LatticeVector& v, const std::optional<DivisibilityProfile>& profile) {
  if (!is_primitive(v)) throw ValidationError("orbit invariants are defined for primitive vectors only");
  OrbitInvariants inv;
  inv.square = square(v);
  inv.divisibility = profile ? divisibility(v, *profile) : ambient_divisibility(v.host(), v.coords());
  return inv;
}

bool same_orbit(const LatticeVector& v, const LatticeVector& w) {
  return orbit_invariants(v) == orbit_invariants(w);
}

Integer riemann_roch(const Integer& q) {
  if (q % 2 != 0) throw ValidationError("Riemann-Roch needs an even square, got " + q.str());
  return (q + 4) * (q + 6) / 8;
}

Integer c2_pairing(const Integer& q) { return 30 * q; }

CurveClass curve_class_from_divisor(const GramLattice& lattice, const IntVec& rho,
                                    const DivisibilityProfile& profile, const IntVec& g) {
  if (!is_primitive(rho)) throw ValidationError("divisor class must be primitive");
  Integer rg = lattice.pair(rho, g);
  if (rg <= 0) throw ValidationError("divisor class is not in the positive halfspace (rho.g = " + rg.str() + ")");
  Integer div = divisibility(rho, profile);
  if (div != 1 && div != 2)
    throw ValidationError("divisibility " + div.str() + " is outside the K3^[2] taxonomy (expected 1 or 2)");
  CurveClass c;
  c.rho = rho;
  c.div = div;
  c.degree = ratio(rg, div);
  c.r_square = ratio(lattice.square(rho), div * div);
  return c;
}

PicardData hilbert_square_picard(const GramLattice& k3, int n) {
  if (n < 2) throw ValidationError("Hilbert scheme needs n >= 2");
  if (!k3.is_even()) throw ValidationError("K3 Picard lattice must be even");
  auto sig = signature(k3);
  if (sig.first != 1) throw ValidationError("K3 Picard lattice must be hyperbolic, signature (1, rank-1)");
  Integer e_sq = -2 * Integer(n - 1);
  GramLattice e_part({{e_sq}}, {"e"}, true);
  PicardData out{orthogonal_sum(k3, e_part), {}};
  out.profile.divisors.assign(k3.rank(), Integer(1));
  out.profile.divisors.push_back(-e_sq);
  return out;
}

namespace {

SigmaPreset make_sigma(std::string name, IntMat k3_gram, std::vector<std::string> k3_labels,
                       std::vector<IntVec> rho, std::vector<std::string> rho_labels) {
  SigmaPreset p{std::move(name),
                hilbert_square_picard(GramLattice(std::move(k3_gram), std::move(k3_labels), true)),
                std::move(rho),
                std::move(rho_labels),
                {GramLattice({{1}}, {"x"}), {}}};
  const GramLattice& host = p.k3_hilbert.lattice;
  IntMat g(2, IntVec(2));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g[i][j] = host.pair(p.rho[i], p.rho[j]);
  p.rho_lattice.lattice = GramLattice(std::move(g), p.rho_labels, true);
  for (const auto& r : p.rho) p.rho_lattice.profile.divisors.push_back(divisibility(r, p.k3_hilbert.profile));
  return p;
}

}  // namespace

std::vector<SigmaPreset> section6_presets() {
  std::vector<SigmaPreset> out;
  // F0: two elliptic pencils E1.E2 = 2; rho_i = E_i - e.
  out.push_back(make_sigma("sigma-F0", {{0, 2}, {2, 0}}, {"E1", "E2"}, {{1, 0, -1}, {0, 1, -1}},
                           {"rho1", "rho2"}));
  // F1: E.C = 2, C^2 = -2; rho0 = E - e, rho_{-1} = 2C - e.
  out.push_back(make_sigma("sigma-F1", {{0, 2}, {2, -2}}, {"E", "C"}, {{1, 0, -1}, {0, 2, -1}},
                           {"rho0", "rho-1"}));
  // F4: E.C = 1, C^2 = -2; rho0 = E - e, rho_{-4} = 2C + e.
  out.push_back(make_sigma("sigma-F4", {{0, 1}, {1, -2}}, {"E", "C"}, {{1, 0, -1}, {0, 2, 1}},
                           {"rho0", "rho-4"}));
  return out;
}

}  // namespace k3lat
