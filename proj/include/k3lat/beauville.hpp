#pragma once

// Lattices of fourfolds of K3^[2] type: the Beauville lattice, orbit
// invariants of primitive vectors, curve/divisor duality, Riemann-Roch and
// Picard lattices of Hilbert squares.

#include "k3lat/qlattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

struct BeauvilleLattice {
  LatticePtr lattice;  // U^3 + (-E8)^2 + <-2>
  int e_index = 22;

  LatticeVector e() const;
  LatticeVector basis(int i) const;
};

BeauvilleLattice build_beauville_lattice();

struct OrbitInvariants {
  Integer square;
  Integer divisibility;

  bool operator==(const OrbitInvariants&) const = default;
};

// Primitive v only. Without a profile the ideal (v, L) is read off Gram * v.
OrbitInvariants orbit_invariants(const LatticeVector& v,
                                 const std::optional<DivisibilityProfile>& profile = std::nullopt);
bool same_orbit(const LatticeVector& v, const LatticeVector& w);

// chi(F, L(v)) = (q+4)(q+6)/8 for a fourfold of K3^[2] type, q = (v,v) even.
Integer riemann_roch(const Integer& q);
// c_2(F).v.v = 30 (v,v).
Integer c2_pairing(const Integer& q);

// Curve class R attached to a divisor class rho: div * R.v = (v, rho).
struct CurveClass {
  IntVec rho;
  Integer div;       // 1 or 2
  Rational degree;   // R.g
  Rational r_square; // (R,R) = (rho,rho) / div^2
};

CurveClass curve_class_from_divisor(const GramLattice& lattice, const IntVec& rho,
                                    const DivisibilityProfile& profile, const IntVec& g);

struct PicardData {
  GramLattice lattice;
  DivisibilityProfile profile;
};

// Pic(S) + <-2(n-1)>. K3 classes get divisibility 1, e gets 2(n-1).
PicardData hilbert_square_picard(const GramLattice& k3, int n = 2);

struct SigmaPreset {
  std::string name;          // sigma-F0, sigma-F1, sigma-F4
  PicardData k3_hilbert;     // Pic(S^[2]) in the basis (E, C or E2, e)
  std::vector<IntVec> rho;   // the two rho-classes in that basis
  std::vector<std::string> rho_labels;
  PicardData rho_lattice;    // Gram and divisibilities on the rho-classes
};

// The three double-cover examples (Sigma = F0, F1, F4). Grams on the
// rho-classes are computed from the K3 intersection data, not tabulated.
std::vector<SigmaPreset> section6_presets();

}  // namespace k3lat
