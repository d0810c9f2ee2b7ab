#pragma once

// Rank-2 Picard lattices of signature (1,1): E-classes, nodal classes, the
// predicted ample cone, the Weyl group of (-2)-reflections and the chamber
// structure cut out by (-10)-walls.
//
// Every ray lives in the open halfplane pair(., g) > 0 and is ordered by
// angle: r1 < r2 iff det(r1, r2) > 0. Square-zero rays of the positive cone
// may be irrational; they are carried exactly in Z[sqrt(D)] where
// D = b^2 - ac is minus the determinant of the form.

#include "k3lat/arith.hpp"
#include "k3lat/beauville.hpp"
#include "k3lat/qlattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

inline constexpr long kDefaultBound = 200;
inline constexpr long kDefaultMaxIters = 10000;

struct Rank2Config {
  std::string name;
  LatticePtr lattice;
  DivisibilityProfile profile;
  IntVec g;

  // Validates rank 2, evenness, signature (1,1), profile, square(g) > 0.
  static Rank2Config make(std::string name, GramLattice lattice, DivisibilityProfile profile, IntVec g);

  Integer pair(const IntVec& v, const IntVec& w) const { return lattice->pair(v, w); }
  Integer square(const IntVec& v) const { return lattice->square(v); }
  // c01^2 - c00 c11, positive for a hyperbolic form.
  Integer radicand() const;
};

// Ray with coordinates in Z[sqrt(D)].
struct Ray {
  Surd x, y;
  std::optional<IntVec> integral;  // primitive representative when rational
  Integer square;                  // of the primitive representative; 0 on irrational rays

  static Ray from_vector(const Rank2Config& cfg, const IntVec& v);
  bool is_integral() const { return integral.has_value(); }
  std::string str() const;
};

Surd det(const Ray& a, const Ray& b);
bool same_ray(const Ray& a, const Ray& b);
// Integer determinant of two coordinate vectors.
Integer det(const IntVec& a, const IntVec& b);

struct Boundary {
  Ray ray;
  bool closed = false;
  // Divisor class whose orthogonal wall this is; empty on a square-zero boundary.
  std::optional<IntVec> wall_of;
};

// Two-dimensional cone {lo <= v <= hi} in angular order.
struct ConeSector {
  Boundary lo, hi;

  bool contains(const Rank2Config& cfg, const IntVec& v) const;
  bool contains(const Ray& r, bool lo_closed, bool hi_closed) const;
  bool is_empty() const;
  bool same_as(const ConeSector& o) const;
};

enum class EKind { minus2_div1, minus2_div2, minus10_div2 };
std::string to_string(EKind k);

struct EClass {
  IntVec vector;
  EKind kind;
  Integer square;
  Integer div;
  bool nodal = false;
  CurveClass curve;
};

// All v with square(v) = c and |x|,|y| <= bound, no halfspace cut.
std::vector<IntVec> representations(const GramLattice& lattice, const Integer& c, long bound,
                                    bool primitive_only);

// Primitive v with square c, pair(v, g) > 0, |x|,|y| <= bound, in angular order.
std::vector<IntVec> enumerate_square(const Rank2Config& cfg, const Integer& c, long bound);

void sort_angular(std::vector<IntVec>& vs);

// Solutions of 2n x^2 - 2y^2 = c, i.e. y^2 - n x^2 = -c/2.
//
// For non-square n the seeds are the solutions with y + x sqrt(n) in the
// closed period [sqrt|N|, eps sqrt|N|], eps = p + q sqrt(n) the fundamental
// unit, and every solution is +-M^k(seed). For square n the solution set is
// finite: seeds lists every solution (primitive ones only when c = 0) and the
// recurrence is the identity.
struct PellFamily {
  Integer n;
  Integer c;
  std::vector<IntVec> seeds;
  IntMat recurrence;  // acts on column vectors (x, y)
  bool finite = false;

  // Every solution with |x|,|y| <= bound, sorted lexicographically.
  std::vector<IntVec> members(long bound) const;
};

PellFamily pell_family(const Integer& n, const Integer& c);
// Smallest (p, q) with p^2 - n q^2 = 1, q > 0; n must not be a square.
std::pair<Integer, Integer> fundamental_unit(const Integer& n);

std::vector<EClass> e_classes(const Rank2Config& cfg, long bound);

ConeSector positive_cone(const Rank2Config& cfg);

// Nodal subset of E; revalidated at 2 * bound.
std::vector<EClass> nodal_classes(const Rank2Config& cfg, long bound);

struct Decomposition {
  bool in_cone = false;
  bool decomposable = false;
  std::optional<std::pair<IntVec, IntVec>> witness;
};

// The closed cone spanned by the positive cone and the rays of E (divisor side).
ConeSector effective_curve_cone(const Rank2Config& cfg, long bound);

Decomposition is_decomposable_in_monoid(const Rank2Config& cfg, const IntVec& v, long bound);

// Positive cone cut by pair(., rho) > 0 for every nodal rho.
ConeSector ample_cone(const Rank2Config& cfg, long bound);

// s_rho(v) = v + (v, rho) rho for a (-2)-class rho.
IntVec weyl_reflect(const GramLattice& lattice, const IntVec& v, const IntVec& rho);

// Primitive wall rho^perp oriented into the positive halfspace.
IntVec wall_vector(const Rank2Config& cfg, const IntVec& rho);

// Intersects the sector with the halfplane pair(., rho) > 0 (or >= 0) on g's side.
ConeSector cut(const Rank2Config& cfg, const ConeSector& sector, const IntVec& rho, bool closed);

struct FundamentalDomain {
  ConeSector sector;
  std::vector<IntVec> walls;  // every (-2)-class of E found within the bound
};

FundamentalDomain fundamental_domain(const Rank2Config& cfg, long bound);

struct Reduction {
  IntVec result;
  std::vector<IntVec> word;  // reflections applied, first to last
};

Reduction reduce_to_fundamental(const Rank2Config& cfg, const IntVec& v, long max_iters,
                                long bound = kDefaultBound);

struct Chamber {
  ConeSector sector;
  bool contains_g = false;
};

struct ChamberDecomposition {
  ConeSector domain;
  std::vector<IntVec> walls;  // (-10)-classes whose walls cross the interior of the domain
  std::vector<Chamber> chambers;
  bool wall_set_stable = true;  // same walls at 2 * bound
};

ChamberDecomposition chambers(const Rank2Config& cfg, long bound);

// Primitive integral square-zero classes in the positive halfspace, in angular order.
std::vector<IntVec> square_zero_classes(const Rank2Config& cfg);

}  // namespace k3lat
