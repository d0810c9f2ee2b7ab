#pragma once

// Special cubic fourfolds: the lattice <h^2, T>, its image in the Fano
// variety of lines, and scroll arithmetic.

#include "k3lat/arith.hpp"
#include "k3lat/beauville.hpp"
#include "k3lat/cone.hpp"
#include "k3lat/qlattice.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace k3lat {

struct CubicLatticeData {
  std::string name;
  Integer h2_sq = 3;
  Integer b;     // <h^2, T>
  Integer t_sq;  // <T, T>
  Integer disc;  // 3 t_sq - b^2
  std::string t_label = "tau";

  // Checks disc > 6 and disc = 0, 2 mod 6.
  static CubicLatticeData make(const Integer& b, const Integer& t_sq, std::string name = {},
                               std::string t_label = "tau");
};

// Gram on (g, tau) with profile (2,1): (g,g)=6, (g,tau)=2b, (tau,tau)=b^2-t_sq.
PicardData abel_jacobi_transfer(const CubicLatticeData& k);
// Rank2Config for the transferred lattice, polarized by g = (1,0).
Rank2Config fano_config(const CubicLatticeData& k);

std::vector<CubicLatticeData> cubic_presets();

Integer scroll_self_intersection(const Integer& n, const Integer& delta);
Integer delta_from_ruling(const Integer& n, const Rational& r_square);
Rational ruling_square(const Integer& n, const Integer& delta);
Integer scroll_discriminant(const Integer& n, const Integer& delta);
Integer delta_min(const Integer& n);
// Ascending, nonnegative only.
std::vector<Integer> nodal_deltas(const Integer& n);
bool admissible_discriminant(const Integer& d);

struct ScrollRecord {
  Integer n;
  Integer delta;
  Integer self_int;
  Integer disc;
  Rational r_square;
  std::optional<Integer> unirat_deg;
  std::vector<std::string> warnings;
};

// Rows for n = 2..n_max. With speculative, also every non-nodal delta with
// delta_min(n) <= delta < C(n-2,2), each tagged "speculative".
std::vector<ScrollRecord> nodal_scroll_table(int n_max, bool speculative = false);
// One record for an arbitrary (n, delta), with warnings.
ScrollRecord scroll_record(const Integer& n, const Integer& delta);

struct UnirationalAssumptions {
  bool not_cone = false;
  bool isolated_singularities = false;
};

inline constexpr const char* kUnirationalHypothesis =
    "the degree formula holds only for a scroll that is not a cone and has isolated singularities";

// C(n-2,2) - delta. Refuses unless both assumptions are asserted.
Integer unirational_degree(const Integer& n, const Integer& delta, const UnirationalAssumptions& a);

// rho with (rho,g) = 2n, (rho,tau) = 2t.
IntVec ruling_class(const Rank2Config& fano, const Integer& n, const Integer& t);

struct NodalDecomposition {
  Rational a, b;
  bool outside = false;  // min(a,b) < 0 and (rho,rho) < 0
};
NodalDecomposition decompose_in_nodal_basis(const GramLattice& lattice, const IntVec& rho, const IntVec& nodal1,
                                            const IntVec& nodal2);

// M acts on coordinate columns; true iff M^T G M = G.
bool isometry_check(const IntMat& m, const IntMat& gram);

std::string scroll_tsv(const std::vector<ScrollRecord>& rows);
nlohmann::json to_json(const ScrollRecord& r);

}  // namespace k3lat
