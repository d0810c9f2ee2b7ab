#pragma once

// Exact arithmetic for integral quadratic lattices given by a Gram matrix.

#include "k3lat/arith.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace k3lat {

// Integral lattice with a symmetric Gram matrix and labeled basis.
//
// Construction validates symmetry (naming the first offending entry, 1-based),
// evenness when `even` is requested, and nondegeneracy unless
// `allow_degenerate` is set. Immutable afterwards.
class GramLattice {
 public:
  GramLattice(IntMat gram, std::vector<std::string> labels, bool even = false,
              bool allow_degenerate = false);

  static GramLattice empty() { return GramLattice(); }

  int rank() const { return static_cast<int>(gram_.size()); }
  const IntMat& gram() const { return gram_; }
  const Integer& at(int i, int j) const { return gram_[i][j]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Whether the caller flagged the lattice even (validated at construction).
  bool flagged_even() const { return even_; }
  // Whether every diagonal entry is even.
  bool is_even() const;
  bool is_degenerate() const { return det_ == 0; }
  const Integer& det() const { return det_; }

  Integer pair(const IntVec& v, const IntVec& w) const;
  Integer square(const IntVec& v) const { return pair(v, v); }
  // Gram * v, i.e. the coordinates of the functional (v, .).
  IntVec apply(const IntVec& v) const;

  bool operator==(const GramLattice& o) const { return gram_ == o.gram_; }

 private:
  GramLattice() : det_(1) {}
  void check_length(const IntVec& v) const;

  IntMat gram_;
  std::vector<std::string> labels_;
  bool even_ = false;
  Integer det_;
};

using LatticePtr = std::shared_ptr<const GramLattice>;

// Coordinate vector living in a specific host lattice.
class LatticeVector {
 public:
  LatticeVector(LatticePtr host, IntVec coords);

  const GramLattice& host() const { return *host_; }
  const LatticePtr& host_ptr() const { return host_; }
  const IntVec& coords() const { return coords_; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }

  LatticeVector operator+(const LatticeVector& o) const;
  LatticeVector operator-(const LatticeVector& o) const;
  LatticeVector operator*(const Integer& k) const;
  bool operator==(const LatticeVector& o) const { return coords_ == o.coords_; }

 private:
  LatticePtr host_;
  IntVec coords_;
};

Integer pair(const LatticeVector& v, const LatticeVector& w);
Integer square(const LatticeVector& v);

bool is_primitive(const IntVec& v);
inline bool is_primitive(const LatticeVector& v) { return is_primitive(v.coords()); }
// Divides out the gcd of the coordinates; the zero vector is rejected.
IntVec primitive_part(const IntVec& v);

// Divisibility data d_i for an embedded sublattice: (b_i, L) = d_i Z, and the
// pairing image of L is assumed to be the diagonal lattice spanned by d_i b_i^*.
struct DivisibilityProfile {
  IntVec divisors;

  // Throws unless every d_i is positive and divides row i of the Gram matrix.
  void check_against(const GramLattice& lattice) const;
};

// gcd_i(d_i * x_i): the generator of the ideal (v, L).
Integer divisibility(const IntVec& v, const DivisibilityProfile& profile);
inline Integer divisibility(const LatticeVector& v, const DivisibilityProfile& profile) {
  return divisibility(v.coords(), profile);
}

// gcd of the entries of Gram * v: the ideal (v, L) when L is the whole lattice.
Integer ambient_divisibility(const GramLattice& lattice, const IntVec& v);

// (positive, negative) inertia by exact congruent diagonalization.
std::pair<int, int> signature(const GramLattice& lattice);
std::pair<int, int> signature(const IntMat& gram);

Integer determinant(const IntMat& m);
inline Integer determinant(const GramLattice& lattice) { return lattice.det(); }

struct DiscriminantGroup {
  std::vector<Integer> cyclic_orders;
  // q on the generator of each cyclic factor, reduced to [0, 2).
  std::vector<Rational> q_values;

  Integer order() const;
};

// L^* / L via the Smith normal form of the Gram matrix. Requires an even,
// nondegenerate lattice.
DiscriminantGroup discriminant_group(const GramLattice& lattice);

// Smith form D = U * A * V with U, V unimodular. Only V is recorded.
struct SmithForm {
  IntVec diagonal;
  IntMat right;  // V
};
SmithForm smith_normal_form(const IntMat& a);

GramLattice orthogonal_sum(const GramLattice& a, const GramLattice& b);

// One of "U", "E8", "minusE8", "rank1(k)" with k nonzero and even.
GramLattice standard_lattice(std::string_view name);
GramLattice hyperbolic_plane();
GramLattice e8_lattice();
GramLattice rank_one(const Integer& k);
// Scales every entry by k, keeping labels.
GramLattice scaled(const GramLattice& lattice, const Integer& k);

// M^T * G * M for square matrices of equal size.
IntMat congruent(const IntMat& gram, const IntMat& m);

}  // namespace k3lat
