#include "k3lat/cubic.hpp"

#include "k3lat/errors.hpp"

#include <algorithm>
#include <set>

namespace k3lat {

namespace {

struct Nonexistent {
  int n, delta;
};
constexpr Nonexistent kNoScroll[] = {{5, 2}, {6, 4}, {6, 5}, {7, 5}};

Integer choose2(const Integer& k) { return k < 2 ? Integer(0) : k * (k - 1) / 2; }

void require_n(const Integer& n, int lowest) {
  if (n < lowest) throw ValidationError("scroll degree must be at least " + std::to_string(lowest));
}

std::optional<Integer> unirat_value(const Integer& n, const Integer& delta) {
  Integer v = choose2(n - 2) - delta;
  if (v <= 0) return std::nullopt;
  return v;
}

ScrollRecord base_record(const Integer& n, const Integer& delta) {
  ScrollRecord r;
  r.n = n;
  r.delta = delta;
  r.self_int = scroll_self_intersection(n, delta);
  r.disc = scroll_discriminant(n, delta);
  r.r_square = ruling_square(n, delta);
  r.unirat_deg = unirat_value(n, delta);
  return r;
}

// An index-2 overlattice of <h^2, T> exists numerically when (k h^2 + T)/2
// pairs integrally with itself and h^2 and the quotient discriminant is admissible.
bool may_be_unsaturated(const Integer& n, const Integer& t, const Integer& d) {
  if (d % 4 != 0 || !admissible_discriminant(d / 4)) return false;
  for (int k = 0; k < 4; ++k) {
    if ((Integer(k) - n) % 2 != 0) continue;
    if ((t + 2 * k * n + 3 * k * k) % 4 == 0) return true;
  }
  return false;
}

}  // namespace

CubicLatticeData CubicLatticeData::make(const Integer& b, const Integer& t_sq, std::string name,
                                        std::string t_label) {
  CubicLatticeData k;
  k.b = b;
  k.t_sq = t_sq;
  k.disc = 3 * t_sq - b * b;
  if (!admissible_discriminant(k.disc))
    throw ValidationError("discriminant " + k.disc.str() + " is not admissible (need d > 6, d = 0 or 2 mod 6)");
  k.name = name.empty() ? "cubic-" + k.disc.str() : std::move(name);
  k.t_label = std::move(t_label);
  return k;
}

PicardData abel_jacobi_transfer(const CubicLatticeData& k) {
  // T = (b/3) h^2 + T0; alpha doubles h^2 and negates the primitive part.
  IntMat gram{{2 * k.h2_sq, 2 * k.b}, {2 * k.b, k.b * k.b - k.t_sq}};
  return {GramLattice(std::move(gram), {"g", k.t_label}, true), DivisibilityProfile{{2, 1}}};
}

Rank2Config fano_config(const CubicLatticeData& k) {
  PicardData p = abel_jacobi_transfer(k);
  return Rank2Config::make(k.name, std::move(p.lattice), std::move(p.profile), {1, 0});
}

std::vector<CubicLatticeData> cubic_presets() {
  return {
      CubicLatticeData::make(1, 3),
      CubicLatticeData::make(3, 7),
      CubicLatticeData::make(4, 10),
      CubicLatticeData::make(4, 12, "cubic-20", "v"),
      CubicLatticeData::make(5, 17),
  };
}

Integer scroll_self_intersection(const Integer& n, const Integer& delta) {
  require_n(n, 1);
  if (delta < 0) throw ValidationError("number of double points must be nonnegative");
  return 3 * n - 2 + 2 * delta;
}

Integer delta_from_ruling(const Integer& n, const Rational& r_square) {
  require_n(n, 1);
  Rational d = (Rational(n * n - 6 * n + 4) - 2 * r_square) / 4;
  if (denominator(d) != 1)
    throw ValidationError("(R,R) = " + to_string(r_square) + " is incompatible with degree " + n.str() +
                          ": double-point count " + to_string(d) + " is not an integer");
  if (d < 0)
    throw ValidationError("(R,R) = " + to_string(r_square) + " is incompatible with degree " + n.str() +
                          ": double-point count " + to_string(d) + " is negative");
  return numerator(d);
}

Rational ruling_square(const Integer& n, const Integer& delta) {
  return Rational(n * n - 6 * n + 4 - 4 * delta, 2);
}

Integer scroll_discriminant(const Integer& n, const Integer& delta) {
  require_n(n, 2);
  return 6 * delta - (n * n - 9 * n + 6);
}

Integer delta_min(const Integer& n) {
  require_n(n, 2);
  return ceil(Rational(n * n - 9 * n + 6, 6) + 1);
}

std::vector<Integer> nodal_deltas(const Integer& n) {
  require_n(n, 2);
  const Integer m = n / 2;
  std::set<Integer> out;
  if (n % 2 == 0) {
    out.insert((m - 2) * (m - 1));
  } else {
    out.insert((m - 1) * (m - 1));
    out.insert(m * (m - 2));
  }
  std::vector<Integer> v;
  for (const auto& d : out)
    if (d >= 0) v.push_back(d);
  return v;
}

bool admissible_discriminant(const Integer& d) {
  if (d <= 6) return false;
  Integer r = d % 6;
  return r == 0 || r == 2;
}

std::vector<ScrollRecord> nodal_scroll_table(int n_max, bool speculative) {
  if (n_max < 2) throw ValidationError("n_max must be at least 2");
  std::vector<ScrollRecord> rows;
  for (int n = 2; n <= n_max; ++n) {
    const Integer nn(n);
    const auto nodal = nodal_deltas(nn);
    std::set<Integer> deltas(nodal.begin(), nodal.end());
    if (speculative) {
      Integer lo = std::max(delta_min(nn), Integer(0));
      for (Integer d = lo; d < choose2(nn - 2); ++d) deltas.insert(d);
    }
    for (const auto& d : deltas) {
      ScrollRecord r = base_record(nn, d);
      if (std::find(nodal.begin(), nodal.end(), d) == nodal.end()) r.warnings.push_back("speculative");
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

ScrollRecord scroll_record(const Integer& n, const Integer& delta) {
  require_n(n, 2);
  ScrollRecord r = base_record(n, delta);
  if (delta < delta_min(n))
    r.warnings.push_back("delta below delta_min(" + n.str() + ") = " + delta_min(n).str());
  if (!admissible_discriminant(r.disc)) r.warnings.push_back("discriminant " + r.disc.str() + " is not admissible");
  for (const auto& x : kNoScroll)
    if (n == x.n && delta == x.delta)
      r.warnings.push_back("no scroll T_{" + n.str() + "," + delta.str() + "} exists in P^5");
  if (may_be_unsaturated(n, r.self_int, r.disc))
    r.warnings.push_back("<h^2, T> may have index 2 in its saturation; discriminant may be " + (r.disc / 4).str());
  auto nodal = nodal_deltas(n);
  if (std::find(nodal.begin(), nodal.end(), delta) == nodal.end())
    r.warnings.push_back("not a nodal value for degree " + n.str());
  return r;
}

Integer unirational_degree(const Integer& n, const Integer& delta, const UnirationalAssumptions& a) {
  if (!a.not_cone || !a.isolated_singularities)
    throw RefusedError(std::string("refusing to compute the unirational degree: ") + kUnirationalHypothesis +
                       "; assert both hypotheses explicitly");
  require_n(n, 2);
  if (delta < 0) throw ValidationError("number of double points must be nonnegative");
  Integer v = choose2(n - 2) - delta;
  if (v <= 0) throw ValidationError("C(n-2,2) - delta = " + v.str() + " is not positive");
  return v;
}

IntVec ruling_class(const Rank2Config& fano, const Integer& n, const Integer& t) {
  const GramLattice& l = *fano.lattice;
  const Integer det = l.det();
  // G rho = (2n, 2t), G symmetric 2x2.
  Integer x = l.at(1, 1) * 2 * n - l.at(0, 1) * 2 * t;
  Integer y = -l.at(1, 0) * 2 * n + l.at(0, 0) * 2 * t;
  if (x % det != 0 || y % det != 0)
    throw ValidationError("no integral class has pairings (" + (2 * n).str() + ", " + (2 * t).str() + ")");
  return {x / det, y / det};
}

NodalDecomposition decompose_in_nodal_basis(const GramLattice& lattice, const IntVec& rho, const IntVec& nodal1,
                                            const IntVec& nodal2) {
  const Integer d = det(nodal1, nodal2);
  if (d == 0) throw ValidationError("nodal classes are linearly dependent");
  NodalDecomposition out;
  out.a = ratio(det(rho, nodal2), d);
  out.b = ratio(det(nodal1, rho), d);
  out.outside = std::min(out.a, out.b) < 0 && lattice.square(rho) < 0;
  return out;
}

bool isometry_check(const IntMat& m, const IntMat& gram) {
  if (m.size() != gram.size()) return false;
  for (const auto& row : m)
    if (row.size() != gram.size()) return false;
  return congruent(gram, m) == gram;
}

std::string scroll_tsv(const std::vector<ScrollRecord>& rows) {
  std::string out = "n\tdelta\tself_int\tdisc\tr_square\tunirat_deg\twarnings\n";
  for (const auto& r : rows) {
    std::string w;
    for (std::size_t i = 0; i < r.warnings.size(); ++i) w += (i ? "; " : "") + r.warnings[i];
    out += r.n.str() + "\t" + r.delta.str() + "\t" + r.self_int.str() + "\t" + r.disc.str() + "\t" +
           to_string(r.r_square) + "\t" + (r.unirat_deg ? r.unirat_deg->str() : "-") + "\t" + w + "\n";
  }
  return out;
}

nlohmann::json to_json(const ScrollRecord& r) {
  nlohmann::json j;
  j["n"] = r.n.convert_to<long long>();
  j["delta"] = r.delta.convert_to<long long>();
  j["self_int"] = r.self_int.convert_to<long long>();
  j["disc"] = r.disc.convert_to<long long>();
  j["r_square"] = to_string(r.r_square);
  j["unirat_deg"] = r.unirat_deg ? nlohmann::json(r.unirat_deg->convert_to<long long>()) : nlohmann::json();
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace k3lat
