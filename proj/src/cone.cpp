#include "k3lat/cone.hpp"

#include "k3lat/errors.hpp"

#include <algorithm>
#include <set>

namespace k3lat {

namespace {

std::string vec_str(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

Surd pair_with_g(const Rank2Config& cfg, const Ray& r) {
  IntVec h = cfg.lattice->apply(cfg.g);
  return r.x * h[0] + r.y * h[1];
}

// Positive cone boundary rays, oriented into the halfspace and ordered lo, hi.
std::pair<Ray, Ray> square_zero_rays(const Rank2Config& cfg) {
  const Integer& c00 = cfg.lattice->at(0, 0);
  const Integer& c01 = cfg.lattice->at(0, 1);
  const Integer& c11 = cfg.lattice->at(1, 1);
  const Integer d = cfg.radicand();
  Integer root;
  const bool rational = perfect_square(d, root);

  auto make = [&](int pm) {
    Surd x, y;
    if (c11 != 0) {
      x = Surd(c11, 0, d);
      y = Surd(-c01, pm, d);
    } else if (c00 != 0) {
      x = Surd(-c01, pm, d);
      y = Surd(c00, 0, d);
    } else {
      x = Surd(pm > 0 ? 1 : 0, 0, d);
      y = Surd(pm > 0 ? 0 : 1, 0, d);
    }
    Ray r;
    if (rational) {
      IntVec v{x.a + x.b * root, y.a + y.b * root};
      r = Ray::from_vector(cfg, primitive_part(v));
    } else {
      r.x = x;
      r.y = y;
      r.square = 0;
    }
    if (pair_with_g(cfg, r).sign() < 0) {
      r.x = -r.x;
      r.y = -r.y;
      if (r.integral)
        for (auto& c : *r.integral) c = -c;
    }
    return r;
  };
  Ray a = make(+1);
  Ray b = make(-1);
  if (det(a, b).sign() < 0) std::swap(a, b);
  return {a, b};
}

// E at one bound, angular order, nodal flags from the two extremes.
std::vector<EClass> e_classes_at(const Rank2Config& cfg, long bound) {
  std::vector<EClass> out;
  for (int c : {-2, -10}) {
    for (auto& v : enumerate_square(cfg, c, bound)) {
      Integer div = divisibility(v, cfg.profile);
      std::optional<EKind> kind;
      if (c == -2 && div == 1) kind = EKind::minus2_div1;
      if (c == -2 && div == 2) kind = EKind::minus2_div2;
      if (c == -10 && div == 2) kind = EKind::minus10_div2;
      if (!kind) continue;
      EClass e;
      e.vector = v;
      e.kind = *kind;
      e.square = c;
      e.div = div;
      e.curve = curve_class_from_divisor(*cfg.lattice, v, cfg.profile, cfg.g);
      out.push_back(std::move(e));
    }
  }
  std::sort(out.begin(), out.end(), [](const EClass& a, const EClass& b) { return det(a.vector, b.vector) > 0; });
  if (!out.empty()) {
    if (det(cfg.g, out.front().vector) < 0) out.front().nodal = true;
    if (det(cfg.g, out.back().vector) > 0) out.back().nodal = true;
  }
  return out;
}

std::vector<IntVec> nodal_vectors(const std::vector<EClass>& es) {
  std::vector<IntVec> out;
  for (const auto& e : es)
    if (e.nodal) out.push_back(e.vector);
  return out;
}

ConeSector closed(ConeSector s) {
  s.lo.closed = true;
  s.hi.closed = true;
  return s;
}

ConeSector domain_at(const Rank2Config& cfg, long bound, std::vector<IntVec>* walls) {
  ConeSector s = closed(positive_cone(cfg));
  for (const auto& e : e_classes_at(cfg, bound)) {
    if (e.square != -2) continue;
    s = cut(cfg, s, e.vector, true);
    if (walls) walls->push_back(e.vector);
  }
  return s;
}

}  // namespace

Rank2Config Rank2Config::make(std::string name, GramLattice lattice, DivisibilityProfile profile, IntVec g) {
  if (lattice.rank() != 2) throw ValidationError("cone computations need a rank-2 lattice");
  if (!lattice.is_even()) throw ValidationError("cone computations need an even lattice");
  if (lattice.is_degenerate()) throw ValidationError("cone computations need a nondegenerate lattice");
  auto sig = signature(lattice);
  if (sig != std::pair<int, int>{1, 1})
    throw ValidationError("cone computations need signature (1,1), got (" + std::to_string(sig.first) + "," +
                          std::to_string(sig.second) + ")");
  profile.check_against(lattice);
  if (g.size() != 2) throw ValidationError("polarization must have 2 coordinates");
  if (lattice.square(g) <= 0) throw ValidationError("polarization must have positive square");
  Rank2Config cfg;
  cfg.name = std::move(name);
  cfg.lattice = std::make_shared<const GramLattice>(std::move(lattice));
  cfg.profile = std::move(profile);
  cfg.g = std::move(g);
  return cfg;
}

Integer Rank2Config::radicand() const {
  return lattice->at(0, 1) * lattice->at(0, 1) - lattice->at(0, 0) * lattice->at(1, 1);
}

Ray Ray::from_vector(const Rank2Config& cfg, const IntVec& v) {
  IntVec p = primitive_part(v);
  Ray r;
  const Integer d = cfg.radicand();
  r.x = Surd::integer(p[0], d);
  r.y = Surd::integer(p[1], d);
  r.square = cfg.square(p);
  r.integral = std::move(p);
  return r;
}

std::string Ray::str() const {
  if (integral) return vec_str(*integral);
  return "(" + x.str() + ", " + y.str() + ")";
}

Surd det(const Ray& a, const Ray& b) { return a.x * b.y - a.y * b.x; }

bool same_ray(const Ray& a, const Ray& b) { return det(a, b).sign() == 0; }

Integer det(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

bool ConeSector::contains(const Ray& r, bool lo_closed, bool hi_closed) const {
  int d1 = det(lo.ray, r).sign();
  int d2 = det(r, hi.ray).sign();
  bool ok1 = d1 > 0 || (d1 == 0 && lo_closed);
  bool ok2 = d2 > 0 || (d2 == 0 && hi_closed);
  return ok1 && ok2;
}

bool ConeSector::contains(const Rank2Config& cfg, const IntVec& v) const {
  if (cfg.pair(v, cfg.g) <= 0) return false;
  return contains(Ray::from_vector(cfg, v), lo.closed, hi.closed);
}

bool ConeSector::is_empty() const {
  int s = det(lo.ray, hi.ray).sign();
  return s < 0 || (s == 0 && !(lo.closed && hi.closed));
}

bool ConeSector::same_as(const ConeSector& o) const {
  return same_ray(lo.ray, o.lo.ray) && same_ray(hi.ray, o.hi.ray) && lo.closed == o.lo.closed &&
         hi.closed == o.hi.closed;
}

std::string to_string(EKind k) {
  switch (k) {
    case EKind::minus2_div1: return "minus2_div1";
    case EKind::minus2_div2: return "minus2_div2";
    case EKind::minus10_div2: return "minus10_div2";
  }
  return "?";
}

std::vector<IntVec> representations(const GramLattice& lattice, const Integer& c, long bound,
                                    bool primitive_only) {
  if (lattice.rank() != 2) throw ValidationError("representations need a rank-2 lattice");
  if (bound < 1) throw ValidationError("bound must be positive");
  const Integer& c00 = lattice.at(0, 0);
  const Integer& c01 = lattice.at(0, 1);
  const Integer& c11 = lattice.at(1, 1);
  const Integer b(bound);
  std::vector<IntVec> out;
  auto accept = [&](const Integer& x, const Integer& y) {
    if (abs(y) > b) return;
    if (x == 0 && y == 0) return;
    if (primitive_only && gcd(x, y) != 1) return;
    out.push_back({x, y});
  };
  for (long xi = -bound; xi <= bound; ++xi) {
    const Integer x(xi);
    // c11 y^2 + 2 c01 x y + (c00 x^2 - c) = 0
    const Integer k = c00 * x * x - c;
    if (c11 != 0) {
      Integer quarter = c01 * c01 * x * x - c11 * k;
      Integer s;
      if (!perfect_square(quarter, s)) continue;
      for (int pm : {+1, -1}) {
        if (pm < 0 && s == 0) break;
        Integer num = -c01 * x + pm * s;
        if (num % c11 != 0) continue;
        accept(x, num / c11);
      }
    } else if (c01 * x != 0) {
      Integer den = 2 * c01 * x;
      if ((-k) % den != 0) continue;
      accept(x, -k / den);
    } else if (k == 0) {
      for (long yi = -bound; yi <= bound; ++yi) accept(x, Integer(yi));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void sort_angular(std::vector<IntVec>& vs) {
  std::sort(vs.begin(), vs.end(), [](const IntVec& a, const IntVec& b) { return det(a, b) > 0; });
}

std::vector<IntVec> enumerate_square(const Rank2Config& cfg, const Integer& c, long bound) {
  std::vector<IntVec> out;
  for (auto& v : representations(*cfg.lattice, c, bound, true))
    if (cfg.pair(v, cfg.g) > 0) out.push_back(std::move(v));
  sort_angular(out);
  return out;
}

std::pair<Integer, Integer> fundamental_unit(const Integer& n) {
  Integer a0;
  if (n <= 0 || perfect_square(n, a0)) throw ValidationError("Pell unit needs a positive non-square n");
  a0 = boost::multiprecision::sqrt(n);
  // Continued fraction of sqrt(n) with convergents h/k.
  Integer m = 0, d = 1, a = a0;
  Integer h_prev = 1, h = a0;
  Integer k_prev = 0, k = 1;
  while (h * h - n * k * k != 1) {
    m = d * a - m;
    d = (n - m * m) / d;
    a = (a0 + m) / d;
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  return {h, k};
}

PellFamily pell_family(const Integer& n, const Integer& c) {
  if (n <= 0) throw ValidationError("pell_family needs n >= 1");
  PellFamily fam;
  fam.n = n;
  fam.c = c;
  GramLattice form({{2 * n, 0}, {0, -2}}, {"f", "e"}, true);
  Integer root;
  if (perfect_square(n, root)) {
    fam.finite = true;
    fam.recurrence = {{1, 0}, {0, 1}};
    if (c % 2 != 0) return fam;
    const long bnd = (abs(c) + root + 2).convert_to<long>();
    for (auto& v : representations(form, c, bnd, c == 0)) fam.seeds.push_back(std::move(v));
    return fam;
  }
  auto [p, q] = fundamental_unit(n);
  fam.recurrence = {{p, q}, {n * q, p}};
  if (c % 2 != 0 || c == 0) return fam;
  const Integer big_n = -c / 2;  // y^2 - n x^2 = N
  const Integer abs_n = abs(big_n);
  const Integer v_bound =
      (p + q * (boost::multiprecision::sqrt(n) + 1) + 1) * (boost::multiprecision::sqrt(abs_n) + 1) / 2 + 1;
  const Surd eps_conj(p, -q, n);
  std::vector<IntVec> seeds;
  for (Integer x = -v_bound; x <= v_bound; ++x) {
    Integer y;
    if (!perfect_square(big_n + n * x * x, y)) continue;
    for (int pm : {+1, -1}) {
      if (pm < 0 && y == 0) break;
      Integer yy = pm * y;
      Surd z(yy, x, n);
      if (z.sign() <= 0) continue;
      if ((z * z - Surd::integer(abs_n, n)).sign() < 0) continue;
      Surd w = z * eps_conj;
      if ((w * w - Surd::integer(abs_n, n)).sign() > 0) continue;
      seeds.push_back({x, yy});
    }
  }
  std::sort(seeds.begin(), seeds.end(), [&](const IntVec& a, const IntVec& b) {
    return (Surd(b[1], b[0], n) - Surd(a[1], a[0], n)).sign() > 0;
  });
  fam.seeds = std::move(seeds);
  return fam;
}

std::vector<IntVec> PellFamily::members(long bound) const {
  const Integer b(bound);
  auto inside = [&](const IntVec& v) { return abs(v[0]) <= b && abs(v[1]) <= b; };
  std::set<IntVec> found;
  if (finite) {
    for (const auto& s : seeds)
      if (inside(s)) found.insert(s);
    return {found.begin(), found.end()};
  }
  const IntMat& m = recurrence;
  const IntMat inv{{m[1][1], -m[0][1]}, {-m[1][0], m[0][0]}};
  auto apply = [](const IntMat& a, const IntVec& v) {
    return IntVec{a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
  };
  for (const auto& seed : seeds) {
    for (int sign : {+1, -1}) {
      IntVec start{seed[0] * sign, seed[1] * sign};
      // Forward orbit grows once x, y share a sign; backward once they differ.
      for (int dir = 0; dir < 2; ++dir) {
        const IntMat& step = dir == 0 ? m : inv;
        IntVec cur = start;
        for (int it = 0; it < 100000; ++it) {
          if (inside(cur)) found.insert(cur);
          Integer prod = cur[0] * cur[1];
          bool growing = dir == 0 ? prod >= 0 : prod <= 0;
          if (growing && !inside(cur)) break;
          cur = apply(step, cur);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<EClass> e_classes(const Rank2Config& cfg, long bound) { return e_classes_at(cfg, bound); }

ConeSector positive_cone(const Rank2Config& cfg) {
  auto [lo, hi] = square_zero_rays(cfg);
  ConeSector s;
  s.lo.ray = lo;
  s.hi.ray = hi;
  return s;
}

std::vector<EClass> nodal_classes(const Rank2Config& cfg, long bound) {
  auto here = e_classes_at(cfg, bound);
  auto there = e_classes_at(cfg, 2 * bound);
  if (nodal_vectors(here) != nodal_vectors(there))
    throw InstabilityError("nodal classes of " + cfg.name + " change between bound " + std::to_string(bound) +
                               " and " + std::to_string(2 * bound) + "; retry with a larger bound",
                           4 * bound);
  std::vector<EClass> out;
  for (auto& e : here)
    if (e.nodal) out.push_back(std::move(e));
  return out;
}

ConeSector effective_curve_cone(const Rank2Config& cfg, long bound) {
  ConeSector s = closed(positive_cone(cfg));
  for (const auto& e : nodal_classes(cfg, bound)) {
    Boundary b{Ray::from_vector(cfg, e.vector), true, std::nullopt};
    if (det(cfg.g, e.vector) < 0)
      s.lo = b;
    else
      s.hi = b;
  }
  return s;
}

Decomposition is_decomposable_in_monoid(const Rank2Config& cfg, const IntVec& v, long bound) {
  const Integer vg = cfg.pair(v, cfg.g);
  if (vg <= 0) throw ValidationError("class " + vec_str(v) + " is not in the positive halfspace");
  ConeSector cone = effective_curve_cone(cfg, bound);
  Decomposition out;
  out.in_cone = cone.contains(cfg, v);
  if (!out.in_cone) return out;
  auto try_split = [&](const IntVec& a) {
    Integer ag = cfg.pair(a, cfg.g);
    if (ag <= 0 || ag >= vg) return false;
    IntVec b{v[0] - a[0], v[1] - a[1]};
    return cone.contains(cfg, a) && cone.contains(cfg, b);
  };
  for (long r = 1; r <= bound; ++r) {
    for (long x = -r; x <= r; ++x) {
      const bool edge = (x == -r || x == r);
      for (long y = -r; y <= r; y += edge ? 1 : 2 * r) {
        IntVec a{Integer(x), Integer(y)};
        if (try_split(a)) {
          out.decomposable = true;
          out.witness = std::make_pair(a, IntVec{v[0] - a[0], v[1] - a[1]});
          return out;
        }
      }
    }
  }
  return out;
}

IntVec wall_vector(const Rank2Config& cfg, const IntVec& rho) {
  IntVec h = cfg.lattice->apply(rho);
  IntVec w = primitive_part(IntVec{-h[1], h[0]});
  Integer s = cfg.pair(w, cfg.g);
  if (s == 0) throw ValidationError("wall of " + vec_str(rho) + " does not meet the positive halfspace");
  if (s < 0)
    for (auto& c : w) c = -c;
  return w;
}

ConeSector cut(const Rank2Config& cfg, const ConeSector& sector, const IntVec& rho, bool is_closed) {
  IntVec w = wall_vector(cfg, rho);
  IntVec normal{-w[1], w[0]};  // counterclockwise of w
  const bool lower = cfg.pair(normal, rho) > 0;
  Boundary b{Ray::from_vector(cfg, w), is_closed, rho};
  ConeSector out = sector;
  Boundary& side = lower ? out.lo : out.hi;
  int s = det(side.ray, b.ray).sign();
  if (!lower) s = -s;
  if (s > 0) {
    side = b;
  } else if (s == 0) {
    side.closed = side.closed && is_closed;
    if (!side.wall_of) side.wall_of = rho;
  }
  return out;
}

ConeSector ample_cone(const Rank2Config& cfg, long bound) {
  ConeSector s = positive_cone(cfg);
  for (const auto& e : nodal_classes(cfg, bound)) s = cut(cfg, s, e.vector, false);
  return s;
}

IntVec weyl_reflect(const GramLattice& lattice, const IntVec& v, const IntVec& rho) {
  if (lattice.square(rho) != -2) throw ValidationError("reflections are defined for (-2)-classes only");
  Integer k = lattice.pair(v, rho);
  IntVec out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += k * rho[i];
  return out;
}

FundamentalDomain fundamental_domain(const Rank2Config& cfg, long bound) {
  FundamentalDomain fd;
  fd.sector = domain_at(cfg, bound, &fd.walls);
  ConeSector wider = domain_at(cfg, 2 * bound, nullptr);
  if (!fd.sector.same_as(wider))
    throw InstabilityError("fundamental domain of " + cfg.name + " changes between bound " +
                               std::to_string(bound) + " and " + std::to_string(2 * bound),
                           4 * bound);
  return fd;
}

Reduction reduce_to_fundamental(const Rank2Config& cfg, const IntVec& v, long max_iters, long bound) {
  if (cfg.pair(v, cfg.g) <= 0) throw ValidationError("reduction needs pair(v, g) > 0");
  if (cfg.square(v) <= 0) throw ValidationError("reduction needs square(v) > 0");
  const auto walls = fundamental_domain(cfg, bound).walls;
  Reduction red;
  red.result = v;
  for (;;) {
    const IntVec& cur = red.result;
    const bool left = det(cfg.g, cur) < 0;
    std::optional<IntVec> best;
    std::optional<IntVec> best_wall;
    for (const auto& rho : walls) {
      if (cfg.pair(cur, rho) >= 0) continue;
      IntVec w = wall_vector(cfg, rho);
      // Nearest violated wall to cur: most clockwise when cur is clockwise of g.
      if (!best || (left ? det(w, *best_wall) > 0 : det(*best_wall, w) > 0)) {
        best = rho;
        best_wall = w;
      }
    }
    if (!best) return red;
    if (static_cast<long>(red.word.size()) >= max_iters) {
      std::string partial;
      for (const auto& r : red.word) partial += vec_str(r) + " ";
      throw IterationLimitError("reduction exceeded " + std::to_string(max_iters) +
                                " reflections; partial word: " + partial);
    }
    red.result = weyl_reflect(*cfg.lattice, cur, *best);
    red.word.push_back(*best);
  }
}

namespace {

ChamberDecomposition chambers_at(const Rank2Config& cfg, const ConeSector& domain, long bound) {
  ChamberDecomposition out;
  out.domain = domain;
  std::vector<std::pair<IntVec, IntVec>> walls;  // (wall ray, rho)
  for (const auto& e : e_classes_at(cfg, bound)) {
    if (e.square != -10) continue;
    IntVec w = wall_vector(cfg, e.vector);
    if (!domain.contains(Ray::from_vector(cfg, w), false, false)) continue;
    walls.emplace_back(w, e.vector);
  }
  std::sort(walls.begin(), walls.end(), [](const auto& a, const auto& b) { return det(a.first, b.first) > 0; });
  std::vector<Boundary> cuts;
  cuts.push_back(domain.lo);
  for (const auto& [w, rho] : walls) {
    out.walls.push_back(rho);
    cuts.push_back(Boundary{Ray::from_vector(cfg, w), false, rho});
  }
  cuts.push_back(domain.hi);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Chamber ch;
    ch.sector.lo = cuts[i];
    ch.sector.hi = cuts[i + 1];
    ch.sector.lo.closed = false;
    ch.sector.hi.closed = false;
    ch.contains_g = ch.sector.contains(cfg, cfg.g);
    out.chambers.push_back(std::move(ch));
  }
  return out;
}

const Chamber* g_chamber(const ChamberDecomposition& d) {
  for (const auto& c : d.chambers)
    if (c.contains_g) return &c;
  return nullptr;
}

}  // namespace

ChamberDecomposition chambers(const Rank2Config& cfg, long bound) {
  const ConeSector domain = fundamental_domain(cfg, bound).sector;
  ChamberDecomposition here = chambers_at(cfg, domain, bound);
  ChamberDecomposition there = chambers_at(cfg, domain, 2 * bound);
  const Chamber* a = g_chamber(here);
  const Chamber* b = g_chamber(there);
  if ((a == nullptr) != (b == nullptr) || (a && !a->sector.same_as(b->sector)))
    throw InstabilityError("chamber containing g changes between bound " + std::to_string(bound) + " and " +
                               std::to_string(2 * bound),
                           4 * bound);
  here.wall_set_stable = here.walls == there.walls;
  return here;
}

std::vector<IntVec> square_zero_classes(const Rank2Config& cfg) {
  Integer root;
  if (!perfect_square(cfg.radicand(), root)) return {};
  auto [lo, hi] = square_zero_rays(cfg);
  return {*lo.integral, *hi.integral};
}

}  // namespace k3lat
