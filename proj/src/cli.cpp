#include "k3lat/cli.hpp"

#include "k3lat/beauville.hpp"
#include "k3lat/cone.hpp"
#include "k3lat/cubic.hpp"
#include "k3lat/errors.hpp"
#include "k3lat/presets.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <sstream>

namespace k3lat {

namespace {

using nlohmann::json;

constexpr const char* kConjectural = "conjectural";

json jint(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

json jvec(const IntVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(jint(x));
  return a;
}

json jmat(const IntMat& m) {
  json a = json::array();
  for (const auto& r : m) a.push_back(jvec(r));
  return a;
}

std::string combo(const IntVec& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Integer& c = v[i];
    if (c == 0) continue;
    if (c < 0)
      s += "-";
    else if (!s.empty())
      s += "+";
    Integer a = abs(c);
    if (a != 1) s += a.str();
    s += labels[i];
  }
  return s.empty() ? "0" : s;
}

struct Ctx {
  Preset preset;
  bool has_display() const { return preset.display != DisplayBasis::raw && preset.lattice->rank() == 2; }

  std::string basis_form() const {
    const auto& l = preset.lattice->labels();
    if (preset.display == DisplayBasis::cubic) return "a" + l[0] + "-b" + l[1];
    if (preset.display == DisplayBasis::k3) return "x" + l[0] + "-y" + l[1];
    return "";
  }
  std::pair<std::string, std::string> letters() const {
    if (preset.display == DisplayBasis::cubic) return {"a", "b"};
    return {"x", "y"};
  }

  json vec(const IntVec& v) const {
    json j;
    j["coords"] = jvec(v);
    j["class"] = combo(v, preset.lattice->labels());
    if (has_display()) j["display"] = jvec(IntVec{v[0], -v[1]});
    return j;
  }

  // alpha x + beta y in raw coordinates.
  std::string inequality(Integer alpha, Integer beta, bool strict) const {
    Integer g = gcd(alpha, beta);
    if (g != 0) {
      alpha /= g;
      beta /= g;
    }
    if (has_display()) beta = -beta;
    auto [p, q] = letters();
    std::string s;
    auto term = [&](const Integer& c, const std::string& name) {
      if (c == 0) return;
      if (c < 0)
        s += "-";
      else if (!s.empty())
        s += "+";
      if (abs(c) != 1) s += abs(c).str();
      s += name;
    };
    term(alpha, p);
    term(beta, q);
    if (s.empty()) s = "0";
    return s + (strict ? ">0" : ">=0");
  }

  json boundary(const Rank2Config& cfg, const Boundary& b, bool is_lo) const {
    json j;
    if (b.ray.integral) {
      const IntVec& r = *b.ray.integral;
      j = vec(r);
      j["square"] = jint(cfg.square(r));
      Integer alpha = is_lo ? -r[1] : r[1];
      Integer beta = is_lo ? r[0] : -r[0];
      j["inequality"] = inequality(alpha, beta, !b.closed);
    } else {
      j["coords"] = json::array({b.ray.x.str(), b.ray.y.str()});
      if (has_display()) j["display"] = json::array({b.ray.x.str(), (-b.ray.y).str()});
      j["square"] = 0;
      j["inequality"] = nullptr;
    }
    j["closed"] = b.closed;
    j["wall_of"] = b.wall_of ? vec(*b.wall_of) : json();
    return j;
  }

  json sector(const Rank2Config& cfg, const ConeSector& s) const {
    json j;
    j["lo"] = boundary(cfg, s.lo, true);
    j["hi"] = boundary(cfg, s.hi, false);
    json ineq = json::array();
    for (const auto* b : {&j["lo"], &j["hi"]})
      if (!(*b)["inequality"].is_null()) ineq.push_back((*b)["inequality"]);
    j["inequalities"] = ineq;
    return j;
  }

  json e_class(const EClass& e) const {
    json j = vec(e.vector);
    j["kind"] = to_string(e.kind);
    j["square"] = jint(e.square);
    j["div"] = jint(e.div);
    j["degree"] = to_string(e.curve.degree);
    j["r_square"] = to_string(e.curve.r_square);
    j["nodal"] = e.nodal;
    return j;
  }

  json config() const {
    json j;
    j["name"] = preset.name;
    j["gram"] = jmat(preset.lattice->gram());
    j["labels"] = preset.lattice->labels();
    j["profile"] = preset.profile ? jvec(preset.profile->divisors) : json();
    j["polarization"] = preset.polarization ? jvec(*preset.polarization) : json();
    if (has_display()) j["display_basis"] = basis_form();
    return j;
  }
};

struct Options {
  bool json_out = false;
  bool tsv = false;
  long bound = kDefaultBound;
  long max_iters = kDefaultMaxIters;
};

struct Report {
  json config;
  json params;
  json result;
  std::vector<std::string> warnings;
  std::vector<std::string> labels;
  std::optional<std::string> tsv;
};

// Scalars and arrays of scalars print inline.
bool is_inline(const json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j)
    if (!is_inline(x)) return false;
  return true;
}

std::string inline_str(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (!j.is_array()) return j.dump();
  std::string s = "[";
  for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + inline_str(j[i]);
  return s + "]";
}

void render_text(const json& j, std::ostream& o, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_inline(v)) {
        o << pad << k << ": " << inline_str(v) << "\n";
      } else {
        o << pad << k << ":\n";
        render_text(v, o, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_inline(v)) {
        o << pad << "- " << inline_str(v) << "\n";
      } else {
        o << pad << "-\n";
        render_text(v, o, indent + 2);
      }
    }
  } else {
    o << pad << inline_str(j) << "\n";
  }
}

IntVec parse_vector(const std::string& text) {
  IntVec v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      std::string t = part;
      t.erase(0, t.find_first_not_of(" "));
      t.erase(t.find_last_not_of(" ") + 1);
      if (t.empty()) throw std::invalid_argument("empty");
      Integer x(t);
      (void)used;
      v.push_back(x);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse vector '" + text + "'; expected comma-separated integers like 1,-2");
    }
  }
  if (v.empty()) throw ValidationError("empty vector");
  return v;
}

Integer parse_integer(const std::string& text, const std::string& what) {
  try {
    if (text.empty()) throw std::invalid_argument("empty");
    return Integer(text);
  } catch (const std::exception&) {
    throw ValidationError(what + ": expected an integer, got '" + text + "'");
  }
}

Report cmd_lattice(const Ctx& c) {
  Report r;
  const GramLattice& l = *c.preset.lattice;
  json res;
  res["rank"] = l.rank();
  res["gram"] = jmat(l.gram());
  res["labels"] = l.labels();
  res["even"] = l.is_even();
  auto sig = signature(l);
  res["signature"] = json::array({sig.first, sig.second});
  res["det"] = jint(l.det());
  if (l.is_even()) {
    auto dg = discriminant_group(l);
    json g;
    json orders = json::array();
    for (const auto& x : dg.cyclic_orders) orders.push_back(jint(x));
    json qs = json::array();
    for (const auto& q : dg.q_values) qs.push_back(to_string(q));
    g["cyclic_orders"] = orders;
    g["q_values"] = qs;
    g["order"] = jint(dg.order());
    res["discriminant_group"] = g;
  } else {
    res["discriminant_group"] = nullptr;
    r.warnings.push_back("lattice is odd; discriminant form not computed");
  }
  res["profile"] = c.preset.profile ? jvec(c.preset.profile->divisors) : json();
  r.result = res;
  for (const auto& n : c.preset.notes) r.warnings.push_back(n);
  return r;
}

Report cmd_disc_group(const Ctx& c) {
  Report r;
  const GramLattice& l = *c.preset.lattice;
  auto dg = discriminant_group(l);
  json orders = json::array();
  for (const auto& x : dg.cyclic_orders) orders.push_back(jint(x));
  json qs = json::array();
  for (const auto& q : dg.q_values) qs.push_back(to_string(q));
  r.result["cyclic_orders"] = orders;
  r.result["q_values"] = qs;
  r.result["order"] = jint(dg.order());
  r.result["det"] = jint(l.det());
  return r;
}

Report cmd_enumerate(const Ctx& c, const Options& o, const std::string& square_text) {
  Report r;
  Rank2Config cfg = c.preset.rank2();
  Integer sq = parse_integer(square_text, "--square");
  json list = json::array();
  std::string tsv = "coords\tclass\tsquare\tdiv\n";
  for (const auto& v : enumerate_square(cfg, sq, o.bound)) {
    json j = c.vec(v);
    j["div"] = jint(divisibility(v, cfg.profile));
    list.push_back(j);
    tsv += v[0].str() + "," + v[1].str() + "\t" + j["class"].get<std::string>() + "\t" + sq.str() + "\t" +
           j["div"].dump() + "\n";
  }
  r.result["square"] = jint(sq);
  r.result["classes"] = list;
  r.result["count"] = list.size();
  r.tsv = tsv;
  return r;
}

Report cmd_nodal(const Ctx& c, const Options& o) {
  Report r;
  Rank2Config cfg = c.preset.rank2();
  auto nodal = nodal_classes(cfg, o.bound);
  json all = json::array();
  for (const auto& e : e_classes(cfg, o.bound)) all.push_back(c.e_class(e));
  json nod = json::array();
  std::string tsv = "coords\tclass\tkind\tsquare\tdiv\tdegree\tr_square\n";
  for (const auto& e : nodal) {
    nod.push_back(c.e_class(e));
    tsv += e.vector[0].str() + "," + e.vector[1].str() + "\t" + combo(e.vector, cfg.lattice->labels()) + "\t" +
           to_string(e.kind) + "\t" + e.square.str() + "\t" + e.div.str() + "\t" + to_string(e.curve.degree) +
           "\t" + to_string(e.curve.r_square) + "\n";
  }
  r.result["e_classes"] = all;
  r.result["nodal"] = nod;
  r.labels.push_back(kConjectural);
  r.tsv = tsv;
  return r;
}

Report cmd_ample(const Ctx& c, const Options& o) {
  Report r;
  Rank2Config cfg = c.preset.rank2();
  r.result["ample_cone"] = c.sector(cfg, ample_cone(cfg, o.bound));
  r.result["positive_cone"] = c.sector(cfg, positive_cone(cfg));
  r.labels.push_back(kConjectural);
  return r;
}

Report cmd_chambers(const Ctx& c, const Options& o) {
  Report r;
  Rank2Config cfg = c.preset.rank2();
  auto d = chambers(cfg, o.bound);
  r.result["domain"] = c.sector(cfg, d.domain);
  json walls = json::array();
  for (const auto& w : d.walls) walls.push_back(c.vec(w));
  r.result["walls"] = walls;
  json chs = json::array();
  for (const auto& ch : d.chambers) {
    json j = c.sector(cfg, ch.sector);
    j["contains_g"] = ch.contains_g;
    chs.push_back(j);
  }
  r.result["chambers"] = chs;
  r.result["wall_set_stable"] = d.wall_set_stable;
  if (!d.wall_set_stable)
    r.warnings.push_back("(-10)-walls keep accumulating at bound " + std::to_string(2 * o.bound) +
                         "; the chamber list is truncated, the chamber containing g is stable");
  r.labels.push_back(kConjectural);
  return r;
}

Report cmd_reduce(const Ctx& c, const Options& o, const std::string& vec_text) {
  Report r;
  Rank2Config cfg = c.preset.rank2();
  IntVec v = parse_vector(vec_text);
  if (v.size() != 2) throw ValidationError("reduce needs a vector with 2 coordinates");
  auto red = reduce_to_fundamental(cfg, v, o.max_iters, o.bound);
  r.result["input"] = c.vec(v);
  r.result["result"] = c.vec(red.result);
  r.result["result"]["square"] = jint(cfg.square(red.result));
  json word = json::array();
  for (const auto& w : red.word) word.push_back(c.vec(w));
  r.result["word"] = word;
  r.result["length"] = red.word.size();
  return r;
}

Report cmd_zero(const Ctx& c, const Options& o) {
  Report r;
  Rank2Config cfg = c.preset.rank2();
  auto zs = square_zero_classes(cfg);
  ConeSector amp = ample_cone(cfg, o.bound);
  json list = json::array();
  for (const auto& z : zs) {
    json j = c.vec(z);
    Ray ray = Ray::from_vector(cfg, z);
    j["bounds_nef_cone"] = same_ray(ray, amp.lo.ray) || same_ray(ray, amp.hi.ray);
    list.push_back(j);
  }
  r.result["classes"] = list;
  if (zs.empty()) r.warnings.push_back("the form does not represent zero; the positive cone has irrational boundary");
  r.labels.push_back(kConjectural);
  return r;
}

Report cmd_scrolls(int nmax, bool speculative, std::optional<long> n, std::optional<long> delta) {
  Report r;
  std::vector<ScrollRecord> rows;
  if (n || delta) {
    if (!n || !delta) throw ValidationError("--n and --delta go together");
    rows.push_back(scroll_record(*n, *delta));
    for (const auto& w : rows.back().warnings) r.warnings.push_back(w);
  } else {
    rows = nodal_scroll_table(nmax, speculative);
    if (speculative) r.labels.push_back("speculative rows are not known to exist");
  }
  json list = json::array();
  for (const auto& row : rows) list.push_back(to_json(row));
  r.result["rows"] = list;
  r.tsv = scroll_tsv(rows);
  return r;
}

Report cmd_fano(const std::optional<std::string>& preset, std::optional<long> b, std::optional<long> tsq,
                json& config) {
  Report r;
  CubicLatticeData k;
  if (preset) {
    if (b || tsq) throw ValidationError("give either a cubic preset or --b/--tsq, not both");
    Preset p = resolve_preset(*preset);
    if (!p.cubic) throw ValidationError(*preset + " is not a cubic preset");
    k = *p.cubic;
  } else {
    if (!b || !tsq) throw ValidationError("fano needs a cubic preset or both --b and --tsq");
    k = CubicLatticeData::make(*b, *tsq);
  }
  PicardData pd = abel_jacobi_transfer(k);
  config["name"] = k.name;
  r.result["b"] = jint(k.b);
  r.result["t_sq"] = jint(k.t_sq);
  r.result["h2_sq"] = jint(k.h2_sq);
  r.result["disc"] = jint(k.disc);
  r.result["gram"] = jmat(pd.lattice.gram());
  r.result["labels"] = pd.lattice.labels();
  r.result["profile"] = jvec(pd.profile.divisors);
  r.result["det"] = jint(pd.lattice.det());
  r.warnings.push_back("divisibility profile (2,1) on (g, " + k.t_label + ") is inferred, not stated");
  return r;
}

Report cmd_unirat(const std::string& n_text, const std::string& d_text, bool not_cone, bool isolated) {
  Report r;
  Integer n = parse_integer(n_text, "n");
  Integer d = parse_integer(d_text, "delta");
  Integer deg = unirational_degree(n, d, {not_cone, isolated});
  ScrollRecord rec = scroll_record(n, d);
  r.result["n"] = jint(n);
  r.result["delta"] = jint(d);
  r.result["degree"] = jint(deg);
  r.result["r_square"] = to_string(rec.r_square);
  r.result["disc"] = jint(rec.disc);
  r.warnings = rec.warnings;
  r.labels.push_back("assumes the scroll is not a cone and has isolated singularities");
  return r;
}

Report cmd_rr(const std::string& q_text) {
  Report r;
  Integer q = parse_integer(q_text, "q");
  r.result["q"] = jint(q);
  r.result["chi"] = jint(riemann_roch(q));
  r.result["c2_pairing"] = jint(c2_pairing(q));
  return r;
}

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k3lat: lattices, nodal classes and cones for fourfolds of K3^[2] type", "k3lat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json_out, "machine-readable output");
  app.add_flag("--tsv", o.tsv, "tab-separated rows (scrolls, enumerate, nodal)");
  app.add_option("--bound", o.bound, "search box half-width")->check(CLI::PositiveNumber);
  app.add_option("--max-iters", o.max_iters, "reflection cap for reduce")->check(CLI::PositiveNumber);

  std::string input, square_text, vec_text, n_text, d_text, q_text;
  std::optional<std::string> fano_preset;
  std::optional<long> fano_b, fano_tsq, scroll_n, scroll_delta;
  int nmax = 11;
  bool speculative = false, not_cone = false, isolated = false;

  auto with_input = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", input, "preset name or lattice JSON file")->required();
    return sub;
  };
  auto* lattice = with_input("lattice", "rank, Gram, signature, determinant, discriminant group");
  auto* disc = with_input("disc-group", "discriminant group L^*/L with its quadratic form");
  auto* enumerate = with_input("enumerate", "primitive classes of a given square");
  enumerate->add_option("--square", square_text, "target square")->required();
  auto* nodal = with_input("nodal", "E-classes and nodal classes");
  auto* ample = with_input("ample", "predicted ample cone");
  auto* cham = with_input("chambers", "fundamental domain and its (-10)-wall chambers");
  auto* reduce = with_input("reduce", "reflect a class into the fundamental domain");
  reduce->add_option("vector", vec_text, "coordinates, e.g. 1,-2")->required();
  auto* zero = with_input("zero", "square-zero classes");
  auto* scrolls = app.add_subcommand("scrolls", "scroll table");
  scrolls->add_option("--nmax", nmax, "largest degree")->check(CLI::Range(2, 1000));
  scrolls->add_flag("--speculative", speculative, "also list non-nodal double-point counts");
  scrolls->add_option("--n", scroll_n, "single record: degree");
  scrolls->add_option("--delta", scroll_delta, "single record: double points");
  auto* fano = app.add_subcommand("fano", "Fano-variety Gram from cubic data");
  fano->add_option("preset", fano_preset, "cubic preset");
  fano->add_option("--b", fano_b, "<h^2, T>");
  fano->add_option("--tsq", fano_tsq, "<T, T>");
  auto* unirat = app.add_subcommand("unirat", "degree of the unirational parametrization");
  unirat->add_option("n", n_text, "scroll degree")->required();
  unirat->add_option("delta", d_text, "double points")->required();
  unirat->add_flag("--assume-not-cone", not_cone, "assert the scroll is not a cone");
  unirat->add_flag("--assume-isolated", isolated, "assert the scroll has isolated singularities");
  auto* rr = app.add_subcommand("rr", "Riemann-Roch for a divisor of square q");
  rr->add_option("q", q_text, "square")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  json envelope;
  envelope["command"] = join(args);
  json params;
  params["bound"] = o.bound;
  params["max_iters"] = o.max_iters;
  envelope["params"] = params;

  auto fail = [&](const std::string& kind, const std::string& msg, int code, json extra = json::object()) {
    err << "error: " << msg << "\n";
    if (o.json_out) {
      json e = extra;
      e["kind"] = kind;
      e["message"] = msg;
      envelope["error"] = e;
      out << envelope.dump(2) << "\n";
    }
    return code;
  };

  try {
    Report r;
    json config;
    auto ctx = [&]() {
      Ctx c{resolve_input(input)};
      config = c.config();
      return c;
    };
    if (lattice->parsed()) {
      r = cmd_lattice(ctx());
    } else if (disc->parsed()) {
      r = cmd_disc_group(ctx());
    } else if (enumerate->parsed()) {
      r = cmd_enumerate(ctx(), o, square_text);
    } else if (nodal->parsed()) {
      r = cmd_nodal(ctx(), o);
    } else if (ample->parsed()) {
      r = cmd_ample(ctx(), o);
    } else if (cham->parsed()) {
      r = cmd_chambers(ctx(), o);
    } else if (reduce->parsed()) {
      r = cmd_reduce(ctx(), o, vec_text);
    } else if (zero->parsed()) {
      r = cmd_zero(ctx(), o);
    } else if (scrolls->parsed()) {
      r = cmd_scrolls(nmax, speculative, scroll_n, scroll_delta);
    } else if (fano->parsed()) {
      r = cmd_fano(fano_preset, fano_b, fano_tsq, config);
    } else if (unirat->parsed()) {
      r = cmd_unirat(n_text, d_text, not_cone, isolated);
    } else if (rr->parsed()) {
      r = cmd_rr(q_text);
    }
    if (o.tsv) {
      if (!r.tsv) throw ValidationError("--tsv is supported by scrolls, enumerate and nodal");
      out << *r.tsv;
      return kExitOk;
    }
    envelope["config"] = config.is_null() ? json::object() : config;
    envelope["result"] = r.result;
    envelope["warnings"] = r.warnings;
    envelope["labels"] = r.labels;
    if (o.json_out)
      out << envelope.dump(2) << "\n";
    else
      render_text(envelope, out, 0);
    return kExitOk;
  } catch (const ValidationError& e) {
    return fail("validation", e.what(), kExitValidation);
  } catch (const InstabilityError& e) {
    json extra;
    extra["suggested_bound"] = e.suggested_bound();
    return fail("instability", std::string(e.what()) + " (suggested --bound " + std::to_string(e.suggested_bound()) + ")",
                kExitInstability, extra);
  } catch (const IterationLimitError& e) {
    return fail("iteration_limit", e.what(), kExitInstability);
  } catch (const RefusedError& e) {
    return fail("refused", e.what(), kExitRefused);
  }
}

}  // namespace k3lat
