#include "k3lat/qlattice.hpp"

#include "k3lat/errors.hpp"

#include <algorithm>
#include <charconv>

namespace k3lat {

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

bool is_even_integer(const Integer& x) { return (x % 2) == 0; }

}  // namespace

GramLattice::GramLattice(IntMat gram, std::vector<std::string> labels, bool even,
                         bool allow_degenerate)
    : gram_(std::move(gram)), labels_(std::move(labels)), even_(even) {
  const std::size_t n = gram_.size();
  if (n == 0) throw ValidationError("Gram matrix must have positive rank");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n)
      throw ValidationError("Gram matrix row " + std::to_string(i + 1) + " has length " +
                            std::to_string(gram_[i].size()) + ", expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (gram_[i][j] != gram_[j][i])
        throw ValidationError("Gram matrix is not symmetric: entry " + entry_name(i, j) + " = " +
                              gram_[i][j].str() + " but entry " + entry_name(j, i) + " = " +
                              gram_[j][i].str());
  if (labels_.empty()) {
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("b" + std::to_string(i + 1));
  }
  if (labels_.size() != n)
    throw ValidationError("expected " + std::to_string(n) + " basis labels, got " +
                          std::to_string(labels_.size()));
  if (even_) {
    for (std::size_t i = 0; i < n; ++i)
      if (!is_even_integer(gram_[i][i]))
        throw ValidationError("lattice flagged even but diagonal entry " + entry_name(i, i) +
                              " = " + gram_[i][i].str() + " is odd");
  }
  det_ = determinant(gram_);
  if (det_ == 0 && !allow_degenerate) throw ValidationError("Gram matrix is degenerate (det = 0)");
}

bool GramLattice::is_even() const {
  for (int i = 0; i < rank(); ++i)
    if (!is_even_integer(gram_[i][i])) return false;
  return true;
}

void GramLattice::check_length(const IntVec& v) const {
  if (static_cast<int>(v.size()) != rank())
    throw ValidationError("vector has " + std::to_string(v.size()) + " coordinates, lattice rank is " +
                          std::to_string(rank()));
}

Integer GramLattice::pair(const IntVec& v, const IntVec& w) const {
  check_length(v);
  check_length(w);
  Integer acc = 0;
  for (int i = 0; i < rank(); ++i) {
    if (v[i] == 0) continue;
    Integer row = 0;
    for (int j = 0; j < rank(); ++j) row += gram_[i][j] * w[j];
    acc += v[i] * row;
  }
  return acc;
}

IntVec GramLattice::apply(const IntVec& v) const {
  check_length(v);
  IntVec out(rank(), Integer(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) out[i] += gram_[i][j] * v[j];
  return out;
}

LatticeVector::LatticeVector(LatticePtr host, IntVec coords)
    : host_(std::move(host)), coords_(std::move(coords)) {
  if (!host_) throw ValidationError("lattice vector without host lattice");
  if (static_cast<int>(coords_.size()) != host_->rank())
    throw ValidationError("vector has " + std::to_string(coords_.size()) +
                          " coordinates, host rank is " + std::to_string(host_->rank()));
}

namespace {
void require_same_host(const LatticeVector& v, const LatticeVector& w) {
  if (v.host_ptr() != w.host_ptr() && !(v.host() == w.host()))
    throw ValidationError("vectors live in different lattices");
}
}  // namespace

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
  require_same_host(*this, o);
  IntVec c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return LatticeVector(host_, std::move(c));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
  require_same_host(*this, o);
  IntVec c = coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return LatticeVector(host_, std::move(c));
}

LatticeVector LatticeVector::operator*(const Integer& k) const {
  IntVec c = coords_;
  for (auto& x : c) x *= k;
  return LatticeVector(host_, std::move(c));
}

Integer pair(const LatticeVector& v, const LatticeVector& w) {
  require_same_host(v, w);
  return v.host().pair(v.coords(), w.coords());
}

Integer square(const LatticeVector& v) { return v.host().square(v.coords()); }

bool is_primitive(const IntVec& v) {
  Integer g = gcd(v);
  if (g == 0) throw ValidationError("primitivity of the zero vector is undefined");
  return g == 1;
}

IntVec primitive_part(const IntVec& v) {
  Integer g = gcd(v);
  if (g == 0) throw ValidationError("zero vector has no primitive part");
  IntVec out = v;
  for (auto& x : out) x /= g;
  return out;
}

void DivisibilityProfile::check_against(const GramLattice& lattice) const {
  if (static_cast<int>(divisors.size()) != lattice.rank())
    throw ValidationError("profile has " + std::to_string(divisors.size()) +
                          " entries, lattice rank is " + std::to_string(lattice.rank()));
  for (int i = 0; i < lattice.rank(); ++i) {
    if (divisors[i] <= 0) throw ValidationError("profile entries must be positive");
    for (int j = 0; j < lattice.rank(); ++j)
      if (lattice.at(i, j) % divisors[i] != 0)
        throw ValidationError("profile entry " + std::to_string(i + 1) + " = " + divisors[i].str() +
                              " does not divide Gram entry " + entry_name(i, j) + " = " +
                              lattice.at(i, j).str());
  }
}

Integer divisibility(const IntVec& v, const DivisibilityProfile& profile) {
  if (v.size() != profile.divisors.size())
    throw ValidationError("profile length " + std::to_string(profile.divisors.size()) +
                          " does not match vector length " + std::to_string(v.size()));
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) g = gcd(g, profile.divisors[i] * v[i]);
  if (g == 0) throw ValidationError("divisibility of the zero vector is undefined");
  return g;
}

Integer ambient_divisibility(const GramLattice& lattice, const IntVec& v) {
  Integer g = gcd(lattice.apply(v));
  if (g == 0) throw ValidationError("divisibility of a radical vector is undefined");
  return g;
}

std::pair<int, int> signature(const IntMat& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(gram[i][j]);

  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i)
      if (a[i][i] != 0) {
        piv = i;
        break;
      }
    if (piv == n) {
      // Zero diagonal: fold an off-diagonal partner into row/column k.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a[i][j] != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) throw ValidationError("signature requested for a degenerate form");
      // b_pi <- b_pi + b_pj makes the (pi,pi) entry 2 a[pi][pj] != 0.
      for (std::size_t t = 0; t < n; ++t) a[pi][t] += a[pj][t];
      for (std::size_t t = 0; t < n; ++t) a[t][pi] += a[t][pj];
      piv = pi;
    }
    if (piv != k) {
      std::swap(a[piv], a[k]);
      for (auto& row : a) std::swap(row[piv], row[k]);
    }
    const Rational p = a[k][k];
    if (p > 0)
      ++pos;
    else
      ++neg;
    // Schur complement of the pivot.
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= a[i][k] * a[k][j] / p;
    for (std::size_t i = k + 1; i < n; ++i) {
      a[i][k] = 0;
      a[k][i] = 0;
    }
  }
  return {pos, neg};
}

std::pair<int, int> signature(const GramLattice& lattice) {
  if (lattice.is_degenerate()) throw ValidationError("signature requested for a degenerate lattice");
  return signature(lattice.gram());
}

Integer determinant(const IntMat& m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMat a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Integer DiscriminantGroup::order() const {
  Integer o = 1;
  for (const auto& c : cyclic_orders) o *= c;
  return o;
}

SmithForm smith_normal_form(const IntMat& input) {
  IntMat a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  IntMat v(cols, IntVec(cols, Integer(0)));
  for (std::size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : v) std::swap(row[c1], row[c2]);
  };
  // column c2 -= q * column c1
  auto sub_col = [&](std::size_t c2, std::size_t c1, const Integer& q) {
    for (auto& row : a) row[c2] -= q * row[c1];
    for (auto& row : v) row[c2] -= q * row[c1];
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = k; i < rows; ++i)
        for (std::size_t j = k; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) goto done;
      std::swap(a[k], a[pi]);
      if (pj != k) swap_cols(k, pj);

      bool clean = true;
      for (std::size_t i = k + 1; i < rows; ++i) {
        Integer q = a[i][k] / a[k][k];
        if (q != 0)
          for (std::size_t j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
        if (a[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < cols; ++j) {
        Integer q = a[k][j] / a[k][k];
        if (q != 0) sub_col(j, k, q);
        if (a[k][j] != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = k + 1; i < rows && divides; ++i)
        for (std::size_t j = k + 1; j < cols; ++j)
          if (a[i][j] % a[k][k] != 0) {
            for (std::size_t t = k; t < cols; ++t) a[k][t] += a[i][t];
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (a[k][k] < 0)
      for (std::size_t t = k; t < cols; ++t) a[k][t] = -a[k][t];
  }
done:
  SmithForm out;
  for (std::size_t k = 0; k < steps; ++k) out.diagonal.push_back(a[k][k]);
  out.right = std::move(v);
  return out;
}

DiscriminantGroup discriminant_group(const GramLattice& lattice) {
  if (lattice.is_degenerate()) throw ValidationError("discriminant group of a degenerate lattice");
  if (!lattice.is_even()) throw ValidationError("discriminant quadratic form requires an even lattice");
  SmithForm snf = smith_normal_form(lattice.gram());
  DiscriminantGroup group;
  const int n = lattice.rank();
  for (int i = 0; i < n; ++i) {
    const Integer& d = snf.diagonal[i];
    if (d == 1) continue;
    // The generator is (column i of V) / d.
    IntVec col(n);
    for (int r = 0; r < n; ++r) col[r] = snf.right[r][i];
    Rational q(lattice.square(col), d * d);
    group.cyclic_orders.push_back(d);
    group.q_values.push_back(mod_positive(q, Rational(2)));
  }
  return group;
}

GramLattice orthogonal_sum(const GramLattice& a, const GramLattice& b) {
  if (a.rank() == 0) return b;
  if (b.rank() == 0) return a;
  const int n = a.rank() + b.rank();
  IntMat g(n, IntVec(n, Integer(0)));
  for (int i = 0; i < a.rank(); ++i)
    for (int j = 0; j < a.rank(); ++j) g[i][j] = a.at(i, j);
  for (int i = 0; i < b.rank(); ++i)
    for (int j = 0; j < b.rank(); ++j) g[a.rank() + i][a.rank() + j] = b.at(i, j);
  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), b.labels().begin(), b.labels().end());
  return GramLattice(std::move(g), std::move(labels), a.flagged_even() && b.flagged_even());
}

GramLattice hyperbolic_plane() { return GramLattice({{0, 1}, {1, 0}}, {"u", "w"}, true); }

GramLattice e8_lattice() {
  // Cartan matrix of E8, Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 attached to 4.
  IntMat g(8, IntVec(8, Integer(0)));
  for (int i = 0; i < 8; ++i) g[i][i] = 2;
  const int edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (const auto& e : edges) {
    g[e[0]][e[1]] = -1;
    g[e[1]][e[0]] = -1;
  }
  std::vector<std::string> labels;
  for (int i = 1; i <= 8; ++i) labels.push_back("a" + std::to_string(i));
  return GramLattice(std::move(g), std::move(labels), true);
}

GramLattice rank_one(const Integer& k) {
  if (k == 0 || k % 2 != 0) throw ValidationError("rank1(k) needs a nonzero even k, got " + k.str());
  return GramLattice({{k}}, {"x"}, true);
}

GramLattice scaled(const GramLattice& lattice, const Integer& k) {
  IntMat g = lattice.gram();
  for (auto& row : g)
    for (auto& x : row) x *= k;
  bool even = lattice.flagged_even() || (k % 2 == 0);
  return GramLattice(std::move(g), lattice.labels(), even);
}

GramLattice standard_lattice(std::string_view name) {
  if (name == "U") return hyperbolic_plane();
  if (name == "E8") return e8_lattice();
  if (name == "minusE8") return scaled(e8_lattice(), -1);
  if (name.substr(0, 6) == "rank1(" && name.size() > 7 && name.back() == ')') {
    std::string_view inner = name.substr(6, name.size() - 7);
    long long k = 0;
    auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), k);
    if (ec != std::errc() || ptr != inner.data() + inner.size())
      throw ValidationError("bad rank1 argument: '" + std::string(inner) + "'");
    return rank_one(Integer(k));
  }
  throw ValidationError("unknown standard lattice '" + std::string(name) +
                        "' (expected U, E8, minusE8 or rank1(k))");
}

IntMat congruent(const IntMat& gram, const IntMat& m) {
  const std::size_t n = gram.size();
  if (m.size() != n) throw ValidationError("matrix size mismatch in congruence");
  IntMat gm(n, IntVec(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) gm[i][j] += gram[i][k] * m[k][j];
  IntMat out(n, IntVec(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out[i][j] += m[k][i] * gm[k][j];
  return out;
}

}  // namespace k3lat
