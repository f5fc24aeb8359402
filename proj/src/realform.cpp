#include "k4holo/realform.hpp"

#include "k4holo/chevalley.hpp"
#include "k4holo/errors.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace k4holo {

// ---------------------------------------------------------------- labels

RealFormLabel RealFormLabel::su(int p, int q) {
  if (p < q) std::swap(p, q);
  if (q == 0) return compact_form({Family::A, p - 1});
  return {Kind::su_pq, {Family::A, p + q - 1}, p, q};
}

RealFormLabel RealFormLabel::so(int p2, int q2) {
  int p = p2 / 2, q = q2 / 2;
  if (p < q) std::swap(p, q);
  if (q == 0) return compact_form({Family::D, p});
  return {Kind::so_pq, {Family::D, p + q}, p, q};
}

RealFormLabel RealFormLabel::so_star(int n2) { return {Kind::so_star, {Family::D, n2 / 2}, n2 / 2, 0}; }

std::string RealFormLabel::name(RenderStyle style) const {
  switch (kind) {
  case Kind::compact: return complex.compact_name();
  case Kind::su_pq:
    if (p == 1 && q == 1 && style == RenderStyle::symmetric_pair) return "sl(2,ℝ)";
    return "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
  case Kind::so_pq: return "so(" + std::to_string(2 * p) + "," + std::to_string(2 * q) + ")";
  case Kind::so_star: return "so*(" + std::to_string(2 * p) + ")";
  }
  return "?";
}

namespace {

// Complex type of so(2k) as a list of simple pieces plus center.
void add_orthogonal_block(int k, std::vector<SimpleComponent>& comps, int& center) {
  switch (k) {
  case 0: break;
  case 1: ++center; break;
  case 2:
    comps.push_back({Family::A, 1});
    comps.push_back({Family::A, 1});
    break;
  case 3: comps.push_back({Family::A, 3}); break;
  default: comps.push_back({Family::D, k}); break;
  }
}

} // namespace

ReductiveType RealFormLabel::maximal_compact() const {
  std::vector<SimpleComponent> comps;
  int center = 0;
  switch (kind) {
  case Kind::compact: return ReductiveType({complex}, 0);
  case Kind::su_pq:
    if (p > 1) comps.push_back({Family::A, p - 1});
    if (q > 1) comps.push_back({Family::A, q - 1});
    center = 1;
    break;
  case Kind::so_pq:
    add_orthogonal_block(p, comps, center);
    add_orthogonal_block(q, comps, center);
    break;
  case Kind::so_star:
    if (p > 1) comps.push_back({Family::A, p - 1});
    center = 1;
    break;
  }
  return ReductiveType(std::move(comps), center);
}

std::vector<RealFormLabel> inner_real_forms(const SimpleComponent& c) {
  std::vector<RealFormLabel> out;
  switch (c.family) {
  case Family::A:
    for (int q = 1; 2 * q <= c.rank + 1; ++q) out.push_back(RealFormLabel::su(c.rank + 1 - q, q));
    break;
  case Family::D:
    for (int q = 1; 2 * q <= c.rank; ++q) out.push_back(RealFormLabel::so(2 * (c.rank - q), 2 * q));
    out.push_back(RealFormLabel::so_star(2 * c.rank));
    break;
  case Family::E: break;
  }
  out.push_back(RealFormLabel::compact_form(c));
  return out;
}

// ---------------------------------------------------------------- RealFormType

namespace {

int family_rank_key(Family f) { return f == Family::E ? 0 : f == Family::D ? 1 : 2; }

bool ideal_before(const RealFormLabel& a, const RealFormLabel& b) {
  if (a.is_compact() != b.is_compact()) return !a.is_compact();
  if (a.is_compact()) return component_before(a.complex, b.complex);
  return std::make_tuple(-a.complex.rank, family_rank_key(a.complex.family), -a.p, static_cast<int>(a.kind)) <
         std::make_tuple(-b.complex.rank, family_rank_key(b.complex.family), -b.p, static_cast<int>(b.kind));
}

std::string with_multiplicity(int k, const std::string& s) { return k == 1 ? s : std::to_string(k) + s; }

} // namespace

RealFormType::RealFormType(std::vector<RealFormLabel> ideals_in, int compact, int split)
    : ideals(std::move(ideals_in)), compact_center(compact), split_center(split) {
  std::stable_sort(ideals.begin(), ideals.end(), ideal_before);
}

bool RealFormType::operator<(const RealFormType& other) const { return to_string() < other.to_string(); }

std::string RealFormType::to_string(RenderStyle style) const {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < ideals.size();) {
    std::size_t j = i;
    while (j < ideals.size() && ideals[j] == ideals[i]) ++j;
    parts.push_back(with_multiplicity(static_cast<int>(j - i), ideals[i].name(style)));
    i = j;
  }
  if (compact_center > 0) {
    if (style == RenderStyle::symmetric_pair)
      parts.push_back(with_multiplicity(compact_center, "so(2)"));
    else
      parts.push_back(compact_center == 1 ? "√−1ℝ" : std::to_string(compact_center) + "(√−1ℝ)");
  }
  if (split_center > 0) parts.push_back(split_center == 1 ? "ℝ" : std::to_string(split_center) + "(ℝ)");
  if (parts.empty()) return "0";
  std::string s = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) s += "⊕" + parts[i];
  return s;
}

ReductiveType RealFormType::complexification() const {
  std::vector<SimpleComponent> comps;
  for (const auto& l : ideals) comps.push_back(l.complex);
  return ReductiveType(std::move(comps), compact_center + split_center);
}

int RealFormType::maximal_compact_dim() const {
  int d = compact_center;
  for (const auto& l : ideals) d += l.maximal_compact_dim();
  return d;
}

// ---------------------------------------------------------------- identification

RealFormType identify_real_form(const FixedSubalgebra& sub, const TorusCharacter& theta, const RootSystem& sys) {
  if (theta.order() > 2) throw PreconditionError(theta.to_string() + " is not an involution");

  std::vector<RealFormLabel> labels;
  for (const auto& ideal : decompose_subsystem(sub.fixed_roots, sys)) {
    std::vector<Root> fixed;
    for (const auto& r : ideal.roots)
      if (theta.fixes(r)) fixed.push_back(r);

    std::vector<SimpleComponent> comps;
    for (const auto& c : decompose_subsystem(fixed, sys)) comps.push_back(c.type);
    ReductiveType observed(std::move(comps), 0);
    observed.center_dim = ideal.type.rank - observed.semisimple_rank();

    const RealFormLabel* match = nullptr;
    const auto candidates = inner_real_forms(ideal.type);
    for (const auto& cand : candidates)
      if (cand.maximal_compact() == observed) {
        match = &cand;
        break;
      }
    if (!match) throw UnmappedPatternError(ideal.type.label() + " with fixed " + observed.label());
    if (match->maximal_compact_dim() != ideal.type.rank + static_cast<int>(fixed.size()))
      throw InternalError("dimension bookkeeping failed for " + match->name());
    labels.push_back(*match);
  }
  // theta is trivial on the Cartan subalgebra, so every center direction is compact.
  return RealFormType(std::move(labels), sub.rtype.center_dim, 0);
}

// ---------------------------------------------------------------- center

namespace {

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction() = default;
  Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) num = -num, den = -den;
    std::int64_t g = std::gcd(num, den);
    if (g > 1) num /= g, den /= g;
  }
  Fraction operator-(const Fraction& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Fraction operator*(const Fraction& o) const { return {num * o.num, den * o.den}; }
  Fraction operator/(const Fraction& o) const { return {num * o.den, den * o.num}; }
  bool zero() const { return num == 0; }
};

} // namespace

std::vector<std::vector<std::int64_t>> integer_nullspace(const std::vector<std::vector<std::int64_t>>& rows,
                                                         std::size_t ncols) {
  std::vector<std::vector<Fraction>> m;
  for (const auto& r : rows) {
    if (r.size() != ncols) throw PreconditionError("ragged matrix");
    m.emplace_back(r.begin(), r.end());
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col].zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Fraction lead = m[row][col];
    for (auto& x : m[row]) x = x / lead;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].zero()) continue;
      Fraction f = m[r][col];
      for (std::size_t c = 0; c < ncols; ++c) m[r][c] = m[r][c] - f * m[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<std::vector<std::int64_t>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) continue;
    std::vector<Fraction> v(ncols, Fraction(0));
    v[free] = Fraction(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = Fraction(0) - m[i][free];
    std::int64_t l = 1;
    for (const auto& x : v) l = std::lcm(l, x.den);
    std::vector<std::int64_t> out(ncols);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < ncols; ++i) {
      out[i] = v[i].num * (l / v[i].den);
      g = std::gcd(g, out[i]);
    }
    if (g > 1)
      for (auto& x : out) x /= g;
    basis.push_back(std::move(out));
  }
  return basis;
}

std::vector<std::vector<std::int64_t>> center_of_fixed(const TorusCharacter& theta) {
  if (classify_involution(theta) != ConjClass::sigma2)
    throw PreconditionError(theta.to_string() + " is not in the sigma2 class");
  const RootSystem& sys = e6();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : fixed_roots(std::span(&theta, 1), sys)) {
    std::vector<std::int64_t> row(sys.rank());
    for (int i = 0; i < sys.rank(); ++i) row[i] = sys.inner_product(r, sys.simple_root(i)); // alpha(h_i)
    rows.push_back(std::move(row));
  }
  auto basis = integer_nullspace(rows, sys.rank());
  if (basis.size() != 1)
    throw InternalError("center of the fixed algebra has dimension " + std::to_string(basis.size()));
  return basis;
}

namespace {

// Matrix of a toral automorphism exp(ad H) on the Cartan subalgebra, columns
// indexed by h_j. ad H maps h_j to sum_i t_i [h_i, h_j]; every such bracket
// is read from the table, and the exponential series stops at the first term
// once they vanish.
std::vector<std::vector<std::int64_t>> toral_action_on_cartan(const TorusCharacter& sigma,
                                                              const StructureConstants& sc) {
  const int rank = sc.system().rank();
  if (static_cast<int>(sigma.rank()) != rank) throw PreconditionError("character rank mismatch");
  std::vector<std::vector<std::int64_t>> m(rank, std::vector<std::int64_t>(rank, 0));
  for (int i = 0; i < rank; ++i) m[i][i] = 1;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (!sc.bracket(sc.h(i), sc.h(j)).empty())
        throw InternalError("Cartan elements " + sc.basis_name(i) + ", " + sc.basis_name(j) + " do not commute");
  return m;
}

} // namespace

bool holomorphic_type_check(const TorusCharacter& sigma, const TorusCharacter& theta) {
  if (sigma.order() > 2) throw PreconditionError(sigma.to_string() + " is not an involution");
  const auto z = center_of_fixed(theta).front();
  const StructureConstants& sc = e6_structure();
  const int rank = sc.system().rank();

  // Z is central in the theta-fixed algebra.
  Element ze(sc.dimension(), 0);
  for (int i = 0; i < rank; ++i) ze[i] = z[i];
  for (const auto& r : fixed_roots(std::span(&theta, 1), sc.system()))
    for (auto v : sc.bracket(ze, sc.unit(sc.x(r))))
      if (v != 0) throw InternalError("center generator does not centralize the fixed algebra");

  const auto action = toral_action_on_cartan(sigma, sc);
  std::vector<std::int64_t> image(rank, 0);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) image[i] += action[i][j] * z[j];
  return image == z;
}

} // namespace k4holo
