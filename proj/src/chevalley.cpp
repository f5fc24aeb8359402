#include "k4holo/chevalley.hpp"

#include "k4holo/errors.hpp"

#include <algorithm>
#include <ostream>
#include <thread>

namespace k4holo {

namespace {

// Bimultiplicative sign cocycle on the root lattice: eps(a_i, a_j) = -1 for
// i == j or for i < j adjacent. Gives eps(a,b) eps(b,a) = (-1)^(a,b).
int cocycle(const Root& a, const Root& b, const RootSystem& sys) {
  int parity = 0;
  const int r = sys.rank();
  for (int i = 0; i < r; ++i) {
    parity += a[i] * b[i];
    for (int j = i + 1; j < r; ++j)
      if (sys.cartan()[i][j] == -1) parity += a[i] * b[j];
  }
  return (parity % 2 == 0) ? 1 : -1;
}

void add_term(SparseVector& v, BasisIndex b, std::int64_t c) {
  if (c == 0) return;
  for (auto& t : v)
    if (t.first == b) {
      t.second += c;
      return;
    }
  v.emplace_back(b, c);
}

} // namespace

StructureConstants StructureConstants::build(const RootSystem& sys) {
  for (const auto& row : sys.cartan())
    for (int x : row)
      if (x < -1) throw UnsupportedError("Chevalley basis construction needs a simply-laced system");

  StructureConstants sc;
  sc.sys_ = sys;
  const std::size_t nr = sys.size();
  const std::size_t half = nr / 2;
  auto is_pos = [&](std::size_t i) { return i < half; };

  // Start from the cocycle realization e_a with [e_a, e_b] = eps(a,b) e_{a+b},
  // then rescale X_a = e_a, X_{-a} = -e_{-a} for a > 0 so [X_a, X_{-a}] = H_a.
  std::vector<int> base(nr * nr, 0);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      auto k = sys.index_of(sys.root(i) + sys.root(j));
      if (!k) continue;
      int c = (is_pos(i) ? 1 : -1) * (is_pos(j) ? 1 : -1) * (is_pos(*k) ? 1 : -1);
      base[i * nr + j] = c * cocycle(sys.root(i), sys.root(j), sys);
    }

  // Extraspecial pairs: for each non-simple positive xi, the special pair
  // (alpha, beta) with alpha minimal in the positive-root order.
  sc.extraspecial_.assign(nr, std::nullopt);
  for (std::size_t xi = 0; xi < half; ++xi) {
    for (std::size_t a = 0; a < xi; ++a) {
      auto b = sys.index_of(sys.root(xi) - sys.root(a));
      if (b && is_pos(*b) && a < *b) {
        sc.extraspecial_[xi] = std::make_pair(a, *b);
        break;
      }
    }
  }

  // Sign changes s_a = s_{-a} fixing N = +1 on extraspecial pairs. Positive
  // roots are processed in increasing order, so both summands are settled.
  std::vector<int> sign(nr, 1);
  for (std::size_t xi = 0; xi < half; ++xi) {
    if (const auto& es = sc.extraspecial_[xi]) {
      auto [a, b] = *es;
      sign[xi] = sign[a] * sign[b] * base[a * nr + b];
    }
    sign[sys.negative_index(xi)] = sign[xi];
  }

  sc.table_.assign(nr * nr, 0);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      if (base[i * nr + j] == 0) continue;
      auto k = *sys.index_of(sys.root(i) + sys.root(j));
      sc.table_[i * nr + j] = sign[i] * sign[j] * sign[k] * base[i * nr + j];
    }
  return sc;
}

StructureConstants build_chevalley_basis(const RootSystem& sys) { return StructureConstants::build(sys); }

BasisIndex StructureConstants::x(const Root& r) const {
  auto i = sys_.index_of(r);
  if (!i) throw PreconditionError(r.to_string() + " is not a root of " + sys_.label());
  return x(*i);
}

std::string StructureConstants::basis_name(BasisIndex b) const {
  if (is_cartan(b)) return "h" + std::to_string(b + 1);
  return "X" + sys_.root(b - sys_.rank()).to_string();
}

int StructureConstants::n(const Root& a, const Root& b) const {
  auto ia = sys_.index_of(a);
  auto ib = sys_.index_of(b);
  if (!ia || !ib) throw PreconditionError("structure constant requested for a non-root");
  return n(*ia, *ib);
}

std::optional<std::pair<std::size_t, std::size_t>> StructureConstants::extraspecial_pair(std::size_t xi) const {
  return extraspecial_.at(xi);
}

SparseVector StructureConstants::bracket(BasisIndex a, BasisIndex b) const {
  const auto rank = static_cast<BasisIndex>(sys_.rank());
  SparseVector out;
  if (a < rank && b < rank) return out;
  if (a < rank) {
    const Root& r = sys_.root(b - rank);
    add_term(out, b, sys_.inner_product(r, sys_.simple_root(static_cast<int>(a))));
    return out;
  }
  if (b < rank) {
    const Root& r = sys_.root(a - rank);
    add_term(out, a, -sys_.inner_product(r, sys_.simple_root(static_cast<int>(b))));
    return out;
  }
  const std::size_t ia = a - rank, ib = b - rank;
  if (sys_.negative_index(ia) == ib) {
    // [X_a, X_{-a}] = H_a; simply laced, so coroot coordinates equal root coordinates.
    const Root& r = sys_.root(ia);
    for (int i = 0; i < sys_.rank(); ++i) add_term(out, static_cast<BasisIndex>(i), r[i]);
    return out;
  }
  int c = n(ia, ib);
  if (c != 0) add_term(out, x(*sys_.index_of(sys_.root(ia) + sys_.root(ib))), c);
  return out;
}

Element StructureConstants::unit(BasisIndex b) const {
  Element e(dimension(), 0);
  e.at(b) = 1;
  return e;
}

Element StructureConstants::bracket(const Element& a, const Element& b) const {
  Element out(dimension(), 0);
  for (BasisIndex i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (BasisIndex j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      for (auto [k, c] : bracket(i, j)) out[k] += a[i] * b[j] * c;
    }
  }
  return out;
}

void StructureConstants::write_table(std::ostream& os) const {
  const std::size_t nr = sys_.size();
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      if (int c = n(i, j); c != 0)
        os << sys_.root(i).to_string() << ' ' << sys_.root(j).to_string() << ' ' << c << '\n';
}

// ---------------------------------------------------------------- checks

namespace {

SparseVector bracket_with(const StructureConstants& sc, BasisIndex a, const SparseVector& v) {
  SparseVector out;
  for (auto [b, c] : v)
    for (auto [k, d] : sc.bracket(a, b)) add_term(out, k, c * d);
  return out;
}

} // namespace

SparseVector jacobi_sum(const StructureConstants& sc, BasisIndex a, BasisIndex b, BasisIndex c) {
  SparseVector total;
  for (auto [t, v] : bracket_with(sc, a, sc.bracket(b, c))) add_term(total, t, v);
  for (auto [t, v] : bracket_with(sc, b, sc.bracket(c, a))) add_term(total, t, v);
  for (auto [t, v] : bracket_with(sc, c, sc.bracket(a, b))) add_term(total, t, v);
  std::erase_if(total, [](const Term& t) { return t.second == 0; });
  return total;
}

JacobiReport check_jacobi(const StructureConstants& sc, unsigned jobs) {
  const BasisIndex dim = sc.dimension();
  jobs = std::max(1u, jobs);
  std::vector<JacobiReport> partial(jobs);

  auto work = [&](unsigned w) {
    JacobiReport& rep = partial[w];
    for (BasisIndex a = w; a < dim; a += jobs)
      for (BasisIndex b = a; b < dim; ++b)
        for (BasisIndex c = b; c < dim; ++c) {
          ++rep.triples_checked;
          if (!jacobi_sum(sc, a, b, c).empty() && !rep.first_violation) {
            rep.pass = false;
            rep.first_violation = std::array<BasisIndex, 3>{a, b, c};
          }
        }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
  }

  JacobiReport out;
  for (const auto& p : partial) {
    out.triples_checked += p.triples_checked;
    if (!p.pass) {
      out.pass = false;
      if (!out.first_violation || *p.first_violation < *out.first_violation) out.first_violation = p.first_violation;
    }
  }
  return out;
}

std::optional<std::pair<BasisIndex, BasisIndex>> check_antisymmetry(const StructureConstants& sc) {
  const BasisIndex dim = sc.dimension();
  for (BasisIndex a = 0; a < dim; ++a)
    for (BasisIndex b = a; b < dim; ++b) {
      SparseVector s = sc.bracket(a, b);
      for (auto [k, c] : sc.bracket(b, a)) add_term(s, k, c);
      std::erase_if(s, [](const Term& t) { return t.second == 0; });
      if (!s.empty()) return std::make_pair(a, b);
    }
  return std::nullopt;
}

std::int64_t killing_form(const StructureConstants& sc, BasisIndex a, BasisIndex b) {
  std::int64_t trace = 0;
  for (BasisIndex k = 0; k < sc.dimension(); ++k)
    for (auto [t, c] : bracket_with(sc, a, sc.bracket(b, k)))
      if (t == k) trace += c;
  return trace;
}

std::int64_t killing_form(const StructureConstants& sc, const Element& a, const Element& b) {
  std::int64_t total = 0;
  for (BasisIndex i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (BasisIndex j = 0; j < b.size(); ++j)
      if (b[j] != 0) total += a[i] * b[j] * killing_form(sc, i, j);
  }
  return total;
}

const StructureConstants& e6_structure() {
  static const StructureConstants sc = StructureConstants::build(e6());
  return sc;
}

} // namespace k4holo
