#ifndef K4HOLO_CHEVALLEY_HPP
#define K4HOLO_CHEVALLEY_HPP

#include "k4holo/rootsys.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

namespace k4holo {

/// Index into the Chevalley basis: 0..rank-1 are the coroots h_i of the simple
/// roots, rank + k is X_alpha for alpha = sys.root(k).
using BasisIndex = std::size_t;

/// Sparse linear combination of basis elements.
using Term = std::pair<BasisIndex, std::int64_t>;
using SparseVector = std::vector<Term>;

/// Dense linear combination of basis elements.
using Element = std::vector<std::int64_t>;

class StructureConstants {
public:
  /// Chevalley basis of a simply-laced system with N = +1 on every
  /// extraspecial pair (positive-root order from the positivity functional).
  static StructureConstants build(const RootSystem& sys);

  const RootSystem& system() const noexcept { return sys_; }
  std::size_t dimension() const noexcept { return sys_.size() + sys_.rank(); }

  BasisIndex h(int i) const { return static_cast<BasisIndex>(i); }
  BasisIndex x(const Root& r) const;
  BasisIndex x(std::size_t root_index) const { return sys_.rank() + root_index; }
  bool is_cartan(BasisIndex b) const { return b < static_cast<BasisIndex>(sys_.rank()); }
  std::string basis_name(BasisIndex b) const;

  /// N(alpha, beta); 0 when alpha + beta is not a root.
  int n(const Root& a, const Root& b) const;
  int n(std::size_t ia, std::size_t ib) const { return table_[ia * sys_.size() + ib]; }

  /// Extraspecial pair (alpha, beta) of each non-simple positive root xi.
  std::optional<std::pair<std::size_t, std::size_t>> extraspecial_pair(std::size_t xi) const;

  SparseVector bracket(BasisIndex a, BasisIndex b) const;
  Element bracket(const Element& a, const Element& b) const;

  Element unit(BasisIndex b) const;

  /// One line per ordered pair with alpha + beta a root:
  /// "[a...] [b...] N", in basis order.
  void write_table(std::ostream& os) const;

private:
  RootSystem sys_;
  std::vector<int> table_;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> extraspecial_;
};

StructureConstants build_chevalley_basis(const RootSystem& sys);

struct JacobiReport {
  bool pass = true;
  std::size_t triples_checked = 0;
  std::optional<std::array<BasisIndex, 3>> first_violation;
};

/// Checks the cyclic Jacobi sum on every unordered triple (repetition
/// allowed) of basis elements. jobs > 1 splits the outer index over threads.
JacobiReport check_jacobi(const StructureConstants& sc, unsigned jobs = 1);

/// Cyclic sum [a,[b,c]] + [b,[c,a]] + [c,[a,b]] for basis elements.
SparseVector jacobi_sum(const StructureConstants& sc, BasisIndex a, BasisIndex b, BasisIndex c);

/// First ordered pair (a, b) with [a,b] != -[b,a], if any.
std::optional<std::pair<BasisIndex, BasisIndex>> check_antisymmetry(const StructureConstants& sc);

/// tr(ad a ad b), summed over the basis from the bracket table.
std::int64_t killing_form(const StructureConstants& sc, BasisIndex a, BasisIndex b);
std::int64_t killing_form(const StructureConstants& sc, const Element& a, const Element& b);

/// Shared E6 table.
const StructureConstants& e6_structure();

} // namespace k4holo

#endif
