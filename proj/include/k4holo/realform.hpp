#ifndef K4HOLO_REALFORM_HPP
#define K4HOLO_REALFORM_HPP

#include "k4holo/reductive.hpp"
#include "k4holo/rootsys.hpp"
#include "k4holo/toral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace k4holo {

/// Klein-pair spelling writes su(1,1) and the center as √−1ℝ; the
/// symmetric-pair spelling uses sl(2,ℝ) and so(2).
enum class RenderStyle { klein_pair, symmetric_pair };

/// Real form of one simple ideal.
struct RealFormLabel {
  enum class Kind { compact, su_pq, so_pq, so_star };

  Kind kind = Kind::compact;
  SimpleComponent complex;
  int p = 0; // su(p,q), so(2p,2q) with p >= q; n for so*(2n)
  int q = 0;

  bool operator==(const RealFormLabel&) const = default;

  bool is_compact() const { return kind == Kind::compact; }
  std::string name(RenderStyle style = RenderStyle::klein_pair) const;
  /// Complex type of a maximal compact subalgebra.
  ReductiveType maximal_compact() const;
  int maximal_compact_dim() const { return maximal_compact().dimension(); }

  static RealFormLabel compact_form(SimpleComponent c) { return {Kind::compact, c, 0, 0}; }
  static RealFormLabel su(int p, int q);
  static RealFormLabel so(int p2, int q2); // so(p2, q2), both even
  static RealFormLabel so_star(int n2);    // so*(n2), n2 even
};

/// All real forms of a complex simple type reachable by an inner involution,
/// listed with so(2p,2q) before so*(2n) so that so*(8) is spelled so(6,2).
std::vector<RealFormLabel> inner_real_forms(const SimpleComponent& c);

/// Real reductive algebra: simple ideals plus center summands.
struct RealFormType {
  std::vector<RealFormLabel> ideals; // canonical order, noncompact first
  int compact_center = 0;             // √−1ℝ summands
  int split_center = 0;               // ℝ summands

  RealFormType() = default;
  RealFormType(std::vector<RealFormLabel> ideals, int compact_center, int split_center = 0);

  bool operator==(const RealFormType&) const = default;
  bool operator<(const RealFormType& other) const;

  std::string to_string(RenderStyle style = RenderStyle::klein_pair) const;
  ReductiveType complexification() const;
  int maximal_compact_dim() const;
};

/// Real form of sub under the involution theta, ideal by ideal, from the
/// type of the theta-fixed subsystem. Throws UnmappedPatternError for a
/// pattern outside the table.
RealFormType identify_real_form(const FixedSubalgebra& sub, const TorusCharacter& theta,
                                const RootSystem& sys = e6());

/// Integer basis of {H in the Cartan : alpha(H) = 0 for every theta-fixed
/// root}, in coordinates over the simple coroots. theta must be in the sigma2
/// class; the result always has one vector.
std::vector<std::vector<std::int64_t>> center_of_fixed(const TorusCharacter& theta);

/// True iff sigma fixes the central element Z of the theta-fixed algebra.
bool holomorphic_type_check(const TorusCharacter& sigma, const TorusCharacter& theta);

/// Integer basis of the right null space of an integer matrix.
std::vector<std::vector<std::int64_t>> integer_nullspace(const std::vector<std::vector<std::int64_t>>& rows,
                                                         std::size_t ncols);

} // namespace k4holo

#endif
