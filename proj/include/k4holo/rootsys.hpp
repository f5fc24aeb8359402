#ifndef K4HOLO_ROOTSYS_HPP
#define K4HOLO_ROOTSYS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace k4holo {

/// A root, stored as integer coefficients in the simple-root basis.
class Root {
public:
  Root() = default;
  explicit Root(std::vector<int> coords) : coords_(std::move(coords)) {}

  const std::vector<int>& coords() const noexcept { return coords_; }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::size_t rank() const noexcept { return coords_.size(); }

  Root operator-() const;
  Root operator+(const Root& other) const;
  Root operator-(const Root& other) const;
  Root scaled(int k) const;

  bool is_zero() const noexcept;
  int height() const noexcept;

  auto operator<=>(const Root&) const = default;
  bool operator==(const Root&) const = default;

  // "[1,2,2,3,2,1]"
  std::string to_string() const;

private:
  std::vector<int> coords_;
};

enum class Family : char { A = 'A', D = 'D', E = 'E' };

/// One simple ideal of a reductive algebra, named by its Dynkin type.
struct SimpleComponent {
  Family family = Family::A;
  int rank = 0;

  bool operator==(const SimpleComponent&) const = default;

  std::string label() const; // "A5", "D4", "E6"
  std::string compact_name() const; // "su(6)", "so(8)", "e6"
  int root_count() const;
  int dimension() const { return root_count() + rank; }
};

/// Orders components by decreasing rank, then E before D before A.
bool component_before(const SimpleComponent& a, const SimpleComponent& b);

/// Complex reductive type: simple components plus the dimension of the center.
struct ReductiveType {
  std::vector<SimpleComponent> components; // canonical order, see component_before
  int center_dim = 0;

  ReductiveType() = default;
  ReductiveType(std::vector<SimpleComponent> comps, int center);

  bool operator==(const ReductiveType&) const = default;

  int semisimple_rank() const;
  int root_count() const;
  int dimension() const { return root_count() + semisimple_rank() + center_dim; }

  // "A3+2A1+T1"
  std::string label() const;
  // compact dual spelling, e.g. "su(4)⊕2su(2)⊕√−1ℝ"
  std::string compact_name() const;
};

/// One simple ideal of a closed subsystem together with the roots it owns.
struct SubsystemComponent {
  SimpleComponent type;
  std::vector<Root> simple_roots;
  std::vector<Root> roots;
};

class RootSystem;

/// Splits a closed, negation-symmetric subset into its simple ideals.
/// Throws PreconditionError if the subset is not closed and InternalError if
/// an ideal matches no simply-laced type.
std::vector<SubsystemComponent> decompose_subsystem(std::span<const Root> subset,
                                                    const RootSystem& sys);

class RootSystem {
public:
  /// Bourbaki numbering. For E6 the chain is 1-3-4-5-6 with node 2 attached
  /// to node 4, so the diagram symmetry swaps 1<->6 and 3<->5.
  static RootSystem build(Family family, int rank);
  static RootSystem build(const std::string& label); // "E6", "A5", ...

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string label() const;
  const std::vector<std::vector<int>>& cartan() const noexcept { return cartan_; }

  /// Positive roots in increasing positivity-functional order, followed by
  /// their negatives in the same order.
  const std::vector<Root>& roots() const noexcept { return roots_; }
  std::size_t size() const noexcept { return roots_.size(); }
  const Root& highest_root() const noexcept { return highest_; }
  Root simple_root(int i) const;

  bool contains(const Root& r) const { return index_.contains(r); }
  std::optional<std::size_t> index_of(const Root& r) const;
  const Root& root(std::size_t i) const { return roots_[i]; }
  std::size_t negative_index(std::size_t i) const;

  /// Symmetric form normalized so every root has squared length 2.
  int inner_product(const Root& a, const Root& b) const;
  /// s_b(a) = a - (a,b) b
  Root reflect(const Root& a, const Root& b) const;

  /// Deterministic tie-free linear functional with weights (1, N, N^2, ...).
  std::int64_t positivity(const Root& r) const;
  bool is_positive(const Root& r) const { return positivity(r) > 0; }

  /// Dynkin diagram automorphism for E6 (node permutation 1<->6, 3<->5).
  Root diagram_symmetry(const Root& r) const;

private:
  Family family_ = Family::A;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> roots_;
  std::map<Root, std::size_t> index_;
  Root highest_;
  std::int64_t functional_base_ = 2;
};

int inner_product(const Root& a, const Root& b, const RootSystem& sys);

/// Identifies the reductive type spanned by the Cartan subalgebra and the
/// root spaces of a closed subset. center_dim = sys.rank() - semisimple rank.
ReductiveType identify_subsystem(std::span<const Root> subset, const RootSystem& sys);

/// True if the subset is negation-symmetric and closed under root addition.
bool is_closed_subset(std::span<const Root> subset, const RootSystem& sys);

/// Matches a connected simply-laced Cartan matrix against A_n, D_n, E6-8.
std::optional<SimpleComponent> match_connected_cartan(const std::vector<std::vector<int>>& cartan);

/// Shared E6 instance.
const RootSystem& e6();

} // namespace k4holo

#endif
