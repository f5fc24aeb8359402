#ifndef K4HOLO_TORAL_HPP
#define K4HOLO_TORAL_HPP

#include "k4holo/rootsys.hpp"

#include <array>
#include <span>
#include <string>
#include <vector>

namespace k4holo {

/// Character of the root lattice with values in the m-th roots of unity.
/// exps[i] is the exponent on simple root alpha_{i+1}: the value on it is
/// zeta_m^exps[i]. Models the inner automorphism exp(2 pi sqrt(-1) H / m)
/// for a Cartan element H, acting on each root space by a scalar.
class TorusCharacter {
public:
  TorusCharacter() = default;
  TorusCharacter(int modulus, std::vector<int> exps);

  static TorusCharacter identity(int rank, int modulus = 1);

  int modulus() const noexcept { return modulus_; }
  const std::vector<int>& exps() const noexcept { return exps_; }
  std::size_t rank() const noexcept { return exps_.size(); }

  /// Exponent of the value on a root, in [0, m).
  int evaluate(const Root& r) const;
  bool fixes(const Root& r) const { return evaluate(r) == 0; }

  /// Order as an automorphism (lcm of the value orders on the simple roots,
  /// which generate the lattice).
  int order() const;
  bool is_identity() const { return order() == 1; }

  TorusCharacter lifted(int modulus) const;
  /// Same character over the smallest modulus.
  TorusCharacter reduced() const;

  TorusCharacter operator*(const TorusCharacter& other) const;
  bool operator==(const TorusCharacter& other) const;
  /// Total order on reduced forms.
  bool operator<(const TorusCharacter& other) const;

  // "chi m=4 [a1,a3,a4,a5,a6,a2]" ordering for E6; plain order otherwise.
  std::string to_string() const;

private:
  int modulus_ = 1;
  std::vector<int> exps_;
};

TorusCharacter character_from_simple_values(std::vector<int> exps, int modulus);
TorusCharacter multiply(const TorusCharacter& a, const TorusCharacter& b);
int order(const TorusCharacter& a);
int evaluate(const TorusCharacter& a, const Root& r);

/// Reference characters of the two inner involution classes of E6.
TorusCharacter sigma1_character(int modulus = 2);
TorusCharacter sigma2_character(int modulus = 2);

/// Diagonal element of SU(6) x Sp(1): diag(zeta_m^d1, ..., zeta_m^d6) and the
/// Sp(1) torus element with eigenvalues zeta_m^{+-y} on C^2.
struct UnitaryPairData {
  int modulus = 4;
  std::array<int, 6> d{};
  int y = 0;

  UnitaryPairData operator*(const UnitaryPairData& other) const;
  std::string to_string() const; // "su6sp1 m=4 d=[...] y=..."
};

/// Image of a diagonal (X, Y) in the identity component of the sigma1
/// centralizer. The A5 chain alpha1, alpha3, alpha4, alpha5, alpha6 gets
/// d1-d2, ..., d5-d6 and alpha2 gets y + d4 + d5 + d6, so the highest root
/// evaluates to 2y. Throws PreconditionError if sum(d) != 0 mod m.
TorusCharacter embed_su6_sp1(const UnitaryPairData& u);

struct GroupStructure {
  std::size_t order = 1;
  bool elementary_abelian_2 = true;
  int rank = 0; // valid when elementary_abelian_2
};

struct LabeledElement {
  std::string label;
  unsigned word = 0; // bitmask over the group's basis symbols
  TorusCharacter chi;
};

/// Finite group of characters. When generator labels are independent words
/// over atomic symbols ("x1", "x4", "y3", ...), every element carries the
/// canonical product label, e.g. x4 resolved from x1 * x1x4.
class CharacterGroup {
public:
  const std::vector<TorusCharacter>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const GroupStructure& structure() const noexcept { return structure_; }

  const std::vector<std::string>& basis() const noexcept { return basis_; }
  bool labeled() const noexcept { return !labeled_.empty(); }
  /// Ordered by word; labeled_[w].word == w.
  const std::vector<LabeledElement>& labeled_elements() const noexcept { return labeled_; }

  bool has_label(const std::string& label) const;
  const TorusCharacter& at(const std::string& label) const;
  unsigned word_of(const std::string& label) const;
  std::string label_of(unsigned word) const;
  const TorusCharacter& at_word(unsigned word) const { return labeled_.at(word).chi; }

  bool contains(const TorusCharacter& chi) const;

private:
  friend CharacterGroup generate_group(std::span<const TorusCharacter>, std::span<const std::string>, bool);

  std::vector<TorusCharacter> elements_;
  GroupStructure structure_;
  std::vector<std::string> basis_;
  std::vector<LabeledElement> labeled_;
};

/// Closure of the generators under multiplication. With expect_elementary,
/// an element of order > 2 raises ValidationError. Labels may be empty.
CharacterGroup generate_group(std::span<const TorusCharacter> gens, std::span<const std::string> labels,
                              bool expect_elementary = true);

/// Splits "y1y3y4" into {"y1", "y3", "y4"}; throws PreconditionError on junk.
std::vector<std::string> split_label(const std::string& label);

/// Product label over an ordered basis, "1" for the empty word.
std::string word_label(unsigned word, std::span<const std::string> basis);

} // namespace k4holo

#endif
