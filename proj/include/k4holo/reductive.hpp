#ifndef K4HOLO_REDUCTIVE_HPP
#define K4HOLO_REDUCTIVE_HPP

#include "k4holo/rootsys.hpp"
#include "k4holo/toral.hpp"

#include <span>
#include <string>
#include <vector>

namespace k4holo {

/// Common fixed points of a set of toral automorphisms: the Cartan
/// subalgebra plus the root spaces on which every character is trivial.
struct FixedSubalgebra {
  std::vector<Root> fixed_roots; // in root-system order
  ReductiveType rtype;
  int dim = 0;
};

FixedSubalgebra fixed_subalgebra(std::span<const TorusCharacter> chars, const RootSystem& sys = e6());

/// Roots of sys on which every character is trivial.
std::vector<Root> fixed_roots(std::span<const TorusCharacter> chars, const RootSystem& sys = e6());

enum class ConjClass { identity, sigma1, sigma2 };

std::string to_string(ConjClass c);

/// Fixed dimensions of the two inner involution classes of E6, computed once
/// from the sigma1/sigma2 reference characters.
struct InvolutionDimensions {
  int sigma1 = 0;
  int sigma2 = 0;
};
const InvolutionDimensions& involution_dimensions();

/// Inner involutions of E6 split into two conjugacy classes with different
/// fixed dimensions, so the dimension decides the class.
ConjClass classify_involution(const TorusCharacter& chi);

/// -1 on the sigma1 class, +1 on the sigma2 class and the identity.
int mu(const TorusCharacter& chi);

} // namespace k4holo

#endif
