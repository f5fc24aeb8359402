#include "k4holo/reductive.hpp"

#include "k4holo/errors.hpp"

#include <algorithm>

namespace k4holo {

std::vector<Root> fixed_roots(std::span<const TorusCharacter> chars, const RootSystem& sys) {
  std::vector<Root> out;
  for (const auto& r : sys.roots())
    if (std::all_of(chars.begin(), chars.end(), [&](const TorusCharacter& c) { return c.fixes(r); }))
      out.push_back(r);
  return out;
}

FixedSubalgebra fixed_subalgebra(std::span<const TorusCharacter> chars, const RootSystem& sys) {
  FixedSubalgebra f;
  f.fixed_roots = fixed_roots(chars, sys);
  f.rtype = identify_subsystem(f.fixed_roots, sys);
  f.dim = static_cast<int>(f.fixed_roots.size()) + sys.rank();
  return f;
}

std::string to_string(ConjClass c) {
  switch (c) {
  case ConjClass::identity: return "identity";
  case ConjClass::sigma1: return "sigma1";
  case ConjClass::sigma2: return "sigma2";
  }
  return "?";
}

const InvolutionDimensions& involution_dimensions() {
  static const InvolutionDimensions dims = [] {
    InvolutionDimensions d;
    const TorusCharacter s1 = sigma1_character(), s2 = sigma2_character();
    d.sigma1 = fixed_subalgebra(std::span(&s1, 1)).dim;
    d.sigma2 = fixed_subalgebra(std::span(&s2, 1)).dim;
    if (d.sigma1 == d.sigma2) throw InternalError("reference involutions have equal fixed dimension");
    return d;
  }();
  return dims;
}

ConjClass classify_involution(const TorusCharacter& chi) {
  if (chi.rank() != 6) throw PreconditionError("involution classes are defined for E6 characters");
  const int ord = chi.order();
  if (ord > 2) throw PreconditionError(chi.to_string() + " has order " + std::to_string(ord) + ", not an involution");
  if (ord == 1) return ConjClass::identity;
  const int dim = fixed_subalgebra(std::span(&chi, 1)).dim;
  const auto& ref = involution_dimensions();
  if (dim == ref.sigma1) return ConjClass::sigma1;
  if (dim == ref.sigma2) return ConjClass::sigma2;
  throw InternalError("inner involution " + chi.to_string() + " has fixed dimension " + std::to_string(dim));
}

int mu(const TorusCharacter& chi) { return classify_involution(chi) == ConjClass::sigma1 ? -1 : 1; }

} // namespace k4holo
