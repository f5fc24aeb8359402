#include "k4holo/toral.hpp"

#include "k4holo/errors.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <tuple>

namespace k4holo {

namespace {

int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

} // namespace

// ---------------------------------------------------------------- TorusCharacter

TorusCharacter::TorusCharacter(int modulus, std::vector<int> exps) : modulus_(modulus), exps_(std::move(exps)) {
  if (modulus_ < 1) throw PreconditionError("character modulus must be >= 1");
  for (auto& e : exps_) e = mod(e, modulus_);
}

TorusCharacter TorusCharacter::identity(int rank, int modulus) {
  return TorusCharacter(modulus, std::vector<int>(rank, 0));
}

int TorusCharacter::evaluate(const Root& r) const {
  if (r.rank() != exps_.size()) throw PreconditionError("root and character ranks differ");
  long long s = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) s += static_cast<long long>(r[i]) * exps_[i];
  return mod(s, modulus_);
}

int TorusCharacter::order() const {
  int g = modulus_;
  for (int e : exps_) g = std::gcd(g, e);
  return modulus_ / g;
}

TorusCharacter TorusCharacter::lifted(int modulus) const {
  if (modulus % modulus_ != 0)
    throw PreconditionError("cannot lift modulus " + std::to_string(modulus_) + " to " + std::to_string(modulus));
  const int f = modulus / modulus_;
  std::vector<int> e(exps_);
  for (auto& x : e) x *= f;
  return TorusCharacter(modulus, std::move(e));
}

TorusCharacter TorusCharacter::reduced() const {
  int g = modulus_;
  for (int e : exps_) g = std::gcd(g, e);
  std::vector<int> e(exps_);
  for (auto& x : e) x /= g;
  return TorusCharacter(modulus_ / g, std::move(e));
}

TorusCharacter TorusCharacter::operator*(const TorusCharacter& other) const {
  if (rank() != other.rank()) throw PreconditionError("character ranks differ");
  const int m = std::lcm(modulus_, other.modulus_);
  TorusCharacter a = lifted(m), b = other.lifted(m);
  for (std::size_t i = 0; i < a.exps_.size(); ++i) a.exps_[i] = mod(a.exps_[i] + b.exps_[i], m);
  return a;
}

bool TorusCharacter::operator==(const TorusCharacter& other) const {
  if (rank() != other.rank()) return false;
  TorusCharacter a = reduced(), b = other.reduced();
  return a.modulus_ == b.modulus_ && a.exps_ == b.exps_;
}

bool TorusCharacter::operator<(const TorusCharacter& other) const {
  TorusCharacter a = reduced(), b = other.reduced();
  return std::tie(a.modulus_, a.exps_) < std::tie(b.modulus_, b.exps_);
}

std::string TorusCharacter::to_string() const {
  std::vector<int> shown;
  if (exps_.size() == 6) {
    for (int i : {0, 2, 3, 4, 5, 1}) shown.push_back(exps_[i]);
  } else {
    shown = exps_;
  }
  std::string s = "chi m=" + std::to_string(modulus_) + " [";
  for (std::size_t i = 0; i < shown.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(shown[i]);
  }
  return s + "]";
}

TorusCharacter character_from_simple_values(std::vector<int> exps, int modulus) {
  return TorusCharacter(modulus, std::move(exps));
}
TorusCharacter multiply(const TorusCharacter& a, const TorusCharacter& b) { return a * b; }
int order(const TorusCharacter& a) { return a.order(); }
int evaluate(const TorusCharacter& a, const Root& r) { return a.evaluate(r); }

// exp(sqrt(-1) pi H_{alpha2})
TorusCharacter sigma1_character(int modulus) {
  if (modulus % 2) throw PreconditionError("sigma1 needs an even modulus");
  return TorusCharacter(modulus, {0, modulus / 2, 0, 0, 0, 0});
}

// exp(sqrt(-1) pi (H_{alpha1} + H_{alpha6}))
TorusCharacter sigma2_character(int modulus) {
  if (modulus % 2) throw PreconditionError("sigma2 needs an even modulus");
  return TorusCharacter(modulus, {modulus / 2, 0, 0, 0, 0, modulus / 2});
}

// ---------------------------------------------------------------- SU(6) x Sp(1)

UnitaryPairData UnitaryPairData::operator*(const UnitaryPairData& other) const {
  const int m = std::lcm(modulus, other.modulus);
  const int fa = m / modulus, fb = m / other.modulus;
  UnitaryPairData out;
  out.modulus = m;
  for (int i = 0; i < 6; ++i) out.d[i] = mod(d[i] * fa + other.d[i] * fb, m);
  out.y = mod(y * fa + other.y * fb, m);
  return out;
}

std::string UnitaryPairData::to_string() const {
  std::string s = "su6sp1 m=" + std::to_string(modulus) + " d=[";
  for (int i = 0; i < 6; ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "] y=" + std::to_string(y);
}

TorusCharacter embed_su6_sp1(const UnitaryPairData& u) {
  const int m = u.modulus;
  if (m < 1) throw PreconditionError("modulus must be >= 1");
  long long det = 0;
  for (int x : u.d) det += x;
  if (mod(det, m) != 0) throw PreconditionError("SU(6) part does not have determinant one: " + u.to_string());
  const auto& d = u.d;
  std::vector<int> e(6);
  e[0] = d[0] - d[1];             // alpha1
  e[2] = d[1] - d[2];             // alpha3
  e[3] = d[2] - d[3];             // alpha4
  e[4] = d[3] - d[4];             // alpha5
  e[5] = d[4] - d[5];             // alpha6
  e[1] = u.y + d[3] + d[4] + d[5]; // alpha2
  return TorusCharacter(m, std::move(e));
}

// ---------------------------------------------------------------- groups

std::vector<std::string> split_label(const std::string& label) {
  static const std::regex atom("[A-Za-z]+[0-9]*");
  std::vector<std::string> out;
  auto begin = std::sregex_iterator(label.begin(), label.end(), atom);
  std::size_t covered = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    if (static_cast<std::size_t>(it->position()) != covered) break;
    covered += it->length();
    out.push_back(it->str());
  }
  if (label.empty() || covered != label.size()) throw PreconditionError("malformed element label '" + label + "'");
  return out;
}

std::string word_label(unsigned word, std::span<const std::string> basis) {
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (word & (1u << i)) s += basis[i];
  return s.empty() ? "1" : s;
}

namespace {

// "x10" after "x9"; letters first.
bool atom_before(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    auto p = s.find_first_of("0123456789");
    std::string head = s.substr(0, p);
    int num = p == std::string::npos ? -1 : std::stoi(s.substr(p));
    return std::make_pair(head, num);
  };
  return split(a) < split(b);
}

} // namespace

CharacterGroup generate_group(std::span<const TorusCharacter> gens, std::span<const std::string> labels,
                              bool expect_elementary) {
  if (!labels.empty() && labels.size() != gens.size())
    throw PreconditionError("generator and label counts differ");

  CharacterGroup g;
  std::vector<TorusCharacter> elems;
  const std::size_t rank = gens.empty() ? 6 : gens.front().rank();
  elems.push_back(TorusCharacter::identity(static_cast<int>(rank)));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : gens) {
      TorusCharacter p = elems[i] * s;
      if (std::find(elems.begin(), elems.end(), p) == elems.end()) elems.push_back(p.reduced());
      if (elems.size() > 4096) throw ValidationError("character group larger than 4096 elements");
    }
  }
  std::sort(elems.begin(), elems.end());

  GroupStructure st;
  st.order = elems.size();
  st.elementary_abelian_2 = std::all_of(elems.begin(), elems.end(), [](const auto& c) { return c.order() <= 2; });
  if (st.elementary_abelian_2) {
    while ((std::size_t{1} << st.rank) < st.order) ++st.rank;
  } else if (expect_elementary) {
    auto bad = std::find_if(elems.begin(), elems.end(), [](const auto& c) { return c.order() > 2; });
    throw ValidationError("element " + bad->to_string() + " has order " + std::to_string(bad->order()) +
                          " in a group expected to be elementary abelian");
  }
  g.elements_ = elems;
  g.structure_ = st;

  if (labels.empty() || !st.elementary_abelian_2) return g;

  std::set<std::string, decltype(&atom_before)> atoms(&atom_before);
  std::vector<std::vector<std::string>> parts;
  for (const auto& l : labels) {
    parts.push_back(split_label(l));
    atoms.insert(parts.back().begin(), parts.back().end());
  }
  std::vector<std::string> basis(atoms.begin(), atoms.end());
  if (basis.size() != gens.size() || (std::size_t{1} << basis.size()) != st.order) return g;

  std::vector<unsigned> words;
  for (const auto& p : parts) {
    unsigned w = 0;
    for (const auto& a : p) {
      auto idx = std::find(basis.begin(), basis.end(), a) - basis.begin();
      w ^= 1u << idx;
    }
    words.push_back(w);
  }

  // Every subset of generators gives one element; the words must be independent.
  const unsigned n = static_cast<unsigned>(gens.size());
  std::vector<LabeledElement> labeled(1u << n);
  std::vector<bool> seen(1u << n, false);
  for (unsigned subset = 0; subset < (1u << n); ++subset) {
    unsigned w = 0;
    TorusCharacter chi = TorusCharacter::identity(static_cast<int>(rank));
    for (unsigned i = 0; i < n; ++i)
      if (subset & (1u << i)) {
        w ^= words[i];
        chi = chi * gens[i];
      }
    if (seen[w]) return g; // dependent words: leave unlabeled
    seen[w] = true;
    labeled[w] = LabeledElement{word_label(w, basis), w, chi.reduced()};
  }
  g.basis_ = std::move(basis);
  g.labeled_ = std::move(labeled);
  return g;
}

bool CharacterGroup::has_label(const std::string& label) const {
  if (labeled_.empty()) return false;
  try {
    word_of(label);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

unsigned CharacterGroup::word_of(const std::string& label) const {
  for (const auto& e : labeled_)
    if (e.label == label) return e.word;
  // Accept any ordering of the atoms, e.g. "y3y1".
  unsigned w = 0;
  try {
    for (const auto& a : split_label(label)) {
      auto it = std::find(basis_.begin(), basis_.end(), a);
      if (it == basis_.end()) throw PreconditionError("");
      w ^= 1u << (it - basis_.begin());
    }
  } catch (const PreconditionError&) {
    throw PreconditionError("no element labeled '" + label + "' in group");
  }
  if (labeled_.empty()) throw PreconditionError("group carries no labels");
  return w;
}

const TorusCharacter& CharacterGroup::at(const std::string& label) const { return labeled_.at(word_of(label)).chi; }

std::string CharacterGroup::label_of(unsigned word) const { return labeled_.at(word).label; }

bool CharacterGroup::contains(const TorusCharacter& chi) const {
  return std::find(elements_.begin(), elements_.end(), chi) != elements_.end();
}

} // namespace k4holo
