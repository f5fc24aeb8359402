#include "k4holo/rootsys.hpp"

#include "k4holo/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace k4holo {

// ---------------------------------------------------------------- Root

Root Root::operator-() const {
  std::vector<int> c(coords_);
  for (auto& x : c) x = -x;
  return Root(std::move(c));
}

Root Root::operator+(const Root& other) const {
  std::vector<int> c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coords_[i];
  return Root(std::move(c));
}

Root Root::operator-(const Root& other) const { return *this + (-other); }

Root Root::scaled(int k) const {
  std::vector<int> c(coords_);
  for (auto& x : c) x *= k;
  return Root(std::move(c));
}

bool Root::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](int x) { return x == 0; });
}

int Root::height() const noexcept { return std::accumulate(coords_.begin(), coords_.end(), 0); }

std::string Root::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(coords_[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------- types

std::string SimpleComponent::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::string SimpleComponent::compact_name() const {
  switch (family) {
  case Family::A: return "su(" + std::to_string(rank + 1) + ")";
  case Family::D: return "so(" + std::to_string(2 * rank) + ")";
  case Family::E: return "e" + std::to_string(rank);
  }
  return "?";
}

int SimpleComponent::root_count() const {
  switch (family) {
  case Family::A: return rank * (rank + 1);
  case Family::D: return 2 * rank * (rank - 1);
  case Family::E:
    switch (rank) {
    case 6: return 72;
    case 7: return 126;
    case 8: return 240;
    default: break;
    }
  }
  throw InternalError("root count requested for invalid type " + label());
}

namespace {

int family_weight(Family f) {
  switch (f) {
  case Family::E: return 0;
  case Family::D: return 1;
  case Family::A: return 2;
  }
  return 3;
}

std::string multiplicity_prefix(int k) { return k == 1 ? "" : std::to_string(k); }

} // namespace

bool component_before(const SimpleComponent& a, const SimpleComponent& b) {
  if (a.rank != b.rank) return a.rank > b.rank;
  return family_weight(a.family) < family_weight(b.family);
}

ReductiveType::ReductiveType(std::vector<SimpleComponent> comps, int center)
    : components(std::move(comps)), center_dim(center) {
  std::sort(components.begin(), components.end(), component_before);
}

int ReductiveType::semisimple_rank() const {
  int r = 0;
  for (const auto& c : components) r += c.rank;
  return r;
}

int ReductiveType::root_count() const {
  int n = 0;
  for (const auto& c : components) n += c.root_count();
  return n;
}

std::string ReductiveType::label() const {
  std::string s;
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    if (!s.empty()) s += "+";
    s += multiplicity_prefix(static_cast<int>(j - i)) + components[i].label();
    i = j;
  }
  if (center_dim > 0) {
    if (!s.empty()) s += "+";
    s += "T" + std::to_string(center_dim);
  }
  return s.empty() ? "0" : s;
}

std::string ReductiveType::compact_name() const {
  std::string s;
  for (std::size_t i = 0; i < components.size();) {
    std::size_t j = i;
    while (j < components.size() && components[j] == components[i]) ++j;
    if (!s.empty()) s += "⊕";
    s += multiplicity_prefix(static_cast<int>(j - i)) + components[i].compact_name();
    i = j;
  }
  if (center_dim > 0) {
    if (!s.empty()) s += "⊕";
    s += center_dim == 1 ? "√−1ℝ" : std::to_string(center_dim) + "(√−1ℝ)";
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------- RootSystem

namespace {

std::vector<std::vector<int>> bourbaki_cartan(Family family, int rank) {
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  auto link = [&](int i, int j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  switch (family) {
  case Family::A:
    for (int i = 1; i < rank; ++i) link(i, i + 1);
    break;
  case Family::D:
    for (int i = 1; i < rank - 1; ++i) link(i, i + 1);
    link(rank - 2, rank);
    break;
  case Family::E:
    link(1, 3);
    for (int i = 3; i < rank; ++i) link(i, i + 1);
    link(2, 4);
    break;
  }
  return c;
}

void check_supported(Family family, int rank) {
  bool ok = false;
  switch (family) {
  case Family::A: ok = rank >= 1 && rank <= 12; break;
  case Family::D: ok = rank >= 4 && rank <= 12; break;
  case Family::E: ok = rank == 6; break;
  }
  if (!ok)
    throw ConfigurationError("unsupported root system " + std::string(1, static_cast<char>(family)) +
                             std::to_string(rank));
}

} // namespace

RootSystem RootSystem::build(Family family, int rank) {
  check_supported(family, rank);
  RootSystem sys;
  sys.family_ = family;
  sys.rank_ = rank;
  sys.cartan_ = bourbaki_cartan(family, rank);

  // Closure of the simple roots under simple reflections.
  std::set<Root> found;
  std::deque<Root> queue;
  for (int i = 0; i < rank; ++i) {
    Root a = sys.simple_root(i);
    for (const Root& r : {a, -a})
      if (found.insert(r).second) queue.push_back(r);
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      Root s = sys.reflect(r, sys.simple_root(i));
      if (found.insert(s).second) queue.push_back(s);
    }
  }

  int max_coeff = 1;
  for (const auto& r : found)
    for (int x : r.coords()) max_coeff = std::max(max_coeff, std::abs(x));
  sys.functional_base_ = max_coeff + 1;

  std::vector<Root> positive;
  for (const auto& r : found)
    if (sys.is_positive(r)) positive.push_back(r);
  std::sort(positive.begin(), positive.end(), [&](const Root& a, const Root& b) {
    return sys.positivity(a) < sys.positivity(b);
  });
  sys.roots_ = positive;
  for (const auto& r : positive) sys.roots_.push_back(-r);
  for (std::size_t i = 0; i < sys.roots_.size(); ++i) sys.index_.emplace(sys.roots_[i], i);

  // Highest root: the unique positive root dominating every other coordinatewise.
  for (const auto& r : positive) {
    bool dominant = std::all_of(positive.begin(), positive.end(), [&](const Root& o) {
      for (int i = 0; i < rank; ++i)
        if (o[i] > r[i]) return false;
      return true;
    });
    if (dominant) {
      sys.highest_ = r;
      break;
    }
  }
  if (sys.highest_.rank() == 0) throw InternalError("no dominant root in " + sys.label());
  return sys;
}

RootSystem RootSystem::build(const std::string& label) {
  if (label.size() < 2) throw ConfigurationError("bad root system label '" + label + "'");
  char f = label[0];
  if (f != 'A' && f != 'D' && f != 'E') throw ConfigurationError("unsupported family in '" + label + "'");
  int rank = 0;
  try {
    std::size_t used = 0;
    rank = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw std::invalid_argument(label);
  } catch (const std::exception&) {
    throw ConfigurationError("bad rank in '" + label + "'");
  }
  return build(static_cast<Family>(f), rank);
}

std::string RootSystem::label() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

Root RootSystem::simple_root(int i) const {
  std::vector<int> c(rank_, 0);
  c.at(i) = 1;
  return Root(std::move(c));
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::negative_index(std::size_t i) const {
  std::size_t half = roots_.size() / 2;
  return i < half ? i + half : i - half;
}

int RootSystem::inner_product(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) s += a[i] * cartan_[i][j] * b[j];
  return s;
}

Root RootSystem::reflect(const Root& a, const Root& b) const {
  return a - b.scaled(inner_product(a, b));
}

std::int64_t RootSystem::positivity(const Root& r) const {
  std::int64_t value = 0;
  std::int64_t weight = 1;
  for (int i = 0; i < rank_; ++i) {
    value += weight * r[i];
    weight *= functional_base_;
  }
  return value;
}

Root RootSystem::diagram_symmetry(const Root& r) const {
  if (family_ != Family::E || rank_ != 6) throw UnsupportedError("diagram symmetry is only provided for E6");
  // nodes 1..6 -> 6,2,5,4,3,1
  return Root({r[5], r[1], r[4], r[3], r[2], r[0]});
}

int inner_product(const Root& a, const Root& b, const RootSystem& sys) { return sys.inner_product(a, b); }

// ---------------------------------------------------------------- subsystems

bool is_closed_subset(std::span<const Root> subset, const RootSystem& sys) {
  std::set<Root> members(subset.begin(), subset.end());
  for (const auto& a : members) {
    if (!sys.contains(a) || !members.contains(-a)) return false;
    for (const auto& b : members) {
      Root s = a + b;
      if (sys.contains(s) && !members.contains(s)) return false;
    }
  }
  return true;
}

std::optional<SimpleComponent> match_connected_cartan(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  if (n == 0) return std::nullopt;
  std::vector<std::vector<int>> adj(n);
  int edges = 0;
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) return std::nullopt;
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] != cartan[j][i]) return std::nullopt;
      if (cartan[i][j] == -1) {
        adj[i].push_back(j);
        if (i < j) ++edges;
      } else if (cartan[i][j] != 0) {
        return std::nullopt;
      }
    }
  }
  if (edges != n - 1) return std::nullopt; // connected simply-laced diagrams are trees

  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 3) return std::nullopt;
    if (adj[i].size() == 3) branch.push_back(i);
  }
  if (branch.empty()) return SimpleComponent{Family::A, n};
  if (branch.size() > 1) return std::nullopt;

  // Arm lengths away from the branch node.
  const int b = branch.front();
  std::vector<int> arms;
  for (int start : adj[b]) {
    int len = 1, prev = b, cur = start;
    while (adj[cur].size() == 2) {
      int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
      ++len;
    }
    if (adj[cur].size() != 1) return std::nullopt;
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return SimpleComponent{Family::D, n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return SimpleComponent{Family::E, n};
  return std::nullopt;
}

std::vector<SubsystemComponent> decompose_subsystem(std::span<const Root> subset, const RootSystem& sys) {
  if (!is_closed_subset(subset, sys))
    throw PreconditionError("subset is not a closed, negation-symmetric set of roots");

  std::vector<Root> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<Root> positive;
  for (const auto& r : members)
    if (sys.is_positive(r)) positive.push_back(r);
  std::set<Root> positive_set(positive.begin(), positive.end());

  std::vector<Root> simple;
  for (const auto& r : positive) {
    bool decomposable = false;
    for (const auto& a : positive) {
      if (positive_set.contains(r - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(r);
  }
  std::sort(simple.begin(), simple.end(),
            [&](const Root& a, const Root& b) { return sys.positivity(a) < sys.positivity(b); });

  // Connected components of the simple system's Dynkin diagram.
  const std::size_t n = simple.size();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::deque<std::size_t> q{s};
    comp[s] = ncomp;
    while (!q.empty()) {
      auto i = q.front();
      q.pop_front();
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && sys.inner_product(simple[i], simple[j]) != 0) {
          comp[j] = ncomp;
          q.push_back(j);
        }
    }
    ++ncomp;
  }

  std::vector<SubsystemComponent> out(ncomp);
  for (std::size_t i = 0; i < n; ++i) out[comp[i]].simple_roots.push_back(simple[i]);
  for (auto& c : out) {
    const std::size_t k = c.simple_roots.size();
    std::vector<std::vector<int>> cartan(k, std::vector<int>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) cartan[i][j] = sys.inner_product(c.simple_roots[i], c.simple_roots[j]);
    auto type = match_connected_cartan(cartan);
    if (!type) throw InternalError("simple system component matches no simply-laced type");
    c.type = *type;
  }

  // A root belongs to the ideal whose simple roots it is not orthogonal to.
  for (const auto& r : members) {
    int owner = -1;
    for (int ci = 0; ci < ncomp && owner < 0; ++ci)
      for (const auto& s : out[ci].simple_roots)
        if (sys.inner_product(r, s) != 0) {
          owner = ci;
          break;
        }
    if (owner < 0) throw InternalError("root " + r.to_string() + " orthogonal to every simple root");
    out[owner].roots.push_back(r);
  }
  for (const auto& c : out)
    if (static_cast<int>(c.roots.size()) != c.type.root_count())
      throw InternalError("ideal " + c.type.label() + " has " + std::to_string(c.roots.size()) + " roots");

  std::stable_sort(out.begin(), out.end(), [](const SubsystemComponent& a, const SubsystemComponent& b) {
    return component_before(a.type, b.type);
  });
  return out;
}

ReductiveType identify_subsystem(std::span<const Root> subset, const RootSystem& sys) {
  std::vector<SimpleComponent> comps;
  for (auto& c : decompose_subsystem(subset, sys)) comps.push_back(c.type);
  ReductiveType t(std::move(comps), 0);
  t.center_dim = sys.rank() - t.semisimple_rank();
  return t;
}

const RootSystem& e6() {
  static const RootSystem sys = RootSystem::build(Family::E, 6);
  return sys;
}

} // namespace k4holo
