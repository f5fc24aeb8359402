#include "k4holo/pipeline.hpp"

#include "k4holo/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <thread>

namespace k4holo {

namespace {

// Diagonal entries as exponents of sqrt(-1): 0 -> 1, 1 -> sqrt(-1), 2 -> -1,
// 3 -> -sqrt(-1). The Sp(1) coordinate y is 0 for 1, 2 for -1, 1 for i.
UnitaryPairData diag(std::array<int, 6> d, int y) { return UnitaryPairData{4, d, y}; }

const UnitaryPairData kMinusOneSp1 = diag({0, 0, 0, 0, 0, 0}, 2);              // (I6, -1)
const UnitaryPairData kSplitThreeThree = diag({1, 1, 1, 3, 3, 3}, 1);          // (diag(iI3, -iI3), i)
const UnitaryPairData kSplitFiveOne = diag({1, 1, 1, 1, 1, 3}, 1);             // (diag(iI5, -iI1), i)
const UnitaryPairData kMinusTwoThenFour = diag({2, 2, 0, 0, 0, 0}, 0);         // (diag(-I2, I4), 1)
const UnitaryPairData kMinusFourThenTwo = diag({2, 2, 2, 2, 0, 0}, 0);         // (diag(-I4, I2), 1)
const UnitaryPairData kAlternatingTwoOne = diag({2, 2, 0, 2, 2, 0}, 0);        // (diag(-I2, 1, -I2, 1), 1)

} // namespace

BuiltinGroup make_group(std::string name, std::vector<std::pair<std::string, UnitaryPairData>> realization) {
  std::vector<TorusCharacter> gens;
  std::vector<std::string> labels;
  for (const auto& [label, data] : realization) {
    TorusCharacter chi = embed_su6_sp1(data);
    if (chi.order() != 2)
      throw ValidationError("generator " + label + " of " + name + " has order " + std::to_string(chi.order()));
    gens.push_back(chi);
    labels.push_back(label);
  }
  BuiltinGroup g{std::move(name), generate_group(gens, labels, true), std::move(realization)};
  if (!g.group.labeled() || g.group.structure().rank != static_cast<int>(gens.size()))
    throw ValidationError("generators of " + g.name + " do not give an elementary abelian group of rank " +
                          std::to_string(gens.size()));
  return g;
}

const std::vector<BuiltinGroup>& builtin_groups() {
  static const std::vector<BuiltinGroup> groups = [] {
    std::vector<BuiltinGroup> v;
    v.push_back(make_group("x1x2x4", {{"x1", kMinusOneSp1}, {"x2", kSplitThreeThree}, {"x4", kAlternatingTwoOne}}));
    v.push_back(make_group("x1x4x5", {{"x1", kMinusOneSp1}, {"x1x4", kMinusTwoThenFour}, {"x5", kMinusFourThenTwo}}));
    v.push_back(make_group("y1y3y4", {{"y1y3", kMinusOneSp1}, {"y1y4", kSplitThreeThree}, {"y4", kSplitFiveOne}}));
    v.push_back(make_group("y3y4y5", {{"y3y4", kMinusOneSp1}, {"y5", kMinusFourThenTwo}, {"y3", kSplitFiveOne}}));
    return v;
  }();
  return groups;
}

const BuiltinGroup& builtin_group(const std::string& name) {
  for (const auto& g : builtin_groups())
    if (g.name == name) return g;
  throw PreconditionError("unknown builtin group '" + name + "'");
}

std::vector<unsigned> BuiltinGroup::sigma2_words() const {
  std::vector<unsigned> out;
  for (const auto& e : group.labeled_elements())
    if (e.word != 0 && classify_involution(e.chi) == ConjClass::sigma2) out.push_back(e.word);
  return out;
}

std::vector<std::string> BuiltinGroup::sigma2_labels() const {
  std::vector<std::string> out;
  for (unsigned w : sigma2_words()) out.push_back(group.label_of(w));
  return out;
}

// ---------------------------------------------------------------- element lookup

ElementRef resolve_element(const std::string& token) { return resolve_elements({token}).front(); }

std::vector<ElementRef> resolve_elements(const std::vector<std::string>& tokens, const std::string& group) {
  std::string wanted = group;
  std::vector<std::string> labels;
  for (const auto& t : tokens) {
    auto slash = t.find('/');
    if (slash == std::string::npos) {
      labels.push_back(t);
      continue;
    }
    std::string g = t.substr(0, slash);
    if (!wanted.empty() && wanted != g) throw PreconditionError("labels refer to different groups");
    wanted = g;
    labels.push_back(t.substr(slash + 1));
  }

  auto holds_all = [&](const BuiltinGroup& g) {
    return std::all_of(labels.begin(), labels.end(), [&](const auto& l) { return g.group.has_label(l); });
  };
  const BuiltinGroup* chosen = nullptr;
  if (!wanted.empty()) {
    chosen = &builtin_group(wanted);
    if (!holds_all(*chosen)) throw PreconditionError("group " + wanted + " lacks one of the requested labels");
  } else {
    for (const auto& g : builtin_groups())
      if (holds_all(g)) {
        chosen = &g;
        break;
      }
    if (!chosen) throw PreconditionError("no builtin group holds all requested labels");
  }
  std::vector<ElementRef> out;
  for (const auto& l : labels) out.push_back(ElementRef{chosen, chosen->group.word_of(l)});
  return out;
}

// ---------------------------------------------------------------- candidates

std::vector<KleinSubgroup> klein_subgroups(int rank) {
  std::vector<KleinSubgroup> out;
  const unsigned n = 1u << rank;
  for (unsigned a = 1; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b) {
      const unsigned c = a ^ b;
      if (c < b) continue; // each subgroup once, from its two smallest words
      KleinSubgroup k;
      k.words = {a, b, c};
      auto sorted = k.words;
      std::sort(sorted.begin(), sorted.end(), [](unsigned x, unsigned y) {
        return std::make_pair(std::popcount(x), x) < std::make_pair(std::popcount(y), y);
      });
      k.generators = {sorted[0], sorted[1]};
      out.push_back(k);
    }
  return out;
}

namespace {

std::vector<K4Candidate> candidates_for_theta(const BuiltinGroup& group, unsigned theta) {
  const auto& g = group.group;
  const TorusCharacter& theta_chi = g.at_word(theta);
  std::vector<K4Candidate> out;
  for (const auto& k : klein_subgroups(group.group.structure().rank)) {
    if (k.contains(theta)) continue;
    bool holomorphic = std::all_of(k.words.begin(), k.words.end(),
                                   [&](unsigned w) { return holomorphic_type_check(g.at_word(w), theta_chi); });
    if (!holomorphic) continue;

    std::vector<TorusCharacter> gens{g.at_word(k.generators[0]), g.at_word(k.generators[1])};
    std::vector<std::string> labels{g.label_of(k.generators[0]), g.label_of(k.generators[1])};
    FixedSubalgebra fixed_gamma = fixed_subalgebra(gens);
    std::vector<TorusCharacter> with_theta = gens;
    with_theta.push_back(theta_chi);

    K4Candidate c;
    c.group_name = group.name;
    c.theta_label = g.label_of(theta);
    c.gamma_labels = {labels[0], labels[1]};
    c.gamma = generate_group(gens, {}, true);
    c.compact_dual = fixed_gamma.rtype;
    c.real_form = identify_real_form(fixed_gamma, theta_chi);
    c.maximal_compact = fixed_subalgebra(with_theta).rtype;
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace

std::vector<K4Candidate> enumerate_candidates(const BuiltinGroup& group) {
  if (!group.group.labeled() || !group.group.structure().elementary_abelian_2)
    throw PreconditionError("candidate enumeration needs a labeled elementary abelian group");
  std::vector<K4Candidate> out;
  for (unsigned theta : group.sigma2_words())
    for (auto& c : candidates_for_theta(group, theta)) out.push_back(std::move(c));
  return out;
}

const std::vector<std::string>& reference_pairs() {
  static const std::vector<std::string> golden = {
      "2su(2,1)⊕2(√−1ℝ)",
      "su(2,2)⊕2su(2)⊕√−1ℝ",
      "su(3,1)⊕su(1,1)⊕su(2)⊕√−1ℝ",
      "su(3,2)⊕2(√−1ℝ)",
      "su(2,1)⊕su(3)⊕2(√−1ℝ)",
      "su(4,1)⊕2(√−1ℝ)",
      "so(6,2)⊕2(√−1ℝ)",
      "2su(1,1)⊕su(4)⊕√−1ℝ",
  };
  return golden;
}

const std::vector<std::string>& symmetric_pair_list() {
  static const std::vector<std::string> list = {
      "su(4,2)⊕su(2)", "su(5,1)⊕sl(2,ℝ)", "so(8,2)⊕so(2)", "so*(10)⊕so(2)", "so(10)⊕so(2)",
  };
  return list;
}

K4Report classify_all(unsigned jobs) {
  const auto& groups = builtin_groups();
  K4Report report;

  std::vector<std::pair<const BuiltinGroup*, unsigned>> tasks;
  for (const auto& g : groups) {
    GroupSummary s;
    s.name = g.name;
    s.order = g.group.size();
    s.rank = g.group.structure().rank;
    s.sigma2_elements = g.sigma2_labels();
    s.fixed_type = fixed_subalgebra(g.group.elements()).rtype;
    report.groups.push_back(std::move(s));
    for (unsigned w : g.sigma2_words()) tasks.emplace_back(&g, w);
  }

  std::vector<std::vector<K4Candidate>> results(tasks.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
  if (jobs == 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) results[i] = candidates_for_theta(*tasks[i].first, tasks[i].second);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = w; i < tasks.size(); i += jobs)
              results[i] = candidates_for_theta(*tasks[i].first, tasks[i].second);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  for (auto& r : results)
    for (auto& c : r) {
      ++report.candidate_counts[c.group_name];
      if (std::find(report.distinct_pairs.begin(), report.distinct_pairs.end(), c.real_form) ==
          report.distinct_pairs.end())
        report.distinct_pairs.push_back(c.real_form);
      report.candidates.push_back(std::move(c));
    }
  std::sort(report.distinct_pairs.begin(), report.distinct_pairs.end());

  std::set<std::string> produced;
  for (const auto& p : report.distinct_pairs) produced.insert(p.to_string());
  const auto& golden = reference_pairs();
  for (const auto& g : golden)
    if (!produced.contains(g)) report.missing.push_back(g);
  for (const auto& p : produced)
    if (std::find(golden.begin(), golden.end(), p) == golden.end()) report.unexpected.push_back(p);
  report.verified = report.missing.empty() && report.unexpected.empty() && produced.size() == golden.size();
  return report;
}

void require_verified(const K4Report& report) {
  if (report.verified) return;
  std::ostringstream os;
  os << "classification differs from the reference list";
  for (const auto& m : report.missing) os << "\n  - " << m;
  for (const auto& u : report.unexpected) os << "\n  + " << u;
  throw VerificationError(os.str());
}

// ---------------------------------------------------------------- survey

std::vector<SurveyEntry> symmetric_pair_survey(const ElementRef& theta) {
  if (classify_involution(theta.chi()) != ConjClass::sigma2)
    throw PreconditionError(theta.qualified() + " is not in the sigma2 class");
  const auto& allowed = symmetric_pair_list();
  std::vector<SurveyEntry> out;
  for (const auto& g : builtin_groups())
    for (const auto& e : g.group.labeled_elements()) {
      if (e.word == 0) continue;
      SurveyEntry entry;
      entry.sigma = g.name + "/" + e.label;
      entry.sigma_class = classify_involution(e.chi);
      entry.real_form = identify_real_form(fixed_subalgebra(std::span(&e.chi, 1)), theta.chi());
      const std::string name = entry.real_form.to_string(RenderStyle::symmetric_pair);
      if (std::find(allowed.begin(), allowed.end(), name) == allowed.end())
        throw VerificationError("g0^" + entry.sigma + " = " + name + " is not a symmetric pair of holomorphic type");
      out.push_back(std::move(entry));
    }
  return out;
}

// ---------------------------------------------------------------- output

nlohmann::json to_json(const K4Report& report) {
  using nlohmann::json;
  json groups = json::array();
  for (const auto& s : report.groups) {
    const auto& g = builtin_group(s.name);
    json elements = json::array();
    for (const auto& e : g.group.labeled_elements()) {
      if (e.word == 0) continue;
      ConjClass c = classify_involution(e.chi);
      elements.push_back({{"label", e.label},
                          {"character", e.chi.lifted(4).to_string()},
                          {"class", to_string(c)},
                          {"mu", c == ConjClass::sigma1 ? -1 : 1}});
    }
    groups.push_back({{"name", s.name},
                      {"order", s.order},
                      {"rank", s.rank},
                      {"sigma2_elements", s.sigma2_elements},
                      {"fixed_algebra", s.fixed_type.compact_name()},
                      {"elements", elements}});
  }
  json candidates = json::array();
  for (const auto& c : report.candidates)
    candidates.push_back({{"group", c.group_name},
                          {"theta", c.theta_label},
                          {"gamma", {c.gamma_labels[0], c.gamma_labels[1]}},
                          {"compact_dual", c.compact_dual.compact_name()},
                          {"real_form", c.real_form.to_string()},
                          {"maximal_compact", c.maximal_compact.compact_name()}});
  json distinct = json::array();
  for (const auto& p : report.distinct_pairs) distinct.push_back(p.to_string());
  json counts = json::object();
  for (const auto& [k, v] : report.candidate_counts) counts[k] = v;
  return {{"groups", groups},
          {"candidates", candidates},
          {"candidate_counts", counts},
          {"distinct_pairs", distinct},
          {"missing", report.missing},
          {"unexpected", report.unexpected},
          {"verified_against_theorem24", report.verified}};
}

namespace {

std::string witnesses(const K4Report& report, const std::string& pair) {
  std::string s;
  for (const auto& c : report.candidates) {
    if (c.real_form.to_string() != pair) continue;
    if (!s.empty()) s += "; ";
    s += c.group_name + ": θ=" + c.theta_label + ", Γ=⟨" + c.gamma_labels[0] + "," + c.gamma_labels[1] + "⟩";
  }
  return s;
}

} // namespace

std::string to_markdown(const K4Report& report) {
  std::ostringstream os;
  os << "| # | Klein four symmetric pair | reproduced | realizations |\n";
  os << "|---|---|---|---|\n";
  const auto& golden = reference_pairs();
  for (std::size_t i = 0; i < golden.size(); ++i) {
    bool found = std::find(report.missing.begin(), report.missing.end(), golden[i]) == report.missing.end();
    os << "| " << i + 1 << " | (e6(−14), " << golden[i] << ") | " << (found ? "yes" : "no") << " | "
       << witnesses(report, golden[i]) << " |\n";
  }
  for (const auto& u : report.unexpected) os << "| – | (e6(−14), " << u << ") | unexpected | " << witnesses(report, u) << " |\n";
  os << "\n" << report.distinct_pairs.size() << " distinct pairs from " << report.candidates.size()
     << " candidates; verified: " << (report.verified ? "true" : "false") << "\n";
  return os.str();
}

std::string to_plain(const K4Report& report) {
  std::ostringstream os;
  for (const auto& g : report.groups) {
    os << "group " << g.name << ": order " << g.order << ", fixed " << g.fixed_type.compact_name() << ", sigma2 {";
    for (std::size_t i = 0; i < g.sigma2_elements.size(); ++i) os << (i ? "," : "") << g.sigma2_elements[i];
    os << "}\n";
  }
  for (const auto& c : report.candidates)
    os << c.group_name << "  theta=" << c.theta_label << "  gamma=<" << c.gamma_labels[0] << "," << c.gamma_labels[1]
       << ">  " << c.real_form.to_string() << "  [dual " << c.compact_dual.compact_name() << ", compact "
       << c.maximal_compact.compact_name() << "]\n";
  os << "distinct pairs:\n";
  for (const auto& p : report.distinct_pairs) os << "  " << p.to_string() << "\n";
  os << "verified: " << (report.verified ? "true" : "false") << "\n";
  return os.str();
}

} // namespace k4holo
