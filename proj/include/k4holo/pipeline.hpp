#ifndef K4HOLO_PIPELINE_HPP
#define K4HOLO_PIPELINE_HPP

#include "k4holo/realform.hpp"
#include "k4holo/reductive.hpp"
#include "k4holo/toral.hpp"

#include "json.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k4holo {

/// Rank-3 elementary abelian group realized inside SU(6) x Sp(1).
struct BuiltinGroup {
  std::string name; // "x1x2x4", "x1x4x5", "y1y3y4", "y3y4y5"
  CharacterGroup group;
  /// (label, diagonal data) of the realized generators.
  std::vector<std::pair<std::string, UnitaryPairData>> realization;

  std::vector<unsigned> sigma2_words() const;
  std::vector<std::string> sigma2_labels() const;
};

/// The four groups, built once from their diagonal realizations. Throws
/// ValidationError if a generator fails the involution check.
const std::vector<BuiltinGroup>& builtin_groups();
const BuiltinGroup& builtin_group(const std::string& name);

/// Builds one group from labeled realizations; exposed for tests.
BuiltinGroup make_group(std::string name, std::vector<std::pair<std::string, UnitaryPairData>> realization);

/// An element of a builtin group. Tokens are "x4" (first group holding the
/// label) or "x1x4x5/x4".
struct ElementRef {
  const BuiltinGroup* group = nullptr;
  unsigned word = 0;

  std::string label() const { return group->group.label_of(word); }
  std::string qualified() const { return group->name + "/" + label(); }
  const TorusCharacter& chi() const { return group->group.at_word(word); }
};

ElementRef resolve_element(const std::string& token);
/// Resolves several labels in one group: an explicit "group/" prefix on any
/// token wins, otherwise the first group holding all of them.
std::vector<ElementRef> resolve_elements(const std::vector<std::string>& tokens, const std::string& group = "");

/// A Klein four subgroup of a rank-3 group, as its nonidentity words.
struct KleinSubgroup {
  std::array<unsigned, 3> words{};
  std::array<unsigned, 2> generators{}; // fewest letters first, then word order
  bool contains(unsigned w) const { return w == 0 || words[0] == w || words[1] == w || words[2] == w; }
};

/// Klein four subgroups of (Z/2)^rank as words over the basis; 7 for rank 3.
std::vector<KleinSubgroup> klein_subgroups(int rank = 3);

struct K4Candidate {
  std::string group_name;
  std::string theta_label;
  std::array<std::string, 2> gamma_labels;
  CharacterGroup gamma;
  RealFormType real_form;
  ReductiveType compact_dual;    // fixed(Gamma)
  ReductiveType maximal_compact; // fixed(<theta, Gamma>)
};

struct GroupSummary {
  std::string name;
  std::size_t order = 0;
  int rank = 0;
  std::vector<std::string> sigma2_elements;
  ReductiveType fixed_type; // fixed algebra of the whole group
};

struct K4Report {
  std::vector<GroupSummary> groups;
  std::vector<K4Candidate> candidates;
  std::vector<RealFormType> distinct_pairs; // sorted
  std::map<std::string, std::size_t> candidate_counts;
  bool verified = false;
  std::vector<std::string> missing;    // golden entries not produced
  std::vector<std::string> unexpected; // produced entries not in the golden list
};

/// All (theta, Gamma) with theta in the sigma2 class, Gamma a Klein four
/// subgroup avoiding theta and every sigma in Gamma of holomorphic type.
std::vector<K4Candidate> enumerate_candidates(const BuiltinGroup& group);

/// Runs all four groups, deduplicates by real-form type and compares with
/// the reference list. jobs > 1 spreads (group, theta) tasks over threads;
/// the report does not depend on it.
K4Report classify_all(unsigned jobs = 1);

/// Reference list of the eight Klein four symmetric pairs, in its published
/// order and spelling.
const std::vector<std::string>& reference_pairs();

/// Throws VerificationError carrying the diff if report.verified is false.
void require_verified(const K4Report& report);

/// Symmetric subalgebras of holomorphic type, symmetric-pair spelling.
const std::vector<std::string>& symmetric_pair_list();

struct SurveyEntry {
  std::string sigma; // qualified label
  ConjClass sigma_class = ConjClass::identity;
  RealFormType real_form;
};

/// Real form of g0^sigma for every nonidentity involution sigma of the four
/// groups, with g0 the real form defined by theta. Throws VerificationError
/// if a value falls outside symmetric_pair_list().
std::vector<SurveyEntry> symmetric_pair_survey(const ElementRef& theta);

nlohmann::json to_json(const K4Report& report);
std::string to_markdown(const K4Report& report);
std::string to_plain(const K4Report& report);

} // namespace k4holo

#endif
