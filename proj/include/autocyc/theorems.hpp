#ifndef AUTOCYC_THEOREMS_HPP
#define AUTOCYC_THEOREMS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "automorphism.hpp"
#include "delta_graph.hpp"
#include "group.hpp"
#include "group_props.hpp"

namespace autocyc {

/// Outcome of checking one statement on one (G, A) pair. The conclusion is
/// present exactly when the hypotheses hold.
struct TheoremVerdict
{
  std::string theorem_id;
  std::string group;
  std::string action;
  bool hypotheses_hold = false;
  std::optional<bool> conclusion_holds;
  std::optional<std::string> witness;
  std::string detail;

  bool failed() const { return hypotheses_hold && conclusion_holds == false; }
};

struct VerifyOptions
{
  std::size_t action_cap = kDefaultActionCap;
  std::size_t lattice_cap = kDefaultLatticeCap;
};

/// Lazily computed data shared by the verifiers for one (G, A) pair.
class Instance
{
public:
  Instance(std::shared_ptr<const FiniteGroup> group, AutAction action, VerifyOptions options = {});

  const FiniteGroup &group() const { return *_group; }
  const AutAction &action() const { return _action; }
  const VerifyOptions &options() const { return _options; }

  const DeltaGraph &graph() const;
  const AnalysisReport &report() const;
  const GroupProfile &profile() const;
  const ElementSet &center() const;
  // A with its closure materialized (bounded by the action cap).
  const AutAction &closed_action() const;
  bool within_inner() const;

  TheoremVerdict verdict(std::string id) const;

private:
  std::shared_ptr<const FiniteGroup> _group;
  AutAction _action;
  VerifyOptions _options;

  mutable std::optional<DeltaGraph> _graph;
  mutable std::optional<AnalysisReport> _report;
  mutable std::optional<GroupProfile> _profile;
  mutable std::optional<ElementSet> _center;
  mutable std::optional<AutAction> _closed;
  mutable std::optional<bool> _inner;
};

TheoremVerdict verify_thm_a(const Instance &I);
TheoremVerdict verify_thm_b(const Instance &I);
TheoremVerdict verify_thm_c(const Instance &I);
// D, E and H throw ActionNotInner unless A is within Inn(G).
TheoremVerdict verify_thm_d(const Instance &I);
TheoremVerdict verify_thm_e(const Instance &I);
TheoremVerdict verify_thm_f(const Instance &I);
TheoremVerdict verify_thm_g(const Instance &I);
TheoremVerdict verify_thm_h(const Instance &I);

TheoremVerdict verify_lemma_diam6(const Instance &I);
TheoremVerdict verify_dominating(const Instance &I, ElementId x);
// verify_dominating for every vertex representative
TheoremVerdict verify_dominating_all(const Instance &I);
TheoremVerdict verify_nilpotency_implication(const Instance &I);
TheoremVerdict verify_coprime_edges(const Instance &I);
TheoremVerdict verify_prime_order_components(const Instance &I);
TheoremVerdict verify_isolated_vertices(const Instance &I);
TheoremVerdict verify_power_edges(const Instance &I);
// K(G) is a cyclic central subgroup fixed by every automorphism in A.
TheoremVerdict verify_k_laws(const Instance &I);
TheoremVerdict verify_aut_orders(const Instance &I);
TheoremVerdict verify_edge_invariance(const Instance &I);

// Convenience overloads building a fresh Instance.
TheoremVerdict verify(std::string_view id,
                      std::shared_ptr<const FiniteGroup> G,
                      const AutAction &A,
                      const VerifyOptions &options = {});

// Identifiers accepted by run_suite: "A".."H", "lemmas", "all", or a single
// lemma id.
const std::vector<std::string> &theorem_ids();
const std::vector<std::string> &lemma_ids();
std::vector<std::string> expand_selector(std::string_view selector);

struct SuiteCase
{
  std::shared_ptr<const FiniteGroup> group;
  AutAction action;
};

// Every catalog key with each of its named actions.
std::vector<SuiteCase> catalog_corpus(std::size_t action_cap = kDefaultActionCap);

// Verdicts in corpus order, then selector order. D, E and H on actions not
// within Inn(G) are reported with hypotheses not holding.
std::vector<TheoremVerdict> run_suite(const std::vector<SuiteCase> &corpus,
                                      std::string_view selector = "all",
                                      const VerifyOptions &options = {});

std::size_t count_failures(const std::vector<TheoremVerdict> &verdicts);

} // namespace autocyc

#endif // AUTOCYC_THEOREMS_HPP
