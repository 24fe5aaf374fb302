#pragma once

#include <optional>

#include "taylorres/betti.hpp"
#include "taylorres/quotients.hpp"

namespace taylorres {

/// Minimality of the Taylor complex vs completeness of the colon sets
/// (|set(u_j)| = j-1 at every position) for the deterministically found
/// linear-quotients ordering. The two must agree.
struct SetSizeVerdict {
  bool taylor_minimal;
  bool sizes_complete;
  std::vector<int> sizes;
  bool agrees() const { return taylor_minimal == sizes_complete; }
};

SetSizeVerdict check_set_size_criterion(const MonomialIdeal& ideal);

/// The three equivalent minimality conditions for a stable ideal:
/// minimal Taylor complex; max generator max_index equals the generator
/// count; exactly one generator per max_index 1..r and none above.
struct StableConditionsVerdict {
  bool taylor_minimal;
  bool max_index_reaches_count;
  bool one_generator_per_index;
  bool equivalent() const {
    return taylor_minimal == max_index_reaches_count &&
           taylor_minimal == one_generator_per_index;
  }
};

StableConditionsVerdict check_stable_conditions(const MonomialIdeal& ideal);

/// Staircase family: generator i is x_i times the cumulative prefix
/// product x_1^{a_1} ... x_i^{a_i}. Steps are the a_k, one per generator.
struct StaircaseParams {
  int r;
  std::vector<int> steps;
  bool operator==(const StaircaseParams&) const = default;
};

/// Builds the staircase ideal and asserts the constructed generators are
/// pairwise non-dividing, stable and Taylor-minimal.
MonomialIdeal make_staircase_ideal(int vars, const std::vector<int>& steps);

/// Recognizes the staircase family syntactically on the canonical
/// generator order; round-trips with make_staircase_ideal.
std::optional<StaircaseParams> staircase_form(const MonomialIdeal& ideal);

/// Equigenerated stable verdict: for common degree d > 1, Taylor
/// minimality must coincide with the shape x_1^{d-1} * (x_1, ..., x_r),
/// i.e. a staircase with steps (d-1, 0, ..., 0).
struct EquigeneratedStableVerdict {
  int degree;
  bool taylor_minimal;
  bool matches_form;
  bool agrees() const { return taylor_minimal == matches_form; }
};

EquigeneratedStableVerdict check_equigenerated_stable(const MonomialIdeal& ideal);

/// Shape u * (x_{i_1}, ..., x_{i_k}): one common monomial factor times
/// distinct variables. Variables are 0-based and sorted.
struct ScaledVariablesForm {
  Monomial factor;
  std::vector<int> variables;
  bool operator==(const ScaledVariablesForm&) const = default;
};

std::optional<ScaledVariablesForm> scaled_variables_form(const MonomialIdeal& ideal);

/// Shape (x_1 ... x_p) * (x_{p+1}, ..., x_q): the factor is the initial
/// segment of the variables and the scaled variables continue it. Returns
/// (p, q), 0 <= p < q <= vars; p = 0 means a unit factor.
std::optional<std::pair<int, int>> prefix_segment_form(const MonomialIdeal& ideal);

/// For an ideal with a linear resolution (oracle-verified precondition):
/// Taylor minimality must coincide with the scaled-variables shape, and a
/// recognized ideal must admit a linear-quotients ordering.
struct LinearResolutionVerdict {
  bool taylor_minimal;
  bool matches_form;
  bool linear_quotients_found;
  bool agrees() const { return taylor_minimal == matches_form; }
};

LinearResolutionVerdict check_linear_resolution_form(const MonomialIdeal& ideal);

/// Aggregated classification. Optional fields are absent when the class
/// does not apply to the input (e.g. matroidal for non-squarefree
/// generators) or when a constituent's size envelope is exceeded.
struct ClassificationReport {
  std::optional<OrderedIdeal> linear_quotients;
  bool order_search_complete = false;  // find_order actually ran
  std::vector<int> set_sizes;          // for the found ordering, if any
  bool taylor_minimal = false;
  bool stable = false;
  std::optional<StaircaseParams> staircase;
  std::optional<ScaledVariablesForm> scaled_variables;
  std::optional<bool> linear_resolution;
  std::optional<bool> matroidal;
  std::optional<bool> squarefree_stable;
  std::map<int, int> m_counts;
  std::optional<BettiTable> betti;
};

ClassificationReport classify(const MonomialIdeal& ideal);

}  // namespace taylorres
