#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "lgm/quiver.hpp"

namespace lgm {

struct TransformOptions {
  // Run the symbolic certificates (psi*F_B == 1, psi*F == F' + 1, Laurent
  // intermediates) and the triplet-condition verifier around every step.
  bool strict = true;
  // Replace the "= 1" right-hand sides by "= 1 - U" with a fresh formal
  // variable U.  Single-step analysis only; run_main_theorem rejects it.
  bool u_deform = false;
};

// One elimination step: the block it consumed, the change of variables
// (old variable -> rational function of the new ones), and the resulting
// triplet.  weight_variable is the u of the weighting phase when one was
// used, main_variable the eliminated variable.
struct TransformStep {
  Block block;
  std::optional<std::string> weight_variable;
  std::string main_variable;
  Substitution bindings;
  BlockHistory history_after;
  Triplet triplet_after;
};

enum class VerifyStage { Initial, Horizontal, Mixed, Vertical };

struct VerifyReport {
  bool ok = true;
  // Identifiers of violated conditions: "anchor", "history", "vars",
  // "i".."xii" following the lemma numbering.
  std::vector<std::string> violations;
};

VerifyReport verify_triplet_conditions(const Triplet& t, const BlockHistory& h,
                                       VerifyStage stage);

TransformStep apply_horizontal_start(const Triplet& t, const Block& b,
                                     const TransformOptions& opts = {});
TransformStep apply_horizontal_wide(const Triplet& t, const Block& b,
                                    const BlockHistory& h,
                                    const TransformOptions& opts = {});
TransformStep apply_horizontal_basic(const Triplet& t, const Block& b,
                                     const BlockHistory& h,
                                     const TransformOptions& opts = {});
TransformStep apply_mixed_start(const Triplet& t, const Block& b,
                                const TransformOptions& opts = {});
TransformStep apply_mixed(const Triplet& t, const Block& b,
                          const BlockHistory& h,
                          const TransformOptions& opts = {});
TransformStep apply_vertical(const Triplet& t, const Block& b,
                             const BlockHistory& h,
                             const TransformOptions& opts = {});

struct PipelineTrace {
  int k = 0;
  std::vector<int> degrees;  // as given, before sorting
  BlockPlan plan;
  std::vector<TransformStep> steps;
  // The mirror potential, in 2k - l variables.
  LaurentPolynomial result = LaurentPolynomial::zero(make_vars({}));
};

// The block-elimination pipeline for a Fano complete intersection of the
// given degrees in G(2,k+2).  Throws input_error when the data is not Fano
// and invariant_error when a certificate fails.
PipelineTrace run_main_theorem(int k, const std::vector<int>& degrees,
                               const TransformOptions& opts = {});

enum class ClosedFormMode { Hyperplanes, Index2, Index1 };

// Direct closed forms for intersections of l hyperplanes: Hyperplanes needs
// 1 <= l <= k-1, Index2 needs l == k, Index1 needs l == k+1.
LaurentPolynomial closed_form_section10(ClosedFormMode mode, int k, int l);

nlohmann::json trace_to_json(const PipelineTrace& tr);

}  // namespace lgm
