#pragma once

#include <functional>
#include <string>
#include <vector>

#include "grh/presets.hpp"
#include "grh/supermatrix.hpp"

namespace grh {

enum class Expectation { Zero, NonZero, Info };

struct CheckResult {
  std::string name;
  bool passed = false;
  Expectation expected = Expectation::Zero;
  int residual_summary = 0;             // count of nonzero residual entries
  std::vector<std::string> witnesses;   // up to 3 printed nonzero residuals
  std::string convention_notes;
};

enum class TransformSide { Left, Right };
enum class PlaneVariant { Q, H };

// Contraction of a q-superplane preset through the singular change of basis:
// substitutes the transformed coordinates, reduces modulo the rules already
// derived (pole cancellation happens here), checks every coefficient is
// pole-free at q = 1, and takes the limit. `h_zero` contracts with h set to 0.
RewriteSystem contract_plane(PresetName source, TransformSide side, bool h_zero = false);

// Gr_h relations from the similarity transform of a generic supermatrix:
// imposes each q-group relation on the transformed entries, reduces, checks
// pole-freeness, takes the limit. Exactly eight oriented rules come out.
RewriteSystem derive_grh_via_similarity(bool h_zero = false);

// Gr relations from the superplane endomorphisms: maps coordinates through a
// relation-free generic matrix, imposes the plane relations on the images,
// and extracts the induced bilinear relations by exact linear algebra.
RewriteSystem endomorphism_relations(PlaneVariant variant);

// nf(R_left T1 T2 - sign T2 T1 R_right) entry-wise under the preset
SuperMatrix rtt_residual(const SuperMatrix& r_left, const SuperMatrix& r_right,
                         PresetName t_preset, int sign);

// same contraction with relation-free generic entries, then extraction
RewriteSystem relations_from_rtt(const SuperMatrix& r_left, const SuperMatrix& r_right,
                                 int sign, PresetName target);

// lim_{q->1} (G_h R_q G_h)/2; `h_zero` evaluates the undeformed limit
SuperMatrix contract_r_matrix(bool h_zero = false);

// R12 R13 R23 - R23 R13 R12 under the chosen leg-embedding convention
SuperMatrix qybe_residual(const SuperMatrix& r, EmbedConvention conv);

enum class ConventionChoice { Graded, Ungraded, Both };

// full verification suite
std::vector<std::string> check_names();
std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    ConventionChoice conv = ConventionChoice::Both);
std::vector<CheckResult> run_all_checks(ConventionChoice conv = ConventionChoice::Both);
std::string report_to_json(const std::vector<CheckResult>& results);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace grh
