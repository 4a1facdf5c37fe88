#pragma once

#include <set>
#include <string>
#include <vector>

#include "grh/algebra.hpp"

namespace grh {

// Canonical algebra presentations shipped with the engine. Every name maps to
// exactly one builder; instances are immutable and cached.
enum class PresetName {
  Aq,             // q-superplane: x*xi = q xi*x, xi^2 = 0
  AqDual,         // dual q-superplane: eta^2 = 0, eta*y = q^-1 y*eta
  GrQ,            // q-deformed Gr(1|1)
  Ah,             // h-superplane
  AhDual,         // dual h-superplane
  GrH,            // h-deformed Gr(1|1)
  GrHLoc,         // Gr_h(1|1) with formal inverses of b and c
  GrH_x_AhDual,   // Gr_h tensor dual h-superplane (graded swap rules)
  GrH_x_Ah,       // Gr_h tensor h-superplane
  Generic_x_Plane // relation-free 2x2 entries alongside the h-plane pair
};

const std::vector<PresetName>& all_presets();
const std::string& preset_id(PresetName name);          // CLI identifier
PresetName preset_from_id(const std::string& id);       // throws UnknownGenerator

// cached immutable instance
const RewriteSystem& build(PresetName name);

// internal sibling of Generic_x_Plane with the q-plane pair instead of the
// h-plane pair; used by the q-case relation-extraction routes
const RewriteSystem& build_generic_q_composite();

// Gr(1|1) with h set to zero in every defining relation (supercommutative)
const RewriteSystem& build_undeformed_gr();
// its localization at b, c
const RewriteSystem& build_undeformed_gr_loc();

// only the Grassmann-parameter rules (h^2 = 0 and migration) over `alph`
RewriteSystem make_h_system(const AlphabetPtr& alph, const std::string& label);

// Formal localization: adds u^-1 for every u in `invertibles` (even letters),
// cancellation rules, and mechanically derived commutation rules for the new
// letters. The derived rules are frozen after interreduction and the result
// must pass the bounded confluence audit.
RewriteSystem extend_with_inverses(const RewriteSystem& sys,
                                   const std::set<std::string>& invertibles);

// image of a preset under h -> 0 (h stays in the alphabet; migration rules kept)
RewriteSystem with_h_zero(const RewriteSystem& sys);
// image of a preset under the automorphism h -> -h
RewriteSystem with_h_negated(const RewriteSystem& sys);

// keep only rules selected by `keep`; used for relation-free comparisons
RewriteSystem filter_rules(const RewriteSystem& sys, const std::string& label,
                           bool keep_h_rules, bool keep_cancellations,
                           bool keep_algebra_rules);

// lossless text round-trip (documented in the README)
std::string preset_to_json(const RewriteSystem& sys);
RewriteSystem preset_from_json(const std::string& text);
std::string all_presets_to_json();

}  // namespace grh
