#include <doctest.h>

#include <random>

#include "grh/parser.hpp"
#include "grh/presets.hpp"

using namespace grh;

namespace {
const Rule* find_rule(const RewriteSystem& sys, const std::string& pattern_text) {
  Word p = parse_element(pattern_text, sys.alphabet()).terms().begin()->first;
  for (const auto& r : sys.rules())
    if (r.pattern == p) return &r;
  return nullptr;
}
}  // namespace

TEST_CASE("GrQ carries the q-deformed exchange rule") {
  const RewriteSystem& sys = build(PresetName::GrQ);
  const Rule* r = find_rule(sys, "b*c");
  REQUIRE(r != nullptr);
  CHECK(r->replacement ==
        parse_element("c*b + (q - q^-1)*delta*alpha", sys.alphabet()));
}

TEST_CASE("dual h-superplane rules") {
  const RewriteSystem& sys = build(PresetName::AhDual);
  REQUIRE(find_rule(sys, "eta*eta") != nullptr);
  CHECK(find_rule(sys, "eta*eta")->replacement.is_zero());
  REQUIRE(find_rule(sys, "eta*y") != nullptr);
  CHECK(find_rule(sys, "eta*y")->replacement == parse_element("y*eta", sys.alphabet()));
}

TEST_CASE("xi squared in the h-superplane") {
  const RewriteSystem& sys = build(PresetName::Ah);
  Element sq = normal_form(parse_element("xi*xi", sys.alphabet()), sys);
  // the displayed form -h*x*xi and the canonical form agree in the algebra
  CHECK(sq == normal_form(parse_element("-h*x*xi", sys.alphabet()), sys));
  CHECK(sq == parse_element("-h*xi*x", sys.alphabet()));
}

TEST_CASE("localization cancels inverses") {
  const RewriteSystem& loc = build(PresetName::GrHLoc);
  CHECK(normal_form(parse_element("cinv*c*b", loc.alphabet()), loc) ==
        parse_element("b", loc.alphabet()));
  CHECK(normal_form(parse_element("b*binv", loc.alphabet()), loc) ==
        Element::unit(loc.alphabet()));
  // derived commutation rule for alpha past cinv, frozen after interreduction
  const Rule* r = find_rule(loc, "alpha*cinv");
  REQUIRE(r != nullptr);
  CHECK(r->replacement ==
        parse_element("cinv*alpha - h*cinv*b - h*cinv^2*delta*alpha", loc.alphabet()));
}

TEST_CASE("localization agrees with the base algebra on inverse-free words") {
  const RewriteSystem& grh = build(PresetName::GrH);
  const RewriteSystem& loc = build(PresetName::GrHLoc);
  std::mt19937_64 rng(0x5EED);
  std::uniform_int_distribution<int> len(0, 5), letter(0, grh.alphabet()->size() - 1);
  for (int i = 0; i < 500; ++i) {
    Word w;
    int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(static_cast<char>(letter(rng)));
    Element base = Element::from_word(grh.alphabet(), w, Scalar::one());
    Element a = normal_form(base, grh);
    Element b = normal_form(base.map_to(loc.alphabet()), loc);
    CHECK(a == b.map_to(grh.alphabet()));
  }
}

TEST_CASE("localization requires a workable source rule set") {
  AlphabetPtr a = std::make_shared<Alphabet>(
      std::vector<Generator>{{"a", Parity::Even, ""}, {"b", Parity::Even, ""}});
  RewriteSystem sys(a, "squares");
  sys.add_rule(parse_element("a*b", a).terms().begin()->first, parse_element("a*a", a));
  CHECK_THROWS_AS(extend_with_inverses(sys, {"b"}), NonInvertibleDerivation);
  CHECK_THROWS_AS(extend_with_inverses(build(PresetName::GrH), {"alpha"}),
                  NonInvertibleDerivation);
}

TEST_CASE("preset JSON round trip is lossless") {
  for (PresetName p : all_presets()) {
    const RewriteSystem& sys = build(p);
    RewriteSystem back = preset_from_json(preset_to_json(sys));
    CHECK(back.label() == sys.label());
    CHECK(*back.alphabet() == *sys.alphabet());
    REQUIRE(back.rules().size() == sys.rules().size());
    for (size_t i = 0; i < sys.rules().size(); ++i) {
      CHECK(back.rules()[i].pattern == sys.rules()[i].pattern);
      CHECK(back.rules()[i].replacement ==
            sys.rules()[i].replacement.map_to(back.alphabet()));
    }
  }
}

TEST_CASE("h -> 0 image is the supercommutative Gr(1|1)") {
  RewriteSystem flat = with_h_zero(build(PresetName::GrH));
  CHECK(normal_form(parse_element("alpha*b - b*alpha", flat.alphabet()), flat).is_zero());
  CHECK(normal_form(parse_element("alpha*delta + delta*alpha", flat.alphabet()), flat)
            .is_zero());
  CHECK(normal_form(parse_element("alpha*alpha", flat.alphabet()), flat).is_zero());
  CHECK(normal_form(parse_element("b*c - c*b", flat.alphabet()), flat).is_zero());
}

TEST_CASE("h negation is an involution on presets") {
  const RewriteSystem& grh = build(PresetName::GrH);
  RewriteSystem once = with_h_negated(grh);
  RewriteSystem twice = with_h_negated(once);
  REQUIRE(twice.rules().size() == grh.rules().size());
  for (size_t i = 0; i < grh.rules().size(); ++i) {
    CHECK(twice.rules()[i].pattern == grh.rules()[i].pattern);
    CHECK(twice.rules()[i].replacement == grh.rules()[i].replacement);
  }
  // the image differs from the original exactly in the sign of the h terms
  const Rule* r = nullptr;
  Word ab = parse_element("alpha*b", grh.alphabet()).terms().begin()->first;
  for (const auto& rule : once.rules())
    if (rule.pattern == ab) r = &rule;
  REQUIRE(r != nullptr);
  CHECK(r->replacement == parse_element("b*alpha - h*b^2", grh.alphabet()));
}

TEST_CASE("preset ids resolve and reject unknowns") {
  CHECK(preset_from_id("grh") == PresetName::GrH);
  CHECK_THROWS_AS(preset_from_id("nope"), UnknownGenerator);
}
