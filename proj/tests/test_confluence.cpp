#include <doctest.h>
#include <random>

#include "grh/parser.hpp"
#include "grh/presets.hpp"
#include "oracle.hpp"

using namespace grh;

namespace {
AlphabetPtr two_letters() {
  return std::make_shared<Alphabet>(
      std::vector<Generator>{{"a", Parity::Even, ""}, {"b", Parity::Even, ""}});
}
Word word(const AlphabetPtr& a, const std::string& text) {
  return parse_element(text, a).terms().begin()->first;
}
}  // namespace

TEST_CASE("inverse pair overlaps resolve") {
  AlphabetPtr a = two_letters();
  RewriteSystem sys(a, "inverse_pair");
  sys.add_rule(word(a, "a*b"), Element::unit(a));
  sys.add_rule(word(a, "b*a"), Element::unit(a));
  CHECK(check_local_confluence(sys, 4).empty());
}

TEST_CASE("deliberately inconsistent system reports one unresolved overlap") {
  AlphabetPtr a = two_letters();
  RewriteSystem sys(a, "inconsistent");
  sys.add_rule(word(a, "a*b"), parse_element("a", a));
  sys.add_rule(word(a, "a*b"), parse_element("b", a));
  auto bad = check_local_confluence(sys, 4);
  CHECK(bad.size() == 1);
  CHECK(bad[0].nf_a != bad[0].nf_b);
}

TEST_CASE("every shipped preset is locally confluent up to length 4") {
  for (PresetName p : all_presets()) {
    INFO(preset_id(p));
    CHECK(check_local_confluence(build(p), 4).empty());
  }
  CHECK(check_local_confluence(build_undeformed_gr(), 4).empty());
  CHECK(check_local_confluence(build_undeformed_gr_loc(), 4).empty());
}

TEST_CASE("bound below 2 is rejected") {
  CHECK_THROWS_AS(check_local_confluence(build(PresetName::Ah), 1), InvalidRewriteSystem);
}

TEST_CASE("oracle agrees with the engine on overlapping reductions") {
  // the full reduct graph of an element explodes combinatorially, so beyond
  // the smallest inputs the oracle samples many random reduction orders
  std::mt19937_64 rng(0x0DDC0DE);
  const RewriteSystem& grh = build(PresetName::GrH);
  for (const char* s : {"alpha*delta*c", "alpha*b*c", "delta*delta*b", "b*c*b",
                        "alpha*delta*alpha", "b*c*b*c"}) {
    Element e = parse_element(s, grh.alphabet());
    Element expect = normal_form(e, grh);
    for (int trial = 0; trial < 200; ++trial) {
      CHECK(testing::random_order_normal_form(e, grh, rng) == expect);
    }
  }
  const RewriteSystem& loc = build(PresetName::GrHLoc);
  Element w = parse_element("delta*binv*alpha*cinv*delta*binv", loc.alphabet());
  Element expect = normal_form(w, loc);
  for (int trial = 0; trial < 200; ++trial) {
    CHECK(testing::random_order_normal_form(w, loc, rng) == expect);
  }
}
