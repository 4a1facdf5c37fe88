#include <doctest.h>

#include <json.hpp>
#include <random>

#include "grh/parser.hpp"
#include "grh/theorems.hpp"
#include "oracle.hpp"

using namespace grh;

TEST_CASE("plane contraction reproduces the h-superplane") {
  RewriteSystem got = contract_plane(PresetName::Aq, TransformSide::Left);
  CHECK(mutually_zero_normalizing(got, build(PresetName::Ah)));
  CHECK(normal_forms_agree(got, build(PresetName::Ah), 4));

  RewriteSystem dual = contract_plane(PresetName::AqDual, TransformSide::Left);
  CHECK(mutually_zero_normalizing(dual, build(PresetName::AhDual)));

  // with h killed before the limit, the undeformed superplane comes out
  RewriteSystem flat = contract_plane(PresetName::Aq, TransformSide::Left, true);
  const AlphabetPtr& a = flat.alphabet();
  CHECK(normal_form(parse_element("x*xi - xi*x", a), flat).is_zero());
  CHECK(normal_form(parse_element("xi*xi", a), flat).is_zero());
}

TEST_CASE("row-vector contraction degenerates instead") {
  // the other transform side cancels differently and lands on the undeformed
  // superplane; it is exposed for inspection, not used by the certification
  RewriteSystem got = contract_plane(PresetName::Aq, TransformSide::Right);
  const AlphabetPtr& a = got.alphabet();
  CHECK(normal_form(parse_element("x*xi - xi*x", a), got).is_zero());
  CHECK(normal_form(parse_element("xi*xi", a), got).is_zero());
  CHECK(!mutually_zero_normalizing(got, build(PresetName::Ah)));
}

TEST_CASE("similarity route derives the eight h-commutation relations") {
  RewriteSystem got = derive_grh_via_similarity();
  int bilinear = 0;
  for (const auto& r : got.rules()) {
    bool has_h = false;
    for (unsigned char ch : r.pattern)
      if (got.alphabet()->name(ch) == "h") has_h = true;
    if (!has_h) ++bilinear;
  }
  CHECK(bilinear == 8);
  CHECK(mutually_zero_normalizing(got, build(PresetName::GrH)));
  CHECK(normal_forms_agree(got, build(PresetName::GrH), 3));
  // the derived ideal contains delta^2 + h*delta*b
  CHECK(normal_form(parse_element("delta*delta + h*delta*b", got.alphabet()), got)
            .is_zero());

  RewriteSystem flat = derive_grh_via_similarity(true);
  CHECK(mutually_zero_normalizing(flat, build_undeformed_gr()));
}

TEST_CASE("endomorphism route") {
  RewriteSystem q = endomorphism_relations(PlaneVariant::Q);
  CHECK(mutually_zero_normalizing(q, build(PresetName::GrQ)));
  CHECK(normal_form(parse_element("alpha*b - q^-1*b*alpha", q.alphabet()), q).is_zero());

  RewriteSystem h = endomorphism_relations(PlaneVariant::H);
  CHECK(mutually_zero_normalizing(h, build(PresetName::GrH)));
  CHECK(normal_form(
            parse_element("alpha*c - c*alpha - h*(b*c + delta*alpha)", h.alphabet()), h)
            .is_zero());

  // the zero matrix trivially satisfies every extracted bilinear relation
  const AlphabetPtr& a = h.alphabet();
  int hidx = a->require("h");
  std::vector<std::optional<Element>> zero(a->size());
  for (int i = 0; i < a->size(); ++i)
    zero[i] = i == hidx ? Element::letter(a, i) : Element::zero(a);
  for (const auto& r : h.rules()) {
    bool h_rule = false;
    for (unsigned char ch : r.pattern)
      if (static_cast<int>(ch) == hidx) h_rule = true;
    if (h_rule) continue;
    Element rel = Element::from_word(a, r.pattern, Scalar::one()) - r.replacement;
    CHECK(rel.substitute(zero, a).is_zero());
  }
}

TEST_CASE("rtt residuals") {
  SuperMatrix rq = build_matrix(MatrixName::R_q);
  CHECK(rtt_residual(rq, rq, PresetName::GrQ, -1).is_zero());
  CHECK(rtt_residual(rq, rq, PresetName::GrQ, +1).nonzero_count() > 0);

  SuperMatrix rh = build_matrix(MatrixName::R_h);
  SuperMatrix rmh = build_matrix(MatrixName::R_minus_h);
  CHECK(rtt_residual(rh, rmh, PresetName::GrH, -1).is_zero());
  CHECK(rtt_residual(rh, rmh, PresetName::GrH, +1).nonzero_count() > 0);

  CHECK(rtt_residual(build_matrix(MatrixName::R_q1), build_matrix(MatrixName::R_q2),
                     PresetName::GrQ, -1)
            .is_zero());
}

TEST_CASE("relation extraction from RTT with free entries") {
  SuperMatrix rq = build_matrix(MatrixName::R_q);
  RewriteSystem a = relations_from_rtt(rq, rq, -1, PresetName::GrQ);
  CHECK(mutually_zero_normalizing(a, build(PresetName::GrQ)));

  RewriteSystem b = relations_from_rtt(build_matrix(MatrixName::R_q1),
                                       build_matrix(MatrixName::R_q2), -1, PresetName::GrQ);
  CHECK(mutually_zero_normalizing(b, build(PresetName::GrQ)));

  RewriteSystem c = relations_from_rtt(build_matrix(MatrixName::R_h),
                                       build_matrix(MatrixName::R_minus_h), -1,
                                       PresetName::GrH);
  CHECK(mutually_zero_normalizing(c, build(PresetName::GrH)));
}

TEST_CASE("R-matrix contraction") {
  SuperMatrix got = contract_r_matrix();
  SuperMatrix rh = build_matrix(MatrixName::R_h);
  CHECK(got == rh);
  CHECK(got.at(4, 2) == parse_element("h", got.alphabet()));
  CHECK(got.at(4, 3) == parse_element("-h", got.alphabet()));

  SuperMatrix flat = contract_r_matrix(true);
  const AlphabetPtr& a = flat.alphabet();
  CHECK(flat.at(1, 1) == Element::unit(a));
  CHECK(flat.at(2, 2) == parse_element("-1", a));
  CHECK(flat.at(3, 3) == parse_element("-1", a));
  CHECK(flat.at(4, 4) == Element::unit(a));
  CHECK(flat.nonzero_count() == 4);

  // G_h at h = 0 is the identity
  SuperMatrix gh = build_matrix(MatrixName::G_h);
  std::vector<std::optional<Element>> kill(a->size());
  for (int i = 0; i < a->size(); ++i) kill[i] = Element::letter(a, i);
  kill[a->require("h")] = Element::zero(a);
  CHECK(gh.substituted(kill) == SuperMatrix::identity(4, a));
}

TEST_CASE("Yang-Baxter landscape") {
  CHECK(qybe_residual(SuperMatrix::identity(4, build(PresetName::GrH).alphabet()),
                      EmbedConvention::Graded)
            .is_zero());
  CHECK(qybe_residual(build_matrix(MatrixName::R_q), EmbedConvention::Graded)
            .nonzero_count() > 0);
  CHECK(qybe_residual(build_matrix(MatrixName::R_q1), EmbedConvention::Graded).is_zero());
  CHECK(qybe_residual(build_matrix(MatrixName::R_q2), EmbedConvention::Graded).is_zero());
  CHECK(qybe_residual(build_matrix(MatrixName::R_q1), EmbedConvention::Ungraded)
            .nonzero_count() > 0);
  CHECK(qybe_residual(build_matrix(MatrixName::R_h), EmbedConvention::Graded)
            .nonzero_count() > 0);
  CHECK(qybe_residual(build_matrix(MatrixName::R_h), EmbedConvention::Ungraded)
            .nonzero_count() > 0);
}

TEST_CASE("superdeterminant entries against rewriting oracles") {
  const RewriteSystem& loc = build(PresetName::GrHLoc);
  const AlphabetPtr& a = loc.alphabet();
  // row 1 of T times column 1 of the displayed inverse
  Element e = parse_element(
      "-alpha*cinv*delta*binv + b*(binv + binv*alpha*cinv*delta*binv)", a);
  CHECK(normal_form(e, loc) == Element::unit(a));
  std::mt19937_64 rng(0x5DE7);
  for (int trial = 0; trial < 100; ++trial) {
    CHECK(testing::random_order_normal_form(e, loc, rng) == Element::unit(a));
  }

  Element d = normal_form(parse_element("b*cinv - alpha*cinv*delta*cinv", a), loc);
  Element b = parse_element("b", a);
  CHECK(normal_form(d * b - b * d, loc).is_zero());
}

TEST_CASE("column embedding images") {
  const RewriteSystem& grh = build(PresetName::GrH);
  const AlphabetPtr& a = grh.alphabet();
  CHECK(normal_form(parse_element("b*delta - delta*b - h*b^2", a), grh).is_zero());
  CHECK(normal_form(parse_element("delta*delta + h*b*delta", a), grh).is_zero());
}

TEST_CASE("suite runner and report") {
  auto subset = run_checks({"eq16.rtt.grq", "eq27.contraction", "eq30.modified_ybe"});
  REQUIRE(subset.size() == 3);
  for (const auto& r : subset) CHECK(r.passed);
  CHECK(subset[2].convention_notes.find("holds under") != std::string::npos);

  CHECK_THROWS_AS(run_checks({"not.a.check"}), UnknownGenerator);

  // the report validates against the shipped schema's required fields
  std::string json = report_to_json(subset);
  auto j = nlohmann::json::parse(json);
  CHECK(j.at("schema") == "grh-verify-report/1");
  CHECK(j.at("summary").at("total") == 3);
  CHECK(j.at("summary").at("passed") == 3);
  for (const auto& c : j.at("checks")) {
    CHECK(c.contains("name"));
    CHECK(c.contains("passed"));
    CHECK(c.contains("expected"));
    CHECK(c.contains("residual_summary"));
    CHECK(c.contains("witnesses"));
    CHECK(c.contains("convention_notes"));
    if (c.at("expected") == "zero")
      CHECK((c.at("passed") == (c.at("residual_summary") == 0)));
  }
}

TEST_CASE("negative controls really are armed") {
  auto results = run_checks({"eq16.rtt.grq.sign_control", "eq28.rtt.grh.sign_control",
                             "eq16.rtt.grq.entry_control"});
  for (const auto& r : results) {
    CHECK(r.passed);
    CHECK(r.expected == Expectation::NonZero);
    CHECK(r.residual_summary > 0);
  }
}
