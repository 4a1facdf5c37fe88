#include <doctest.h>

#include "grh/parser.hpp"
#include "grh/presets.hpp"
#include "oracle.hpp"

using namespace grh;

namespace {
const RewriteSystem& grq() { return build(PresetName::GrQ); }
const RewriteSystem& grh_sys() { return build(PresetName::GrH); }
const RewriteSystem& ah() { return build(PresetName::Ah); }
Element parse_in(const RewriteSystem& sys, const std::string& s) {
  return parse_element(s, sys.alphabet());
}
}  // namespace

TEST_CASE("parser builds free-algebra elements") {
  Element e = parse_in(grq(), "alpha*b - q^-1*b*alpha");
  CHECK(e.term_count() == 2);

  // the parser applies no relations
  Element hh = parse_in(grh_sys(), "h*h");
  CHECK(hh.term_count() == 1);
  CHECK(hh.terms().begin()->first.size() == 2);

  Element dist = parse_in(ah(), "x*(xi + h*x)");
  CHECK(dist.term_count() == 2);
  CHECK(dist == parse_in(ah(), "x*xi + x*h*x"));
}

TEST_CASE("parser error reporting") {
  CHECK_THROWS_AS(parse_in(grq(), "alpha beta"), SyntaxError);  // juxtaposition
  CHECK_THROWS_AS(parse_in(grq(), "alpha*(b"), SyntaxError);
  CHECK_THROWS_AS(parse_in(grq(), "alpha*"), SyntaxError);
  CHECK_THROWS_AS(parse_in(grq(), "2 3"), SyntaxError);
  CHECK_THROWS_AS(parse_in(grq(), "gamma"), UnknownGenerator);
  CHECK_THROWS_AS(parse_in(grq(), "alpha/b"), SyntaxError);   // nonscalar divisor
  CHECK_THROWS_AS(parse_in(grq(), "alpha^-1"), SyntaxError);  // negative on generator
  CHECK_THROWS_AS(parse_in(grq(), "b^99999"), SyntaxError);   // exponent out of range
  try {
    parse_in(grq(), "alpha @ b");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 6);
  }
}

TEST_CASE("free multiplication") {
  Element x = parse_in(ah(), "x"), xi = parse_in(ah(), "xi");
  CHECK((x * xi) == parse_in(ah(), "x*xi"));
  Element a = parse_in(grq(), "alpha"), b = parse_in(grq(), "b"), c = parse_in(grq(), "c");
  CHECK(((a + b) * c) == parse_in(grq(), "alpha*c + b*c"));
  CHECK((Element::zero(grq().alphabet()) * c).is_zero());
  CHECK_THROWS_AS(x * a, AlphabetMismatch);
}

TEST_CASE("element printing is canonical and compact") {
  CHECK(parse_in(grh_sys(), "h*b*b").str() == "h*b^2");
  CHECK(parse_in(grh_sys(), "0").str() == "0");
  CHECK(parse_in(grh_sys(), "1").str() == "1");
  CHECK(parse_in(grh_sys(), "b*alpha + h*b^2").str() == "b*alpha + h*b^2");
  CHECK(parse_in(grq(), "q^-1*b*alpha").str() == "(1/q)*b*alpha");
}

TEST_CASE("normal forms of the defining examples") {
  CHECK(normal_form(parse_in(grq(), "alpha*b"), grq()) ==
        parse_in(grq(), "q^-1*b*alpha"));
  CHECK(normal_form(parse_in(ah(), "h*h*x"), ah()).is_zero());
  CHECK(normal_form(parse_in(grh_sys(), "h*h*b"), grh_sys()).is_zero());

  // frozen from the exhaustive-rewriting oracle below
  Element nf = normal_form(parse_in(grh_sys(), "alpha*c*b"), grh_sys());
  CHECK(nf == parse_in(grh_sys(), "c*b*alpha + 2*h*c*b^2 + h*b*delta*alpha"));
  auto reducts = testing::all_normal_forms(parse_in(grh_sys(), "alpha*c*b"), grh_sys());
  REQUIRE(reducts.size() == 1);
  CHECK(*reducts.begin() == nf.str());
}

TEST_CASE("degenerate inputs are their own normal forms") {
  CHECK(normal_form(Element::zero(grh_sys().alphabet()), grh_sys()).is_zero());
  Element unit = Element::unit(grh_sys().alphabet());
  CHECK(normal_form(unit, grh_sys()) == unit);
}

TEST_CASE("substitution, homomorphic extension") {
  // transformed coordinates reproduce the finite-q relation of the h-superplane
  const AlphabetPtr& aq = build(PresetName::Aq).alphabet();
  const AlphabetPtr& ta = ah().alphabet();
  std::vector<std::optional<Element>> im(aq->size());
  im[aq->require("x")] = parse_element("x", ta);
  im[aq->require("xi")] = parse_element("(1/(q - 1))*h*x + xi", ta);
  Element rel = parse_element("x*xi - q*xi*x", aq);
  Element img = rel.substitute(im, ta);
  RewriteSystem honly = make_h_system(ta, "honly");
  CHECK(normal_form(img, honly) ==
        parse_element("x*xi - q*xi*x - h*x^2", ta));

  // identity map leaves elements unchanged
  std::vector<std::optional<Element>> ident(ta->size());
  for (int i = 0; i < ta->size(); ++i) ident[i] = Element::letter(ta, i);
  Element e = parse_element("x*xi + h*x", ta);
  CHECK(e.substitute(ident, ta) == e);

  // x -> 0 kills every word containing x
  std::vector<std::optional<Element>> kill = ident;
  kill[ta->require("x")] = Element::zero(ta);
  CHECK(parse_element("x*xi", ta).substitute(kill, ta).is_zero());

  std::vector<std::optional<Element>> partial(aq->size());
  partial[aq->require("x")] = parse_element("x", ta);
  CHECK_THROWS_AS(rel.substitute(partial, ta), MissingImage);
}

TEST_CASE("normal form is idempotent and multiplicative on samples") {
  for (const char* s : {"alpha*c*b", "b*c*b*c", "alpha*delta*alpha",
                        "h*alpha*b + b*c", "delta*c*alpha"}) {
    Element e = parse_in(grh_sys(), s);
    Element nf = normal_form(e, grh_sys());
    CHECK(normal_form(nf, grh_sys()) == nf);
  }
  Element a = parse_in(grh_sys(), "alpha*c"), b = parse_in(grh_sys(), "c*b + h*b");
  CHECK(normal_form(a * b, grh_sys()) ==
        normal_form(normal_form(a, grh_sys()) * normal_form(b, grh_sys()), grh_sys()));
}

TEST_CASE("parity is conserved on homogeneous inputs") {
  for (const char* s : {"alpha*c*b", "delta*delta", "alpha*delta", "b*c", "h*b"}) {
    Element e = parse_in(grh_sys(), s);
    Parity before, after;
    REQUIRE(e.homogeneous(&before));
    Element nf = normal_form(e, grh_sys());
    if (!nf.is_zero()) {
      CHECK(nf.homogeneous(&after));
      CHECK(before == after);
    }
  }
}

TEST_CASE("step limits and cycle detection") {
  // a legal-looking two-rule system that swaps forever
  AlphabetPtr a = std::make_shared<Alphabet>(
      std::vector<Generator>{{"u", Parity::Even, ""}, {"v", Parity::Even, ""}});
  RewriteSystem sys(a, "swap");
  sys.add_rule(parse_element("u*v", a).terms().begin()->first,
               parse_element("v*u", a));
  sys.add_rule(parse_element("v*u", a).terms().begin()->first,
               parse_element("u*v", a));
  CHECK_THROWS_AS(normal_form(parse_element("u*v", a), sys), StepLimitExceeded);

  // a terminating computation aborts cleanly under a tiny cap
  CHECK_THROWS_AS(normal_form(parse_in(grh_sys(), "alpha*c*b"), grh_sys(), 2),
                  StepLimitExceeded);
}

TEST_CASE("rewrite system validation") {
  AlphabetPtr a = std::make_shared<Alphabet>(
      std::vector<Generator>{{"u", Parity::Even, ""}, {"g", Parity::Odd, ""}});
  RewriteSystem sys(a, "bad");
  // parity breaking rule
  CHECK_THROWS_AS(sys.add_rule(parse_element("g*g", a).terms().begin()->first,
                               parse_element("g", a)),
                  InvalidRewriteSystem);
  // replacement containing its own pattern
  CHECK_THROWS_AS(sys.add_rule(parse_element("u*u", a).terms().begin()->first,
                               parse_element("u*u*u + u", a)),
                  InvalidRewriteSystem);
}
