#include "grh/presets.hpp"

#include <json.hpp>

#include "grh/parser.hpp"

namespace grh {

namespace {

Generator even(const std::string& n) { return Generator{n, Parity::Even, ""}; }
Generator odd(const std::string& n) { return Generator{n, Parity::Odd, ""}; }

AlphabetPtr alph(std::vector<Generator> gens) {
  return std::make_shared<Alphabet>(std::move(gens));
}

// h^2 = 0 and h migrates to the front: g*h -> h*g for even g, g*h -> -h*g for
// odd g. Scalars commute with everything; only h is a Grassmann parameter.
void add_h_rules(RewriteSystem& sys) {
  const AlphabetPtr& a = sys.alphabet();
  int h = a->index_of("h");
  if (h < 0) return;
  Word hh;
  hh.push_back(static_cast<char>(h));
  hh.push_back(static_cast<char>(h));
  sys.add_rule(hh, Element::zero(a));
  for (int g = 0; g < a->size(); ++g) {
    if (g == h) continue;
    Word pat;
    pat.push_back(static_cast<char>(g));
    pat.push_back(static_cast<char>(h));
    Word rep;
    rep.push_back(static_cast<char>(h));
    rep.push_back(static_cast<char>(g));
    Scalar sign = a->parity(g) == Parity::Odd ? Scalar(-1) : Scalar(1);
    sys.add_rule(pat, Element::from_word(a, rep, sign));
  }
}

// graded swap rules ordering `low` letters before `high` letters
void add_swap_rules(RewriteSystem& sys, const std::vector<std::string>& high,
                    const std::vector<std::string>& low) {
  const AlphabetPtr& a = sys.alphabet();
  for (const auto& hn : high) {
    for (const auto& ln : low) {
      int hi = a->require(hn), lo = a->require(ln);
      Word pat;
      pat.push_back(static_cast<char>(hi));
      pat.push_back(static_cast<char>(lo));
      Word rep;
      rep.push_back(static_cast<char>(lo));
      rep.push_back(static_cast<char>(hi));
      bool both_odd =
          a->parity(hi) == Parity::Odd && a->parity(lo) == Parity::Odd;
      sys.add_rule(pat, Element::from_word(a, rep, both_odd ? Scalar(-1) : Scalar(1)));
    }
  }
}

void add_parsed_rule(RewriteSystem& sys, const std::string& pattern_text,
                     const std::string& replacement_text) {
  const AlphabetPtr& a = sys.alphabet();
  Element pat = parse_element(pattern_text, a);
  if (pat.term_count() != 1 || !pat.terms().begin()->second.is_one())
    throw InvalidRewriteSystem("rule pattern must be a single monic word: " + pattern_text);
  sys.add_rule(pat.terms().begin()->first, parse_element(replacement_text, a));
}

RewriteSystem build_aq() {
  RewriteSystem sys(alph({odd("xi"), even("x")}), "Aq");
  add_parsed_rule(sys, "x*xi", "q*xi*x");
  add_parsed_rule(sys, "xi*xi", "0");
  return sys;
}

RewriteSystem build_aqdual() {
  RewriteSystem sys(alph({even("y"), odd("eta")}), "AqDual");
  add_parsed_rule(sys, "eta*eta", "0");
  add_parsed_rule(sys, "eta*y", "q^-1*y*eta");
  return sys;
}

RewriteSystem build_grq() {
  RewriteSystem sys(alph({even("c"), even("b"), odd("delta"), odd("alpha")}), "GrQ");
  add_parsed_rule(sys, "alpha*b", "q^-1*b*alpha");
  add_parsed_rule(sys, "alpha*c", "q^-1*c*alpha");
  add_parsed_rule(sys, "delta*b", "q^-1*b*delta");
  add_parsed_rule(sys, "delta*c", "q^-1*c*delta");
  add_parsed_rule(sys, "alpha*delta", "-delta*alpha");
  add_parsed_rule(sys, "alpha*alpha", "0");
  add_parsed_rule(sys, "delta*delta", "0");
  add_parsed_rule(sys, "b*c", "c*b + (q - q^-1)*delta*alpha");
  return sys;
}

RewriteSystem build_ah() {
  RewriteSystem sys(alph({odd("h"), odd("xi"), even("x")}), "Ah");
  add_h_rules(sys);
  add_parsed_rule(sys, "x*xi", "xi*x + h*x^2");
  add_parsed_rule(sys, "xi*xi", "-h*x*xi");
  return sys;
}

RewriteSystem build_ahdual() {
  RewriteSystem sys(alph({odd("h"), even("y"), odd("eta")}), "AhDual");
  add_h_rules(sys);
  add_parsed_rule(sys, "eta*eta", "0");
  add_parsed_rule(sys, "eta*y", "y*eta");
  return sys;
}

void add_grh_rules(RewriteSystem& sys) {
  add_parsed_rule(sys, "alpha*b", "b*alpha + h*b^2");
  add_parsed_rule(sys, "alpha*c", "c*alpha + h*(b*c + delta*alpha)");
  add_parsed_rule(sys, "delta*b", "b*delta - h*b^2");
  add_parsed_rule(sys, "delta*c", "c*delta - h*(c*b - alpha*delta)");
  add_parsed_rule(sys, "alpha*alpha", "h*alpha*b");
  add_parsed_rule(sys, "alpha*delta", "-delta*alpha + h*(delta*b - b*alpha)");
  add_parsed_rule(sys, "delta*delta", "-h*delta*b");
  add_parsed_rule(sys, "b*c", "c*b + h*(b*delta + alpha*b)");
}

RewriteSystem build_grh() {
  RewriteSystem sys(alph({odd("h"), even("c"), even("b"), odd("delta"), odd("alpha")}),
                    "GrH");
  add_h_rules(sys);
  add_grh_rules(sys);
  return sys;
}

RewriteSystem build_grh_x_ahdual() {
  RewriteSystem sys(alph({odd("h"), even("c"), even("b"), odd("delta"), odd("alpha"),
                          even("y"), odd("eta")}),
                    "GrH_x_AhDual");
  add_h_rules(sys);
  add_grh_rules(sys);
  add_parsed_rule(sys, "eta*eta", "0");
  add_parsed_rule(sys, "eta*y", "y*eta");
  add_swap_rules(sys, {"y", "eta"}, {"c", "b", "delta", "alpha"});
  return sys;
}

RewriteSystem build_grh_x_ah() {
  RewriteSystem sys(alph({odd("h"), even("c"), even("b"), odd("delta"), odd("alpha"),
                          odd("xi"), even("x")}),
                    "GrH_x_Ah");
  add_h_rules(sys);
  add_grh_rules(sys);
  add_parsed_rule(sys, "x*xi", "xi*x + h*x^2");
  add_parsed_rule(sys, "xi*xi", "-h*x*xi");
  add_swap_rules(sys, {"xi", "x"}, {"c", "b", "delta", "alpha"});
  return sys;
}

// generic 2x2 entries (t11, t22 odd; t12, t21 even) alongside a superplane and
// its dual; the t sector carries no relations so extraction routines cannot
// presuppose the group law
RewriteSystem build_generic_composite(bool q_plane) {
  std::vector<Generator> gens{odd("h"),   even("t21"), even("t12"), odd("t22"),
                              odd("t11"), odd("xi"),   even("x"),   even("y"),
                              odd("eta")};
  RewriteSystem sys(alph(std::move(gens)),
                    q_plane ? "Generic_x_QPlane" : "Generic_x_Plane");
  add_h_rules(sys);
  if (q_plane) {
    add_parsed_rule(sys, "x*xi", "q*xi*x");
    add_parsed_rule(sys, "xi*xi", "0");
    add_parsed_rule(sys, "eta*eta", "0");
    add_parsed_rule(sys, "eta*y", "q^-1*y*eta");
  } else {
    add_parsed_rule(sys, "x*xi", "xi*x + h*x^2");
    add_parsed_rule(sys, "xi*xi", "-h*x*xi");
    add_parsed_rule(sys, "eta*eta", "0");
    add_parsed_rule(sys, "eta*y", "y*eta");
  }
  add_swap_rules(sys, {"xi", "x", "y", "eta"}, {"t21", "t12", "t22", "t11"});
  add_swap_rules(sys, {"y", "eta"}, {"xi", "x"});
  return sys;
}

}  // namespace

const std::vector<PresetName>& all_presets() {
  static const std::vector<PresetName> kAll = {
      PresetName::Aq,     PresetName::AqDual,        PresetName::GrQ,
      PresetName::Ah,     PresetName::AhDual,        PresetName::GrH,
      PresetName::GrHLoc, PresetName::GrH_x_AhDual,  PresetName::GrH_x_Ah,
      PresetName::Generic_x_Plane};
  return kAll;
}

const std::string& preset_id(PresetName name) {
  static const std::vector<std::string> kIds = {
      "aq", "aqdual", "grq", "ah", "ahdual", "grh", "grhloc", "grh_x_ahdual",
      "grh_x_ah", "generic_x_plane"};
  return kIds[static_cast<int>(name)];
}

PresetName preset_from_id(const std::string& id) {
  for (PresetName p : all_presets()) {
    if (preset_id(p) == id) return p;
  }
  throw UnknownGenerator("unknown preset '" + id + "'");
}

const RewriteSystem& build(PresetName name) {
  switch (name) {
    case PresetName::Aq: {
      static const RewriteSystem s = build_aq();
      return s;
    }
    case PresetName::AqDual: {
      static const RewriteSystem s = build_aqdual();
      return s;
    }
    case PresetName::GrQ: {
      static const RewriteSystem s = build_grq();
      return s;
    }
    case PresetName::Ah: {
      static const RewriteSystem s = build_ah();
      return s;
    }
    case PresetName::AhDual: {
      static const RewriteSystem s = build_ahdual();
      return s;
    }
    case PresetName::GrH: {
      static const RewriteSystem s = build_grh();
      return s;
    }
    case PresetName::GrHLoc: {
      static const RewriteSystem s =
          extend_with_inverses(build(PresetName::GrH), {"b", "c"});
      return s;
    }
    case PresetName::GrH_x_AhDual: {
      static const RewriteSystem s = build_grh_x_ahdual();
      return s;
    }
    case PresetName::GrH_x_Ah: {
      static const RewriteSystem s = build_grh_x_ah();
      return s;
    }
    case PresetName::Generic_x_Plane: {
      static const RewriteSystem s = build_generic_composite(false);
      return s;
    }
  }
  throw UnknownGenerator("unknown preset");
}

const RewriteSystem& build_generic_q_composite() {
  static const RewriteSystem s = build_generic_composite(true);
  return s;
}

const RewriteSystem& build_undeformed_gr() {
  static const RewriteSystem s = [] {
    RewriteSystem g = with_h_zero(build(PresetName::GrH));
    return g;
  }();
  return s;
}

const RewriteSystem& build_undeformed_gr_loc() {
  static const RewriteSystem s = extend_with_inverses(build_undeformed_gr(), {"b", "c"});
  return s;
}

RewriteSystem make_h_system(const AlphabetPtr& a, const std::string& label) {
  RewriteSystem sys(a, label);
  add_h_rules(sys);
  return sys;
}

// ---------------------------------------------------------------- transforms

namespace {
bool pattern_has(const Word& w, int letter) {
  for (unsigned char ch : w)
    if (ch == letter) return true;
  return false;
}
}  // namespace

RewriteSystem with_h_zero(const RewriteSystem& sys) {
  const AlphabetPtr& a = sys.alphabet();
  int h = a->require("h");
  std::vector<std::optional<Element>> images(a->size());
  for (int i = 0; i < a->size(); ++i)
    images[i] = i == h ? Element::zero(a) : Element::letter(a, i);
  RewriteSystem out(a, sys.label() + "|h=0");
  for (const auto& r : sys.rules()) {
    if (pattern_has(r.pattern, h)) {
      out.add_rule(r.pattern, r.replacement);
    } else {
      out.add_rule(r.pattern, r.replacement.substitute(images, a));
    }
  }
  return out;
}

RewriteSystem with_h_negated(const RewriteSystem& sys) {
  const AlphabetPtr& a = sys.alphabet();
  int h = a->require("h");
  std::vector<std::optional<Element>> images(a->size());
  for (int i = 0; i < a->size(); ++i)
    images[i] = i == h ? -Element::letter(a, i) : Element::letter(a, i);
  RewriteSystem out(a, sys.label() + "|h->-h");
  for (const auto& r : sys.rules()) {
    int h_in_pattern = 0;
    for (unsigned char ch : r.pattern)
      if (static_cast<int>(ch) == h) ++h_in_pattern;
    Element rep = r.replacement.substitute(images, a);
    if (h_in_pattern % 2 == 1) rep = -rep;
    out.add_rule(r.pattern, std::move(rep));
  }
  return out;
}

RewriteSystem filter_rules(const RewriteSystem& sys, const std::string& label,
                           bool keep_h_rules, bool keep_cancellations,
                           bool keep_algebra_rules) {
  const AlphabetPtr& a = sys.alphabet();
  int h = a->index_of("h");
  RewriteSystem out(a, label);
  for (const auto& r : sys.rules()) {
    bool is_h = h >= 0 && pattern_has(r.pattern, h);
    bool is_cancel = false;
    if (r.pattern.size() == 2) {
      int x = static_cast<unsigned char>(r.pattern[0]);
      int y = static_cast<unsigned char>(r.pattern[1]);
      is_cancel = a->base_of(x) == y || a->base_of(y) == x;
    }
    bool keep = is_h ? keep_h_rules : (is_cancel ? keep_cancellations : keep_algebra_rules);
    if (keep) out.add_rule(r.pattern, r.replacement);
  }
  return out;
}

// ---------------------------------------------------------------- localization

namespace {

// Solves the commutation rule for `target` (a 2-letter word with an inverse
// letter) out of `source`: conjugating the source relation by u^-1 yields
//   known  =  bare*target + sum prefix_i*target + rest
// with `bare` an invertible scalar; the Grassmann corrections carry h, so the
// fixed-point substitution below stabilizes after two rounds.
Element solve_inverse_rule(const RewriteSystem& partial, const Word& target,
                           const Word& known, const Element& conjugated) {
  const AlphabetPtr& a = partial.alphabet();
  Rewriter rw(partial);
  Element w = rw.normal_form(conjugated);
  Scalar bare = Scalar::zero();
  Element rest(a);
  struct Occurrence {
    Word prefix, suffix;
    Scalar coeff;
  };
  std::vector<Occurrence> occurrences;
  for (const auto& [m, c] : w.terms()) {
    if (m == target) {
      bare += c;
      continue;
    }
    size_t pos = m.find(target);
    if (pos == Word::npos) {
      rest.add_term(m, c);
    } else {
      occurrences.push_back(Occurrence{m.substr(0, pos), m.substr(pos + target.size()), c});
    }
  }
  if (bare.is_zero())
    throw NonInvertibleDerivation("no invertible coefficient for " +
                                  word_str(*a, target));
  // c0*T = known - rest - sum prefix_i*T*suffix_i; the corrections all carry h,
  // so substituting the previous approximation converges in two rounds
  Element base = Element::from_word(a, known, Scalar::one()) - rest;
  Element x = base.scaled(Scalar::one() / bare);
  for (int round = 0; round < 6; ++round) {
    Element next = base;
    for (const auto& occ : occurrences) {
      next -= Element::from_word(a, occ.prefix, occ.coeff) * x *
              Element::from_word(a, occ.suffix, Scalar::one());
    }
    next = rw.normal_form(next.scaled(Scalar::one() / bare));
    if (next == x) {
      for (const auto& [m, c] : x.terms()) {
        (void)c;
        if (m.find(target) != Word::npos)
          throw NonInvertibleDerivation("derived rule for " + word_str(*a, target) +
                                        " still contains its own pattern");
      }
      return x;
    }
    x = std::move(next);
  }
  throw NonInvertibleDerivation("fixed point not reached for " + word_str(*a, target));
}

}  // namespace

RewriteSystem extend_with_inverses(const RewriteSystem& sys,
                                   const std::set<std::string>& invertibles) {
  const AlphabetPtr& old = sys.alphabet();
  for (const auto& n : invertibles) {
    int i = old->require(n);
    if (old->parity(i) != Parity::Even)
      throw NonInvertibleDerivation("only even generators are invertible: " + n);
    if (!old->gen(i).inverse_of.empty())
      throw NonInvertibleDerivation("generator is itself an inverse: " + n);
  }
  // new alphabet with each u^-1 ranked immediately below its base
  std::vector<Generator> gens;
  for (int i = 0; i < old->size(); ++i) {
    const Generator& g = old->gen(i);
    if (invertibles.count(g.name))
      gens.push_back(Generator{g.name + "inv", g.parity, g.name});
    gens.push_back(g);
  }
  AlphabetPtr na = std::make_shared<Alphabet>(std::move(gens));
  RewriteSystem out(na, sys.label() + "Loc");

  int h = na->index_of("h");
  if (h >= 0) add_h_rules(out);
  // cancellation rules
  for (const auto& n : invertibles) {
    int u = na->require(n);
    int ui = na->require(n + "inv");
    Word uu, iu;
    uu.push_back(static_cast<char>(u));
    uu.push_back(static_cast<char>(ui));
    iu.push_back(static_cast<char>(ui));
    iu.push_back(static_cast<char>(u));
    out.add_rule(uu, Element::unit(na));
    out.add_rule(iu, Element::unit(na));
  }
  // original rules, skipping the old h-rules (re-emitted above for all letters)
  for (const auto& r : sys.rules()) {
    bool h_pat = false;
    int oh = old->index_of("h");
    if (oh >= 0)
      for (unsigned char ch : r.pattern)
        if (static_cast<int>(ch) == oh) h_pat = true;
    if (h_pat) continue;
    Word pat;
    for (unsigned char ch : r.pattern)
      pat.push_back(static_cast<char>(na->require(old->name(ch))));
    out.add_rule(pat, r.replacement.map_to(na));
  }

  // derived commutation rules for every misordered pair involving an inverse
  auto rule_for = [&](int x, int y) -> const Rule* {
    Word w;
    w.push_back(static_cast<char>(x));
    w.push_back(static_cast<char>(y));
    for (const auto& r : out.rules())
      if (r.pattern == w) return &r;
    return nullptr;
  };
  auto make_word = [](int x, int y) {
    Word w;
    w.push_back(static_cast<char>(x));
    w.push_back(static_cast<char>(y));
    return w;
  };
  auto derive = [&](int v, int w_letter) {
    Word target = make_word(v, w_letter);
    // case A: target = (v, u^-1) from source rule (v, u)
    if (na->base_of(w_letter) >= 0) {
      int u = na->base_of(w_letter);
      const Rule* src = rule_for(v, u);
      if (!src)
        throw NonInvertibleDerivation("no source rule for " + word_str(*na, target));
      int ui = w_letter;
      Element conj = Element::letter(na, ui) * src->replacement * Element::letter(na, ui);
      Word known = make_word(ui, v);
      out.add_rule(target, solve_inverse_rule(out, target, known, conj));
      return;
    }
    // case B: target = (u^-1, w) from source rule (u, w)
    int u = na->base_of(v);
    if (u < 0)
      throw NonInvertibleDerivation("no derivation path for " + word_str(*na, target));
    const Rule* src = rule_for(u, w_letter);
    if (!src)
      throw NonInvertibleDerivation("no source rule for " + word_str(*na, target));
    Element conj = Element::letter(na, v) * src->replacement * Element::letter(na, v);
    Word known = make_word(w_letter, v);
    out.add_rule(target, solve_inverse_rule(out, target, known, conj));
  };

  // three passes in dependency order: inverse-before-base pairs, base-before-
  // inverse pairs, then inverse-inverse pairs
  std::vector<std::pair<int, int>> pass_b, pass_a, pass_c;
  for (int x = 0; x < na->size(); ++x) {
    for (int y = 0; y < na->size(); ++y) {
      if (x == y || x == h || y == h) continue;
      bool x_inv = na->base_of(x) >= 0, y_inv = na->base_of(y) >= 0;
      if (!x_inv && !y_inv) continue;
      if (na->base_of(x) == y || na->base_of(y) == x) continue;  // cancellation
      if (x < y) continue;  // ordered pairs are normal words
      if (x_inv && y_inv)
        pass_c.emplace_back(x, y);
      else if (x_inv)
        pass_b.emplace_back(x, y);
      else
        pass_a.emplace_back(x, y);
    }
  }
  for (auto [x, y] : pass_b) derive(x, y);
  for (auto [x, y] : pass_a) derive(x, y);
  for (auto [x, y] : pass_c) derive(x, y);

  out.interreduce();
  auto bad = check_local_confluence(out, 4);
  if (!bad.empty())
    throw NonInvertibleDerivation("localized system is not locally confluent: " +
                                  bad.front().str(*na));
  return out;
}

// ---------------------------------------------------------------- JSON

std::string preset_to_json(const RewriteSystem& sys) {
  nlohmann::json j;
  j["label"] = sys.label();
  j["step_cap"] = sys.step_cap();
  const AlphabetPtr& a = sys.alphabet();
  for (int i = 0; i < a->size(); ++i) {
    nlohmann::json g;
    g["name"] = a->name(i);
    g["parity"] = a->parity(i) == Parity::Odd ? "odd" : "even";
    if (!a->gen(i).inverse_of.empty()) g["inverse_of"] = a->gen(i).inverse_of;
    j["alphabet"].push_back(g);
  }
  j["rules"] = nlohmann::json::array();
  for (const auto& r : sys.rules()) {
    nlohmann::json rule;
    for (unsigned char ch : r.pattern) rule["pattern"].push_back(a->name(ch));
    rule["replacement"] = r.replacement.str();
    j["rules"].push_back(rule);
  }
  return j.dump(2);
}

RewriteSystem preset_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<Generator> gens;
  for (const auto& g : j.at("alphabet")) {
    Generator gen;
    gen.name = g.at("name").get<std::string>();
    gen.parity = g.at("parity").get<std::string>() == "odd" ? Parity::Odd : Parity::Even;
    if (g.contains("inverse_of")) gen.inverse_of = g.at("inverse_of").get<std::string>();
    gens.push_back(std::move(gen));
  }
  AlphabetPtr a = std::make_shared<Alphabet>(std::move(gens));
  RewriteSystem sys(a, j.at("label").get<std::string>());
  if (j.contains("step_cap")) sys.set_step_cap(j.at("step_cap").get<long long>());
  for (const auto& r : j.at("rules")) {
    Word pat;
    for (const auto& n : r.at("pattern"))
      pat.push_back(static_cast<char>(a->require(n.get<std::string>())));
    sys.add_rule(pat, parse_element(r.at("replacement").get<std::string>(), a));
  }
  return sys;
}

std::string all_presets_to_json() {
  nlohmann::json j;
  for (PresetName p : all_presets()) {
    j["presets"].push_back(nlohmann::json::parse(preset_to_json(build(p))));
  }
  return j.dump(2);
}

}  // namespace grh
