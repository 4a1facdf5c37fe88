#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "grh/errors.hpp"
#include "grh/scalar.hpp"

namespace grh {

enum class Parity : uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

struct Generator {
  std::string name;
  Parity parity = Parity::Even;
  std::string inverse_of;  // name of the base generator when this is a formal inverse
};

// Immutable graded alphabet. Declaration order doubles as the normal-ordering
// rank: in a fully ordered word, letter indices are nondecreasing left to right.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(int i) const { return gens_[i]; }
  Parity parity(int i) const { return gens_[i].parity; }
  const std::string& name(int i) const { return gens_[i].name; }
  int index_of(const std::string& name) const;  // -1 when absent
  int require(const std::string& name) const;   // throws UnknownGenerator
  // index of the base generator when i is an inverse, else -1
  int base_of(int i) const;
  // index of the formal inverse of i when one exists, else -1
  int inverse_of(int i) const;
  bool operator==(const Alphabet& o) const;

 private:
  std::vector<Generator> gens_;
  std::unordered_map<std::string, int> by_name_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

// A word is a byte string of letter indices; the empty word is the unit.
using Word = std::string;

Parity word_parity(const Alphabet& a, const Word& w);

// canonical term order: by length, then lexicographically by letter index
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Finite formal sum of Scalar-weighted words over one alphabet. Canonical:
// zero coefficients are never stored and terms sit in the fixed word order,
// so equality is plain term-wise comparison.
class Element {
 public:
  Element() = default;  // zero with no alphabet attached
  explicit Element(AlphabetPtr alph) : alph_(std::move(alph)) {}

  static Element zero(AlphabetPtr a) { return Element(std::move(a)); }
  static Element unit(AlphabetPtr a) { return from_word(std::move(a), Word(), Scalar::one()); }
  static Element from_scalar(AlphabetPtr a, const Scalar& c) {
    return from_word(std::move(a), Word(), c);
  }
  static Element letter(AlphabetPtr a, int idx);
  static Element from_word(AlphabetPtr a, Word w, const Scalar& c);

  const AlphabetPtr& alphabet() const { return alph_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }
  Scalar coeff(const Word& w) const;
  void add_term(const Word& w, const Scalar& c);

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;  // free product, no sign insertion
  Element operator-() const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element scaled(const Scalar& c) const;

  bool operator==(const Element& o) const { return terms_ == o.terms_; }
  bool operator!=(const Element& o) const { return !(*this == o); }

  // homomorphic extension of letter -> Element; every letter occurring in
  // this element must have an image (MissingImage otherwise)
  Element substitute(const std::vector<std::optional<Element>>& images,
                     const AlphabetPtr& target) const;
  // retarget to a structurally compatible alphabet by generator name
  Element map_to(const AlphabetPtr& target) const;
  // apply limit_at_one to every coefficient
  Element limit_at_one() const;

  // true when all terms share one parity; writes it to *p when non-null
  bool homogeneous(Parity* p = nullptr) const;

  std::string str() const;

 private:
  AlphabetPtr alph_;
  std::map<Word, Scalar, WordLess> terms_;
  void check_same_alphabet(const Element& o) const;
};

struct Rule {
  Word pattern;         // length >= 1
  Element replacement;  // same alphabet, same parity as the pattern
};

// Oriented relation set over one alphabet; doubles as an algebra presentation.
// Construction validates the termination guards the engine relies on:
// nonempty patterns, parity preservation, and no rule whose replacement
// contains its own pattern as a factor.
class RewriteSystem {
 public:
  static constexpr long long kDefaultStepCap = 1'000'000;

  RewriteSystem(AlphabetPtr alph, std::string label);

  void add_rule(Word pattern, Element replacement);
  const std::vector<Rule>& rules() const { return rules_; }
  const AlphabetPtr& alphabet() const { return alph_; }
  const std::string& label() const { return label_; }

  long long step_cap() const { return step_cap_; }
  void set_step_cap(long long cap) { step_cap_ = cap; }

  // rule indices whose pattern starts with the given letter
  const std::vector<int>& rules_starting_with(int letter) const;

  // defining relations as elements (pattern - replacement)
  std::vector<Element> relations() const;

  // replace every rule replacement by its normal form under the full system;
  // iterates to a fixed point (used on derived systems, never on presets
  // transcribed verbatim)
  void interreduce();

 private:
  AlphabetPtr alph_;
  std::string label_;
  std::vector<Rule> rules_;
  std::vector<std::vector<int>> by_first_;
  long long step_cap_ = kDefaultStepCap;
  void validate_rule(const Word& pattern, const Element& replacement) const;
};

// Memoizing rewriter for a fixed system. Strategy: at the leftmost position
// where any pattern matches, the earliest-listed matching rule applies.
// Pure w.r.t. the system; keep one per batch of related queries for speed.
class Rewriter {
 public:
  explicit Rewriter(const RewriteSystem& sys, long long step_cap = -1);

  Element normal_form(const Element& e);
  Element normal_form_word(const Word& w);
  long long steps_used() const { return steps_; }

 private:
  static constexpr int kMaxDepth = 50000;

  const RewriteSystem& sys_;
  long long cap_;
  long long steps_ = 0;
  int depth_ = 0;
  std::unordered_map<Word, Element> memo_;
  std::unordered_set<Word> in_progress_;

  const Element& rewrite(const Word& w);
};

Element normal_form(const Element& e, const RewriteSystem& sys, long long step_cap = -1);

// one rewrite step: apply rule `rule_idx` at position `pos` of `w`
Element apply_rule_at(const Word& w, const RewriteSystem& sys, int rule_idx, size_t pos);

struct UnresolvedOverlap {
  Word word;
  int rule_a = 0, rule_b = 0;
  size_t pos_a = 0, pos_b = 0;
  Element nf_a, nf_b;
  std::string str(const Alphabet& a) const;
};

// Bounded critical-pair audit: every overlap or containment ambiguity between
// rule patterns (overlap word length <= max_word_len) is rewritten both ways
// to normal form; pairs with unequal results are returned.
std::vector<UnresolvedOverlap> check_local_confluence(const RewriteSystem& sys,
                                                      int max_word_len);

// every defining relation of `relations_of` normalizes to zero under `under`
bool relations_vanish_under(const RewriteSystem& relations_of, const RewriteSystem& under,
                            std::vector<std::string>* witnesses = nullptr);

// normal forms agree word-by-word up to the length bound (systems must share
// an alphabet up to generator names)
bool normal_forms_agree(const RewriteSystem& a, const RewriteSystem& b, int max_len,
                        std::vector<std::string>* witnesses = nullptr);

// equality of relation sets in the sense of the suite: mutual zero-normalization
bool mutually_zero_normalizing(const RewriteSystem& a, const RewriteSystem& b,
                               std::vector<std::string>* witnesses = nullptr);

std::string word_str(const Alphabet& a, const Word& w);

}  // namespace grh
