#include "grh/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace grh {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  for (int i = 0; i < static_cast<int>(gens_.size()); ++i) {
    if (!by_name_.emplace(gens_[i].name, i).second)
      throw InvalidRewriteSystem("duplicate generator name: " + gens_[i].name);
  }
  for (const auto& g : gens_) {
    if (g.inverse_of.empty()) continue;
    auto it = by_name_.find(g.inverse_of);
    if (it == by_name_.end())
      throw InvalidRewriteSystem("inverse of unknown generator: " + g.inverse_of);
    if (gens_[it->second].parity != g.parity)
      throw InvalidRewriteSystem("generator and inverse must share parity: " + g.name);
    if (g.parity != Parity::Even)
      throw InvalidRewriteSystem("only even generators may carry inverses: " + g.name);
  }
}

int Alphabet::index_of(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int Alphabet::require(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw UnknownGenerator("no generator named '" + name + "'");
  return i;
}

int Alphabet::base_of(int i) const {
  const auto& inv = gens_[i].inverse_of;
  return inv.empty() ? -1 : index_of(inv);
}

int Alphabet::inverse_of(int i) const {
  for (int j = 0; j < size(); ++j) {
    if (!gens_[j].inverse_of.empty() && index_of(gens_[j].inverse_of) == i) return j;
  }
  return -1;
}

bool Alphabet::operator==(const Alphabet& o) const {
  if (gens_.size() != o.gens_.size()) return false;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name != o.gens_[i].name || gens_[i].parity != o.gens_[i].parity ||
        gens_[i].inverse_of != o.gens_[i].inverse_of)
      return false;
  }
  return true;
}

Parity word_parity(const Alphabet& a, const Word& w) {
  int p = 0;
  for (unsigned char ch : w) p ^= static_cast<int>(a.parity(ch));
  return static_cast<Parity>(p);
}

std::string word_str(const Alphabet& a, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += a.name(static_cast<unsigned char>(w[i]));
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------- Element

Element Element::letter(AlphabetPtr a, int idx) {
  Word w(1, static_cast<char>(idx));
  return from_word(std::move(a), std::move(w), Scalar::one());
}

Element Element::from_word(AlphabetPtr a, Word w, const Scalar& c) {
  Element e(std::move(a));
  if (!c.is_zero()) e.terms_.emplace(std::move(w), c);
  return e;
}

Scalar Element::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar::zero() : it->second;
}

void Element::add_term(const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void Element::check_same_alphabet(const Element& o) const {
  if (!alph_ || !o.alph_) return;  // an alphabet-free zero combines with anything
  if (alph_ == o.alph_) return;
  if (!(*alph_ == *o.alph_))
    throw AlphabetMismatch("elements live over different alphabets");
}

Element& Element::operator+=(const Element& o) {
  check_same_alphabet(o);
  if (!alph_) alph_ = o.alph_;
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  check_same_alphabet(o);
  if (!alph_) alph_ = o.alph_;
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

Element Element::operator+(const Element& o) const {
  Element r = *this;
  r += o;
  return r;
}

Element Element::operator-(const Element& o) const {
  Element r = *this;
  r -= o;
  return r;
}

Element Element::operator-() const {
  Element r(alph_);
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Element Element::scaled(const Scalar& s) const {
  Element r(alph_);
  if (s.is_zero()) return r;
  for (const auto& [w, c] : terms_) r.add_term(w, c * s);
  return r;
}

Element Element::operator*(const Element& o) const {
  check_same_alphabet(o);
  Element r(alph_ ? alph_ : o.alph_);
  for (const auto& [wa, ca] : terms_) {
    for (const auto& [wb, cb] : o.terms_) {
      r.add_term(wa + wb, ca * cb);
    }
  }
  return r;
}

Element Element::substitute(const std::vector<std::optional<Element>>& images,
                            const AlphabetPtr& target) const {
  Element out(target);
  for (const auto& [w, c] : terms_) {
    Element prod = Element::from_scalar(target, c);
    for (unsigned char ch : w) {
      if (ch >= images.size() || !images[ch])
        throw MissingImage("no image for generator '" + alph_->name(ch) + "'");
      prod = prod * (*images[ch]);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

Element Element::map_to(const AlphabetPtr& target) const {
  if (alph_ && target && *alph_ == *target) {
    Element r = *this;
    r.alph_ = target;
    return r;
  }
  Element out(target);
  for (const auto& [w, c] : terms_) {
    Word m;
    m.reserve(w.size());
    for (unsigned char ch : w)
      m.push_back(static_cast<char>(target->require(alph_->name(ch))));
    out.add_term(m, c);
  }
  return out;
}

Element Element::limit_at_one() const {
  Element out(alph_);
  for (const auto& [w, c] : terms_) {
    Rational v = c.limit_at_one();
    out.add_term(w, Scalar::rational(v.num, v.den));
  }
  return out;
}

bool Element::homogeneous(Parity* p) const {
  if (terms_.empty()) {
    if (p) *p = Parity::Even;
    return true;
  }
  Parity first = word_parity(*alph_, terms_.begin()->first);
  for (const auto& [w, c] : terms_) {
    (void)c;
    if (word_parity(*alph_, w) != first) return false;
  }
  if (p) *p = first;
  return true;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Scalar a = c;
    bool neg = false;
    // pull a syntactic leading minus out of the canonical form
    std::string cs = a.str();
    if (!cs.empty() && cs[0] == '-') {
      neg = true;
      a = -a;
      cs = a.str();
    }
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    bool compound = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
    std::string coeff_txt = compound ? "(" + cs + ")" : cs;
    if (w.empty()) {
      out += cs;
    } else if (a.is_one()) {
      out += word_str(*alph_, w);
    } else {
      out += coeff_txt + "*" + word_str(*alph_, w);
    }
  }
  return out;
}

// ---------------------------------------------------------------- RewriteSystem

RewriteSystem::RewriteSystem(AlphabetPtr alph, std::string label)
    : alph_(std::move(alph)), label_(std::move(label)) {
  by_first_.resize(alph_->size());
}

void RewriteSystem::validate_rule(const Word& pattern, const Element& replacement) const {
  if (pattern.empty()) throw InvalidRewriteSystem("empty rule pattern in " + label_);
  for (unsigned char ch : pattern) {
    if (ch >= static_cast<unsigned char>(alph_->size()))
      throw InvalidRewriteSystem("pattern letter out of range in " + label_);
  }
  if (replacement.alphabet() && !(*replacement.alphabet() == *alph_))
    throw AlphabetMismatch("rule replacement over a different alphabet in " + label_);
  Parity pp = word_parity(*alph_, pattern);
  for (const auto& [w, c] : replacement.terms()) {
    (void)c;
    if (word_parity(*alph_, w) != pp)
      throw InvalidRewriteSystem("rule breaks parity in " + label_ + ": " +
                                 word_str(*alph_, pattern) + " -> " + replacement.str());
    if (w.find(pattern) != Word::npos)
      throw InvalidRewriteSystem("rule replacement contains its own pattern in " + label_ +
                                 ": " + word_str(*alph_, pattern));
  }
}

void RewriteSystem::add_rule(Word pattern, Element replacement) {
  validate_rule(pattern, replacement);
  int idx = static_cast<int>(rules_.size());
  by_first_[static_cast<unsigned char>(pattern[0])].push_back(idx);
  rules_.push_back(Rule{std::move(pattern), std::move(replacement)});
}

const std::vector<int>& RewriteSystem::rules_starting_with(int letter) const {
  return by_first_[letter];
}

std::vector<Element> RewriteSystem::relations() const {
  std::vector<Element> out;
  out.reserve(rules_.size());
  for (const auto& r : rules_) {
    Element rel = Element::from_word(alph_, r.pattern, Scalar::one());
    rel -= r.replacement;
    out.push_back(std::move(rel));
  }
  return out;
}

void RewriteSystem::interreduce() {
  for (int round = 0; round < 16; ++round) {
    bool changed = false;
    for (size_t i = 0; i < rules_.size(); ++i) {
      Element nf = normal_form(rules_[i].replacement, *this);
      if (nf != rules_[i].replacement) {
        validate_rule(rules_[i].pattern, nf);
        rules_[i].replacement = std::move(nf);
        changed = true;
      }
    }
    if (!changed) return;
  }
  throw StepLimitExceeded("interreduction did not stabilize for " + label_);
}

// ---------------------------------------------------------------- Rewriter

Rewriter::Rewriter(const RewriteSystem& sys, long long step_cap)
    : sys_(sys), cap_(step_cap > 0 ? step_cap : sys.step_cap()) {}

Element apply_rule_at(const Word& w, const RewriteSystem& sys, int rule_idx, size_t pos) {
  const Rule& r = sys.rules()[rule_idx];
  Word prefix = w.substr(0, pos);
  Word suffix = w.substr(pos + r.pattern.size());
  Element out(sys.alphabet());
  for (const auto& [rw, rc] : r.replacement.terms()) {
    out.add_term(prefix + rw + suffix, rc);
  }
  return out;
}

namespace {
std::optional<std::pair<size_t, int>> find_redex(const Word& w, const RewriteSystem& sys) {
  for (size_t pos = 0; pos < w.size(); ++pos) {
    for (int ri : sys.rules_starting_with(static_cast<unsigned char>(w[pos]))) {
      const Word& p = sys.rules()[ri].pattern;
      if (p.size() <= w.size() - pos && w.compare(pos, p.size(), p) == 0)
        return std::make_pair(pos, ri);
    }
  }
  return std::nullopt;
}
}  // namespace

const Element& Rewriter::rewrite(const Word& w) {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (in_progress_.count(w))
    throw StepLimitExceeded("rewriting cycle detected in " + sys_.label() + " at word " +
                            word_str(*sys_.alphabet(), w));
  auto redex = find_redex(w, sys_);
  if (!redex) {
    return memo_.emplace(w, Element::from_word(sys_.alphabet(), w, Scalar::one()))
        .first->second;
  }
  in_progress_.insert(w);
  if (++steps_ > cap_)
    throw StepLimitExceeded("step cap " + std::to_string(cap_) + " exceeded in " +
                            sys_.label());
  if (++depth_ > kMaxDepth)
    throw StepLimitExceeded("reduction chain deeper than " + std::to_string(kMaxDepth) +
                            " in " + sys_.label());
  Element expanded = apply_rule_at(w, sys_, redex->second, redex->first);
  Element out(sys_.alphabet());
  for (const auto& [cw, cc] : expanded.terms()) {
    const Element& child = rewrite(cw);
    for (const auto& [xw, xc] : child.terms()) out.add_term(xw, xc * cc);
  }
  --depth_;
  in_progress_.erase(w);
  return memo_.emplace(w, std::move(out)).first->second;
}

Element Rewriter::normal_form_word(const Word& w) { return rewrite(w); }

Element Rewriter::normal_form(const Element& e) {
  if (e.alphabet() && !(*e.alphabet() == *sys_.alphabet()))
    throw AlphabetMismatch("normal_form: element not over the system's alphabet");
  Element out(sys_.alphabet());
  for (const auto& [w, c] : e.terms()) {
    const Element& nf = rewrite(w);
    for (const auto& [xw, xc] : nf.terms()) out.add_term(xw, xc * c);
  }
  return out;
}

Element normal_form(const Element& e, const RewriteSystem& sys, long long step_cap) {
  Rewriter rw(sys, step_cap);
  return rw.normal_form(e);
}

// ---------------------------------------------------------------- confluence

std::string UnresolvedOverlap::str(const Alphabet& a) const {
  std::ostringstream os;
  os << word_str(a, word) << ": rule " << rule_a << " gives " << nf_a.str() << ", rule "
     << rule_b << " gives " << nf_b.str();
  return os.str();
}

std::vector<UnresolvedOverlap> check_local_confluence(const RewriteSystem& sys,
                                                      int max_word_len) {
  if (max_word_len < 2)
    throw InvalidRewriteSystem("confluence bound must be at least 2");
  std::vector<UnresolvedOverlap> bad;
  Rewriter rw(sys);
  const auto& rules = sys.rules();
  auto examine = [&](const Word& w, int ra, size_t pa, int rb, size_t pb) {
    if (static_cast<int>(w.size()) > max_word_len) return;
    Element a = rw.normal_form(apply_rule_at(w, sys, ra, pa));
    Element b = rw.normal_form(apply_rule_at(w, sys, rb, pb));
    if (a != b) bad.push_back(UnresolvedOverlap{w, ra, rb, pa, pb, a, b});
  };
  for (size_t i = 0; i < rules.size(); ++i) {
    for (size_t j = 0; j < rules.size(); ++j) {
      const Word& p = rules[i].pattern;
      const Word& q = rules[j].pattern;
      // proper suffix/prefix overlaps: p = xy, q = yz with y nonempty
      size_t kmax = std::min(p.size(), q.size());
      for (size_t k = 1; k <= kmax; ++k) {
        if (k == p.size() && k == q.size()) {
          // identical patterns: ambiguity only for distinct rules
          if (i < j && p == q) examine(p, static_cast<int>(i), 0, static_cast<int>(j), 0);
          continue;
        }
        if (p.compare(p.size() - k, k, q, 0, k) == 0) {
          Word w = p + q.substr(k);
          examine(w, static_cast<int>(i), 0, static_cast<int>(j), p.size() - k);
        }
      }
      // containment: q occurs strictly inside p
      if (q.size() < p.size()) {
        for (size_t pos = p.find(q); pos != Word::npos; pos = p.find(q, pos + 1)) {
          examine(p, static_cast<int>(i), 0, static_cast<int>(j), pos);
        }
      }
    }
  }
  return bad;
}

bool relations_vanish_under(const RewriteSystem& relations_of, const RewriteSystem& under,
                            std::vector<std::string>* witnesses) {
  Rewriter rw(under);
  bool ok = true;
  for (const auto& rel : relations_of.relations()) {
    Element nf = rw.normal_form(rel.map_to(under.alphabet()));
    if (!nf.is_zero()) {
      ok = false;
      if (witnesses && witnesses->size() < 3)
        witnesses->push_back(rel.str() + "  ->  " + nf.str());
    }
  }
  return ok;
}

bool normal_forms_agree(const RewriteSystem& a, const RewriteSystem& b, int max_len,
                        std::vector<std::string>* witnesses) {
  Rewriter ra(a), rb(b);
  const Alphabet& alph = *a.alphabet();
  bool ok = true;
  Word w;
  auto compare_word = [&](const Word& word) {
    Element na = ra.normal_form_word(word);
    Element nb = rb.normal_form(Element::from_word(a.alphabet(), word, Scalar::one())
                                    .map_to(b.alphabet()));
    if (na != nb.map_to(a.alphabet())) {
      ok = false;
      if (witnesses && witnesses->size() < 3)
        witnesses->push_back(word_str(alph, word) + ": " + na.str() + " vs " + nb.str());
    }
  };
  // depth-first enumeration of all words up to the bound
  std::vector<Word> stack{Word()};
  while (!stack.empty()) {
    Word cur = stack.back();
    stack.pop_back();
    compare_word(cur);
    if (static_cast<int>(cur.size()) < max_len) {
      for (int g = 0; g < alph.size(); ++g) stack.push_back(cur + static_cast<char>(g));
    }
  }
  return ok;
}

bool mutually_zero_normalizing(const RewriteSystem& a, const RewriteSystem& b,
                               std::vector<std::string>* witnesses) {
  bool fwd = relations_vanish_under(a, b, witnesses);
  bool bwd = relations_vanish_under(b, a, witnesses);
  return fwd && bwd;
}

}  // namespace grh
