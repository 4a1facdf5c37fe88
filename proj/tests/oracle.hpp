#pragma once

// Test-only oracle, independent of the engine's leftmost-earliest strategy:
// explores every one-step rewrite (any monomial, any position, any rule) and
// collects the set of irreducible elements reached. A singleton set certifies
// that the engine's answer is strategy-independent on that input.

#include <deque>
#include <set>
#include <string>

#include "grh/algebra.hpp"

namespace grh::testing {

inline std::vector<Element> one_step_rewrites(const Element& e, const RewriteSystem& sys) {
  std::vector<Element> out;
  for (const auto& [w, c] : e.terms()) {
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (size_t ri = 0; ri < sys.rules().size(); ++ri) {
        const Rule& r = sys.rules()[ri];
        if (r.pattern.size() > w.size() - pos ||
            w.compare(pos, r.pattern.size(), r.pattern) != 0)
          continue;
        Element next = e;
        next.add_term(w, -c);
        Word prefix = w.substr(0, pos);
        Word suffix = w.substr(pos + r.pattern.size());
        for (const auto& [rw, rc] : r.replacement.terms())
          next.add_term(prefix + rw + suffix, rc * c);
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

// rewrite to an irreducible element choosing a random redex at every step;
// running many trials probes strategy independence where the full reduct
// graph is too large to enumerate
// Words holding two or more copies of the Grassmann parameter h normalize to
// zero under every strategy (h migrates left past everything and h^2 = 0), so
// the sampler may collapse them eagerly; this keeps the transient element size
// bounded without constraining the order of the remaining reductions.
inline void drop_double_h(Element& e, const RewriteSystem& sys) {
  int h = sys.alphabet()->index_of("h");
  if (h < 0) return;
  std::vector<Word> doomed;
  for (const auto& [w, c] : e.terms()) {
    (void)c;
    int count = 0;
    for (unsigned char ch : w)
      if (static_cast<int>(ch) == h) ++count;
    if (count >= 2) doomed.push_back(w);
  }
  for (const auto& w : doomed) e.add_term(w, -e.coeff(w));
}

template <class Rng>
Element random_order_normal_form(Element e, const RewriteSystem& sys, Rng& rng,
                                 size_t step_cap = 200000) {
  auto redexes_in = [&](const Word& w, auto&& visit) {
    for (size_t pos = 0; pos < w.size(); ++pos) {
      for (size_t ri = 0; ri < sys.rules().size(); ++ri) {
        const Rule& r = sys.rules()[ri];
        if (r.pattern.size() <= w.size() - pos &&
            w.compare(pos, r.pattern.size(), r.pattern) == 0)
          visit(pos, ri);
      }
    }
  };
  for (size_t step = 0;; ++step) {
    if (step > step_cap) throw StepLimitExceeded("random-order oracle step cap");
    drop_double_h(e, sys);
    size_t count = 0;
    for (const auto& [w, c] : e.terms()) {
      (void)c;
      redexes_in(w, [&](size_t, size_t) { ++count; });
    }
    if (count == 0) return e;
    size_t chosen = rng() % count, seen = 0;
    const Word* pick_word = nullptr;
    size_t pick_pos = 0, pick_rule = 0;
    for (const auto& [w, c] : e.terms()) {
      (void)c;
      if (pick_word) break;
      redexes_in(w, [&](size_t pos, size_t ri) {
        if (seen++ == chosen && !pick_word) {
          pick_word = &w;
          pick_pos = pos;
          pick_rule = ri;
        }
      });
    }
    const Rule& r = sys.rules()[pick_rule];
    Word word = *pick_word;
    Scalar coeff = e.coeff(word);
    e.add_term(word, -coeff);
    Word prefix = word.substr(0, pick_pos);
    Word suffix = word.substr(pick_pos + r.pattern.size());
    for (const auto& [rw, rc] : r.replacement.terms())
      e.add_term(prefix + rw + suffix, rc * coeff);
  }
}

// set of printed irreducible elements reachable from `start`
inline std::set<std::string> all_normal_forms(const Element& start,
                                              const RewriteSystem& sys,
                                              size_t budget = 50000) {
  std::set<std::string> seen, irreducible;
  std::deque<Element> queue{start};
  seen.insert(start.str());
  size_t processed = 0;
  while (!queue.empty()) {
    if (++processed > budget)
      throw StepLimitExceeded("oracle budget exceeded");
    Element cur = queue.front();
    queue.pop_front();
    auto steps = one_step_rewrites(cur, sys);
    if (steps.empty()) {
      irreducible.insert(cur.str());
      continue;
    }
    for (auto& next : steps) {
      if (seen.insert(next.str()).second) queue.push_back(std::move(next));
    }
  }
  return irreducible;
}

}  // namespace grh::testing
