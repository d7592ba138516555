#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "ybx/solution.hpp"

namespace ybx {

// The free algebra lives over the alphabet Y = {x, x', e_x}. The reduction
// system S = {r1, r2, r3} rewrites, whenever sigma(x,y) = (z,t):
//
//   r1:  x y'   -> z' t
//   r2:  x e_y  -> e_z t
//   r3:  e_x y' -> z' e_t
//
// Irreducible words have the shape (word in X') (word in e_X) (word in X).

enum class LetterKind : std::uint8_t { Plain = 0, Primed = 1, E = 2 };

struct Letter {
  LetterKind kind;
  int idx;
  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

inline Letter plain(int i) { return {LetterKind::Plain, i}; }
inline Letter primed(int i) { return {LetterKind::Primed, i}; }
inline Letter eletter(int i) { return {LetterKind::E, i}; }

inline std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const Letter& l : w) {
    if (!s.empty()) s += ' ';
    switch (l.kind) {
      case LetterKind::Plain: s += "x" + std::to_string(l.idx); break;
      case LetterKind::Primed: s += "x" + std::to_string(l.idx) + "'"; break;
      case LetterKind::E: s += "e" + std::to_string(l.idx); break;
    }
  }
  return s;
}

// Termination measure: plain letters contribute their position counted from
// the right, primed letters their position counted from the left (1-based).
inline long disdeg(const Word& w) {
  const long len = static_cast<long>(w.size());
  long total = 0;
  for (long i = 0; i < len; ++i) {
    if (w[i].kind == LetterKind::Plain) total += len - i;
    else if (w[i].kind == LetterKind::Primed) total += i + 1;
  }
  return total;
}

enum class RuleId { R1 = 1, R2 = 2, R3 = 3 };

struct ReductionStep {
  Word word;
  RuleId rule;
  int position;
};

inline std::optional<ReductionStep> reduce_at(const Solution& sol, const Word& w, std::size_t i) {
  if (i + 1 >= w.size()) return std::nullopt;
  const Letter a = w[i], b = w[i + 1];
  Word out = w;
  if (a.kind == LetterKind::Plain && b.kind == LetterKind::Primed) {
    auto [z, t] = sol.apply(a.idx, b.idx);
    out[i] = primed(z);
    out[i + 1] = plain(t);
    return ReductionStep{std::move(out), RuleId::R1, static_cast<int>(i)};
  }
  if (a.kind == LetterKind::Plain && b.kind == LetterKind::E) {
    auto [z, t] = sol.apply(a.idx, b.idx);
    out[i] = eletter(z);
    out[i + 1] = plain(t);
    return ReductionStep{std::move(out), RuleId::R2, static_cast<int>(i)};
  }
  if (a.kind == LetterKind::E && b.kind == LetterKind::Primed) {
    auto [z, t] = sol.apply(a.idx, b.idx);
    out[i] = primed(z);
    out[i + 1] = eletter(t);
    return ReductionStep{std::move(out), RuleId::R3, static_cast<int>(i)};
  }
  return std::nullopt;
}

// One leftmost reduction step; nullopt when w is irreducible.
inline std::optional<ReductionStep> reduce_once(const Solution& sol, const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (auto step = reduce_at(sol, w, i)) return step;
  return std::nullopt;
}

inline bool is_irreducible(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const LetterKind a = w[i].kind, b = w[i + 1].kind;
    if (a == LetterKind::Plain && b != LetterKind::Plain) return false;
    if (a == LetterKind::E && b == LetterKind::Primed) return false;
  }
  return true;
}

// Canonical representative of the class of an X-word in the monoid
// M = <X | xy = zt when sigma(x,y) = (z,t)>: the lexicographically least
// member of the orbit under all adjacent sigma^{+-1} moves. sigma preserves
// length, so the orbit is finite and a breadth-first closure terminates.
inline std::vector<int> m_canonical(const Solution& sol, const std::vector<int>& w) {
  if (w.size() < 2) return w;
  std::set<std::vector<int>> seen{w};
  std::vector<std::vector<int>> frontier{w};
  std::vector<int> best = w;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& u : frontier) {
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        for (int dir = 0; dir < 2; ++dir) {
          auto [a, b] = dir == 0 ? sol.apply(u[i], u[i + 1]) : sol.apply_inv(u[i], u[i + 1]);
          std::vector<int> v = u;
          v[i] = a;
          v[i + 1] = b;
          if (seen.insert(v).second) {
            if (v < best) best = v;
            next.push_back(std::move(v));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return best;
}

// Irreducible word split into its three segments, with the outer segments in
// canonical M-form. This is the monomial basis of B.
struct NormalMonomial {
  std::vector<int> primed;  // word in X', canonical
  std::vector<int> evec;    // word in e_X, free
  std::vector<int> plain;   // word in X, canonical

  bool operator==(const NormalMonomial&) const = default;
  auto operator<=>(const NormalMonomial&) const = default;

  int edegree() const { return static_cast<int>(evec.size()); }
  int length() const { return static_cast<int>(primed.size() + evec.size() + plain.size()); }
  bool is_unit() const { return primed.empty() && evec.empty() && plain.empty(); }

  Word word() const {
    Word w;
    w.reserve(primed.size() + evec.size() + plain.size());
    for (int i : primed) w.push_back(Letter{LetterKind::Primed, i});
    for (int i : evec) w.push_back(Letter{LetterKind::E, i});
    for (int i : plain) w.push_back(Letter{LetterKind::Plain, i});
    return w;
  }

  std::string str() const { return render(word()); }
};

// Reduces w to its irreducible form by leftmost reduction, then canonicalizes
// the primed and plain segments as M-words. Every step strictly decreases
// disdeg, which bounds the loop.
inline NormalMonomial normal_form(const Solution& sol, const Word& w) {
  Word cur = w;
  long measure = disdeg(cur);
  while (auto step = reduce_once(sol, cur)) {
    cur = std::move(step->word);
    long next = disdeg(cur);
    assert(next < measure && "reduction must strictly decrease disdeg");
    measure = next;
  }
  NormalMonomial m;
  for (const Letter& l : cur) {
    switch (l.kind) {
      case LetterKind::Primed: m.primed.push_back(l.idx); break;
      case LetterKind::E: m.evec.push_back(l.idx); break;
      case LetterKind::Plain: m.plain.push_back(l.idx); break;
    }
  }
  m.primed = m_canonical(sol, m.primed);
  m.plain = m_canonical(sol, m.plain);
  return m;
}

inline NormalMonomial e_monomial(const std::vector<int>& tuple) {
  NormalMonomial m;
  m.evec = tuple;
  return m;
}

// Confluence report for the single overlap shape x e_y z'.
struct ConfluenceReport {
  bool confluent = true;
  long monomials_checked = 0;
  long reduction_steps = 0;
  bool disdeg_monotone = true;
  std::optional<std::array<int, 3>> counterexample;

  std::string describe() const {
    std::ostringstream os;
    if (confluent && disdeg_monotone)
      os << "all " << monomials_checked << " overlap monomials resolve ("
         << reduction_steps << " reduction steps, disdeg strictly decreasing)";
    else if (!confluent)
      os << "overlap unresolvable at x" << (*counterexample)[0] << " e" << (*counterexample)[1]
         << " x" << (*counterexample)[2] << "'";
    else
      os << "disdeg failed to decrease on some step";
    return os.str();
  }
};

// Runs the two maximal reduction routes r3.r1.r2 and r2.r1.r3 on every
// monomial x e_y z' and compares the results. Instruments every step with the
// disdeg measure. When sigma satisfies the YBE all ambiguities resolve; a
// corrupted table produces a counterexample.
inline ConfluenceReport check_confluence(const Solution& sol) {
  const int n = sol.size();
  ConfluenceReport rep;
  auto reduce_fully = [&](Word w, bool leftmost) {
    long measure = disdeg(w);
    while (true) {
      std::optional<ReductionStep> step;
      if (leftmost) {
        step = reduce_once(sol, w);
      } else {
        for (std::size_t i = w.size(); i-- > 0;)
          if (auto s = reduce_at(sol, w, i)) { step = std::move(s); break; }
      }
      if (!step) break;
      w = std::move(step->word);
      ++rep.reduction_steps;
      long next = disdeg(w);
      if (next >= measure) rep.disdeg_monotone = false;
      measure = next;
    }
    return w;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        Word w = {plain(x), eletter(y), primed(z)};
        // leftmost-first applies r2 first (route r3.r1.r2), rightmost-first
        // applies r3 first (route r2.r1.r3)
        Word a = reduce_fully(w, true);
        Word b = reduce_fully(w, false);
        ++rep.monomials_checked;
        if (a != b) {
          rep.confluent = false;
          rep.counterexample = {x, y, z};
          return rep;
        }
      }
  return rep;
}

}  // namespace ybx
