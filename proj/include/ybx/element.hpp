#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ybx/rewrite.hpp"
#include "ybx/ring.hpp"

namespace ybx {

// Finite formal linear combination of basis monomials of B over an exact
// scalar ring. All five defining relation families of B identify monomials
// with monomials, so B is a monoid algebra and products of basis elements are
// single basis elements; Element only has to renormalize and collect.
template <class Ring>
class Element {
 public:
  using Scalar = typename Ring::Elem;
  using Terms = std::map<NormalMonomial, Scalar>;

  Element() = default;

  static Element monomial(const Ring& ring, const NormalMonomial& m) {
    Element e;
    e.terms_[m] = ring.one();
    return e;
  }
  static Element unit(const Ring& ring) { return monomial(ring, NormalMonomial{}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Ring& ring, const NormalMonomial& m, const Scalar& c) {
    if (ring.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = ring.add(it->second, c);
      if (ring.is_zero(it->second)) terms_.erase(it);
    }
  }

  void add(const Ring& ring, const Element& other) {
    for (const auto& [m, c] : other.terms_) add_term(ring, m, c);
  }
  void sub(const Ring& ring, const Element& other) {
    for (const auto& [m, c] : other.terms_) add_term(ring, m, ring.neg(c));
  }
  void scale(const Ring& ring, const Scalar& s) {
    Terms out;
    for (const auto& [m, c] : terms_) {
      Scalar v = ring.mul(c, s);
      if (!ring.is_zero(v)) out.emplace(m, std::move(v));
    }
    terms_ = std::move(out);
  }

  bool equals(const Ring& ring, const Element& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [m, c] : terms_) {
      if (!(m == it->first) || !ring.eq(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  std::string str(const Ring& ring) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + ring.to_string(c) + ")*" + m.str();
    }
    return s;
  }

 private:
  Terms terms_;
};

namespace detail {
inline Word concat_words(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}
}  // namespace detail

// Product of two monomials: concatenate and renormalize. Always a single
// basis monomial.
inline NormalMonomial multiply_monomials(const Solution& sol, const NormalMonomial& a,
                                         const NormalMonomial& b) {
  return normal_form(sol, detail::concat_words(a.word(), b.word()));
}

template <class Ring>
Element<Ring> multiply(const Solution& sol, const Ring& ring, const Element<Ring>& a,
                       const Element<Ring>& b) {
  Element<Ring> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(ring, multiply_monomials(sol, ma, mb), ring.mul(ca, cb));
  return out;
}

// d is the superderivation with d(x) = d(x') = 0 and d(e_x) = x - x'. On a
// normal monomial only the e-letters contribute; the sign of the i-th one is
// (-1)^i counting the e-letters to its left (the primed prefix is even).
template <class Ring>
Element<Ring> differential_d(const Solution& sol, const Ring& ring, const NormalMonomial& m) {
  Element<Ring> out;
  const Word base = m.word();
  const std::size_t pstart = m.primed.size();
  for (std::size_t i = 0; i < m.evec.size(); ++i) {
    const auto sign = (i % 2 == 0) ? ring.one() : ring.neg(ring.one());
    Word w = base;
    w[pstart + i] = plain(m.evec[i]);
    out.add_term(ring, normal_form(sol, w), sign);
    w[pstart + i] = primed(m.evec[i]);
    out.add_term(ring, normal_form(sol, w), ring.neg(sign));
  }
  return out;
}

template <class Ring>
Element<Ring> differential_d(const Solution& sol, const Ring& ring, const Element<Ring>& e) {
  Element<Ring> out;
  for (const auto& [m, c] : e.terms()) {
    Element<Ring> dm = differential_d(sol, ring, m);
    dm.scale(ring, c);
    out.add(ring, dm);
  }
  return out;
}

// Linear combinations over pairs of monomials; carrier of Delta values.
template <class Ring>
class PairElement {
 public:
  using Scalar = typename Ring::Elem;
  using Key = std::pair<NormalMonomial, NormalMonomial>;
  using Terms = std::map<Key, Scalar>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Ring& ring, const NormalMonomial& l, const NormalMonomial& r,
                const Scalar& c) {
    if (ring.is_zero(c)) return;
    Key k{l, r};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(std::move(k), c);
    } else {
      it->second = ring.add(it->second, c);
      if (ring.is_zero(it->second)) terms_.erase(it);
    }
  }
  void add(const Ring& ring, const PairElement& other) {
    for (const auto& [k, c] : other.terms_) add_term(ring, k.first, k.second, c);
  }
  void sub(const Ring& ring, const PairElement& other) {
    for (const auto& [k, c] : other.terms_) add_term(ring, k.first, k.second, ring.neg(c));
  }
  bool equals(const Ring& ring, const PairElement& other) const {
    if (terms_.size() != other.terms_.size()) return false;
    auto it = other.terms_.begin();
    for (const auto& [k, c] : terms_) {
      if (!(k == it->first) || !ring.eq(c, it->second)) return false;
      ++it;
    }
    return true;
  }
  std::string str(const Ring& ring) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + ring.to_string(c) + ")*" + k.first.str() + " (x) " + k.second.str();
    }
    return s;
  }

 private:
  Terms terms_;
};

// Delta on letters: x and x' are grouplike, Delta(e_x) = x' (x) e_x + e_x (x) x.
// Extended multiplicatively with the Koszul rule
// (a1 (x) a2)(b1 (x) b2) = (-1)^{|a2||b1|} a1b1 (x) a2b2, so a term is chosen
// per e-letter (e to the left factor or to the right factor) and picks up the
// sign (-1)^{#e's already sent right} whenever an e goes left.
template <class Ring>
PairElement<Ring> comultiply(const Solution& sol, const Ring& ring, const NormalMonomial& m) {
  PairElement<Ring> out;
  const Word base = m.word();
  const int ne = m.edegree();
  for (unsigned mask = 0; mask < (1u << ne); ++mask) {
    // bit set: e-letter goes to the left tensor factor
    Word left, right;
    left.reserve(base.size());
    right.reserve(base.size());
    int sent_right = 0;
    bool negative = false;
    int ei = 0;
    for (std::size_t j = 0; j < base.size(); ++j) {
      const Letter& l = base[j];
      if (l.kind != LetterKind::E) {
        left.push_back(l);
        right.push_back(l);
        continue;
      }
      if (mask & (1u << ei)) {
        left.push_back(l);
        right.push_back(plain(l.idx));
        if (sent_right % 2 == 1) negative = !negative;
      } else {
        left.push_back(primed(l.idx));
        right.push_back(l);
        ++sent_right;
      }
      ++ei;
    }
    auto sign = negative ? ring.neg(ring.one()) : ring.one();
    out.add_term(ring, normal_form(sol, left), normal_form(sol, right), sign);
  }
  return out;
}

template <class Ring>
PairElement<Ring> comultiply(const Solution& sol, const Ring& ring, const Element<Ring>& e) {
  PairElement<Ring> out;
  for (const auto& [m, c] : e.terms()) {
    PairElement<Ring> dm = comultiply(sol, ring, m);
    for (const auto& [k, v] : dm.terms()) out.add_term(ring, k.first, k.second, ring.mul(v, c));
  }
  return out;
}

// Product on B (x) B with the Koszul sign rule; factors multiply in B.
template <class Ring>
PairElement<Ring> multiply_pairs(const Solution& sol, const Ring& ring,
                                 const PairElement<Ring>& a, const PairElement<Ring>& b) {
  PairElement<Ring> out;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      const bool neg = (ka.second.edegree() % 2) && (kb.first.edegree() % 2);
      auto c = ring.mul(ca, cb);
      if (neg) c = ring.neg(c);
      out.add_term(ring, multiply_monomials(sol, ka.first, kb.first),
                   multiply_monomials(sol, ka.second, kb.second), c);
    }
  return out;
}

}  // namespace ybx
