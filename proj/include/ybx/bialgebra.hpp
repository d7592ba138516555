#pragma once

#include <random>
#include <sstream>
#include <tuple>

#include "ybx/element.hpp"
#include "ybx/report.hpp"
#include "ybx/span.hpp"
#include "ybx/tuples.hpp"

namespace ybx {

// --- the involutive quotient B/Invo --------------------------------------
//
// Invo is generated by e_x e_y + e_z e_t over all pairs, sigma(x,y) = (z,t).
// Pushing plain letters right and primed letters left through such a
// generator maps it to another generator times a single letter, so the
// degree-d component of the ideal decomposes blockwise over the (primed,
// plain) coordinates with the same e-part span D_d in every block. Reduction
// modulo the ideal therefore reduces e-parts per block against D_d.
template <class Ring>
class InvoContext {
  static_assert(Ring::is_field, "Invo reduction echelonizes over a field");

 public:
  InvoContext(const Solution& sol, const Ring& ring) : sol_(&sol), ring_(ring) {
    Classification c = classify(sol);
    if (!c.involutive)
      throw Error(ErrorCode::NotInvolutive, "B/Invo requires an involutive solution");
  }

  const Solution& solution() const { return *sol_; }
  const Ring& ring() const { return ring_; }

  const EchelonSpan<Ring>& span(int edeg) const {
    auto it = spans_.find(edeg);
    if (it != spans_.end()) return it->second;
    EchelonSpan<Ring> sp(ring_);
    const int n = sol_->size();
    if (edeg >= 2) {
      for (int pos = 0; pos + 2 <= edeg; ++pos) {
        const int left = pos, right = edeg - 2 - pos;
        for_each_tuple(n, left, [&](const std::vector<int>& a, std::int64_t) {
          for_each_tuple(n, right, [&](const std::vector<int>& b, std::int64_t) {
            for (int x = 0; x < n; ++x)
              for (int y = 0; y < n; ++y) {
                auto [z, t] = sol_->apply(x, y);
                std::vector<int> t1 = a, t2 = a;
                t1.push_back(x); t1.push_back(y);
                t2.push_back(z); t2.push_back(t);
                for (auto* tp : {&t1, &t2}) tp->insert(tp->end(), b.begin(), b.end());
                SparseVec<Ring> v;
                v[encode_tuple(n, t1)] = ring_.one();
                auto code2 = encode_tuple(n, t2);
                auto itv = v.find(code2);
                if (itv == v.end()) v[code2] = ring_.one();
                else itv->second = ring_.add(itv->second, ring_.one());
                for (auto iv = v.begin(); iv != v.end();)
                  iv = ring_.is_zero(iv->second) ? v.erase(iv) : std::next(iv);
                sp.insert(std::move(v));
              }
          });
        });
      }
    }
    return spans_.emplace(edeg, std::move(sp)).first->second;
  }

  Element<Ring> reduce(const Element<Ring>& e) const {
    // block terms by (primed, plain, e-degree)
    using Block = std::tuple<std::vector<int>, std::vector<int>, int>;
    std::map<Block, SparseVec<Ring>> blocks;
    const int n = sol_->size();
    for (const auto& [m, c] : e.terms()) {
      Block key{m.primed, m.plain, m.edegree()};
      auto& vec = blocks[key];
      auto code = encode_tuple(n, m.evec);
      auto it = vec.find(code);
      if (it == vec.end()) vec[code] = c;
      else it->second = ring_.add(it->second, c);
    }
    Element<Ring> out;
    for (auto& [key, vec] : blocks) {
      const auto& [primed, plain, edeg] = key;
      SparseVec<Ring> rem = edeg >= 2 ? span(edeg).reduce(std::move(vec)) : std::move(vec);
      for (const auto& [code, c] : rem) {
        NormalMonomial m;
        m.primed = primed;
        m.plain = plain;
        m.evec = decode_tuple(n, edeg, code);
        out.add_term(ring_, m, c);
      }
    }
    return out;
  }

 private:
  const Solution* sol_;
  Ring ring_;
  mutable std::map<int, EchelonSpan<Ring>> spans_;
};

// h on words: the superderivation with h(e_x) = 0, h(x) = e_x, h(x') = -e_x.
// Values live in B/Invo; callers reduce through an InvoContext.
template <class Ring>
Element<Ring> homotopy_h_word(const Solution& sol, const Ring& ring, const Word& w) {
  Element<Ring> out;
  int e_before = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w[i];
    if (l.kind == LetterKind::E) {
      ++e_before;
      continue;
    }
    auto sign = (e_before % 2 == 0) ? ring.one() : ring.neg(ring.one());
    if (l.kind == LetterKind::Primed) sign = ring.neg(sign);
    Word v = w;
    v[i] = eletter(l.idx);
    out.add_term(ring, normal_form(sol, v), sign);
  }
  return out;
}

template <class Ring>
Element<Ring> homotopy_h(const InvoContext<Ring>& ctx, const NormalMonomial& m) {
  return ctx.reduce(homotopy_h_word(ctx.solution(), ctx.ring(), m.word()));
}

template <class Ring>
Element<Ring> homotopy_h(const InvoContext<Ring>& ctx, const Element<Ring>& e) {
  Element<Ring> out;
  for (const auto& [m, c] : e.terms()) {
    auto hm = homotopy_h_word(ctx.solution(), ctx.ring(), m.word());
    hm.scale(ctx.ring(), c);
    out.add(ctx.ring(), hm);
  }
  return ctx.reduce(out);
}

// --- structure verification -----------------------------------------------

namespace detail {

template <class Ring>
using TripleTerms =
    std::map<std::tuple<NormalMonomial, NormalMonomial, NormalMonomial>, typename Ring::Elem>;

template <class Ring>
void triple_add(const Ring& ring, TripleTerms<Ring>& t, const NormalMonomial& a,
                const NormalMonomial& b, const NormalMonomial& c, const typename Ring::Elem& v) {
  if (ring.is_zero(v)) return;
  auto key = std::make_tuple(a, b, c);
  auto it = t.find(key);
  if (it == t.end()) {
    t.emplace(std::move(key), v);
  } else {
    it->second = ring.add(it->second, v);
    if (ring.is_zero(it->second)) t.erase(it);
  }
}

inline std::vector<NormalMonomial> letter_monomials(int n) {
  std::vector<NormalMonomial> ms;
  for (int i = 0; i < n; ++i) {
    NormalMonomial a; a.plain = {i}; ms.push_back(a);
    NormalMonomial b; b.primed = {i}; ms.push_back(b);
    NormalMonomial c; c.evec = {i}; ms.push_back(c);
  }
  return ms;
}

template <class Ring>
NormalMonomial random_monomial(const Solution& sol, const Ring&, std::mt19937_64& rng,
                               int max_outer, int max_e) {
  const int n = sol.size();
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::uniform_int_distribution<int> outer(0, max_outer);
  std::uniform_int_distribution<int> elen(0, max_e);
  NormalMonomial m;
  for (int i = outer(rng); i-- > 0;) m.primed.push_back(pick(rng));
  for (int i = elen(rng); i-- > 0;) m.evec.push_back(pick(rng));
  for (int i = outer(rng); i-- > 0;) m.plain.push_back(pick(rng));
  m.primed = m_canonical(sol, m.primed);
  m.plain = m_canonical(sol, m.plain);
  return m;
}

}  // namespace detail

// Full structural identity suite for B(X, sigma): d a differential, Delta
// coassociative, d a coderivation, Delta multiplicative, and in the
// involutive case the homotopy h and the Euler operator identity
// (hd + dh) = 2(#e) + 2(#x_-) on monomials in the generators e_x, x_+, x_-.
// The involutive checks run over Q; everything else is exact over Z.
template <class Ring>
CheckReport verify_structure(const Solution& sol, const Ring& ring, int max_e_degree,
                             std::uint64_t seed = 1) {
  CheckReport rep;
  const int n = sol.size();
  std::mt19937_64 rng(seed);

  std::vector<NormalMonomial> suite;
  for (int deg = 0; deg <= max_e_degree; ++deg)
    for_each_tuple(n, deg, [&](const std::vector<int>& t, std::int64_t) {
      suite.push_back(e_monomial(t));
    });
  for (int i = 0; i < 24; ++i)
    suite.push_back(detail::random_monomial(sol, ring, rng, 2, std::min(max_e_degree, 2)));

  {
    bool ok = true;
    std::string witness;
    for (const auto& m : suite) {
      auto dd = differential_d(sol, ring, differential_d(sol, ring, m));
      if (!dd.is_zero()) {
        ok = false;
        witness = "d(d(" + m.str() + ")) = " + dd.str(ring);
        break;
      }
    }
    rep.add("d^2 = 0", ok, witness);
  }

  const int small_deg = std::min(max_e_degree, 3);
  {
    bool ok = true;
    std::string witness;
    for (const auto& m : suite) {
      if (m.edegree() > small_deg || m.length() > small_deg + 2) continue;
      auto dm = comultiply(sol, ring, m);
      detail::TripleTerms<Ring> lhs, rhs;
      for (const auto& [k, c] : dm.terms()) {
        for (const auto& [k2, c2] : comultiply(sol, ring, k.first).terms())
          detail::triple_add(ring, lhs, k2.first, k2.second, k.second, ring.mul(c, c2));
        for (const auto& [k2, c2] : comultiply(sol, ring, k.second).terms())
          detail::triple_add(ring, rhs, k.first, k2.first, k2.second, ring.mul(c, c2));
      }
      if (lhs != rhs) {
        ok = false;
        witness = "coassociativity fails on " + m.str();
        break;
      }
    }
    rep.add("Delta coassociative", ok, witness);
  }

  {
    // (d x 1 + 1 x d) Delta = Delta d with the Koszul sign on 1 x d
    bool ok = true;
    std::string witness;
    for (const auto& m : suite) {
      if (m.edegree() > small_deg || m.length() > small_deg + 2) continue;
      auto lhs = comultiply(sol, ring, differential_d(sol, ring, m));
      PairElement<Ring> rhs;
      for (const auto& [k, c] : comultiply(sol, ring, m).terms()) {
        for (const auto& [m1, c1] : differential_d(sol, ring, k.first).terms())
          rhs.add_term(ring, m1, k.second, ring.mul(c, c1));
        auto sgn = (k.first.edegree() % 2 == 0) ? c : ring.neg(c);
        for (const auto& [m2, c2] : differential_d(sol, ring, k.second).terms())
          rhs.add_term(ring, k.first, m2, ring.mul(sgn, c2));
      }
      lhs.sub(ring, rhs);
      if (!lhs.is_zero()) {
        ok = false;
        witness = "coderivation identity fails on " + m.str();
        break;
      }
    }
    rep.add("d is a coderivation", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      auto a = detail::random_monomial(sol, ring, rng, 1, 2);
      auto b = detail::random_monomial(sol, ring, rng, 1, 2);
      auto lhs = comultiply(sol, ring,
                            multiply(sol, ring, Element<Ring>::monomial(ring, a),
                                     Element<Ring>::monomial(ring, b)));
      auto rhs = multiply_pairs(sol, ring, comultiply(sol, ring, a), comultiply(sol, ring, b));
      lhs.sub(ring, rhs);
      if (!lhs.is_zero()) {
        ok = false;
        witness = "Delta(ab) != Delta(a)Delta(b) for a=" + a.str() + " b=" + b.str();
      }
    }
    rep.add("Delta multiplicative (sampled)", ok, witness);
  }

  return rep;
}

// Involutive-only checks, over a field containing Q.
template <class Ring>
CheckReport verify_involutive(const Solution& sol, const Ring& ring, int euler_samples = 100,
                              std::uint64_t seed = 1) {
  CheckReport rep;
  InvoContext<Ring> ctx(sol, ring);
  const int n = sol.size();

  {
    bool ok = true;
    std::string witness;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        auto [z, t] = sol.apply(x, y);
        const std::vector<std::pair<Word, Word>> rels = {
            {{plain(x), plain(y)}, {plain(z), plain(t)}},
            {{plain(x), primed(y)}, {primed(z), plain(t)}},
            {{primed(x), primed(y)}, {primed(z), primed(t)}},
            {{plain(x), eletter(y)}, {eletter(z), plain(t)}},
            {{eletter(x), primed(y)}, {primed(z), eletter(t)}},
        };
        for (const auto& [lw, rw] : rels) {
          auto d = homotopy_h_word(sol, ring, lw);
          d.sub(ring, homotopy_h_word(sol, ring, rw));
          if (!ctx.reduce(d).is_zero()) {
            ok = false;
            witness = "h not constant on relation " + render(lw) + " ~ " + render(rw);
            break;
          }
        }
      }
    rep.add("h well defined on B/Invo", ok, witness);
  }

  {
    // monomials in the generators e_a, a_+ = a + a', a_- = a - a'
    bool ok = true;
    std::string witness;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> len(1, 4);
    for (int trial = 0; trial < euler_samples && ok; ++trial) {
      Element<Ring> m = Element<Ring>::unit(ring);
      long grade = 0;
      for (int i = len(rng); i-- > 0;) {
        const int a = pick(rng);
        Element<Ring> gen;
        NormalMonomial mp, mq;
        switch (kind(rng)) {
          case 0:
            mp.evec = {a};
            gen.add_term(ring, mp, ring.one());
            grade += 2;
            break;
          case 1:
            mp.plain = {a};
            mq.primed = {a};
            gen.add_term(ring, mp, ring.one());
            gen.add_term(ring, mq, ring.one());
            break;
          default:
            mp.plain = {a};
            mq.primed = {a};
            gen.add_term(ring, mp, ring.one());
            gen.add_term(ring, mq, ring.neg(ring.one()));
            grade += 2;
            break;
        }
        m = multiply(sol, ring, m, gen);
      }
      auto hd = homotopy_h(ctx, differential_d(sol, ring, m));
      auto dh = differential_d(sol, ring, homotopy_h(ctx, m));
      hd.add(ring, dh);
      auto expect = m;
      expect.scale(ring, ring.from_int(grade));
      hd.sub(ring, expect);
      if (!ctx.reduce(hd).is_zero()) {
        ok = false;
        std::ostringstream os;
        os << "(hd+dh) != Euler grading (" << grade << ") on sampled monomial";
        witness = os.str();
      }
    }
    rep.add("hd + dh equals the Euler grading operator", ok, witness);
  }

  return rep;
}

// Order-N braid elements: for each sigma-orbit O = {(x_i, y_i)} the element
// w_O = sum e_{x_i} e_{y_i} is a d-cycle and Delta(w_O) is group-like:
// x0'y0' (x) w + w (x) x0y0. Conjugating an orbit pair by any u in X lands in
// an orbit of the same order.
template <class Ring>
CheckReport omega_checks(const Solution& sol, const Ring& ring) {
  CheckReport rep;
  const int n = sol.size();
  auto orbits = sigma_orbits(sol);
  Classification cls = classify(sol);

  bool d_ok = true, delta_ok = true, conj_ok = true;
  std::string d_wit, delta_wit, conj_wit;
  for (const auto& orbit : orbits) {
    Element<Ring> omega;
    for (auto [x, y] : orbit) {
      NormalMonomial m;
      m.evec = {x, y};
      omega.add_term(ring, m, ring.one());
    }
    auto d = differential_d(sol, ring, omega);
    if (!d.is_zero() && d_ok) {
      d_ok = false;
      std::ostringstream os;
      os << "d(omega) != 0 for orbit at (" << orbit[0].first << "," << orbit[0].second << ")";
      d_wit = os.str();
    }

    PairElement<Ring> expect;
    NormalMonomial left, right;
    left.primed = m_canonical(sol, {orbit[0].first, orbit[0].second});
    right.plain = m_canonical(sol, {orbit[0].first, orbit[0].second});
    for (auto [x, y] : orbit) {
      NormalMonomial mid;
      mid.evec = {x, y};
      expect.add_term(ring, left, mid, ring.one());
      expect.add_term(ring, mid, right, ring.one());
    }
    auto delta = comultiply(sol, ring, omega);
    delta.sub(ring, expect);
    if (!delta.is_zero() && delta_ok) {
      delta_ok = false;
      std::ostringstream os;
      os << "Delta(omega) not group-like for orbit at (" << orbit[0].first << ","
         << orbit[0].second << ")";
      delta_wit = os.str();
    }

    const int order = static_cast<int>(orbit.size());
    for (auto [x, y] : orbit)
      for (int u = 0; u < n; ++u) {
        // u e_x e_y = e_xt e_yt u'': (xt, yt) = first two coordinates of
        // (Id x sigma)(sigma x Id)(u, x, y)
        int xt = sol.s1(u, x);
        int yt = sol.s1(sol.s2(u, x), y);
        if (cls.orbit_orders[xt][yt] != order && conj_ok) {
          conj_ok = false;
          std::ostringstream os;
          os << "conjugation by " << u << " changes orbit order at (" << x << "," << y << ")";
          conj_wit = os.str();
        }
      }
  }
  rep.add("d(omega) = 0 for all orbits", d_ok, d_wit);
  rep.add("Delta(omega) group-like for all orbits", delta_ok, delta_wit);
  rep.add("conjugation preserves orbit order", conj_ok, conj_wit);
  return rep;
}

}  // namespace ybx
