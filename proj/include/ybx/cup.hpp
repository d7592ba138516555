#pragma once

#include <random>

#include "ybx/complex.hpp"

namespace ybx {

// Cup product on Hom_{A'-A}(B, k) with trivial coefficients, induced by
// Delta: (f cup g)(e-tuple) sums, over the Delta terms whose left factor has
// e-degree deg f, the expansion sign times f on the left factor's e-part and
// g on the right factor's e-part. A'-A-linearity with trivial coefficients
// drops the group-like outer parts after normalization.

// Structure table for one (p, q): per (p+q)-tuple the list of
// (sign, left e-part, right e-part) contributions. Built once per degree pair
// and reused across cochains.
struct CupTerm {
  long coeff;  // small integer coefficient from the Delta expansion
  std::vector<int> left;
  std::vector<int> right;
};

class CupStructure {
 public:
  CupStructure(const Solution& sol, int p, int q) : p_(p), q_(q) {
    const int n = sol.size();
    ZRing z;
    terms_.resize(power_ll(n, p + q));
    for_each_tuple(n, p + q, [&](const std::vector<int>& t, std::int64_t code) {
      for (const auto& [pair, c] : comultiply(sol, z, e_monomial(t)).terms()) {
        if (pair.first.edegree() != p) continue;
        terms_[code].push_back({c.get_si(), pair.first.evec, pair.second.evec});
      }
    });
  }

  int p() const { return p_; }
  int q() const { return q_; }
  const std::vector<CupTerm>& at(std::int64_t code) const { return terms_[code]; }

 private:
  int p_, q_;
  std::vector<std::vector<CupTerm>> terms_;
};

template <class Ring>
Cochain<Ring> cup(const Solution& sol, const Ring& ring, const CupStructure& table,
                  const Cochain<Ring>& f, const Cochain<Ring>& g) {
  if (table.p() != f.degree || table.q() != g.degree)
    throw Error(ErrorCode::DegreeMismatch, "cup table degrees do not match the cochains");
  const int n = sol.size();
  Cochain<Ring> out;
  out.degree = f.degree + g.degree;
  for_each_tuple(n, out.degree, [&](const std::vector<int>& t, std::int64_t code) {
    auto val = ring.zero();
    for (const CupTerm& term : table.at(code)) {
      auto prod = ring.mul(f.eval(ring, term.left), g.eval(ring, term.right));
      val = ring.add(val, ring.mul(ring.from_int(term.coeff), prod));
    }
    if (!ring.is_zero(val)) out.values[t] = val;
  });
  return out;
}

template <class Ring>
Cochain<Ring> cup(const Solution& sol, const Ring& ring, const Cochain<Ring>& f,
                  const Cochain<Ring>& g) {
  return cup(sol, ring, CupStructure(sol, f.degree, g.degree), f, g);
}

template <class Ring>
Cochain<Ring> cup(const Solution& sol, const Ring& ring, const CoefficientSystem<Ring>& coeff,
                  const Cochain<Ring>& f, const Cochain<Ring>& g) {
  if (coeff.kind != CoefficientSystem<Ring>::Kind::Trivial)
    throw Error(ErrorCode::NonTrivialCoefficients, "cup products need trivial coefficients");
  return cup(sol, ring, f, g);
}

// (d* f)(x_1..x_{p+1}) = f(d(e_{x_1} ... e_{x_{p+1}})), trivial coefficients.
template <class Ring>
Cochain<Ring> coboundary(const Solution& sol, const Ring& ring, const Cochain<Ring>& f) {
  const int n = sol.size();
  auto coeff = CoefficientSystem<Ring>::trivial(ring);
  Cochain<Ring> out;
  out.degree = f.degree + 1;
  for_each_tuple(n, f.degree + 1, [&](const std::vector<int>& t, std::int64_t) {
    auto val = ring.zero();
    for (const auto& [sub, c] : boundary(sol, ring, coeff, t))
      val = ring.add(val, ring.mul(c, f.eval(ring, sub)));
    if (!ring.is_zero(val)) out.values[t] = val;
  });
  return out;
}

template <class Ring>
bool cochains_equal(const Ring& ring, const Cochain<Ring>& a, const Cochain<Ring>& b) {
  if (a.degree != b.degree) return false;
  for (const auto& [t, v] : a.values)
    if (!ring.eq(v, b.eval(ring, t))) return false;
  for (const auto& [t, v] : b.values)
    if (!ring.eq(v, a.eval(ring, t))) return false;
  return true;
}

template <class Ring>
Cochain<Ring> random_cochain(const Solution& sol, const Ring& ring, int degree,
                             std::mt19937_64& rng) {
  Cochain<Ring> f;
  f.degree = degree;
  std::uniform_int_distribution<long> pick(0, 1000);
  for_each_tuple(sol.size(), degree, [&](const std::vector<int>& t, std::int64_t) {
    auto v = ring.from_int(pick(rng));
    if (!ring.is_zero(v)) f.values[t] = v;
  });
  return f;
}

// Leibniz rule, associativity, closure of cocycles, and well-definedness on
// classes, over a field. Degrees range over 1..max_degree; `samples` controls
// the number of random cochain draws.
template <class Ring>
CheckReport verify_cup(const Solution& sol, const Ring& ring, int max_degree, int samples = 50,
                       std::uint64_t seed = 1) {
  static_assert(Ring::is_field);
  CheckReport rep;
  std::mt19937_64 rng(seed);
  auto coeff = CoefficientSystem<Ring>::trivial(ring);

  std::map<std::pair<int, int>, CupStructure> tables;
  auto table = [&](int p, int q) -> const CupStructure& {
    auto it = tables.find({p, q});
    if (it == tables.end())
      it = tables.emplace(std::make_pair(p, q), CupStructure(sol, p, q)).first;
    return it->second;
  };

  {
    bool ok = true;
    std::string witness;
    for (int s = 0; s < samples && ok; ++s) {
      const int p = 1 + static_cast<int>(rng() % max_degree);
      const int q = 1 + static_cast<int>(rng() % max_degree);
      auto f = random_cochain(sol, ring, p, rng);
      auto g = random_cochain(sol, ring, q, rng);
      auto lhs = coboundary(sol, ring, cup(sol, ring, table(p, q), f, g));
      auto rhs = cup(sol, ring, table(p + 1, q), coboundary(sol, ring, f), g);
      auto fg = cup(sol, ring, table(p, q + 1), f, coboundary(sol, ring, g));
      for (auto& [t, v] : fg.values) {
        auto w = (p % 2 == 1) ? ring.neg(v) : v;
        auto it = rhs.values.find(t);
        if (it == rhs.values.end()) {
          if (!ring.is_zero(w)) rhs.values[t] = w;
        } else {
          it->second = ring.add(it->second, w);
          if (ring.is_zero(it->second)) rhs.values.erase(it);
        }
      }
      if (!cochains_equal(ring, lhs, rhs)) {
        ok = false;
        witness = "Leibniz fails at degrees (" + std::to_string(p) + "," + std::to_string(q) + ")";
      }
    }
    rep.add("Leibniz: d(f cup g) = df cup g + (-1)^p f cup dg", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int s = 0; s < samples && ok; ++s) {
      const int p = 1 + static_cast<int>(rng() % max_degree);
      const int q = 1 + static_cast<int>(rng() % max_degree);
      const int r = 1 + static_cast<int>(rng() % max_degree);
      auto f = random_cochain(sol, ring, p, rng);
      auto g = random_cochain(sol, ring, q, rng);
      auto h = random_cochain(sol, ring, r, rng);
      auto lhs = cup(sol, ring, table(p + q, r), cup(sol, ring, table(p, q), f, g), h);
      auto rhs = cup(sol, ring, table(p, q + r), f, cup(sol, ring, table(q, r), g, h));
      if (!cochains_equal(ring, lhs, rhs)) {
        ok = false;
        witness = "associativity fails at degrees (" + std::to_string(p) + "," +
                  std::to_string(q) + "," + std::to_string(r) + ")";
      }
    }
    rep.add("associativity: (f cup g) cup h = f cup (g cup h)", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int p = 1; p <= max_degree && ok; ++p)
      for (int q = 1; q <= max_degree && ok; ++q) {
        auto zf = enumerate_cocycles(sol, ring, coeff, ComplexVariant::full(), p);
        auto zg = enumerate_cocycles(sol, ring, coeff, ComplexVariant::full(), q);
        for (const auto& f : zf.cocycle_basis)
          for (const auto& g : zg.cocycle_basis) {
            auto fg = cup(sol, ring, table(p, q), f, g);
            if (!is_cocycle(sol, ring, coeff, fg)) {
              ok = false;
              witness = "cup of cocycles not a cocycle at (" + std::to_string(p) + "," +
                        std::to_string(q) + ")";
            }
          }
      }
    rep.add("cocycle cup cocycle is a cocycle", ok, witness);
  }

  {
    // [cocycle] cup [coboundary] must be a coboundary
    bool ok = true;
    std::string witness;
    for (int p = 1; p <= max_degree && ok; ++p)
      for (int q = 1; q <= max_degree && ok; ++q) {
        auto zf = enumerate_cocycles(sol, ring, coeff, ComplexVariant::full(), p);
        const int n = sol.size();
        // coboundary target space at degree p+q
        auto data = build_complex(sol, ring, coeff, ComplexVariant::full(), p + q);
        auto span = image_span(ring, data.boundaries[p + q - 1].transposed());
        for (const auto& f : zf.cocycle_basis) {
          for (int s = 0; s < 4; ++s) {
            auto h = random_cochain(sol, ring, q - 1, rng);
            auto g = coboundary(sol, ring, h);
            auto fg = cup(sol, ring, table(p, q), f, g);
            SparseVec<Ring> v;
            for (const auto& [t, c] : fg.values) v[encode_tuple(n, t)] = c;
            if (!span.contains(v)) {
              ok = false;
              witness = "cocycle cup coboundary not a coboundary at (" + std::to_string(p) +
                        "," + std::to_string(q) + ")";
              break;
            }
          }
          if (!ok) break;
        }
      }
    rep.add("cocycle cup coboundary is a coboundary", ok, witness);
  }

  return rep;
}

}  // namespace ybx
