#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ybx/bialgebra.hpp"
#include "ybx/element.hpp"
#include "ybx/exactlin.hpp"
#include "ybx/parallel.hpp"
#include "ybx/span.hpp"
#include "ybx/tuples.hpp"

namespace ybx {

// Coefficients for k (x)_{A'} B (x)_A k and Hom_{A'-A}(B, k): either the
// trivial bimodule, or a k[T]-module with x'.m = m and m.x = t m. No
// invertibility of t is required.
template <class Ring>
struct CoefficientSystem {
  enum class Kind { Trivial, Twisted } kind = Kind::Trivial;
  typename Ring::Elem t{};

  static CoefficientSystem trivial(const Ring& ring) {
    return {Kind::Trivial, ring.one()};
  }
  static CoefficientSystem twisted(const Ring&, typename Ring::Elem tv) {
    return {Kind::Twisted, std::move(tv)};
  }
};

// Quotient variants of the complex. The degree-2 generators span W; in degree
// n the degenerate subspace is D_n = sum_i V^i (x) W (x) V^{n-2-i}.
struct ComplexVariant {
  enum class Kind { Full, FixPairs, Involutive, OrbitSums, CustomW } kind = Kind::Full;
  int order = 1;  // OrbitSums: orbits of order dividing this
  std::vector<std::map<std::pair<int, int>, long>> custom;  // CustomW generators

  static ComplexVariant full() { return {}; }
  static ComplexVariant fix_pairs() { return {Kind::FixPairs, 1, {}}; }
  static ComplexVariant involutive() { return {Kind::Involutive, 2, {}}; }
  static ComplexVariant orbit_sums(int n) { return {Kind::OrbitSums, n, {}}; }
  static ComplexVariant custom_w(std::vector<std::map<std::pair<int, int>, long>> w) {
    return {Kind::CustomW, 0, std::move(w)};
  }

  std::string str() const {
    switch (kind) {
      case Kind::Full: return "full";
      case Kind::FixPairs: return "fixpairs";
      case Kind::Involutive: return "invo";
      case Kind::OrbitSums: return "orbit:" + std::to_string(order);
      case Kind::CustomW: return "customw";
    }
    return "?";
  }
};

// Degree-2 generators of the variant's W, as sparse vectors over pair codes
// (x * n + y) with integer coefficients.
inline std::vector<std::map<std::int64_t, long>> variant_generators(const Solution& sol,
                                                                    const ComplexVariant& v) {
  const int n = sol.size();
  std::vector<std::map<std::int64_t, long>> gens;
  auto add_orbit_sum = [&](const std::vector<std::pair<int, int>>& orbit) {
    std::map<std::int64_t, long> g;
    for (auto [x, y] : orbit) g[static_cast<std::int64_t>(x) * n + y] += 1;
    gens.push_back(std::move(g));
  };
  switch (v.kind) {
    case ComplexVariant::Kind::Full:
      break;
    case ComplexVariant::Kind::FixPairs:
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (sol.apply(x, y) == std::make_pair(x, y))
            gens.push_back({{static_cast<std::int64_t>(x) * n + y, 1}});
      break;
    case ComplexVariant::Kind::Involutive: {
      if (!classify(sol).involutive)
        throw Error(ErrorCode::VariantInadmissible, "Involutive variant needs sigma^2 = Id");
      for (const auto& orbit : sigma_orbits(sol)) add_orbit_sum(orbit);
      break;
    }
    case ComplexVariant::Kind::OrbitSums:
      for (const auto& orbit : sigma_orbits(sol))
        if (v.order % static_cast<int>(orbit.size()) == 0) add_orbit_sum(orbit);
      break;
    case ComplexVariant::Kind::CustomW:
      for (const auto& g : v.custom) {
        std::map<std::int64_t, long> out;
        for (const auto& [xy, c] : g) {
          if (xy.first < 0 || xy.first >= n || xy.second < 0 || xy.second >= n)
            throw Error(ErrorCode::BadInput, "CustomW pair out of range");
          out[static_cast<std::int64_t>(xy.first) * n + xy.second] += c;
        }
        gens.push_back(std::move(out));
      }
      break;
  }
  return gens;
}

inline bool generators_are_unit_vectors(const std::vector<std::map<std::int64_t, long>>& gens) {
  for (const auto& g : gens) {
    if (g.size() != 1) return false;
    if (g.begin()->second != 1 && g.begin()->second != -1) return false;
  }
  return true;
}

// Per-degree basis sizes plus exact boundary matrices. Degree 0 is rank one
// (the empty tuple); C_1 is always all of X. basis[k] lists the tuple codes
// of the (complement) basis in degree k.
template <class Ring>
struct ChainComplexData {
  int max_degree = 0;
  std::vector<long> dims;                          // 0..max_degree
  std::vector<std::vector<std::int64_t>> basis;    // tuple codes per degree
  std::vector<ExactMatrix<Ring>> boundaries;       // boundaries[k] = d_{k+1}
};

namespace detail {

// d(e_{x1} ... e_{xn}) pushed down to the coefficient complex: each term has
// exactly one plain or primed letter; primed acts as 1, plain multiplies by t
// (Twisted) or 1 (Trivial).
template <class Ring>
std::vector<std::pair<std::vector<int>, typename Ring::Elem>> boundary_terms(
    const Solution& sol, const Ring& ring, const CoefficientSystem<Ring>& coeff,
    const std::vector<int>& tuple) {
  std::vector<std::pair<std::vector<int>, typename Ring::Elem>> out;
  auto m = e_monomial(tuple);
  for (const auto& [term, c] : differential_d(sol, ring, m).terms()) {
    auto scalar = c;
    if (coeff.kind == CoefficientSystem<Ring>::Kind::Twisted)
      for (std::size_t i = 0; i < term.plain.size(); ++i) scalar = ring.mul(scalar, coeff.t);
    out.emplace_back(term.evec, std::move(scalar));
  }
  return out;
}

}  // namespace detail

// The boundary of one basis tuple, as a combination of (n-1)-tuples.
template <class Ring>
std::map<std::vector<int>, typename Ring::Elem> boundary(const Solution& sol, const Ring& ring,
                                                         const CoefficientSystem<Ring>& coeff,
                                                         const std::vector<int>& tuple) {
  std::map<std::vector<int>, typename Ring::Elem> out;
  for (auto& [t, c] : detail::boundary_terms(sol, ring, coeff, tuple)) {
    auto it = out.find(t);
    if (it == out.end()) {
      if (!ring.is_zero(c)) out.emplace(std::move(t), std::move(c));
    } else {
      it->second = ring.add(it->second, c);
      if (ring.is_zero(it->second)) out.erase(it);
    }
  }
  return out;
}

// Builds the chain complex for the chosen variant. Quotients are realized on
// a complement basis: coordinate complements when W consists of basis pairs
// (then valid over any ring, Z included), otherwise via column reduction over
// a field. d-stability of the degenerate subspace is verified and
// QuotientNotStable raised on violation.
template <class Ring>
ChainComplexData<Ring> build_complex(const Solution& sol, const Ring& ring,
                                     const CoefficientSystem<Ring>& coeff,
                                     const ComplexVariant& variant, int max_degree) {
  const int n = sol.size();
  ChainComplexData<Ring> data;
  data.max_degree = max_degree;
  auto gens = variant_generators(sol, variant);
  const bool coordinate_path = generators_are_unit_vectors(gens);
  if (!coordinate_path && !Ring::is_field)
    throw Error(ErrorCode::VariantInadmissible,
                "variant '" + variant.str() + "' needs a field unless W is a set of basis pairs");

  // spans of D_k per degree; for the coordinate path a bitmask of degenerate
  // tuples is enough
  std::vector<std::vector<char>> degenerate(max_degree + 1);
  std::vector<std::optional<EchelonSpan<Ring>>> spans;
  if constexpr (Ring::is_field) spans.resize(max_degree + 1);

  std::vector<char> pair_is_gen(static_cast<std::size_t>(n) * n, 0);
  if (coordinate_path)
    for (const auto& g : gens) pair_is_gen[g.begin()->first] = 1;

  for (int k = 0; k <= max_degree; ++k) {
    const std::int64_t total = power_ll(n, k);
    if (coordinate_path) {
      degenerate[k].assign(total, 0);
      if (k >= 2 && !gens.empty())
        for_each_tuple(n, k, [&](const std::vector<int>& t, std::int64_t code) {
          for (int i = 0; i + 1 < k; ++i)
            if (pair_is_gen[static_cast<std::int64_t>(t[i]) * n + t[i + 1]]) {
              degenerate[k][code] = 1;
              break;
            }
        });
    } else if constexpr (Ring::is_field) {
      EchelonSpan<Ring> sp(ring);
      if (k >= 2 && !gens.empty()) {
        for (int pos = 0; pos + 2 <= k; ++pos) {
          const std::int64_t lo = power_ll(n, k - 2 - pos);  // weight of the pair block
          for_each_tuple(n, pos, [&](const std::vector<int>&, std::int64_t acode) {
            for_each_tuple(n, k - 2 - pos, [&](const std::vector<int>&, std::int64_t bcode) {
              for (const auto& g : gens) {
                SparseVec<Ring> v;
                for (const auto& [pq, c] : g) {
                  std::int64_t code = (acode * n * n + pq) * lo + bcode;
                  auto it = v.find(code);
                  if (it == v.end()) v[code] = ring.from_int(c);
                  else it->second = ring.add(it->second, ring.from_int(c));
                }
                for (auto it = v.begin(); it != v.end();)
                  it = ring.is_zero(it->second) ? v.erase(it) : std::next(it);
                sp.insert(std::move(v));
              }
            });
          });
        }
      }
      spans[k].emplace(std::move(sp));
    }
  }

  auto is_complement = [&](int k, std::int64_t code) {
    if (coordinate_path) return !degenerate[k][code];
    if constexpr (Ring::is_field) return !spans[k]->is_pivot(code);
    return true;
  };

  data.dims.resize(max_degree + 1);
  data.basis.resize(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) {
    const std::int64_t total = power_ll(n, k);
    for (std::int64_t code = 0; code < total; ++code)
      if (is_complement(k, code)) data.basis[k].push_back(code);
    data.dims[k] = static_cast<long>(data.basis[k].size());
  }

  // index of a complement code within the degree-k basis
  auto index_in_basis = [&](int k, std::int64_t code) -> long {
    const auto& b = data.basis[k];
    auto it = std::lower_bound(b.begin(), b.end(), code);
    return (it != b.end() && *it == code) ? (it - b.begin()) : -1;
  };

  // stability: d(D_k) must land in D_{k-1}
  for (int k = 2; k <= max_degree; ++k) {
    if (gens.empty()) break;
    std::vector<SparseVec<Ring>> dgens;
    if (coordinate_path) {
      for (std::int64_t code = 0; code < power_ll(n, k); ++code)
        if (degenerate[k][code]) {
          SparseVec<Ring> v;
          v[code] = ring.one();
          dgens.push_back(std::move(v));
        }
    } else if constexpr (Ring::is_field) {
      for (const auto& [pivot, row] : spans[k]->rows()) dgens.push_back(row);
    }
    for (const auto& g : dgens) {
      SparseVec<Ring> image;
      for (const auto& [code, c] : g)
        for (const auto& [t, bc] : boundary(sol, ring, coeff, decode_tuple(n, k, code))) {
          std::int64_t tcode = encode_tuple(n, t);
          auto it = image.find(tcode);
          if (it == image.end()) image[tcode] = ring.mul(c, bc);
          else it->second = ring.add(it->second, ring.mul(c, bc));
        }
      for (auto it = image.begin(); it != image.end();)
        it = ring.is_zero(it->second) ? image.erase(it) : std::next(it);
      bool inside = true;
      if (coordinate_path) {
        for (const auto& [code, c] : image)
          if (!degenerate[k - 1][code]) { inside = false; break; }
      } else if constexpr (Ring::is_field) {
        inside = spans[k - 1]->contains(image);
      }
      if (!inside)
        throw Error(ErrorCode::QuotientNotStable,
                    "d(D_" + std::to_string(k) + ") escapes D_" + std::to_string(k - 1) +
                        " for variant " + variant.str());
    }
  }

  data.boundaries.resize(max_degree);
  for (int k = 1; k <= max_degree; ++k) {
    ExactMatrix<Ring>& mat = data.boundaries[k - 1];
    mat = ExactMatrix<Ring>(static_cast<int>(data.dims[k - 1]), static_cast<int>(data.dims[k]));
    std::vector<std::vector<std::pair<int, typename Ring::Elem>>> cols(data.basis[k].size());
    parallel_for(data.basis[k].size(), [&](std::size_t ci) {
      std::int64_t code = data.basis[k][ci];
      SparseVec<Ring> img;
      for (const auto& [t, c] : boundary(sol, ring, coeff, decode_tuple(n, k, code)))
        img[encode_tuple(n, t)] = c;
      if (!coordinate_path)
        if constexpr (Ring::is_field) img = spans[k - 1]->reduce(std::move(img));
      for (const auto& [tcode, c] : img) {
        if (ring.is_zero(c)) continue;
        long row = index_in_basis(k - 1, tcode);
        if (row < 0) continue;  // degenerate coordinate (coordinate path projection)
        cols[ci].emplace_back(static_cast<int>(row), c);
      }
    });
    for (std::size_t ci = 0; ci < cols.size(); ++ci)
      for (auto& [row, c] : cols[ci]) mat.entries[{row, static_cast<int>(ci)}] = std::move(c);
  }
  return data;
}

template <class Ring>
HomologyResult homology_of(const Solution& sol, const Ring& ring,
                           const CoefficientSystem<Ring>& coeff, const ComplexVariant& variant,
                           int max_degree) {
  auto data = build_complex(sol, ring, coeff, variant, max_degree + 1);
  auto full = homology(ring, data.dims, data.boundaries);
  HomologyResult res;
  for (int k = 0; k <= max_degree; ++k) res.degrees.push_back(full.at(k));
  return res;
}

// --- cochains ---------------------------------------------------------------

template <class Ring>
struct Cochain {
  using Scalar = typename Ring::Elem;
  int degree = 0;
  std::map<std::vector<int>, Scalar> values;

  Scalar eval(const Ring& ring, const std::vector<int>& tuple) const {
    auto it = values.find(tuple);
    return it == values.end() ? ring.zero() : it->second;
  }
  void set(const Ring& ring, const std::vector<int>& tuple, const Scalar& v) {
    if (ring.is_zero(v)) values.erase(tuple);
    else values[tuple] = v;
  }
};

// (df)(x_1..x_{p+1}) = f(d(e_{x_1}...e_{x_{p+1}})); nullopt witness when f is
// a cocycle.
template <class Ring>
std::optional<std::vector<int>> cocycle_witness(const Solution& sol, const Ring& ring,
                                                const CoefficientSystem<Ring>& coeff,
                                                const Cochain<Ring>& f) {
  const int n = sol.size();
  std::optional<std::vector<int>> witness;
  for_each_tuple(n, f.degree + 1, [&](const std::vector<int>& t, std::int64_t) {
    if (witness) return;
    auto val = ring.zero();
    for (const auto& [sub, c] : boundary(sol, ring, coeff, t))
      val = ring.add(val, ring.mul(c, f.eval(ring, sub)));
    if (!ring.is_zero(val)) witness = t;
  });
  return witness;
}

template <class Ring>
bool is_cocycle(const Solution& sol, const Ring& ring, const CoefficientSystem<Ring>& coeff,
                const Cochain<Ring>& f) {
  return !cocycle_witness(sol, ring, coeff, f).has_value();
}

// sigma scaled by a nowhere-zero f: c(x (x) y) = f(x,y) z (x) t. c satisfies
// the braid equation iff f satisfies the multiplicative 2-cocycle equation;
// both routes are computed independently.
struct TwoCocycleCheck {
  bool braid_holds = false;
  bool cocycle_holds = false;
};

template <class Ring>
TwoCocycleCheck two_cocycle_braiding_check(const Solution& sol, const Ring& ring,
                                           const Cochain<Ring>& f) {
  static_assert(Ring::is_field);
  if (f.degree != 2) throw Error(ErrorCode::DegreeMismatch, "need a degree-2 cochain");
  const int n = sol.size();
  for_each_tuple(n, 2, [&](const std::vector<int>& t, std::int64_t) {
    if (ring.is_zero(f.eval(ring, t)))
      throw Error(ErrorCode::ZeroValue, "f must take values in the units");
  });

  TwoCocycleCheck out;
  // braid route: apply the scaled operators on basis vectors of X^3
  struct Vec { std::int64_t basis; typename Ring::Elem coeff; };
  auto apply_c = [&](int pos, const Vec& v) {
    auto t = decode_tuple(n, 3, v.basis);
    auto [z, w] = sol.apply(t[pos], t[pos + 1]);
    auto fv = f.eval(ring, {t[pos], t[pos + 1]});
    t[pos] = z;
    t[pos + 1] = w;
    return Vec{encode_tuple(n, t), ring.mul(v.coeff, fv)};
  };
  out.braid_holds = true;
  for (std::int64_t b = 0; b < power_ll(n, 3) && out.braid_holds; ++b) {
    Vec lhs{b, ring.one()}, rhs{b, ring.one()};
    lhs = apply_c(0, apply_c(1, apply_c(0, lhs)));
    rhs = apply_c(1, apply_c(0, apply_c(1, rhs)));
    if (lhs.basis != rhs.basis || !ring.eq(lhs.coeff, rhs.coeff)) out.braid_holds = false;
  }

  // multiplicative 2-cocycle route
  out.cocycle_holds = true;
  for_each_tuple(n, 3, [&](const std::vector<int>& t, std::int64_t) {
    if (!out.cocycle_holds) return;
    const int x = t[0], y = t[1], z = t[2];
    auto s1 = [&](int a, int b) { return sol.s1(a, b); };
    auto s2 = [&](int a, int b) { return sol.s2(a, b); };
    auto lhs = ring.mul(
        ring.mul(f.eval(ring, {s1(x, y), s1(s2(x, y), z)}), f.eval(ring, {s2(x, y), z})),
        f.eval(ring, {x, y}));
    auto rhs = ring.mul(
        ring.mul(f.eval(ring, {y, z}), f.eval(ring, {x, s1(y, z)})),
        f.eval(ring, {s2(x, s1(y, z)), s2(y, z)}));
    if (!ring.eq(lhs, rhs)) out.cocycle_holds = false;
  });
  return out;
}

// Bases of the cocycle and coboundary spaces in the given degree over GF(p)
// (or any field), for the chosen variant.
template <class Ring>
struct CocycleSpaces {
  long dim_cocycles = 0;
  long dim_coboundaries = 0;
  long dim_h = 0;
  std::vector<Cochain<Ring>> cocycle_basis;
  std::vector<Cochain<Ring>> coboundary_basis;
};

template <class Ring>
CocycleSpaces<Ring> enumerate_cocycles(const Solution& sol, const Ring& ring,
                                       const CoefficientSystem<Ring>& coeff,
                                       const ComplexVariant& variant, int degree) {
  static_assert(Ring::is_field);
  const int n = sol.size();
  auto data = build_complex(sol, ring, coeff, variant, degree + 1);
  // cohomology differentials are the transposes of the boundaries
  auto dstar_p = data.boundaries[degree].transposed();              // C^deg -> C^{deg+1}
  CocycleSpaces<Ring> out;
  auto to_cochain = [&](const SparseVec<Ring>& v) {
    Cochain<Ring> f;
    f.degree = degree;
    for (const auto& [i, c] : v)
      f.values[decode_tuple(n, degree, data.basis[degree][i])] = c;
    return f;
  };
  for (const auto& v : kernel_basis(ring, dstar_p)) out.cocycle_basis.push_back(to_cochain(v));
  if (degree >= 1) {
    auto dstar_prev = data.boundaries[degree - 1].transposed();     // C^{deg-1} -> C^deg
    auto span = image_span(ring, dstar_prev);
    for (const auto& [p, row] : span.rows()) out.coboundary_basis.push_back(to_cochain(row));
  }
  out.dim_cocycles = static_cast<long>(out.cocycle_basis.size());
  out.dim_coboundaries = static_cast<long>(out.coboundary_basis.size());
  out.dim_h = out.dim_cocycles - out.dim_coboundaries;
  return out;
}

// Cohomology dimensions computed on the annihilator subcomplex
// { f : f(D) = 0 } of the full cochain complex, the dual realization of the
// quotient; cross-checked against the quotient route in the tests.
template <class Ring>
std::vector<long> annihilator_cohomology_dims(const Solution& sol, const Ring& ring,
                                              const CoefficientSystem<Ring>& coeff,
                                              const ComplexVariant& variant, int max_degree) {
  static_assert(Ring::is_field);
  const int n = sol.size();
  auto gens = variant_generators(sol, variant);
  auto full = build_complex(sol, ring, coeff, ComplexVariant::full(), max_degree + 1);

  // annihilator basis per degree: kernel of the generator-evaluation matrix
  std::vector<KernelBasis<Ring>> bases(max_degree + 2);
  for (int k = 0; k <= max_degree + 1; ++k) {
    ExactMatrix<Ring> gmat(0, static_cast<int>(power_ll(n, k)));
    int grow = 0;
    if (k >= 2)
      for (int pos = 0; pos + 2 <= k; ++pos) {
        const std::int64_t lo = power_ll(n, k - 2 - pos);
        for_each_tuple(n, pos, [&](const std::vector<int>&, std::int64_t acode) {
          for_each_tuple(n, k - 2 - pos, [&](const std::vector<int>&, std::int64_t bcode) {
            for (const auto& g : gens) {
              for (const auto& [pq, c] : g)
                gmat.add(ring, grow, static_cast<int>((acode * n * n + pq) * lo + bcode),
                         ring.from_int(c));
              ++grow;
            }
          });
        });
      }
    gmat.rows = grow;
    bases[k] = kernel_basis_with_free(ring, gmat);
  }

  // express d* restricted to the annihilator in the kernel bases; a kernel
  // element's coefficient at basis vector i is its value at that vector's
  // free column
  std::vector<ExactMatrix<Ring>> dstar(max_degree + 1);
  for (int k = 0; k <= max_degree; ++k) {
    const auto& target = bases[k + 1];
    ExactMatrix<Ring> m(static_cast<int>(target.vectors.size()),
                        static_cast<int>(bases[k].vectors.size()));
    const auto& dfull = full.boundaries[k];  // d_{k+1}: C_{k+1} -> C_k
    for (std::size_t ci = 0; ci < bases[k].vectors.size(); ++ci) {
      // (d* f)(tau) = f(d tau)
      SparseVec<Ring> img;
      for (const auto& [ij, c] : dfull.entries) {
        auto it = bases[k].vectors[ci].find(ij.first);
        if (it == bases[k].vectors[ci].end()) continue;
        auto& slot = img[ij.second];
        slot = ring.add(slot, ring.mul(c, it->second));
      }
      for (auto it = img.begin(); it != img.end();)
        it = ring.is_zero(it->second) ? img.erase(it) : std::next(it);
      SparseVec<Ring> rem = img;
      for (std::size_t idx = 0; idx < target.vectors.size(); ++idx) {
        auto it = rem.find(target.free_columns[idx]);
        if (it == rem.end()) continue;
        auto c = it->second;
        m.add(ring, static_cast<int>(idx), static_cast<int>(ci), c);
        sparse_axpy(ring, rem, ring.neg(c), target.vectors[idx]);
      }
      if (!rem.empty())
        throw Error(ErrorCode::QuotientNotStable,
                    "d* leaves the annihilator subcomplex at degree " + std::to_string(k));
    }
    dstar[k] = std::move(m);
  }

  std::vector<long> dims;
  for (int k = 0; k <= max_degree; ++k) {
    long z = static_cast<long>(bases[k].vectors.size()) - rank(ring, dstar[k]);
    long b = k == 0 ? 0 : rank(ring, dstar[k - 1]);
    dims.push_back(z - b);
  }
  return dims;
}

// --- acyclicity experiment for B/Invo ---------------------------------------
//
// The differential preserves the total letter length, so B/Invo splits into
// finite complexes, one per total length L, with e-degree as the homological
// degree. Over a field containing Q the positive-degree homology of every
// piece vanishes (the Euler/homotopy argument); this experiment computes it
// and reports, per length, the homology in e-degrees 1..max_e_degree.
struct InvoAcyclicityRow {
  int total_length = 0;
  std::vector<long> dims;       // piece dimensions per e-degree
  std::vector<long> homology;   // homology dimension per e-degree
};

template <class Ring>
std::vector<InvoAcyclicityRow> invo_acyclicity(const Solution& sol, const Ring& ring,
                                               int max_e_degree, int max_total_length) {
  static_assert(Ring::is_field);
  InvoContext<Ring> ctx(sol, ring);
  const int n = sol.size();

  // canonical M-words by length
  std::vector<std::vector<std::vector<int>>> mwords(max_total_length + 1);
  mwords[0] = {{}};
  for (int len = 1; len <= max_total_length; ++len) {
    std::set<std::vector<int>> canon;
    for_each_tuple(n, len, [&](const std::vector<int>& t, std::int64_t) {
      canon.insert(m_canonical(sol, t));
    });
    mwords[len].assign(canon.begin(), canon.end());
  }
  // complement e-bases per degree
  std::vector<std::vector<std::int64_t>> ecomp(max_total_length + 1);
  for (int m = 0; m <= max_total_length; ++m) {
    const auto& sp = ctx.span(m);
    for (std::int64_t code = 0; code < power_ll(n, m); ++code)
      if (!sp.is_pivot(code)) ecomp[m].push_back(code);
  }

  std::vector<InvoAcyclicityRow> rows;
  for (int L = 1; L <= max_total_length; ++L) {
    const int top = std::min(L, max_e_degree + 1);
    std::vector<std::vector<NormalMonomial>> basis(top + 1);
    std::vector<std::map<NormalMonomial, int>> index(top + 1);
    for (int m = 0; m <= top; ++m) {
      for (const auto& ecode : ecomp[m]) {
        auto evec = decode_tuple(n, m, ecode);
        for (int a = 0; a + m <= L; ++a) {
          const int k = L - m - a;
          for (const auto& u : mwords[a])
            for (const auto& v : mwords[k]) {
              NormalMonomial mon;
              mon.primed = u;
              mon.evec = evec;
              mon.plain = v;
              index[m][mon] = static_cast<int>(basis[m].size());
              basis[m].push_back(mon);
            }
        }
      }
    }
    std::vector<long> dims(top + 1);
    for (int m = 0; m <= top; ++m) dims[m] = static_cast<long>(basis[m].size());
    std::vector<ExactMatrix<Ring>> bds;
    for (int m = 1; m <= top; ++m) {
      ExactMatrix<Ring> mat(static_cast<int>(dims[m - 1]), static_cast<int>(dims[m]));
      for (std::size_t ci = 0; ci < basis[m].size(); ++ci) {
        auto img = ctx.reduce(differential_d(sol, ring, basis[m][ci]));
        for (const auto& [term, c] : img.terms()) {
          auto it = index[m - 1].find(term);
          if (it == index[m - 1].end())
            throw Error(ErrorCode::NotAComplex, "differential left the truncated basis");
          mat.add(ring, it->second, static_cast<int>(ci), c);
        }
      }
      bds.push_back(std::move(mat));
    }
    auto h = homology(ring, dims, bds);
    InvoAcyclicityRow row;
    row.total_length = L;
    row.dims = dims;
    for (int m = 0; m <= std::min(top, max_e_degree); ++m)
      row.homology.push_back(h.at(m).free_rank);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ybx
