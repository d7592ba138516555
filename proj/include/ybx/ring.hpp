#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ybx/error.hpp"

namespace ybx {

// Scalar rings. Every ring is a small value type carrying whatever runtime
// data it needs (the modulus for GF(p), nothing for the others) and exposing
// a uniform interface:
//
//   using Elem = ...;            exact element type
//   Elem zero(), one(), from_int(long)
//   add/sub/mul/neg, is_zero, eq, to_string
//   static constexpr bool is_field
//   Elem inv(Elem)               fields only
//
// Algorithms are templated on the ring and never fall back to floating point.

struct ZRing {
  using Elem = mpz_class;
  static constexpr bool is_field = false;
  static constexpr const char* name = "Z";

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

struct QRing {
  using Elem = mpq_class;
  static constexpr bool is_field = true;
  static constexpr const char* name = "Q";

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error(ErrorCode::NotAField, "division by zero in Q");
    return Elem(1) / a;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

// Prime field GF(p), elements stored as reduced representatives in [0, p).
struct GFpRing {
  using Elem = std::int64_t;
  static constexpr bool is_field = true;
  static constexpr const char* name = "GF";

  std::int64_t p{2};

  GFpRing() = default;
  explicit GFpRing(std::int64_t prime) : p(prime) {
    if (p < 2) throw Error(ErrorCode::BadInput, "GF(p): p must be a prime >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error(ErrorCode::BadInput, "GF(p): " + std::to_string(p) + " is not prime");
  }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long v) const {
    Elem r = static_cast<Elem>(v) % p;
    return r < 0 ? r + p : r;
  }
  Elem add(Elem a, Elem b) const { Elem r = a + b; return r >= p ? r - p : r; }
  Elem sub(Elem a, Elem b) const { Elem r = a - b; return r < 0 ? r + p : r; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::NotAField, "division by zero in GF(p)");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
      tmp = r - q * nr; r = nr; nr = tmp;
    }
    return t < 0 ? t + p : t;
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  std::string to_string(Elem a) const { return std::to_string(a); }
};

// Univariate polynomials with integer coefficients, used as Z[T] for twisted
// coefficient systems. Coefficient vector, lowest degree first, no trailing
// zeros.
struct ZPoly {
  std::vector<mpz_class> c;

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool operator==(const ZPoly& o) const { return c == o.c; }
  bool operator<(const ZPoly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (std::size_t i = c.size(); i-- > 0;)
      if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
  }
};

struct ZTRing {
  using Elem = ZPoly;
  static constexpr bool is_field = false;
  static constexpr const char* name = "ZT";

  Elem zero() const { return {}; }
  Elem one() const { return {{mpz_class(1)}}; }
  Elem variable() const { return {{mpz_class(0), mpz_class(1)}}; }
  Elem from_int(long v) const {
    if (v == 0) return {};
    return {{mpz_class(v)}};
  }
  Elem add(const Elem& a, const Elem& b) const {
    ZPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), mpz_class(0));
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const {
    if (a.c.empty() || b.c.empty()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
  }
  Elem neg(const Elem& a) const {
    ZPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  bool is_zero(const Elem& a) const { return a.c.empty(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  mpz_class eval(const Elem& a, const mpz_class& t) const {
    mpz_class r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = r * t + a.c[i];
    return r;
  }
  std::string to_string(const Elem& a) const {
    if (a.c.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      if (!s.empty() && a.c[i] > 0) s += "+";
      if (i == 0) {
        s += a.c[i].get_str();
      } else {
        if (a.c[i] == -1) s += "-";
        else if (a.c[i] != 1) s += a.c[i].get_str() + "*";
        s += (i == 1) ? "T" : ("T^" + std::to_string(i));
      }
    }
    return s;
  }
};

// Runtime ring descriptor, as spelled on the command line: Z | Q | GF:p | ZT[:t].
struct RingSpec {
  enum class Kind { Z, Q, GFp, ZT } kind = Kind::Z;
  std::int64_t p = 0;        // GF(p)
  bool has_t = false;        // ZT:t specializes T to an integer
  long t_value = 1;

  static RingSpec parse(const std::string& s) {
    RingSpec r;
    if (s == "Z") { r.kind = Kind::Z; return r; }
    if (s == "Q") { r.kind = Kind::Q; return r; }
    if (s.rfind("GF:", 0) == 0) {
      r.kind = Kind::GFp;
      r.p = std::stoll(s.substr(3));
      GFpRing check(r.p);  // validates primality
      return r;
    }
    if (s == "ZT") { r.kind = Kind::ZT; return r; }
    if (s.rfind("ZT:", 0) == 0) {
      r.kind = Kind::ZT;
      r.has_t = true;
      r.t_value = std::stol(s.substr(3));
      return r;
    }
    throw Error(ErrorCode::BadInput, "unknown ring spec '" + s + "' (expected Z | Q | GF:p | ZT[:t])");
  }

  std::string str() const {
    switch (kind) {
      case Kind::Z: return "Z";
      case Kind::Q: return "Q";
      case Kind::GFp: return "GF:" + std::to_string(p);
      case Kind::ZT: return has_t ? "ZT:" + std::to_string(t_value) : "ZT";
    }
    return "?";
  }
};

}  // namespace ybx
