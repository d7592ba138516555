#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ybx/error.hpp"

namespace ybx {

using Table = std::vector<std::vector<int>>;

// A finite set-theoretic solution (X, sigma) of the Yang-Baxter equation.
// X = {0, .., n-1}; sigma(x,y) = (s1[x][y], s2[x][y]). Instances are immutable
// after construction; valid() reports whether both defining invariants hold.
class Solution {
 public:
  struct Diagnostics {
    bool bijective = true;
    bool ybe = true;
    std::array<int, 2> bad_pair{};            // two colliding pairs if !bijective
    std::array<int, 2> bad_pair2{};
    std::array<int, 3> bad_triple{};          // witness if !ybe
    std::string describe() const {
      std::ostringstream os;
      if (!bijective)
        os << "sigma not bijective: (" << bad_pair[0] << "," << bad_pair[1] << ") and ("
           << bad_pair2[0] << "," << bad_pair2[1] << ") collide";
      else if (!ybe)
        os << "YBE fails on triple (" << bad_triple[0] << "," << bad_triple[1] << ","
           << bad_triple[2] << ")";
      else
        os << "ok";
      return os.str();
    }
  };

  Solution() = default;

  int size() const { return n_; }
  int s1(int x, int y) const { return s1_[x][y]; }
  int s2(int x, int y) const { return s2_[x][y]; }
  std::pair<int, int> apply(int x, int y) const { return {s1_[x][y], s2_[x][y]}; }
  std::pair<int, int> apply(std::pair<int, int> p) const { return apply(p.first, p.second); }
  // inverse of sigma, available whenever sigma is bijective
  std::pair<int, int> apply_inv(int z, int t) const { return inv_[z * n_ + t]; }
  std::pair<int, int> apply_inv(std::pair<int, int> p) const { return apply_inv(p.first, p.second); }

  bool valid() const { return diag_.bijective && diag_.ybe; }
  const Diagnostics& diagnostics() const { return diag_; }

  const Table& table_s1() const { return s1_; }
  const Table& table_s2() const { return s2_; }

  // Constructs a solution from the two lookup tables. With strict=true (the
  // default everywhere downstream) invalid tables are rejected; with
  // strict=false the object is returned with diagnostics attached, which the
  // rewriting tests use to probe deliberately broken tables.
  static Solution from_tables(const Table& s1, const Table& s2, bool strict = true) {
    Solution s;
    const std::size_t n = s1.size();
    if (n == 0 || s2.size() != n)
      throw Error(ErrorCode::ShapeMismatch, "tables empty or of different sizes");
    for (const Table* t : {&s1, &s2})
      for (const auto& row : *t) {
        if (row.size() != n) throw Error(ErrorCode::ShapeMismatch, "table not square");
        for (int v : row)
          if (v < 0 || static_cast<std::size_t>(v) >= n)
            throw Error(ErrorCode::ShapeMismatch, "entry out of range");
      }
    s.n_ = static_cast<int>(n);
    s.s1_ = s1;
    s.s2_ = s2;
    s.check();
    if (strict && !s.valid())
      throw s.diag_.bijective
          ? Error(ErrorCode::YbeViolated, s.diag_.describe())
          : Error(ErrorCode::NotBijective, s.diag_.describe());
    return s;
  }

  // sigma(x,y) = (y, x <| y) for a rack (X, <|).
  static Solution from_rack(const Table& op) {
    const std::size_t n = op.size();
    if (n == 0) throw Error(ErrorCode::NotARack, "empty table");
    for (const auto& row : op) {
      if (row.size() != n) throw Error(ErrorCode::NotARack, "table not square");
      for (int v : row)
        if (v < 0 || static_cast<std::size_t>(v) >= n)
          throw Error(ErrorCode::NotARack, "entry out of range");
    }
    // -<|x bijective for each x
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<char> seen(n, 0);
      for (std::size_t w = 0; w < n; ++w) {
        int v = op[w][x];
        if (seen[v]) {
          std::ostringstream os;
          os << "right translation by " << x << " not bijective (values collide at " << v << ")";
          throw Error(ErrorCode::NotARack, os.str());
        }
        seen[v] = 1;
      }
    }
    // self-distributivity
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (op[op[x][y]][z] != op[op[x][z]][op[y][z]]) {
            std::ostringstream os;
            os << "self-distributivity fails on (" << x << "," << y << "," << z << ")";
            throw Error(ErrorCode::NotARack, os.str());
          }
    Table s1(n, std::vector<int>(n)), s2(n, std::vector<int>(n));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        s1[x][y] = static_cast<int>(y);
        s2[x][y] = op[x][y];
      }
    return from_tables(s1, s2, true);
  }

 private:
  void check() {
    const int n = n_;
    inv_.assign(static_cast<std::size_t>(n) * n, {-1, -1});
    diag_ = Diagnostics{};
    for (int x = 0; x < n && diag_.bijective; ++x)
      for (int y = 0; y < n; ++y) {
        int z = s1_[x][y], t = s2_[x][y];
        auto& slot = inv_[z * n + t];
        if (slot.first >= 0) {
          diag_.bijective = false;
          diag_.bad_pair = {slot.first, slot.second};
          diag_.bad_pair2 = {x, y};
          break;
        }
        slot = {x, y};
      }
    if (!diag_.bijective) return;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) {
          // (sigma x Id)(Id x sigma)(sigma x Id) vs (Id x sigma)(sigma x Id)(Id x sigma)
          auto lhs = std::array<int, 3>{x, y, z};
          auto rhs = lhs;
          auto ap12 = [&](std::array<int, 3>& v) {
            auto [a, b] = apply(v[0], v[1]);
            v[0] = a; v[1] = b;
          };
          auto ap23 = [&](std::array<int, 3>& v) {
            auto [a, b] = apply(v[1], v[2]);
            v[1] = a; v[2] = b;
          };
          ap12(lhs); ap23(lhs); ap12(lhs);
          ap23(rhs); ap12(rhs); ap23(rhs);
          if (lhs != rhs) {
            diag_.ybe = false;
            diag_.bad_triple = {x, y, z};
            return;
          }
        }
  }

  int n_ = 0;
  Table s1_, s2_;
  std::vector<std::pair<int, int>> inv_;
  Diagnostics diag_;
};

// Structural flags of a solution, computed by exhaustive scan.
struct Classification {
  bool square_free = false;
  bool left_invertible = false;
  bool right_invertible = false;
  bool birack = false;
  std::optional<std::vector<int>> biquandle_s;  // the map s when each x has a unique fixed partner
  bool involutive = false;
  std::vector<std::pair<int, int>> fixed_pairs;
  std::vector<std::vector<int>> orbit_orders;  // (x,y) -> least N >= 1 with sigma^N(x,y) = (x,y)
};

inline Classification classify(const Solution& sol) {
  const int n = sol.size();
  Classification c;
  c.square_free = true;
  for (int x = 0; x < n; ++x)
    if (sol.apply(x, x) != std::make_pair(x, x)) { c.square_free = false; break; }

  c.left_invertible = true;
  for (int x = 0; x < n && c.left_invertible; ++x) {
    std::vector<char> seen(n, 0);
    for (int y = 0; y < n; ++y) {
      if (seen[sol.s1(x, y)]) { c.left_invertible = false; break; }
      seen[sol.s1(x, y)] = 1;
    }
  }
  c.right_invertible = true;
  for (int y = 0; y < n && c.right_invertible; ++y) {
    std::vector<char> seen(n, 0);
    for (int x = 0; x < n; ++x) {
      if (seen[sol.s2(x, y)]) { c.right_invertible = false; break; }
      seen[sol.s2(x, y)] = 1;
    }
  }
  c.birack = c.left_invertible && c.right_invertible;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (sol.apply(x, y) == std::make_pair(x, y)) c.fixed_pairs.emplace_back(x, y);

  std::vector<int> s(n, -1);
  bool unique_partner = true;
  for (int x = 0; x < n && unique_partner; ++x) {
    int count = 0;
    for (int y = 0; y < n; ++y)
      if (sol.apply(x, y) == std::make_pair(x, y)) { ++count; s[x] = y; }
    if (count != 1) unique_partner = false;
  }
  if (unique_partner) c.biquandle_s = s;

  c.orbit_orders.assign(n, std::vector<int>(n, 0));
  c.involutive = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::pair<int, int> p{x, y};
      int k = 0;
      do {
        p = sol.apply(p);
        ++k;
      } while (p != std::make_pair(x, y));
      c.orbit_orders[x][y] = k;
      if (2 % k != 0) c.involutive = false;
    }
  return c;
}

namespace builtins {

inline Table flip_tables_s1(int n) {
  Table t(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x][y] = y;
  return t;
}

inline Solution flip(int n) {
  Table s1 = flip_tables_s1(n), s2(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) s2[x][y] = x;
  return Solution::from_tables(s1, s2);
}

inline Solution identity(int n) {
  Table s1(n, std::vector<int>(n)), s2(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) { s1[x][y] = x; s2[x][y] = y; }
  return Solution::from_tables(s1, s2);
}

inline Solution dihedral(int n) {
  Table op(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) op[x][y] = ((2 * y - x) % n + n) % n;
  return Solution::from_rack(op);
}

// Conjugation quandle on the six elements of the symmetric group on three
// letters: x <| y = y^-1 x y. Elements are permutations of {0,1,2} in a fixed
// enumeration.
inline Solution conj_s3() {
  std::vector<std::array<int, 3>> elems = {
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  auto compose = [](const std::array<int, 3>& f, const std::array<int, 3>& g) {
    // (f*g)(i) = f(g(i))
    return std::array<int, 3>{f[g[0]], f[g[1]], f[g[2]]};
  };
  auto invert = [](const std::array<int, 3>& f) {
    std::array<int, 3> r{};
    for (int i = 0; i < 3; ++i) r[f[i]] = i;
    return r;
  };
  auto index_of = [&](const std::array<int, 3>& f) {
    for (int i = 0; i < 6; ++i)
      if (elems[i] == f) return i;
    return -1;
  };
  Table op(6, std::vector<int>(6));
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      op[x][y] = index_of(compose(invert(elems[y]), compose(elems[x], elems[y])));
  return Solution::from_rack(op);
}

// Permutation solutions sigma(x,y) = (f(y), g(x)); YBE holds iff f and g
// commute.
inline Solution permutation(const std::vector<int>& f, const std::vector<int>& g) {
  const int n = static_cast<int>(f.size());
  Table s1(n, std::vector<int>(n)), s2(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) { s1[x][y] = f[y]; s2[x][y] = g[x]; }
  return Solution::from_tables(s1, s2);
}

}  // namespace builtins

// Registry of named solutions. Parameterized names: trivial_n, flip_n, id_n,
// dihedral_n. Fixed names: conj_s3, perm_cycle3, perm_invo2, perm_invo3.
inline Solution builtin(const std::string& name) {
  auto parse_param = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    return std::stoi(rest);
  };
  if (auto n = parse_param("trivial_")) return builtins::flip(*n);  // trivial rack x<|y = x
  if (auto n = parse_param("flip_")) return builtins::flip(*n);
  if (auto n = parse_param("id_")) return builtins::identity(*n);
  if (auto n = parse_param("dihedral_")) return builtins::dihedral(*n);
  if (name == "conj_s3") return builtins::conj_s3();
  if (name == "perm_cycle3") return builtins::permutation({1, 2, 0}, {1, 2, 0});
  if (name == "perm_invo2") return builtins::permutation({1, 0}, {1, 0});
  if (name == "perm_invo3") return builtins::permutation({1, 2, 0}, {2, 0, 1});
  throw Error(ErrorCode::UnknownName, "no builtin solution named '" + name + "'");
}

// Orbits of sigma acting on X x X, each listed in iteration order starting
// from its lexicographically least pair.
inline std::vector<std::vector<std::pair<int, int>>> sigma_orbits(const Solution& sol) {
  const int n = sol.size();
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  std::vector<std::vector<std::pair<int, int>>> orbits;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (seen[x * n + y]) continue;
      std::vector<std::pair<int, int>> orbit;
      std::pair<int, int> p{x, y};
      do {
        seen[p.first * n + p.second] = 1;
        orbit.push_back(p);
        p = sol.apply(p);
      } while (p != std::make_pair(x, y));
      orbits.push_back(std::move(orbit));
    }
  return orbits;
}

// The fixed iteration list used by verification suites ("every built-in").
inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "flip_2", "flip_3", "flip_4", "flip_5", "flip_6",
      "id_2",   "id_3",
      "dihedral_3", "dihedral_5",
      "conj_s3",
      "perm_cycle3", "perm_invo2", "perm_invo3",
  };
  return names;
}

}  // namespace ybx
