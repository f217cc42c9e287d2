#pragma once

// Numeric ground truth: the rigidity matrix R(G,p,q) at random coordinates
// over F_p with p = 2^61 - 1, and its exact rank by Gaussian elimination.
// Random specializations realize the generic rank except with probability
// bounded by (degree of the defining minor)/p per trial.

#include <cstdint>
#include <random>
#include <string>

#include "lcrigid/graph.hpp"

namespace lcrigid {

// Residue in [0, P) with P = 2^61 - 1.
struct Fp {
  static constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;
  std::uint64_t v = 0;

  constexpr Fp() = default;
  constexpr explicit Fp(std::uint64_t x) : v(x % P) {}

  friend constexpr Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v + b.v;
    if (s >= P) s -= P;
    return Fp::raw(s);
  }
  friend constexpr Fp operator-(Fp a, Fp b) {
    return Fp::raw(a.v >= b.v ? a.v - b.v : a.v + P - b.v);
  }
  friend constexpr Fp operator*(Fp a, Fp b) {
    return Fp::raw(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a.v) * b.v) % P));
  }
  constexpr Fp inverse() const {
    // Fermat: a^(P-2). P is prime; inverse of zero is rejected.
    if (v == 0) throw std::invalid_argument("Fp: inverse of zero");
    Fp result = Fp::raw(1), base = *this;
    std::uint64_t e = P - 2;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }
  constexpr bool isZero() const { return v == 0; }
  friend constexpr bool operator==(Fp, Fp) = default;

  static constexpr Fp raw(std::uint64_t x) {
    Fp f;
    f.v = x;
    return f;
  }
};

// Uniform draw from [0, P): 61 random bits, rejecting the single value P.
inline Fp drawFp(std::mt19937_64& rng) {
  for (;;) {
    const std::uint64_t x = rng() >> 3;
    if (x < Fp::P) return Fp::raw(x);
  }
}

// p: vertex -> point, q: loop id -> line normal (never the zero vector).
struct Realization {
  std::vector<std::array<Fp, 2>> p;
  std::vector<std::array<Fp, 2>> q;

  static Realization random(const LoopedSimpleGraph& g, std::mt19937_64& rng) {
    Realization r;
    r.p.reserve(g.vertexCount());
    for (int v = 0; v < g.vertexCount(); ++v) r.p.push_back({drawFp(rng), drawFp(rng)});
    r.q.reserve(g.loopCount());
    for (int l = 0; l < g.loopCount(); ++l) {
      std::array<Fp, 2> n{};
      do {
        n = {drawFp(rng), drawFp(rng)};
      } while (n[0].isZero() && n[1].isZero());
      r.q.push_back(n);
    }
    return r;
  }
};

// (|E|+|L|) x 2|V| row-major matrix: edge rows in file order, then loop rows
// in loop-id order; columns (x_v, y_v) per vertex in file order.
struct RigidityMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Fp> a;

  Fp& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  Fp at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

inline RigidityMatrix buildMatrix(const LoopedSimpleGraph& g, const Realization& r) {
  if (static_cast<int>(r.p.size()) != g.vertexCount())
    throw std::invalid_argument("buildMatrix: missing vertex coordinate");
  if (static_cast<int>(r.q.size()) != g.loopCount())
    throw std::invalid_argument("buildMatrix: missing loop normal");
  for (const auto& n : r.q)
    if (n[0].isZero() && n[1].isZero())
      throw std::invalid_argument("buildMatrix: zero loop normal");
  RigidityMatrix m;
  m.rows = g.elementCount();
  m.cols = 2 * g.vertexCount();
  m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, Fp{});
  for (int e = 0; e < g.edgeCount(); ++e) {
    const auto [u, v] = g.edges()[e];
    for (int c = 0; c < 2; ++c) {
      m.at(e, 2 * u + c) = r.p[u][c] - r.p[v][c];
      m.at(e, 2 * v + c) = r.p[v][c] - r.p[u][c];
    }
  }
  for (int l = 0; l < g.loopCount(); ++l) {
    const int v = g.loopVertex(l);
    const int row = g.edgeCount() + l;
    m.at(row, 2 * v) = r.q[l][0];
    m.at(row, 2 * v + 1) = r.q[l][1];
  }
  return m;
}

// Gaussian elimination, pivoting on the first nonzero entry of each column.
inline int matrixRank(RigidityMatrix m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (!m.at(r, col).isZero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
    const Fp inv = m.at(rank, col).inverse();
    for (int r = rank + 1; r < m.rows; ++r) {
      if (m.at(r, col).isZero()) continue;
      const Fp factor = m.at(r, col) * inv;
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = m.at(r, c) - factor * m.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

// Max over `trials` fresh random realizations of rank R(G,p,q); deterministic
// given the seed.
inline int numericRank(const LoopedSimpleGraph& g, std::uint64_t seed, int trials = 3) {
  if (trials < 1) throw std::invalid_argument("numericRank: trials must be >= 1");
  std::mt19937_64 rng(seed);
  int best = 0;
  for (int t = 0; t < trials; ++t)
    best = std::max(best, matrixRank(buildMatrix(g, Realization::random(g, rng))));
  return best;
}

inline bool isRigidNumeric(const LoopedSimpleGraph& g, std::uint64_t seed, int trials = 3) {
  return numericRank(g, seed, trials) == 2 * g.vertexCount();
}

// Dense CSV of residues, one matrix row per line.
inline std::string matrixCsv(const RigidityMatrix& m) {
  std::string out;
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) {
      if (c) out += ',';
      out += std::to_string(m.at(r, c).v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace lcrigid
