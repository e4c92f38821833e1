#pragma once

// Brute-force reference implementations. They read adjacency only and share
// no algorithm with the library.

#include <cstdint>
#include <optional>
#include <vector>

#include "toughham/graph.hpp"
#include "toughham/rational.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Matrix {
  int n = 0;
  std::vector<Mask> row;
};

Matrix matrix(const toughham::Graph& g);

/// Components of G[alive].
int components(const Matrix& m, Mask alive);
bool connected(const Matrix& m);

/// min |S| / c(G - S) over all S with c >= 2; nullopt when no such S.
std::optional<toughham::Rational> toughness(const Matrix& m);

int alpha(const Matrix& m);

/// Smallest S with G - S disconnected or trivial.
int connectivity(const Matrix& m);

bool hamiltonian(const Matrix& m);
bool hamiltonian_path(const Matrix& m, int u, int v);
bool hamiltonian_connected(const Matrix& m);

/// Longest cycle length, 0 for forests.
int circumference(const Matrix& m);

/// Some k-subset of host induces a graph isomorphic to pattern.
bool contains_induced(const Matrix& host, const Matrix& pattern);

/// Smallest S (may meet x1, x2) leaving no x1-x2 path in G - S.
int min_separator(const Matrix& m, Mask x1, Mask x2);

/// Isomorphism by trying every permutation.
bool isomorphic(const Matrix& a, const Matrix& b);

/// Number of isomorphism classes of graphs on n <= 7 vertices, counted by
/// marking whole orbits of labelled graphs; {all, connected}.
std::pair<long, long> class_counts(int n);

}  // namespace oracle
