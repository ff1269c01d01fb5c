#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Blocks (maximal 2-connected subgraphs, bridges as 2-sets) ordered by their
/// smallest vertex, plus the cut vertices.
struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

struct BlockCliqueParams {
  int b = 0;  // vertices per block
  int r = 0;  // number of blocks
};

/// Throws DomainError with "block is not a clique" or "blocks of mixed
/// orders" when g is not a uniform block-clique graph.
BlockCliqueParams uniform_block_clique_params(const Graph& g);

/// (n b / 2) * sum 1/mu_i over the nonzero Laplacian eigenvalues, exact.
mpq_class wiener_blockclique_spectral(const Graph& g);

/// b^((b-2) r): the number of spanning trees.
mpz_class spanning_tree_count_blockclique(const BlockCliqueParams& params);

struct ForestSplit {
  mpz_class lhs;  // sum_i C(b-2, i) (i+1)^(i-1) (b-1-i)^(b-3-i)
  mpz_class rhs;  // 2 b^(b-3)
};

/// Both sides evaluated in exact rationals; throws if either is not integral.
ForestSplit forest_split_identity(int b);

/// r cliques of order b glued tree-like: each new clique shares one
/// pseudo-randomly chosen existing vertex. Deterministic per seed.
Graph random_block_clique(int b, int r, std::uint64_t seed);

}  // namespace distspec
