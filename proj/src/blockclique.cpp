#include "distspec/blockclique.hpp"

#include <algorithm>
#include <random>

#include "distspec/spectra.hpp"

namespace distspec {

namespace {

// Exact base^exp over Q, allowing negative exponents (base must be nonzero
// then).
mpq_class rational_pow(long base, long exp) {
  mpz_class magnitude;
  mpz_ui_pow_ui(magnitude.get_mpz_t(), static_cast<unsigned long>(std::labs(base)),
                static_cast<unsigned long>(std::labs(exp)));
  if (base < 0 && (exp % 2 != 0)) magnitude = -magnitude;
  if (exp >= 0) return mpq_class(magnitude);
  mpq_class out(1, magnitude);
  out.canonicalize();
  return out;
}

mpz_class integral(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + " is not integral: " + q.get_str());
  return q.get_num();
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw DomainError("graph not connected");
  auto bc = biconnected_components(g);
  BlockDecomposition out{std::move(bc.blocks), std::move(bc.cut_vertices)};
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

BlockCliqueParams uniform_block_clique_params(const Graph& g) {
  auto dec = block_decomposition(g);
  BlockCliqueParams params;
  params.r = static_cast<int>(dec.blocks.size());
  for (const auto& block : dec.blocks) {
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j)
        if (!g.adjacent(block[i], block[j])) throw DomainError("not uniform block-clique: block is not a clique");
  }
  for (const auto& block : dec.blocks) {
    if (params.b == 0) params.b = static_cast<int>(block.size());
    if (static_cast<int>(block.size()) != params.b)
      throw DomainError("not uniform block-clique: blocks of mixed orders");
  }
  if (params.b < 2) throw DomainError("not uniform block-clique: needs at least one edge");
  return params;
}

mpq_class wiener_blockclique_spectral(const Graph& g) {
  auto params = uniform_block_clique_params(g);
  mpq_class scale(static_cast<long>(g.order()) * params.b, 2);
  scale.canonicalize();
  mpq_class w = scale * laplacian_reciprocal_sum(g);
  w.canonicalize();
  return w;
}

mpz_class spanning_tree_count_blockclique(const BlockCliqueParams& params) {
  if (params.b < 2 || params.r < 1) throw DomainError("block-clique parameters need b >= 2, r >= 1");
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(params.b),
                static_cast<unsigned long>((params.b - 2) * params.r));
  return out;
}

ForestSplit forest_split_identity(int b) {
  if (b < 2) throw DomainError("forest split identity needs b >= 2");
  mpq_class lhs = 0;
  for (int i = 0; i <= b - 2; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(b - 2), static_cast<unsigned long>(i));
    lhs += mpq_class(binom) * rational_pow(i + 1, i - 1) * rational_pow(b - 1 - i, b - 3 - i);
  }
  mpq_class rhs = 2 * rational_pow(b, b - 3);
  lhs.canonicalize();
  rhs.canonicalize();
  return {integral(lhs, "forest split sum"), integral(rhs, "2 b^(b-3)")};
}

Graph random_block_clique(int b, int r, std::uint64_t seed) {
  if (b < 2 || r < 1) throw DomainError("block-clique generator needs b >= 2, r >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Edge> es;
  int n = 0;
  for (int block = 0; block < r; ++block) {
    std::vector<int> members;
    if (block > 0) {
      std::uniform_int_distribution<int> pick(0, n - 1);
      members.push_back(pick(rng));
    }
    while (static_cast<int>(members.size()) < b) members.push_back(n++);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) es.emplace_back(members[i], members[j]);
  }
  return Graph(n, es);
}

}  // namespace distspec
