#include "tuttekit/oracle.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "tuttekit/errors.hpp"

namespace tuttekit {

SubsetIterator::SubsetIterator(std::size_t edge_count, unsigned max_edges)
    : edge_count_(edge_count) {
  const unsigned cap = max_edges < kMaxEdges ? max_edges : kMaxEdges;
  if (edge_count > cap) {
    throw BudgetExceeded("subset enumeration over " + std::to_string(edge_count) +
                         " edges exceeds cap of " + std::to_string(cap));
  }
}

namespace {

std::uint32_t components_of(const MultiGraph& g, std::uint32_t mask) {
  DisjointSets sets(g.num_vertices());
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (mask >> i & 1u) sets.unite(edges[i].u, edges[i].v);
  }
  return sets.count();
}

// Binomial row C(n, 0..n).
std::vector<BigInt> binomials(std::uint32_t n) {
  std::vector<BigInt> row(n + 1);
  for (std::uint32_t k = 0; k <= n; ++k) mpz_bin_uiui(row[k].get_mpz_t(), n, k);
  return row;
}

// Tally of subsets by (components, size).
std::vector<std::vector<std::uint64_t>> tally_subsets(const MultiGraph& g, const Limits& limits) {
  std::vector<std::vector<std::uint64_t>> counts(
      g.num_vertices() + 1, std::vector<std::uint64_t>(g.num_edges() + 1));
  for (SubsetIterator it(g.num_edges(), limits.subset_max_edges); !it.done(); it.next()) {
    const std::uint32_t k = components_of(g, it.mask());
    ++counts[k][static_cast<std::size_t>(__builtin_popcount(it.mask()))];
  }
  return counts;
}

void require_connected(const MultiGraph& g, const char* what) {
  if (metrics(g).components != 1) {
    throw DomainError(std::string(what) + " requires a connected graph");
  }
}

}  // namespace

BiPoly tutte_subgraph_sum(const MultiGraph& g, const Limits& limits) {
  const GraphMetrics whole = metrics(g);
  // counts[a][b]: subsets with r(G)-r(H) = a and n(H) = b.
  const std::uint32_t max_a = g.num_vertices();
  const std::uint32_t max_b = static_cast<std::uint32_t>(g.num_edges());
  std::vector<std::vector<std::uint64_t>> counts(max_a + 1,
                                                 std::vector<std::uint64_t>(max_b + 1));
  for (SubsetIterator it(g.num_edges(), limits.subset_max_edges); !it.done(); it.next()) {
    const std::uint32_t k = components_of(g, it.mask());
    const std::uint32_t size = static_cast<std::uint32_t>(__builtin_popcount(it.mask()));
    const std::uint32_t rank = g.num_vertices() - k;
    ++counts[k - whole.components][size - rank];
  }

  // Expand (x-1)^a (y-1)^b in the monomial basis.
  std::vector<BiPoly::Term> terms;
  for (std::uint32_t a = 0; a <= max_a; ++a) {
    for (std::uint32_t b = 0; b <= max_b; ++b) {
      if (counts[a][b] == 0) continue;
      const BigInt weight = static_cast<unsigned long>(counts[a][b]);
      const auto ca = binomials(a);
      const auto cb = binomials(b);
      for (std::uint32_t i = 0; i <= a; ++i) {
        for (std::uint32_t j = 0; j <= b; ++j) {
          BigInt c = weight * ca[i] * cb[j];
          if ((a - i + b - j) % 2 == 1) c = -c;
          terms.push_back({i, j, std::move(c)});
        }
      }
    }
  }
  return BiPoly::from_terms(std::move(terms));
}

namespace {

struct Minor {
  std::uint32_t num_vertices = 0;
  std::vector<Edge> edges;
};

class DeletionContraction {
 public:
  explicit DeletionContraction(const Limits& limits) : limits_(limits) {}

  BiPoly run(Minor g) {
    if (++nodes_ > limits_.delcon_max_nodes) {
      throw BudgetExceeded("deletion-contraction exceeded " +
                           std::to_string(limits_.delcon_max_nodes) + " nodes");
    }
    std::uint32_t loops = 0;
    std::erase_if(g.edges, [&](const Edge& e) { return e.is_loop() && ++loops; });
    const std::uint32_t bridges = contract_bridges(g);
    if (g.edges.empty()) return BiPoly::monomial(bridges, loops);

    const Edge e = g.edges.front();
    Minor deleted{g.num_vertices, {g.edges.begin() + 1, g.edges.end()}};
    Minor contracted = contract(deleted, e.u, e.v);
    BiPoly sum = run(std::move(deleted));
    sum += run(std::move(contracted));
    return sum.shifted(bridges, loops);
  }

 private:
  static std::uint32_t components(const Minor& g, std::size_t skip) {
    DisjointSets sets(g.num_vertices);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (i != skip) sets.unite(g.edges[i].u, g.edges[i].v);
    }
    return sets.count();
  }

  // Merges v into u; the last vertex takes v's id so ids stay dense.
  static Minor contract(const Minor& g, VertexId u, VertexId v) {
    const VertexId last = g.num_vertices - 1;
    auto rename = [&](VertexId w) -> VertexId {
      if (w == v) w = u;
      return w == last ? v : w;
    };
    Minor out{g.num_vertices - 1, {}};
    out.edges.reserve(g.edges.size());
    for (const auto& e : g.edges) out.edges.push_back({rename(e.u), rename(e.v)});
    return out;
  }

  // Contracts every bridge (an edge whose removal adds a component) and
  // returns how many there were. Loop-free input stays loop-free.
  static std::uint32_t contract_bridges(Minor& g) {
    const std::uint32_t base = components(g, g.edges.size());
    std::vector<bool> is_bridge(g.edges.size());
    std::uint32_t count = 0;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (components(g, i) > base) {
        is_bridge[i] = true;
        ++count;
      }
    }
    if (count == 0) return 0;

    DisjointSets sets(g.num_vertices);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (is_bridge[i]) sets.unite(g.edges[i].u, g.edges[i].v);
    }
    std::vector<VertexId> id(g.num_vertices, UINT32_MAX);
    std::uint32_t next = 0;
    for (VertexId w = 0; w < g.num_vertices; ++w) {
      const VertexId root = sets.find(w);
      if (id[root] == UINT32_MAX) id[root] = next++;
    }
    std::vector<Edge> kept;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (is_bridge[i]) continue;
      kept.push_back({id[sets.find(g.edges[i].u)], id[sets.find(g.edges[i].v)]});
    }
    g.num_vertices = next;
    g.edges = std::move(kept);
    return count;
  }

  const Limits& limits_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

BiPoly tutte_del_con(const MultiGraph& g, const Limits& limits) {
  if (g.num_edges() > limits.delcon_max_edges) {
    throw BudgetExceeded("deletion-contraction over " + std::to_string(g.num_edges()) +
                         " edges exceeds cap of " + std::to_string(limits.delcon_max_edges));
  }
  DeletionContraction dc(limits);
  return dc.run(Minor{g.num_vertices(), g.edges()});
}

BigInt spanning_tree_count_matrix(const MultiGraph& g, const Limits& limits) {
  if (g.num_vertices() > limits.matrix_tree_max_vertices) {
    throw BudgetExceeded("matrix-tree count over " + std::to_string(g.num_vertices()) +
                         " vertices exceeds cap");
  }
  if (g.num_vertices() == 0) throw DomainError("matrix-tree count of an empty graph");
  require_connected(g, "matrix-tree count");

  // Laplacian with the last row and column removed.
  const std::size_t n = g.num_vertices() - 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    if (e.u < n) m[e.u][e.u] += 1;
    if (e.v < n) m[e.v][e.v] += 1;
    if (e.u < n && e.v < n) {
      m[e.u][e.v] -= 1;
      m[e.v][e.u] -= 1;
    }
  }
  if (n == 0) return 1;

  // Bareiss: every division below is exact.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m[pivot][k] == 0) ++pivot;
      if (pivot == n) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

BigInt cssg_count_brute(const MultiGraph& g, const Limits& limits) {
  require_connected(g, "connected spanning subgraph count");
  const auto counts = tally_subsets(g, limits);
  BigInt total = 0;
  for (auto c : counts[1]) total += static_cast<unsigned long>(c);
  return total;
}

UniPoly reliability_brute(const MultiGraph& g, const Limits& limits) {
  require_connected(g, "reliability");
  const auto counts = tally_subsets(g, limits);
  const std::uint32_t e = static_cast<std::uint32_t>(g.num_edges());
  // sum_s c_s p^s (1-p)^(e-s) = sum_s c_s sum_i C(e-s, i) (-1)^i p^(s+i)
  std::vector<BigInt> dense(e + 1);
  for (std::uint32_t s = 0; s <= e; ++s) {
    if (counts[1][s] == 0) continue;
    const BigInt weight = static_cast<unsigned long>(counts[1][s]);
    const auto c = binomials(e - s);
    for (std::uint32_t i = 0; i <= e - s; ++i) {
      if (i % 2 == 0) {
        dense[s + i] += weight * c[i];
      } else {
        dense[s + i] -= weight * c[i];
      }
    }
  }
  return UniPoly::from_dense(Variable::p, dense);
}

Rational potts_partition_brute(const MultiGraph& g, const Rational& q, const Rational& v,
                               const Limits& limits) {
  const auto counts = tally_subsets(g, limits);
  Rational total = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    for (std::size_t s = 0; s < counts[k].size(); ++s) {
      if (counts[k][s] == 0) continue;
      total += Rational(static_cast<unsigned long>(counts[k][s])) *
               pow(q, static_cast<long>(k)) * pow(v, static_cast<long>(s));
    }
  }
  return total;
}

BigInt proper_colorings_brute(const MultiGraph& g, unsigned colors) {
  const double space = std::pow(static_cast<double>(colors), g.num_vertices());
  if (space > 4294967296.0) throw BudgetExceeded("colouring enumeration too large");
  for (const auto& e : g.edges()) {
    if (e.is_loop()) return 0;
  }
  std::vector<std::vector<VertexId>> earlier(g.num_vertices());
  for (const auto& e : g.edges()) {
    earlier[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));
  }
  std::vector<unsigned> colour(g.num_vertices());
  BigInt count = 0;
  // Depth-first over vertices in id order, checking edges back to earlier ids.
  auto place = [&](auto&& self, VertexId v) -> void {
    if (v == g.num_vertices()) {
      ++count;
      return;
    }
    for (unsigned c = 0; c < colors; ++c) {
      bool ok = true;
      for (VertexId w : earlier[v]) {
        if (colour[w] == c) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      colour[v] = c;
      self(self, v + 1);
    }
  };
  place(place, 0);
  return count;
}

}  // namespace tuttekit
