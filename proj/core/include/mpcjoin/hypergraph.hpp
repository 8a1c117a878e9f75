#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mpcjoin/bigmath.hpp"
#include "mpcjoin/relation.hpp"

namespace mpcjoin {

/// Hyperedge: sorted, duplicate-free attribute-id set (size >= 1).
using Edge = std::vector<AttrId>;

/// Vertices and edges of a query; every vertex is incident to at least one
/// edge, edges are distinct and non-empty.
class Hypergraph {
public:
    Hypergraph() = default;
    static Hypergraph from_edges(std::vector<Edge> edges);

    const std::vector<AttrId>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool is_binary() const;
    bool has_vertex(AttrId v) const;
    std::vector<Edge> incident(AttrId v) const;

    /// Subgraph induced by u: (u, {u ∩ e | e}) minus the empty set.
    Hypergraph induced(const Scheme& u) const;

    /// Removes the vertex set u from every edge, dropping emptied edges
    /// (the G \ U operation of quasi-packings).
    Hypergraph remove_vertices(const Scheme& u) const;

    bool operator==(const Hypergraph& o) const {
        return vertices_ == o.vertices_ && edges_ == o.edges_;
    }

private:
    std::vector<AttrId> vertices_;  // sorted
    std::vector<Edge> edges_;       // sorted lexicographically
};

/// Hypergraph of a simple query: vertices = attset, edges = schemes.
Hypergraph build_hypergraph(const JoinQuery& q);

/// Edge weights in [0,1]; every edge of the graph it belongs to has an entry.
struct WeightFn {
    std::map<Edge, BigRat> w;

    const BigRat& at(const Edge& e) const;
    BigRat total() const;
};

BigRat vertex_weight(const Hypergraph& g, const WeightFn& w, AttrId x);
bool is_fractional_edge_cover(const Hypergraph& g, const WeightFn& w);
bool is_fractional_edge_packing(const Hypergraph& g, const WeightFn& w);
/// Tight = simultaneously a covering and a packing (all vertex weights 1).
bool is_tight(const Hypergraph& g, const WeightFn& w);

struct LpResult {
    BigRat optimum;
    WeightFn weights;
    /// canonical_packing: the zero-weight vertex set Z.
    /// quasi_packing_number: the maximizing deletion set U (repurposed).
    std::optional<std::vector<AttrId>> zero_set;
};

/// Fractional edge covering number rho(g) with a certifying weight function.
LpResult edge_cover_lp(const Hypergraph& g);

/// Fractional edge packing number tau(g) with a certifying weight function.
LpResult edge_packing_lp(const Hypergraph& g);

/// Maximum fractional edge packing of a binary hypergraph in which every
/// vertex weight is exactly 0 or 1; zero_set = Z with |Z| = rho - tau.
LpResult canonical_packing(const Hypergraph& g);

/// Fractional edge quasi-packing number psi(g) = max over U of tau(g \ U).
/// weights certify tau of the maximizing residual graph; zero_set = that U.
/// Guard: |V| <= 20.
LpResult quasi_packing_number(const Hypergraph& g);

/// Value v >= prod_e sizes(e)^(w(e)), with v - true product < 1 (the product
/// is evaluated as the D-th root of an exact integer, rounded outward).
/// w must be a fractional edge covering; sizes must cover every edge.
BigRat agm_bound(const Hypergraph& g, const WeightFn& w, const std::map<Edge, std::uint64_t>& sizes);

/// Exact test of join_size <= prod_e sizes(e)^(w(e)) with denominators
/// cleared: join_size^D <= prod sizes^(D*w(e)).
bool agm_bound_holds(const WeightFn& w, const std::map<Edge, std::uint64_t>& sizes,
                     const BigInt& join_size);

}  // namespace mpcjoin
