#include "mpcjoin/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "mpcjoin/simplex.hpp"

namespace mpcjoin {

Hypergraph Hypergraph::from_edges(std::vector<Edge> edges) {
    Hypergraph g;
    std::set<AttrId> verts;
    for (Edge& e : edges) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.empty()) throw std::invalid_argument("hypergraph: empty edge");
        verts.insert(e.begin(), e.end());
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::unique(edges.begin(), edges.end());
    if (dup != edges.end()) throw std::invalid_argument("hypergraph: duplicate edges");
    g.edges_ = std::move(edges);
    g.vertices_.assign(verts.begin(), verts.end());
    return g;
}

bool Hypergraph::is_binary() const {
    for (const Edge& e : edges_)
        if (e.size() != 2) return false;
    return true;
}

bool Hypergraph::has_vertex(AttrId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Edge> Hypergraph::incident(AttrId v) const {
    std::vector<Edge> out;
    for (const Edge& e : edges_)
        if (std::binary_search(e.begin(), e.end(), v)) out.push_back(e);
    return out;
}

Hypergraph Hypergraph::induced(const Scheme& u) const {
    if (!scheme_subset(u, vertices_)) throw std::domain_error("induced: not a vertex subset");
    std::set<Edge> kept;
    for (const Edge& e : edges_) {
        Edge cut = scheme_intersect(e, u);
        if (!cut.empty()) kept.insert(std::move(cut));
    }
    return from_edges({kept.begin(), kept.end()});
}

Hypergraph Hypergraph::remove_vertices(const Scheme& u) const {
    std::set<Edge> kept;
    for (const Edge& e : edges_) {
        Edge cut = scheme_minus(e, u);
        if (!cut.empty()) kept.insert(std::move(cut));
    }
    return from_edges({kept.begin(), kept.end()});
}

Hypergraph build_hypergraph(const JoinQuery& q) {
    std::vector<Edge> edges;
    edges.reserve(q.count());
    for (const Relation& r : q.relations()) edges.push_back(r.scheme());
    return Hypergraph::from_edges(std::move(edges));
}

const BigRat& WeightFn::at(const Edge& e) const {
    auto it = w.find(e);
    if (it == w.end()) throw std::domain_error("WeightFn: missing edge");
    return it->second;
}

BigRat WeightFn::total() const {
    BigRat t = 0;
    for (const auto& [e, v] : w) t += v;
    return t;
}

BigRat vertex_weight(const Hypergraph& g, const WeightFn& w, AttrId x) {
    if (!g.has_vertex(x)) throw std::domain_error("vertex_weight: unknown vertex");
    BigRat sum = 0;
    for (const Edge& e : g.edges())
        if (std::binary_search(e.begin(), e.end(), x)) sum += w.at(e);
    return sum;
}

namespace {

bool weights_in_range(const Hypergraph& g, const WeightFn& w) {
    if (w.w.size() != g.edges().size()) return false;
    for (const Edge& e : g.edges()) {
        auto it = w.w.find(e);
        if (it == w.w.end() || it->second < 0 || it->second > 1) return false;
    }
    return true;
}

}  // namespace

bool is_fractional_edge_cover(const Hypergraph& g, const WeightFn& w) {
    if (!weights_in_range(g, w)) return false;
    for (AttrId v : g.vertices())
        if (vertex_weight(g, w, v) < 1) return false;
    return true;
}

bool is_fractional_edge_packing(const Hypergraph& g, const WeightFn& w) {
    if (!weights_in_range(g, w)) return false;
    for (AttrId v : g.vertices())
        if (vertex_weight(g, w, v) > 1) return false;
    return true;
}

bool is_tight(const Hypergraph& g, const WeightFn& w) {
    if (!weights_in_range(g, w)) return false;
    for (AttrId v : g.vertices())
        if (vertex_weight(g, w, v) != 1) return false;
    return true;
}

namespace {

// Incidence matrix rows = vertices, cols = edges.
std::vector<std::vector<BigRat>> incidence(const Hypergraph& g) {
    const auto& vs = g.vertices();
    const auto& es = g.edges();
    std::vector<std::vector<BigRat>> A(vs.size(), std::vector<BigRat>(es.size(), BigRat(0)));
    for (std::size_t j = 0; j < es.size(); ++j)
        for (AttrId v : es[j]) A[scheme_pos(vs, v)][j] = 1;
    return A;
}

WeightFn weights_from_vector(const Hypergraph& g, const std::vector<BigRat>& x) {
    WeightFn w;
    for (std::size_t j = 0; j < g.edges().size(); ++j) w.w[g.edges()[j]] = x[j];
    return w;
}

}  // namespace

LpResult edge_cover_lp(const Hypergraph& g) {
    if (g.edges().empty()) throw std::domain_error("edge_cover_lp: empty hypergraph");
    // min 1'w s.t. N w >= 1 (N = incidence) is solved through its dual
    // max 1'y s.t. N' y <= 1, y >= 0; the cover weights are the dual values
    // of that program's edge constraints.
    const auto& vs = g.vertices();
    const auto& es = g.edges();
    std::vector<std::vector<BigRat>> At(es.size(), std::vector<BigRat>(vs.size(), BigRat(0)));
    for (std::size_t j = 0; j < es.size(); ++j)
        for (AttrId v : es[j]) At[j][scheme_pos(vs, v)] = 1;
    std::vector<BigRat> b(es.size(), BigRat(1));
    std::vector<BigRat> c(vs.size(), BigRat(1));
    LpOptimum opt = simplex_max(At, b, c);

    LpResult out;
    out.optimum = opt.objective;
    out.weights = weights_from_vector(g, opt.dual);
    if (!is_fractional_edge_cover(g, out.weights) || out.weights.total() != out.optimum)
        throw std::logic_error("edge_cover_lp: certificate validation failed");
    return out;
}

LpResult edge_packing_lp(const Hypergraph& g) {
    if (g.edges().empty()) throw std::domain_error("edge_packing_lp: empty hypergraph");
    std::vector<BigRat> b(g.vertices().size(), BigRat(1));
    std::vector<BigRat> c(g.edges().size(), BigRat(1));
    LpOptimum opt = simplex_max(incidence(g), b, c);

    LpResult out;
    out.optimum = opt.objective;
    out.weights = weights_from_vector(g, opt.x);
    if (!is_fractional_edge_packing(g, out.weights) || out.weights.total() != out.optimum)
        throw std::logic_error("edge_packing_lp: certificate validation failed");
    return out;
}

namespace {

// Packing number of the subgraph keeping only edges disjoint from Z, together
// with the achieving weights. Vertices outside Z that lose all edges make a
// 0/1-vertex-weight packing of value (|V|-|Z|)/2 impossible; detected by the
// optimum falling short.
std::optional<WeightFn> try_zero_set(const Hypergraph& g, const std::vector<AttrId>& zset,
                                     const BigRat& target) {
    std::vector<Edge> kept;
    for (const Edge& e : g.edges())
        if (scheme_intersect(e, zset).empty()) kept.push_back(e);
    if (kept.empty()) {
        if (target != 0) return std::nullopt;
    } else {
        // Quick reject: every vertex outside Z must keep an incident edge.
        std::set<AttrId> covered;
        for (const Edge& e : kept) covered.insert(e.begin(), e.end());
        for (AttrId v : g.vertices())
            if (!std::binary_search(zset.begin(), zset.end(), v) && !covered.count(v))
                return std::nullopt;
    }

    Hypergraph sub = kept.empty() ? Hypergraph() : Hypergraph::from_edges(kept);
    WeightFn w;
    if (!kept.empty()) {
        LpResult packed = edge_packing_lp(sub);
        if (packed.optimum != target) return std::nullopt;
        w = packed.weights;
    } else if (target != 0) {
        return std::nullopt;
    }
    // Extend by zero on the removed edges.
    for (const Edge& e : g.edges())
        if (!w.w.count(e)) w.w[e] = 0;
    return w;
}

}  // namespace

LpResult canonical_packing(const Hypergraph& g) {
    if (!g.is_binary()) throw std::domain_error("canonical_packing: non-binary hypergraph");
    if (g.edges().empty()) throw std::domain_error("canonical_packing: empty hypergraph");
    const BigRat rho = edge_cover_lp(g).optimum;
    const BigRat tau = edge_packing_lp(g).optimum;
    const BigRat diff = rho - tau;
    if (boost::multiprecision::denominator(diff) != 1 || diff < 0)
        throw std::logic_error("canonical_packing: rho - tau not a nonnegative integer");
    const std::size_t d = static_cast<std::size_t>(boost::multiprecision::numerator(diff));

    // Candidate zero-sets of size d, preferring later vertex ids. The choice
    // of Z is not unique in general; the descending preference makes it
    // deterministic.
    std::vector<AttrId> desc(g.vertices().rbegin(), g.vertices().rend());
    const std::size_t n = desc.size();
    if (d > n) throw std::logic_error("canonical_packing: |Z| exceeds |V|");

    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        std::vector<AttrId> zset;
        zset.reserve(d);
        for (std::size_t i : pick) zset.push_back(desc[i]);
        std::sort(zset.begin(), zset.end());
        if (auto w = try_zero_set(g, zset, tau)) {
            // Validate the Lemma postconditions rather than trusting the search.
            for (AttrId v : g.vertices()) {
                BigRat wt = vertex_weight(g, *w, v);
                bool in_z = std::binary_search(zset.begin(), zset.end(), v);
                if (wt != (in_z ? 0 : 1))
                    throw std::logic_error("canonical_packing: vertex weight not 0/1");
            }
            LpResult out;
            out.optimum = tau;
            out.weights = std::move(*w);
            out.zero_set = std::move(zset);
            return out;
        }
        // Next combination of d indices out of n, lexicographic.
        if (d == 0) break;
        std::size_t i = d;
        while (i > 0 && pick[i - 1] == n - d + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    throw std::logic_error("canonical_packing: no 0/1-vertex-weight packing found");
}

LpResult quasi_packing_number(const Hypergraph& g) {
    const std::size_t n = g.vertices().size();
    if (n == 0) throw std::domain_error("quasi_packing_number: empty hypergraph");
    if (n > 20) throw std::domain_error("quasi_packing_number: too large (|V| > 20)");

    std::map<std::vector<Edge>, BigRat> memo;
    LpResult best;
    bool have = false;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        Scheme u;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1ULL << i)) u.push_back(g.vertices()[i]);
        Hypergraph residual = g.remove_vertices(u);
        if (residual.edges().empty()) continue;  // tau of an edgeless graph is 0
        auto it = memo.find(residual.edges());
        if (it != memo.end()) {
            if (!have || it->second > best.optimum) {
                LpResult packed = edge_packing_lp(residual);
                best = packed;
                best.zero_set = u;
                have = true;
            }
            continue;
        }
        LpResult packed = edge_packing_lp(residual);
        memo[residual.edges()] = packed.optimum;
        if (!have || packed.optimum > best.optimum) {
            best = packed;
            best.zero_set = u;
            have = true;
        }
    }
    if (!have) throw std::logic_error("quasi_packing_number: no residual graph");
    return best;
}

namespace {

// Common denominator D and the integer exponents D*w(e).
std::pair<BigInt, std::map<Edge, BigInt>> cleared_exponents(const WeightFn& w) {
    BigInt d = 1;
    for (const auto& [e, v] : w.w)
        d = boost::multiprecision::lcm(d, BigInt(boost::multiprecision::denominator(v)));
    std::map<Edge, BigInt> num;
    for (const auto& [e, v] : w.w)
        num[e] = BigInt(boost::multiprecision::numerator(v)) *
                 (d / BigInt(boost::multiprecision::denominator(v)));
    return {d, num};
}

}  // namespace

BigRat agm_bound(const Hypergraph& g, const WeightFn& w,
                 const std::map<Edge, std::uint64_t>& sizes) {
    if (!is_fractional_edge_cover(g, w)) throw std::domain_error("agm_bound: not a covering");
    auto [d, num] = cleared_exponents(w);
    BigInt prod = 1;
    for (const Edge& e : g.edges()) {
        auto it = sizes.find(e);
        if (it == sizes.end()) throw std::domain_error("agm_bound: missing size");
        prod *= ipow(BigInt(it->second), to_u64(num[e]));
    }
    return BigRat(iroot_ceil(prod, to_u64(d)));
}

bool agm_bound_holds(const WeightFn& w, const std::map<Edge, std::uint64_t>& sizes,
                     const BigInt& join_size) {
    auto [d, num] = cleared_exponents(w);
    BigInt rhs = 1;
    for (const auto& [e, exp] : num) {
        auto it = sizes.find(e);
        if (it == sizes.end()) throw std::domain_error("agm_bound_holds: missing size");
        rhs *= ipow(BigInt(it->second), to_u64(exp));
    }
    return ipow(join_size, to_u64(d)) <= rhs;
}

}  // namespace mpcjoin
