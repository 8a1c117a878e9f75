#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mpcjoin/bigmath.hpp"
#include "mpcjoin/mpcsim.hpp"
#include "mpcjoin/relation.hpp"

namespace mpcjoin {

/// Per-attribute machine-grid dimensions of the hypercube join.
struct ShareVector {
    std::map<AttrId, std::uint32_t> share;  // each >= 1

    std::uint64_t total() const;
    std::uint32_t at(AttrId a) const;
};

/// Deterministic grid layout for a one-round cartesian product.
struct GridPlan {
    std::uint32_t t_prime = 0;            // leading relations placed on the grid
    std::vector<std::uint64_t> dims;      // dims[i] for relation i < t_prime
    BigInt threshold;                     // L_{t'}, rounded up
    std::vector<std::size_t> broadcast;   // relation indices beyond t'
    std::uint64_t machines_used() const;  // prod dims
};

/// Grid for relations of the given sizes (sorted descending) on p machines.
/// t' is the largest i with |R_j|^j * p >= prod_{l<=j} |R_l| for all j <= i;
/// dims[i] = floor(|R_i| / L_{t'}). If rounding drives some dim to zero the
/// plan degenerates to a single-dimension grid over the largest relation with
/// everything else broadcast.
GridPlan plan_grid(const std::vector<std::uint64_t>& sizes_desc, std::uint64_t p);

/// Contiguous machine range [base, base+count) inside a cluster.
struct SliceRef {
    std::uint32_t base = 0;
    std::uint32_t count = 1;
};

/// One-round distributed algorithm on a slice: route every input tuple of a
/// relation to slice-machine indices, then solve locally from the received
/// fragments. Used directly and as an operand of compose_products.
struct OneRoundAlg {
    std::uint32_t machines = 1;                // slice size the algorithm expects
    std::vector<std::size_t> rel_ids;          // query relations it consumes
    Scheme out_scheme;
    // targets(rel_position, tuple_id, row) -> machine indices in [0, machines)
    std::function<void(std::size_t, std::uint64_t, const Row&, std::vector<std::uint32_t>&)>
        route;
    // local join of the received fragments (fragments[i] belongs to
    // rel_ids[i]); must not fabricate tuples outside the true result.
    std::function<std::vector<Row>(const std::vector<std::vector<Row>>&)> local;
};

/// Lemma-style deterministic cartesian product: tuple j of relation i goes to
/// every machine whose dimension-i coordinate is (j mod dims[i]); trailing
/// relations are broadcast. Tuple ids follow canonical row order.
OneRoundAlg make_grid_alg(const JoinQuery& q, const std::vector<std::size_t>& rel_ids,
                          std::uint64_t machines);

/// Seeded hypercube: attribute X_i is hashed to a coordinate in [0, share_i);
/// a tuple is replicated along the axes of the attributes it lacks.
OneRoundAlg make_hypercube_alg(const JoinQuery& q, const std::vector<std::size_t>& rel_ids,
                               const ShareVector& shares, std::uint64_t seed);

/// Runs one OneRoundAlg on a slice of a cluster whose stores already hold the
/// input tuples (tagged by relation index). Result tuples are placed in
/// machine output buffers; the returned relation is their uncharged union.
Relation run_one_round(mpc::Cluster& c, SliceRef slice, const JoinQuery& q,
                       const OneRoundAlg& alg);

/// Lemma-style composition: a p2 x p1 machine matrix, alg1 per row and alg2
/// per column, every instance of the same algorithm making identical seeded
/// choices. slice.count must equal alg1.machines * alg2.machines.
Relation compose_products(mpc::Cluster& c, SliceRef slice, const JoinQuery& q,
                          const OneRoundAlg& alg1, const OneRoundAlg& alg2);

/// True iff every (relation, attribute, value) frequency is at most
/// c_factor * m / share(attribute).
bool check_skew_free(const JoinQuery& q, const ShareVector& shares, std::uint64_t c_factor);

/// Convenience wrappers matching the primitive contracts: distribute the
/// inputs round-robin, run the single round, and return result + loads.
struct PrimitiveRun {
    Relation result;
    mpc::LoadReport loads;
};

PrimitiveRun grid_cartesian(const std::vector<Relation>& relations, std::uint32_t p,
                            std::uint64_t seed);

PrimitiveRun hypercube_join(const JoinQuery& q, const ShareVector& shares, std::uint64_t seed);

}  // namespace mpcjoin
