#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

#include "mpcjoin/relation.hpp"

namespace mpcjoin::mpc {

using Word = std::uint64_t;
using Tag = std::uint64_t;

struct Message {
    std::uint32_t dest = 0;  // machine id in [0, p)
    Tag tag = 0;             // routing label, uncharged
    std::vector<Word> payload;
};

/// Word-exact received-message accounting. round_loads[r] is the maximum
/// per-machine count of round r; total_load sums the round maxima.
struct LoadReport {
    std::vector<std::vector<std::uint64_t>> per_round;  // [round][machine]

    std::vector<std::uint64_t> round_loads() const;
    std::uint64_t total_load() const;
    std::size_t rounds() const { return per_round.size(); }
    void to_csv(std::ostream& os) const;  // round,machine,words_received
};

/// Everything a machine's compute function may read. Compute must be a pure
/// function of this view; the round barrier delivers messages only after
/// every machine's compute has returned.
struct MachineContext {
    std::uint32_t machine;
    std::uint32_t p;
    std::uint64_t seed;
    std::uint32_t round;
    const std::map<Tag, std::vector<std::vector<Word>>>& store;
};

using ComputeFn = std::function<void(const MachineContext&, std::vector<Message>&)>;

/// Deterministic simulator of p machines exchanging messages in synchronous
/// rounds. Machine-local stores are isolated; all observable behaviour is
/// independent of the order compute functions run in.
class Cluster {
public:
    Cluster(std::uint32_t p, std::uint64_t seed);

    /// Round-robin distribution of the query's tuples in canonical order,
    /// tagged by source relation index. Initial placement is not charged.
    static Cluster init(std::uint32_t p, const JoinQuery& q, std::uint64_t seed);

    std::uint32_t p() const { return p_; }
    std::uint64_t seed() const { return seed_; }
    std::uint32_t round_index() const { return round_; }

    /// One compute+communicate round. Returns this round's per-machine
    /// received-word counts. exec_order, when given, must be a permutation of
    /// [0,p); results are identical for every permutation.
    std::vector<std::uint64_t> run_round(const ComputeFn& compute,
                                         const std::vector<std::uint32_t>* exec_order = nullptr);

    /// One machine sends the payload to all others (charged per recipient).
    std::vector<std::uint64_t> broadcast(std::uint32_t from, const std::vector<Word>& payload,
                                         Tag tag);

    /// Records a round of given per-machine received counts without moving
    /// data. Used for the histogram preprocessing allowance, whose internals
    /// (standard MPC sorting) are out of scope but whose cost is charged.
    void charge_synthetic_round(const std::vector<std::uint64_t>& received);

    const LoadReport& report() const { return report_; }

    // Harness-side access. Stores are machine-local state; outputs are the
    // uncharged result buffers collected out-of-band.
    const std::map<Tag, std::vector<std::vector<Word>>>& store(std::uint32_t machine) const;
    void store_put(std::uint32_t machine, Tag tag, std::vector<Word> payload);
    void store_clear_tag(Tag tag);
    void emit_output(std::uint32_t machine, std::vector<Word> row);
    const std::vector<std::vector<Word>>& outputs(std::uint32_t machine) const;

private:
    std::uint32_t p_;
    std::uint64_t seed_;
    std::uint32_t round_ = 0;
    std::vector<std::map<Tag, std::vector<std::vector<Word>>>> stores_;
    std::vector<std::vector<std::vector<Word>>> outputs_;
    LoadReport report_;
};

}  // namespace mpcjoin::mpc
