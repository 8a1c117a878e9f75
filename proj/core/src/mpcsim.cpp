#include "mpcjoin/mpcsim.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace mpcjoin::mpc {

std::vector<std::uint64_t> LoadReport::round_loads() const {
    std::vector<std::uint64_t> out;
    out.reserve(per_round.size());
    for (const auto& counts : per_round)
        out.push_back(counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end()));
    return out;
}

std::uint64_t LoadReport::total_load() const {
    std::uint64_t total = 0;
    for (std::uint64_t l : round_loads()) total += l;
    return total;
}

void LoadReport::to_csv(std::ostream& os) const {
    os << "round,machine,words_received\n";
    for (std::size_t r = 0; r < per_round.size(); ++r)
        for (std::size_t i = 0; i < per_round[r].size(); ++i)
            os << r << ',' << i << ',' << per_round[r][i] << '\n';
}

Cluster::Cluster(std::uint32_t p, std::uint64_t seed) : p_(p), seed_(seed) {
    if (p == 0) throw std::invalid_argument("cluster: p must be >= 1");
    stores_.resize(p);
    outputs_.resize(p);
}

Cluster Cluster::init(std::uint32_t p, const JoinQuery& q, std::uint64_t seed) {
    Cluster c(p, seed);
    std::uint64_t next = 0;
    for (std::size_t rel = 0; rel < q.count(); ++rel) {
        for (const Row& row : q.relation(rel).rows()) {
            c.stores_[next % p][static_cast<Tag>(rel)].push_back(row);
            ++next;
        }
    }
    return c;
}

std::vector<std::uint64_t> Cluster::run_round(const ComputeFn& compute,
                                              const std::vector<std::uint32_t>* exec_order) {
    // Phase 1: every machine prepares its outgoing messages from local state.
    // Collected into per-machine slots, so execution order cannot matter.
    std::vector<std::vector<Message>> outgoing(p_);
    std::vector<std::uint32_t> order(p_);
    for (std::uint32_t i = 0; i < p_; ++i) order[i] = i;
    if (exec_order) {
        if (exec_order->size() != p_) throw std::invalid_argument("run_round: bad exec order");
        order = *exec_order;
    }
    for (std::uint32_t i : order) {
        MachineContext ctx{i, p_, seed_, round_, stores_[i]};
        compute(ctx, outgoing[i]);
        for (const Message& msg : outgoing[i]) {
            if (msg.dest >= p_)
                throw std::out_of_range("run_round: message destination out of range");
            if (msg.payload.empty()) throw std::invalid_argument("run_round: empty payload");
        }
    }

    // Phase 2: deliver in (source, position) order; count received words.
    std::vector<std::uint64_t> received(p_, 0);
    for (std::uint32_t src = 0; src < p_; ++src) {
        for (Message& msg : outgoing[src]) {
            received[msg.dest] += msg.payload.size();
            stores_[msg.dest][msg.tag].push_back(std::move(msg.payload));
        }
    }
    report_.per_round.push_back(received);
    ++round_;
    return received;
}

std::vector<std::uint64_t> Cluster::broadcast(std::uint32_t from, const std::vector<Word>& payload,
                                              Tag tag) {
    if (from >= p_) throw std::out_of_range("broadcast: bad source");
    std::vector<std::uint64_t> received(p_, 0);
    for (std::uint32_t i = 0; i < p_; ++i) {
        if (i == from) continue;
        stores_[i][tag].push_back(payload);
        received[i] += payload.size();
    }
    report_.per_round.push_back(received);
    ++round_;
    return received;
}

void Cluster::charge_synthetic_round(const std::vector<std::uint64_t>& received) {
    if (received.size() != p_) throw std::invalid_argument("charge: bad machine count");
    report_.per_round.push_back(received);
    ++round_;
}

const std::map<Tag, std::vector<std::vector<Word>>>& Cluster::store(std::uint32_t machine) const {
    return stores_.at(machine);
}

void Cluster::store_put(std::uint32_t machine, Tag tag, std::vector<Word> payload) {
    stores_.at(machine)[tag].push_back(std::move(payload));
}

void Cluster::store_clear_tag(Tag tag) {
    for (auto& s : stores_) s.erase(tag);
}

void Cluster::emit_output(std::uint32_t machine, std::vector<Word> row) {
    outputs_.at(machine).push_back(std::move(row));
}

const std::vector<std::vector<Word>>& Cluster::outputs(std::uint32_t machine) const {
    return outputs_.at(machine);
}

}  // namespace mpcjoin::mpc
