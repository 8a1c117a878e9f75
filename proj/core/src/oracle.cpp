#include "mpcjoin/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mpcjoin {

namespace {

// Per-relation lookup structures for the backtracking search.
struct RelIndex {
    const Relation* rel;
    // For binary relations: partner lists keyed by the value of one attribute.
    // partners[side][v] = sorted values of the other attribute co-occurring with v.
    std::map<Value, std::vector<Value>> partners[2];
    // Distinct values per position, sorted.
    std::vector<Value> column[2];
};

std::vector<Value> sorted_unique(std::vector<Value> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<Value> intersect_sorted(const std::vector<Value>& a, const std::vector<Value>& b) {
    std::vector<Value> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

struct Search {
    const JoinQuery& q;
    Scheme attrs;
    std::vector<RelIndex> idx;
    // attr -> list of (relation, position of attr in its scheme)
    std::map<AttrId, std::vector<std::pair<std::size_t, std::size_t>>> touching;
    Row assignment;                 // aligned to attrs
    std::vector<Row>* out = nullptr;  // null => counting only
    std::uint64_t count = 0;

    explicit Search(const JoinQuery& query) : q(query), attrs(query.attset()) {
        idx.resize(q.count());
        for (std::size_t r = 0; r < q.count(); ++r) {
            const Relation& rel = q.relation(r);
            if (rel.arity() > 2)
                throw std::domain_error("join_oracle: relations of arity > 2 unsupported");
            idx[r].rel = &rel;
            for (std::size_t pos = 0; pos < rel.arity(); ++pos) {
                touching[rel.scheme()[pos]].push_back({r, pos});
                std::vector<Value> col;
                col.reserve(rel.size());
                for (const Row& row : rel.rows()) col.push_back(row[pos]);
                idx[r].column[pos] = sorted_unique(std::move(col));
            }
            if (rel.arity() == 2) {
                for (const Row& row : rel.rows()) {
                    idx[r].partners[0][row[0]].push_back(row[1]);
                    idx[r].partners[1][row[1]].push_back(row[0]);
                }
                for (int s = 0; s < 2; ++s)
                    for (auto& [v, list] : idx[r].partners[s]) list = sorted_unique(std::move(list));
            }
        }
        assignment.resize(attrs.size());
    }

    // Candidate values for attrs[depth] given the assignment of attrs[0..depth).
    std::vector<Value> candidates(std::size_t depth) const {
        AttrId x = attrs[depth];
        std::vector<Value> cand;
        bool first = true;
        for (auto [r, pos] : touching.at(x)) {
            const Relation& rel = *idx[r].rel;
            std::vector<Value> local;
            if (rel.arity() == 1) {
                local = idx[r].column[0];
            } else {
                AttrId other = rel.scheme()[1 - pos];
                std::size_t other_depth = scheme_pos(attrs, other);
                if (other_depth < depth) {
                    auto it = idx[r].partners[1 - pos].find(assignment[other_depth]);
                    if (it == idx[r].partners[1 - pos].end()) return {};
                    local = it->second;
                } else {
                    local = idx[r].column[pos];
                }
            }
            cand = first ? std::move(local) : intersect_sorted(cand, local);
            first = false;
            if (!first && cand.empty()) return cand;
        }
        return cand;
    }

    void recurse(std::size_t depth) {
        if (depth == attrs.size()) {
            ++count;
            if (out) out->push_back(assignment);
            return;
        }
        for (Value v : candidates(depth)) {
            assignment[depth] = v;
            recurse(depth + 1);
        }
    }
};

}  // namespace

Relation join_oracle(const JoinQuery& q) {
    if (q.count() == 0) return Relation({}, {Row{}});
    for (const Relation& r : q.relations())
        if (r.empty()) return Relation(q.attset(), {});
    Search s(q);
    std::vector<Row> rows;
    s.out = &rows;
    s.recurse(0);
    return Relation(s.attrs, std::move(rows));
}

std::uint64_t join_count(const JoinQuery& q) {
    if (q.count() == 0) return 1;
    for (const Relation& r : q.relations())
        if (r.empty()) return 0;
    Search s(q);
    s.recurse(0);
    return s.count;
}

Relation cartesian_oracle(const std::vector<Relation>& rs) {
    Scheme all;
    for (const Relation& r : rs) {
        if (!scheme_intersect(all, r.scheme()).empty())
            throw std::domain_error("cartesian_oracle: schemes overlap");
        all = scheme_union(all, r.scheme());
    }
    std::vector<Row> rows = {Row{}};
    Scheme built;
    for (const Relation& r : rs) {
        std::vector<Row> next;
        next.reserve(rows.size() * std::max<std::size_t>(1, r.size()));
        Scheme merged = scheme_union(built, r.scheme());
        for (const Row& base : rows) {
            for (const Row& add : r.rows()) {
                Row combined(merged.size());
                for (std::size_t i = 0; i < merged.size(); ++i) {
                    AttrId a = merged[i];
                    if (scheme_subset({a}, built))
                        combined[i] = base[scheme_pos(built, a)];
                    else
                        combined[i] = add[scheme_pos(r.scheme(), a)];
                }
                next.push_back(std::move(combined));
            }
        }
        rows = std::move(next);
        built = merged;
    }
    return Relation(all, std::move(rows));
}

}  // namespace mpcjoin
