#include "mpcjoin/relation.hpp"

#include <algorithm>

namespace mpcjoin {

AttrId AttrRegistry::intern(const std::string& name) {
    auto it = by_name_.find(name);
    if (it != by_name_.end()) return it->second;
    AttrId id = static_cast<AttrId>(names_.size());
    names_.push_back(name);
    by_name_.emplace(name, id);
    return id;
}

std::optional<AttrId> AttrRegistry::find(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

const std::string& AttrRegistry::name(AttrId id) const {
    if (id >= names_.size()) throw std::out_of_range("unknown attribute id");
    return names_[id];
}

Scheme make_scheme(std::vector<AttrId> attrs) {
    std::sort(attrs.begin(), attrs.end());
    attrs.erase(std::unique(attrs.begin(), attrs.end()), attrs.end());
    return attrs;
}

bool scheme_subset(const Scheme& sub, const Scheme& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Scheme scheme_union(const Scheme& a, const Scheme& b) {
    Scheme out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Scheme scheme_intersect(const Scheme& a, const Scheme& b) {
    Scheme out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Scheme scheme_minus(const Scheme& a, const Scheme& b) {
    Scheme out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::size_t scheme_pos(const Scheme& s, AttrId attr) {
    auto it = std::lower_bound(s.begin(), s.end(), attr);
    if (it == s.end() || *it != attr) throw std::domain_error("attribute not in scheme");
    return static_cast<std::size_t>(it - s.begin());
}

Tuple project(const Tuple& t, const Scheme& v) {
    if (!scheme_subset(v, t.scheme)) throw std::domain_error("project: not a scheme subset");
    Row values;
    values.reserve(v.size());
    for (AttrId a : v) values.push_back(t.at(a));
    return Tuple{v, std::move(values)};
}

Relation::Relation(Scheme scheme, std::vector<Row> rows)
    : scheme_(std::move(scheme)), rows_(std::move(rows)) {
    for (std::size_t i = 1; i < scheme_.size(); ++i)
        if (scheme_[i - 1] >= scheme_[i]) throw std::invalid_argument("scheme not sorted/unique");
    for (const Row& r : rows_)
        if (r.size() != scheme_.size()) throw std::invalid_argument("row width != scheme size");
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

bool Relation::contains(const Row& row) const {
    return std::binary_search(rows_.begin(), rows_.end(), row);
}

Relation semijoin_filter(const Relation& r, AttrId x, const std::vector<Value>& allowed) {
    std::size_t pos = scheme_pos(r.scheme(), x);
    std::vector<Row> kept;
    for (const Row& row : r.rows())
        if (std::binary_search(allowed.begin(), allowed.end(), row[pos])) kept.push_back(row);
    return Relation(r.scheme(), std::move(kept));
}

JoinQuery::JoinQuery(std::vector<Relation> relations) : relations_(std::move(relations)) {
    for (std::size_t i = 0; i < relations_.size(); ++i)
        for (std::size_t j = i + 1; j < relations_.size(); ++j)
            if (relations_[i].scheme() == relations_[j].scheme())
                throw std::invalid_argument("not simple: duplicate schemes");
}

Scheme JoinQuery::attset() const {
    Scheme all;
    for (const Relation& r : relations_) all = scheme_union(all, r.scheme());
    return all;
}

std::uint64_t JoinQuery::input_size() const {
    std::uint64_t m = 0;
    for (const Relation& r : relations_) m += r.size();
    return m;
}

bool JoinQuery::is_binary() const {
    for (const Relation& r : relations_)
        if (r.arity() != 2) return false;
    return true;
}

std::optional<std::size_t> JoinQuery::find_scheme(const Scheme& s) const {
    for (std::size_t i = 0; i < relations_.size(); ++i)
        if (relations_[i].scheme() == s) return i;
    return std::nullopt;
}

}  // namespace mpcjoin
