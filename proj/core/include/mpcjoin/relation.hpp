#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpcjoin {

using Value = std::uint64_t;
using AttrId = std::uint32_t;

/// Attributes ordered by id; schemes are sorted, duplicate-free id lists.
using Scheme = std::vector<AttrId>;

/// Interns attribute display names to small dense ids.
class AttrRegistry {
public:
    AttrId intern(const std::string& name);
    std::optional<AttrId> find(const std::string& name) const;
    const std::string& name(AttrId id) const;
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::map<std::string, AttrId> by_name_;
};

Scheme make_scheme(std::vector<AttrId> attrs);
bool scheme_subset(const Scheme& sub, const Scheme& super);
Scheme scheme_union(const Scheme& a, const Scheme& b);
Scheme scheme_intersect(const Scheme& a, const Scheme& b);
Scheme scheme_minus(const Scheme& a, const Scheme& b);
/// Index of attr within scheme, or throws.
std::size_t scheme_pos(const Scheme& s, AttrId attr);

using Row = std::vector<Value>;

/// A tuple with an explicit scheme (rows inside a Relation share the
/// relation's scheme instead).
struct Tuple {
    Scheme scheme;  // sorted
    Row values;     // aligned to scheme

    Value at(AttrId attr) const { return values[scheme_pos(scheme, attr)]; }
};

/// Projection of t onto v (v must be a subset of t's scheme).
Tuple project(const Tuple& t, const Scheme& v);

/// Set of tuples over a fixed scheme. Rows are kept sorted and duplicate-free
/// so equality tests and iteration order are deterministic.
class Relation {
public:
    Relation() = default;
    Relation(Scheme scheme, std::vector<Row> rows);

    const Scheme& scheme() const { return scheme_; }
    const std::vector<Row>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    std::size_t arity() const { return scheme_.size(); }
    bool empty() const { return rows_.empty(); }
    bool contains(const Row& row) const;

    bool operator==(const Relation& other) const {
        return scheme_ == other.scheme_ && rows_ == other.rows_;
    }

private:
    Scheme scheme_;
    std::vector<Row> rows_;
};

/// Subset of r whose tuples take a value from `allowed` (sorted) on x.
Relation semijoin_filter(const Relation& r, AttrId x, const std::vector<Value>& allowed);

/// A set of relations with pairwise distinct schemes ("simple" query).
class JoinQuery {
public:
    JoinQuery() = default;
    explicit JoinQuery(std::vector<Relation> relations);

    const std::vector<Relation>& relations() const { return relations_; }
    const Relation& relation(std::size_t i) const { return relations_.at(i); }
    std::size_t count() const { return relations_.size(); }

    Scheme attset() const;
    std::uint64_t input_size() const;  // m
    bool is_binary() const;

    /// Index of the relation with this scheme, if any.
    std::optional<std::size_t> find_scheme(const Scheme& s) const;

private:
    std::vector<Relation> relations_;
};

}  // namespace mpcjoin
