#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clonelab/relation.hpp"

namespace clonelab {

// A finite domain with named relations, kept in insertion order so that
// reports and file formats stay deterministic.
class Structure {
public:
    explicit Structure(int dom);

    void add(std::string name, Relation rel);
    bool has(std::string_view name) const { return find(name) != nullptr; }
    const Relation* find(std::string_view name) const;
    const Relation& at(std::string_view name) const;

    int dom() const { return dom_; }
    const std::vector<std::pair<std::string, Relation>>& relations() const { return rels_; }
    std::size_t size() const { return rels_.size(); }

    // Same relation names with the same arities, in any order.
    bool same_signature(const Structure& other) const;

    bool operator==(const Structure&) const = default;

private:
    int dom_;
    std::vector<std::pair<std::string, Relation>> rels_;
};

// Adds the singleton relations U0..U{d-1} (skipping names already present).
Structure expand_with_singletons(const Structure& s);
std::string singleton_name(Value v);

} // namespace clonelab
