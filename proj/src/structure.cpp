#include "clonelab/structure.hpp"

#include <algorithm>

namespace clonelab {

Structure::Structure(int dom)
    : dom_(dom)
{
    if (dom < 2)
        throw domain_error("Structure: domain size must be at least 2");
}

void Structure::add(std::string name, Relation rel)
{
    if (rel.dom() != dom_)
        throw domain_error("Structure: relation '" + name + "' has mismatched domain");
    if (has(name))
        throw domain_error("Structure: duplicate relation name '" + name + "'");
    rels_.emplace_back(std::move(name), std::move(rel));
}

const Relation* Structure::find(std::string_view name) const
{
    for (const auto& [n, r] : rels_)
        if (n == name)
            return &r;
    return nullptr;
}

const Relation& Structure::at(std::string_view name) const
{
    if (const Relation* r = find(name))
        return *r;
    throw domain_error("Structure: unknown relation '" + std::string(name) + "'");
}

bool Structure::same_signature(const Structure& other) const
{
    if (rels_.size() != other.rels_.size())
        return false;
    for (const auto& [name, rel] : rels_) {
        const Relation* o = other.find(name);
        if (!o || o->arity() != rel.arity())
            return false;
    }
    return true;
}

std::string singleton_name(Value v)
{
    return "U" + std::to_string(int(v));
}

Structure expand_with_singletons(const Structure& s)
{
    Structure out = s;
    for (int v = 0; v < s.dom(); ++v) {
        std::string name = singleton_name(static_cast<Value>(v));
        if (out.has(name))
            continue;
        Relation u(s.dom(), 1);
        u.add_index(static_cast<std::size_t>(v));
        out.add(std::move(name), std::move(u));
    }
    return out;
}

} // namespace clonelab
