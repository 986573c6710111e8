#include "clonelab/relation.hpp"

#include <bit>
#include <numeric>
#include <string>

namespace clonelab {

Relation::Relation(int dom, int arity)
    : dom_(dom), arity_(arity)
{
    if (dom < 2)
        throw domain_error("Relation: domain size must be at least 2");
    if (arity < 1)
        throw domain_error("Relation: arity must be positive");
    universe_ = checked_pow(dom, arity);
    bits_.assign((universe_ + 63) / 64, 0);
}

Relation Relation::from_tuples(int dom, int arity, std::initializer_list<std::initializer_list<Value>> tuples)
{
    Relation r(dom, arity);
    for (const auto& t : tuples)
        r.add(std::span<const Value>(t.begin(), t.size()));
    return r;
}

Relation Relation::full(int dom, int arity)
{
    Relation r(dom, arity);
    for (std::size_t i = 0; i < r.universe_; ++i)
        r.add_index(i);
    return r;
}

std::size_t Relation::count() const
{
    std::size_t n = 0;
    for (std::uint64_t w : bits_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

void Relation::add_index(std::size_t idx)
{
    if (idx >= universe_)
        throw domain_error("Relation: tuple index out of range");
    bits_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
}

std::size_t Relation::encode_tuple_checked(std::span<const Value> t) const
{
    if (static_cast<int>(t.size()) != arity_)
        throw domain_error("Relation: tuple arity mismatch");
    return encode_tuple(t, dom_);
}

std::vector<Tuple> Relation::tuples() const
{
    std::vector<Tuple> out;
    out.reserve(count());
    for_each_index([&](std::size_t idx) { out.push_back(decode_tuple(idx, dom_, arity_)); });
    return out;
}

Relation rel_dual(const Relation& r, std::span<const Value> sigma)
{
    if (static_cast<int>(sigma.size()) != r.dom())
        throw domain_error("rel_dual: permutation length does not match domain");
    std::vector<bool> seen(sigma.size(), false);
    for (Value v : sigma) {
        if (v >= r.dom() || seen[v])
            throw domain_error("rel_dual: not a bijection");
        seen[v] = true;
    }
    Relation out(r.dom(), r.arity());
    Tuple mapped(static_cast<std::size_t>(r.arity()));
    r.for_each_index([&](std::size_t idx) {
        Tuple t = decode_tuple(idx, r.dom(), r.arity());
        for (std::size_t i = 0; i < t.size(); ++i)
            mapped[i] = sigma[t[i]];
        out.add(mapped);
    });
    return out;
}

} // namespace clonelab
