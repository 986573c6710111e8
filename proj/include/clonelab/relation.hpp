#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "clonelab/fdtypes.hpp"

namespace clonelab {

// A finite relation of fixed arity, stored as a bitset over base-d encoded
// tuples. Unlike operations, relations may live over pp-power domains, so d
// is only bounded by the encodable universe size.
class Relation {
public:
    Relation(int dom, int arity);
    static Relation from_tuples(int dom, int arity, std::initializer_list<std::initializer_list<Value>> tuples);
    static Relation full(int dom, int arity);

    int dom() const { return dom_; }
    int arity() const { return arity_; }
    std::size_t universe() const { return universe_; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }

    void add_index(std::size_t idx);
    void add(std::span<const Value> t) { add_index(encode_tuple_checked(t)); }
    void add(std::initializer_list<Value> t) { add(std::span<const Value>(t.begin(), t.size())); }
    bool contains_index(std::size_t idx) const
    {
        return (bits_[idx >> 6] >> (idx & 63)) & 1u;
    }
    bool contains(std::span<const Value> t) const { return contains_index(encode_tuple_checked(t)); }
    bool contains(std::initializer_list<Value> t) const
    {
        return contains(std::span<const Value>(t.begin(), t.size()));
    }

    // Member tuples in increasing encoding order.
    std::vector<Tuple> tuples() const;
    template <typename F>
    void for_each_index(F&& f) const
    {
        for (std::size_t w = 0; w < bits_.size(); ++w) {
            std::uint64_t word = bits_[w];
            while (word) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(word));
                f((w << 6) | b);
                word &= word - 1;
            }
        }
    }

    bool operator==(const Relation&) const = default;

private:
    std::size_t encode_tuple_checked(std::span<const Value> t) const;

    int dom_;
    int arity_;
    std::size_t universe_;
    std::vector<std::uint64_t> bits_;
};

// { (sigma(x_1), ..., sigma(x_n)) | x in R } for a bijection sigma.
Relation rel_dual(const Relation& r, std::span<const Value> sigma);

} // namespace clonelab
