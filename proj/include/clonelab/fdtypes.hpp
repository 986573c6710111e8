#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace clonelab {

// Domain elements are 0..d-1. Operation tables are capped at 9^8 entries;
// relations over pp-power domains may use a larger d, bounded only by the
// encodable universe size.
using Value = std::uint8_t;
using Tuple = std::vector<Value>;

inline constexpr int max_operation_domain = 9;
inline constexpr int max_operation_arity = 8;
inline constexpr std::size_t max_relation_universe = std::size_t{1} << 28;

class domain_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// d^k with an overflow/size guard.
inline std::size_t checked_pow(int dom, int arity, std::size_t limit = max_relation_universe)
{
    if (dom < 1 || arity < 0)
        throw domain_error("checked_pow: bad domain or arity");
    std::size_t r = 1;
    for (int i = 0; i < arity; ++i) {
        if (r > limit / static_cast<std::size_t>(dom))
            throw domain_error("checked_pow: universe too large (" + std::to_string(dom) + "^" + std::to_string(arity) + ")");
        r *= static_cast<std::size_t>(dom);
    }
    return r;
}

// Tuple encoding is base-d with the first coordinate most significant.
// File formats, bitsets and pp-power element codes all rely on this order.
inline std::size_t encode_tuple(std::span<const Value> t, int dom)
{
    std::size_t idx = 0;
    for (Value v : t) {
        if (v >= dom)
            throw domain_error("encode_tuple: value " + std::to_string(int(v)) + " out of domain " + std::to_string(dom));
        idx = idx * static_cast<std::size_t>(dom) + v;
    }
    return idx;
}

inline void decode_tuple(std::size_t idx, int dom, int arity, std::span<Value> out)
{
    for (int i = arity - 1; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = static_cast<Value>(idx % static_cast<std::size_t>(dom));
        idx /= static_cast<std::size_t>(dom);
    }
}

inline Tuple decode_tuple(std::size_t idx, int dom, int arity)
{
    Tuple t(static_cast<std::size_t>(arity));
    decode_tuple(idx, dom, arity, t);
    return t;
}

// Odometer over {0..dom-1}^len; the last coordinate advances fastest, so
// successive tuples have successive encodings.
inline bool next_tuple(std::span<Value> t, int dom)
{
    for (std::size_t i = t.size(); i-- > 0;) {
        if (++t[i] < dom)
            return true;
        t[i] = 0;
    }
    return false;
}

} // namespace clonelab
