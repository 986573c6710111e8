#include "clonelab/operation.hpp"

#include <algorithm>
#include <string>

namespace clonelab {

Operation::Operation(int dom, int arity, std::vector<Value> table)
    : dom_(dom), arity_(arity), table_(std::move(table))
{
    if (dom < 2 || dom > max_operation_domain)
        throw domain_error("Operation: domain size " + std::to_string(dom) + " outside 2.." + std::to_string(max_operation_domain));
    if (arity < 0 || arity > max_operation_arity)
        throw domain_error("Operation: arity " + std::to_string(arity) + " outside 0.." + std::to_string(max_operation_arity));
    if (table_.size() != checked_pow(dom, arity))
        throw domain_error("Operation: table size " + std::to_string(table_.size()) + " does not match " + std::to_string(dom) + "^" + std::to_string(arity));
    for (Value v : table_)
        if (v >= dom)
            throw domain_error("Operation: table entry " + std::to_string(int(v)) + " out of domain");
}

Operation Operation::projection(int dom, int arity, int arg)
{
    if (arg < 0 || arg >= arity)
        throw domain_error("projection: argument index out of range");
    std::vector<Value> table(checked_pow(dom, arity));
    Tuple t(static_cast<std::size_t>(arity), 0);
    std::size_t idx = 0;
    do {
        table[idx++] = t[static_cast<std::size_t>(arg)];
    } while (next_tuple(t, dom));
    return Operation(dom, arity, std::move(table));
}

Operation Operation::constant(int dom, Value v)
{
    return Operation(dom, 0, {v});
}

Operation Operation::from_function(int dom, int arity, const std::function<Value(std::span<const Value>)>& f)
{
    std::vector<Value> table(checked_pow(dom, arity));
    Tuple t(static_cast<std::size_t>(arity), 0);
    std::size_t idx = 0;
    do {
        table[idx++] = f(t);
    } while (next_tuple(t, dom));
    return Operation(dom, arity, std::move(table));
}

Value Operation::eval(std::span<const Value> args) const
{
    if (static_cast<int>(args.size()) != arity_)
        throw domain_error("Operation::eval: expected " + std::to_string(arity_) + " arguments, got " + std::to_string(args.size()));
    return table_[encode_tuple(args, dom_)];
}

Operation op_minor(const Operation& f, std::span<const int> pi, int target_arity)
{
    if (static_cast<int>(pi.size()) != f.arity())
        throw domain_error("op_minor: map length does not match arity");
    for (int im : pi)
        if (im < 0 || im >= target_arity)
            throw domain_error("op_minor: map image out of range");
    const int dom = f.dom();
    std::vector<Value> table(checked_pow(dom, target_arity));
    Tuple a(static_cast<std::size_t>(target_arity), 0);
    Tuple args(pi.size());
    std::size_t idx = 0;
    do {
        for (std::size_t i = 0; i < pi.size(); ++i)
            args[i] = a[static_cast<std::size_t>(pi[i])];
        table[idx++] = f.table()[encode_tuple(args, dom)];
    } while (next_tuple(a, dom));
    return Operation(dom, target_arity, std::move(table));
}

Operation op_compose(const Operation& f, std::span<const Operation> gs)
{
    if (static_cast<int>(gs.size()) != f.arity())
        throw domain_error("op_compose: need exactly arity(f) inner operations");
    if (gs.empty())
        return f; // arity-0 f is already the composite
    const int dom = f.dom();
    const int m = gs.front().arity();
    for (const Operation& g : gs)
        if (g.dom() != dom || g.arity() != m)
            throw domain_error("op_compose: inner operations must share domain and arity");
    std::vector<Value> table(checked_pow(dom, m));
    Tuple a(static_cast<std::size_t>(m), 0);
    Tuple inner(gs.size());
    std::size_t idx = 0;
    do {
        std::size_t aidx = encode_tuple(a, dom);
        for (std::size_t i = 0; i < gs.size(); ++i)
            inner[i] = gs[i].table()[aidx];
        table[idx++] = f.table()[encode_tuple(inner, dom)];
    } while (next_tuple(a, dom));
    return Operation(dom, m, std::move(table));
}

Operation op_dual(const Operation& f, std::span<const Value> sigma)
{
    const int dom = f.dom();
    if (static_cast<int>(sigma.size()) != dom)
        throw domain_error("op_dual: permutation length does not match domain");
    std::vector<Value> inverse(sigma.size(), Value(dom));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        if (sigma[i] >= dom || inverse[sigma[i]] != Value(dom))
            throw domain_error("op_dual: not a bijection");
        inverse[sigma[i]] = static_cast<Value>(i);
    }
    std::vector<Value> table(f.table().size());
    Tuple x(static_cast<std::size_t>(f.arity()), 0);
    Tuple pre(x.size());
    std::size_t idx = 0;
    do {
        for (std::size_t i = 0; i < x.size(); ++i)
            pre[i] = inverse[x[i]];
        table[idx++] = sigma[f.table()[encode_tuple(pre, dom)]];
    } while (next_tuple(x, dom));
    return Operation(dom, f.arity(), std::move(table));
}

std::optional<int> op_projection_index(const Operation& f)
{
    for (int arg = 0; arg < f.arity(); ++arg) {
        Tuple t(static_cast<std::size_t>(f.arity()), 0);
        std::size_t idx = 0;
        bool match = true;
        do {
            if (f.table()[idx++] != t[static_cast<std::size_t>(arg)]) {
                match = false;
                break;
            }
        } while (next_tuple(t, f.dom()));
        if (match)
            return arg;
    }
    return std::nullopt;
}

bool op_is_idempotent(const Operation& f)
{
    Tuple t(static_cast<std::size_t>(f.arity()));
    for (Value v = 0; v < f.dom(); ++v) {
        std::fill(t.begin(), t.end(), v);
        if (f.table()[encode_tuple(t, f.dom())] != v)
            return false;
    }
    return true;
}

Operation op_restrict(const Operation& f, std::span<const Value> subset)
{
    const int d = static_cast<int>(subset.size());
    if (d < 2)
        throw domain_error("op_restrict: subset must have at least two elements");
    std::vector<int> back(static_cast<std::size_t>(f.dom()), -1);
    for (int i = 0; i < d; ++i) {
        if (subset[static_cast<std::size_t>(i)] >= f.dom())
            throw domain_error("op_restrict: subset element out of domain");
        back[subset[static_cast<std::size_t>(i)]] = i;
    }
    std::vector<Value> table(checked_pow(d, f.arity()));
    Tuple small(static_cast<std::size_t>(f.arity()), 0);
    Tuple big(small.size());
    std::size_t idx = 0;
    do {
        for (std::size_t i = 0; i < small.size(); ++i)
            big[i] = subset[small[i]];
        Value out = f.table()[encode_tuple(big, f.dom())];
        if (back[out] < 0)
            throw domain_error("op_restrict: operation does not preserve the subset");
        table[idx++] = static_cast<Value>(back[out]);
    } while (next_tuple(small, d));
    return Operation(d, f.arity(), std::move(table));
}

} // namespace clonelab
