#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "clonelab/fdtypes.hpp"

namespace clonelab {

// A total finitary operation on {0..d-1}, stored as a value table indexed by
// the base-d encoding of the argument tuple. Immutable after construction.
class Operation {
public:
    Operation(int dom, int arity, std::vector<Value> table);

    static Operation projection(int dom, int arity, int arg); // arg is 0-based
    static Operation constant(int dom, Value v);              // arity 0
    static Operation from_function(int dom, int arity, const std::function<Value(std::span<const Value>)>& f);

    int dom() const { return dom_; }
    int arity() const { return arity_; }
    const std::vector<Value>& table() const { return table_; }

    Value at_index(std::size_t idx) const { return table_[idx]; }
    Value eval(std::span<const Value> args) const;
    Value eval(std::initializer_list<Value> args) const
    {
        return eval(std::span<const Value>(args.begin(), args.size()));
    }

    bool operator==(const Operation&) const = default;
    bool operator<(const Operation& o) const
    {
        if (arity_ != o.arity_)
            return arity_ < o.arity_;
        return table_ < o.table_;
    }

private:
    int dom_;
    int arity_;
    std::vector<Value> table_;
};

// f_pi(a_0..a_{r-1}) = f(a_{pi[0]}, ..., a_{pi[n-1]}); pi maps argument
// positions of f into positions of the result (0-based).
Operation op_minor(const Operation& f, std::span<const int> pi, int target_arity);

// h(a) = f(g_0(a), ..., g_{k-1}(a)); all g share arity and domain.
Operation op_compose(const Operation& f, std::span<const Operation> gs);

// f^(sigma)(x) = sigma(f(sigma^-1(x_1), ..., sigma^-1(x_n))).
Operation op_dual(const Operation& f, std::span<const Value> sigma);

std::optional<int> op_projection_index(const Operation& f); // 0-based
bool op_is_idempotent(const Operation& f);

// Restriction of f to a subset of the domain, re-indexed as 0..|subset|-1.
// Throws unless f maps subset-tuples into the subset.
Operation op_restrict(const Operation& f, std::span<const Value> subset);

} // namespace clonelab
