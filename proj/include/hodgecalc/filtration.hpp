#pragma once

#include "hodgecalc/subspace.hpp"

namespace hodgecalc {

/// Finite nested family of subspaces indexed by rationals.
/// Increasing: each step contains its predecessors; decreasing: the reverse.
class FlagFiltration {
public:
    FlagFiltration() = default;
    FlagFiltration(size_t ambient_dim, bool increasing = true)
        : ambient_(ambient_dim), increasing_(increasing) {}

    /// Steps must be passed with strictly increasing indices; nesting is checked.
    static FlagFiltration from_steps(size_t ambient_dim, bool increasing,
                                     std::vector<std::pair<Rational, Subspace>> steps);

    size_t ambient_dim() const { return ambient_; }
    bool increasing() const { return increasing_; }
    const std::vector<std::pair<Rational, Subspace>>& steps() const { return steps_; }
    bool is_exhaustive() const { return !steps_.empty() && biggest().is_full(); }

    /// Increasing: union of steps with index <= idx. Decreasing: steps with index >= idx.
    Subspace at(const Rational& idx) const;

    /// Largest member (last step if increasing, first if decreasing); zero if empty.
    const Subspace& biggest() const;

    bool operator==(const FlagFiltration& o) const {
        return ambient_ == o.ambient_ && increasing_ == o.increasing_ && steps_ == o.steps_;
    }

    /// Same step function (jump positions with zero-dimensional jumps removed).
    bool same_filtration(const FlagFiltration& o) const;

    /// dim at(idx) - dim at(previous index); indices where the dimension jumps.
    std::vector<std::pair<Rational, size_t>> graded_dims() const;

private:
    size_t ambient_ = 0;
    bool increasing_ = true;
    std::vector<std::pair<Rational, Subspace>> steps_; // indices strictly increasing
};

} // namespace hodgecalc
