#include "hodgecalc/filtration.hpp"

namespace hodgecalc {

FlagFiltration FlagFiltration::from_steps(size_t ambient_dim, bool increasing,
                                          std::vector<std::pair<Rational, Subspace>> steps) {
    FlagFiltration f(ambient_dim, increasing);
    for (size_t k = 0; k < steps.size(); ++k) {
        if (steps[k].second.ambient_dim() != ambient_dim)
            throw dimension_error("filtration step: ambient mismatch");
        if (k > 0) {
            if (!(steps[k - 1].first < steps[k].first))
                throw dimension_error("filtration: indices not strictly increasing");
            const Subspace& lo = increasing ? steps[k - 1].second : steps[k].second;
            const Subspace& hi = increasing ? steps[k].second : steps[k - 1].second;
            if (!hi.contains(lo)) throw dimension_error("filtration: steps not nested");
        }
    }
    f.steps_ = std::move(steps);
    return f;
}

Subspace FlagFiltration::at(const Rational& idx) const {
    if (increasing_) {
        const Subspace* best = nullptr;
        for (const auto& [i, s] : steps_) {
            if (i > idx) break;
            best = &s;
        }
        return best ? *best : Subspace::zero(ambient_);
    }
    for (const auto& [i, s] : steps_)
        if (i >= idx) return s;
    return Subspace::zero(ambient_);
}

const Subspace& FlagFiltration::biggest() const {
    static const Subspace empty;
    if (steps_.empty()) return empty;
    return increasing_ ? steps_.back().second : steps_.front().second;
}

std::vector<std::pair<Rational, size_t>> FlagFiltration::graded_dims() const {
    std::vector<std::pair<Rational, size_t>> out;
    size_t prev = 0;
    if (increasing_) {
        for (const auto& [i, s] : steps_) {
            if (s.dim() > prev) out.emplace_back(i, s.dim() - prev);
            prev = s.dim();
        }
    } else {
        for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
            if (it->second.dim() > prev) out.emplace_back(it->first, it->second.dim() - prev);
            prev = it->second.dim();
        }
    }
    return out;
}

bool FlagFiltration::same_filtration(const FlagFiltration& o) const {
    if (ambient_ != o.ambient_ || increasing_ != o.increasing_) return false;
    // keep only the index at which each distinct value first becomes visible to at()
    auto canonical = [](const FlagFiltration& f) {
        std::vector<std::pair<Rational, Subspace>> out;
        if (f.increasing_) {
            for (const auto& st : f.steps_) {
                if (st.second.is_zero()) continue;
                if (out.empty() || !(out.back().second == st.second)) out.push_back(st);
            }
        } else {
            for (auto it = f.steps_.rbegin(); it != f.steps_.rend(); ++it) {
                if (it->second.is_zero()) continue;
                if (out.empty() || !(out.back().second == it->second)) out.push_back(*it);
            }
        }
        return out;
    };
    return canonical(*this) == canonical(o);
}

} // namespace hodgecalc
