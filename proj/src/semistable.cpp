#include "schubert/semistable.hpp"

#include <algorithm>
#include <string>

namespace schubert {

namespace {

void require_coprime(const GrassmannianContext& ctx) {
    if (!ctx.coprime) {
        throw std::invalid_argument("semistability requires coprime r and n, got r=" +
                                    std::to_string(ctx.r) + ", n=" + std::to_string(ctx.n));
    }
}

void require_in_context(const ColumnTuple& w, const GrassmannianContext& ctx) {
    if (w.r() != ctx.r || w.n() != ctx.n) {
        throw std::invalid_argument("tuple does not belong to G(" + std::to_string(ctx.r) + "," +
                                    std::to_string(ctx.n) + ")");
    }
}

// Depth-first search for a witness chain. Chain elements are generated in
// lexicographic order; rem[v] counts how many occurrences of column index v
// are still owed. Two transport bounds prune: values whose admissible
// positions form an empty interval kill the branch, and the values confined
// to positions <= i (resp. >= i) may not exceed slots*i (resp. slots*(r-i+1))
// occurrences in the remaining slots.
class WitnessSearch {
public:
    WitnessSearch(const ColumnTuple& w, int degree)
        : bound_(w),
          n_(w.n()),
          r_(w.r()),
          length_(degree * w.n()),
          rem_(static_cast<std::size_t>(w.n()) + 1, degree * w.r()),
          current_(static_cast<std::size_t>(w.r())),
          floor_(static_cast<std::size_t>(w.r())) {
        rem_[0] = 0;
        for (int i = 0; i < r_; ++i) floor_[static_cast<std::size_t>(i)] = i + 1;
    }

    std::optional<std::vector<ColumnTuple>> run() {
        if (extend(0)) return chain_;
        return std::nullopt;
    }

private:
    const std::vector<int>& last(int t) const {
        return t == 0 ? floor_ : chain_.back().entries();
    }

    bool feasible(int t) const {
        const std::vector<int>& lo = last(t);
        const int slots = length_ - t;
        std::vector<int> need_low(static_cast<std::size_t>(r_) + 1, 0);
        std::vector<int> need_high(static_cast<std::size_t>(r_) + 2, 0);
        for (int v = 1; v <= n_; ++v) {
            const int owed = rem_[static_cast<std::size_t>(v)];
            if (owed == 0) continue;
            if (owed > slots) return false;
            // admissible positions for v form the interval [imin, imax]
            int imin = r_ + 1;
            for (int i = 1; i <= r_; ++i) {
                if (v <= bound_.entry(i)) {
                    imin = i;
                    break;
                }
            }
            int imax = 0;
            for (int i = r_; i >= 1; --i) {
                if (lo[static_cast<std::size_t>(i - 1)] <= v) {
                    imax = i;
                    break;
                }
            }
            if (imin > imax) return false;
            need_low[static_cast<std::size_t>(imax)] += owed;
            need_high[static_cast<std::size_t>(imin)] += owed;
        }
        int below = 0;
        for (int i = 1; i <= r_; ++i) {
            below += need_low[static_cast<std::size_t>(i)];
            if (below > slots * i) return false;
        }
        int above = 0;
        for (int i = r_; i >= 1; --i) {
            above += need_high[static_cast<std::size_t>(i)];
            if (above > slots * (r_ - i + 1)) return false;
        }
        return true;
    }

    bool extend(int t) {
        if (t == length_) return true;
        if (!feasible(t)) return false;
        return place(t, 1, 0);
    }

    bool place(int t, int i, int prev) {
        if (i > r_) {
            chain_.emplace_back(current_, n_);
            if (extend(t + 1)) return true;
            chain_.pop_back();
            return false;
        }
        const int from = std::max(last(t)[static_cast<std::size_t>(i - 1)], prev + 1);
        for (int v = from; v <= bound_.entry(i); ++v) {
            int& owed = rem_[static_cast<std::size_t>(v)];
            if (owed == 0) continue;
            --owed;
            current_[static_cast<std::size_t>(i - 1)] = v;
            if (place(t, i + 1, v)) return true;
            ++owed;
        }
        return false;
    }

    ColumnTuple bound_;
    int n_;
    int r_;
    int length_;
    std::vector<int> rem_;
    std::vector<int> current_;
    std::vector<int> floor_;
    std::vector<ColumnTuple> chain_;
};

}  // namespace

ColumnTuple minimal_semistable(const GrassmannianContext& ctx) {
    require_coprime(ctx);
    std::vector<int> entries(static_cast<std::size_t>(ctx.r));
    for (int i = 1; i <= ctx.r; ++i) {
        entries[static_cast<std::size_t>(i - 1)] = (i * ctx.n + ctx.r - 1) / ctx.r;
    }
    return ColumnTuple(std::move(entries), ctx.n);
}

bool is_semistable_nonempty(const ColumnTuple& w, const GrassmannianContext& ctx) {
    require_coprime(ctx);
    require_in_context(w, ctx);
    return bruhat_leq(minimal_semistable(ctx), w);
}

std::optional<SemistableWitness> semistable_witness(const ColumnTuple& w,
                                                    const GrassmannianContext& ctx, int degree) {
    require_coprime(ctx);
    require_in_context(w, ctx);
    if (degree < 1) throw std::invalid_argument("witness degree must be positive");
    WitnessSearch search(w, degree);
    auto chain = search.run();
    if (!chain) return std::nullopt;
    return SemistableWitness{std::move(*chain), degree};
}

}  // namespace schubert
