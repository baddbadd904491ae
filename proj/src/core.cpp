#include "schubert/core.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace schubert {

namespace {

std::string tuple_text(const std::vector<int>& values) {
    std::string s = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(values[i]);
    }
    return s + ")";
}

void require_same_shape(const ColumnTuple& u, const ColumnTuple& v) {
    if (u.r() != v.r() || u.n() != v.n()) {
        throw std::invalid_argument(
            "tuples live in different Grassmannians: " + tuple_text(u.entries()) + " in G(" +
            std::to_string(u.r()) + "," + std::to_string(u.n()) + ") vs " +
            tuple_text(v.entries()) + " in G(" + std::to_string(v.r()) + "," +
            std::to_string(v.n()) + ")");
    }
}

}  // namespace

GrassmannianContext make_context(int r, int n) {
    if (r < 1) throw std::invalid_argument("r must be positive, got " + std::to_string(r));
    if (n <= r) {
        throw std::invalid_argument("need r < n, got r=" + std::to_string(r) +
                                    ", n=" + std::to_string(n));
    }
    return GrassmannianContext{r, n, std::gcd(r, n) == 1};
}

ColumnTuple::ColumnTuple(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
    if (entries_.empty()) throw std::invalid_argument("column tuple must be nonempty");
    if (static_cast<int>(entries_.size()) > n_) {
        throw std::invalid_argument("column tuple longer than n=" + std::to_string(n_));
    }
    int prev = 0;
    for (int b : entries_) {
        if (b <= prev) {
            throw std::invalid_argument("column tuple " + tuple_text(entries_) +
                                        " is not strictly increasing in [1," +
                                        std::to_string(n_) + "]");
        }
        prev = b;
    }
    if (entries_.back() > n_) {
        throw std::invalid_argument("column tuple " + tuple_text(entries_) + " exceeds n=" +
                                    std::to_string(n_));
    }
}

bool ColumnTuple::contains(int value) const {
    return std::binary_search(entries_.begin(), entries_.end(), value);
}

PartitionShape::PartitionShape(std::vector<int> parts, int n) : parts_(std::move(parts)), n_(n) {
    if (parts_.empty()) throw std::invalid_argument("partition shape must be nonempty");
    if (static_cast<int>(parts_.size()) > n_) {
        throw std::invalid_argument("partition shape longer than n=" + std::to_string(n_));
    }
    int prev = 0;
    for (int p : parts_) {
        if (p < prev) {
            throw std::invalid_argument("partition shape " + tuple_text(parts_) +
                                        " is not non-decreasing");
        }
        prev = p;
    }
    if (parts_.front() < 0 || parts_.back() > max_part()) {
        throw std::invalid_argument("partition shape " + tuple_text(parts_) +
                                    " does not fit the " + std::to_string(r()) + " x " +
                                    std::to_string(max_part()) + " box");
    }
}

int PartitionShape::box_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

PartitionShape to_partition(const ColumnTuple& w) {
    std::vector<int> parts(static_cast<std::size_t>(w.r()));
    for (int i = 1; i <= w.r(); ++i) {
        parts[static_cast<std::size_t>(i - 1)] = w.entry(i) - i;
    }
    return PartitionShape(std::move(parts), w.n());
}

ColumnTuple from_partition(const PartitionShape& shape) {
    std::vector<int> entries(static_cast<std::size_t>(shape.r()));
    for (int i = 1; i <= shape.r(); ++i) {
        entries[static_cast<std::size_t>(i - 1)] = shape.part(i) + i;
    }
    return ColumnTuple(std::move(entries), shape.n());
}

bool bruhat_leq(const ColumnTuple& u, const ColumnTuple& v) {
    require_same_shape(u, v);
    for (int i = 1; i <= u.r(); ++i) {
        if (u.entry(i) > v.entry(i)) return false;
    }
    return true;
}

RunEncoding run_length(const PartitionShape& shape) {
    RunEncoding enc;
    for (int p : shape.parts()) {
        if (p == 0) continue;
        if (!enc.runs.empty() && enc.runs.back().part == p) {
            ++enc.runs.back().multiplicity;
        } else {
            enc.runs.push_back({p, 1});
        }
    }
    return enc;
}

std::vector<ColumnTuple> enumerate_interval(const ColumnTuple& lo, const ColumnTuple& hi) {
    require_same_shape(lo, hi);
    const int r = lo.r();
    std::vector<ColumnTuple> out;
    std::vector<int> current(static_cast<std::size_t>(r));

    auto extend = [&](auto&& self, int i) -> void {
        if (i > r) {
            out.emplace_back(current, lo.n());
            return;
        }
        int from = std::max(lo.entry(i), i > 1 ? current[static_cast<std::size_t>(i - 2)] + 1 : 1);
        for (int b = from; b <= hi.entry(i); ++b) {
            current[static_cast<std::size_t>(i - 1)] = b;
            self(self, i + 1);
        }
    };
    extend(extend, 1);
    return out;
}

ColumnTuple identity_tuple(const GrassmannianContext& ctx) {
    std::vector<int> entries(static_cast<std::size_t>(ctx.r));
    std::iota(entries.begin(), entries.end(), 1);
    return ColumnTuple(std::move(entries), ctx.n);
}

ColumnTuple top_tuple(const GrassmannianContext& ctx) {
    std::vector<int> entries(static_cast<std::size_t>(ctx.r));
    std::iota(entries.begin(), entries.end(), ctx.n - ctx.r + 1);
    return ColumnTuple(std::move(entries), ctx.n);
}

std::vector<ColumnTuple> all_tuples(const GrassmannianContext& ctx) {
    return enumerate_interval(identity_tuple(ctx), top_tuple(ctx));
}

}  // namespace schubert
