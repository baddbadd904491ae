#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

// Index combinatorics of the Grassmannian G(r,n): column tuples in I(r,n),
// their Young diagrams, the componentwise Bruhat order, run-length encodings
// of diagram rows, and interval enumeration. Everything here is exact integer
// arithmetic on immutable values.

namespace schubert {

// Thrown when two routes that a theorem forces to agree disagree.
// This always indicates a bug, never bad input; it must not be swallowed.
class integrity_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct GrassmannianContext {
    int r = 0;
    int n = 0;
    bool coprime = false;
};

// Validates 1 <= r < n and computes the coprimality flag.
GrassmannianContext make_context(int r, int n);

// Element of I(r,n): column indices b_1 < b_2 < ... < b_r, each in [1,n].
// Ordering is lexicographic on the entries; the Bruhat (componentwise) order
// is the separate predicate bruhat_leq below.
class ColumnTuple {
public:
    ColumnTuple(std::vector<int> entries, int n);

    int r() const { return static_cast<int>(entries_.size()); }
    int n() const { return n_; }
    const std::vector<int>& entries() const { return entries_; }

    // 1-based access, matching the b_i notation.
    int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

    bool contains(int value) const;

    bool operator==(const ColumnTuple&) const = default;
    auto operator<=>(const ColumnTuple&) const = default;

private:
    std::vector<int> entries_;
    int n_;
};

// Young diagram of a Schubert variety: row counts 0 <= p_1 <= ... <= p_r,
// each at most n-r. Rows are numbered 1..r from the bottom; renderers decide
// display orientation.
class PartitionShape {
public:
    PartitionShape(std::vector<int> parts, int n);

    int r() const { return static_cast<int>(parts_.size()); }
    int n() const { return n_; }
    int max_part() const { return n_ - r(); }
    const std::vector<int>& parts() const { return parts_; }

    // 1-based access to the row length lambda_i.
    int part(int i) const { return parts_[static_cast<std::size_t>(i - 1)]; }

    int box_count() const;

    bool operator==(const PartitionShape&) const = default;

private:
    std::vector<int> parts_;
    int n_;
};

// Nonzero parts grouped as (p_1^{q_1}, ..., p_k^{q_k}) with p_1 < ... < p_k.
struct RunEncoding {
    struct Run {
        int part = 0;
        int multiplicity = 0;
        bool operator==(const Run&) const = default;
    };
    std::vector<Run> runs;

    int distinct_parts() const { return static_cast<int>(runs.size()); }
    bool operator==(const RunEncoding&) const = default;
};

// lambda_i = b_i - i. Inverse of from_partition.
PartitionShape to_partition(const ColumnTuple& w);

// b_i = lambda_i + i. Inverse of to_partition.
ColumnTuple from_partition(const PartitionShape& shape);

// Componentwise order on I(r,n); throws on mismatched r or n.
bool bruhat_leq(const ColumnTuple& u, const ColumnTuple& v);

RunEncoding run_length(const PartitionShape& shape);

// All v with lo <= v <= hi componentwise, in lexicographic order.
// An incomparable pair yields the empty interval.
std::vector<ColumnTuple> enumerate_interval(const ColumnTuple& lo, const ColumnTuple& hi);

ColumnTuple identity_tuple(const GrassmannianContext& ctx);  // (1, 2, ..., r)
ColumnTuple top_tuple(const GrassmannianContext& ctx);       // (n-r+1, ..., n)

// All of I(r,n) in lexicographic order.
std::vector<ColumnTuple> all_tuples(const GrassmannianContext& ctx);

}  // namespace schubert
