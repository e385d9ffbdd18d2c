#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "equitree/graph.hpp"

namespace equitree {

// Per-class degree bound: a finite t >= 1 or no bound at all.
class DegreeBound {
public:
    static DegreeBound finite(int t);
    static DegreeBound unbounded() { return DegreeBound(-1); }

    bool is_unbounded() const { return t_ < 0; }
    int value() const;                       // finite bounds only
    bool admits(int degree) const { return is_unbounded() || degree <= t_; }
    bool at_least(int x) const { return is_unbounded() || t_ >= x; }
    std::string str() const;                 // "inf" or decimal digits
    static std::optional<DegreeBound> parse(const std::string& s);
    bool operator==(const DegreeBound&) const = default;

private:
    explicit DegreeBound(int t) : t_(t) {}
    int t_;
};

// Total map vertex -> color index in [0, q). Empty classes are allowed
// and count as size 0 everywhere.
struct Coloring {
    int q;
    std::vector<int> assignment;

    Coloring(int q, std::vector<int> assignment);
    std::vector<int> class_sizes() const;
    std::vector<std::vector<int>> classes() const;  // ascending vertex ids per class
};

// Restriction to a vertex subset, re-indexed the same way induced() does.
Coloring restrict_to(const Coloring& coloring, std::vector<int> vertices);

bool is_equitable(const Coloring& coloring);
bool is_proper(const Graph& g, const Coloring& coloring);

enum class FailReason { none, cycle, degree_exceeded };

struct VerifyReport {
    bool ok = false;
    int failing_class = -1;
    FailReason reason = FailReason::none;
    Edge cycle_edge{-1, -1};   // set when reason == cycle
    int offending_vertex = -1; // set when reason == degree_exceeded
    int offending_degree = -1;
    std::string message() const;  // 1-based ids, matches the file formats
};

// Checks that every color class induces a forest whose maximum degree
// respects t. Classes are scanned in index order; within a class the
// cycle check runs before the degree check.
VerifyReport verify_tree_coloring(const Graph& g, const Coloring& coloring,
                                  DegreeBound t);

// Counts of the eight class shapes (x-size, y-size) for K_{m,n}:
//   k1 (a+1,0)  k2 (a,0)  k3 (0,a+1)  k4 (0,a)
//   k5 (a,1)    k6 (a-1,1)  k7 (1,a)  k8 (1,a-1)
// When a = 1 makes shapes coincide, the lowest index wins.
struct ShapeCensus {
    std::array<int, 8> k{};
    int unclassified = 0;
};

ShapeCensus shape_census(const Coloring& coloring, const BipartitionMeta& meta,
                         int a);

}  // namespace equitree
