#pragma once

#include <string>
#include <vector>

#include "phylocount/exact.hpp"
#include "phylocount/network.hpp"

namespace phylocount {

// A rooting vertex {v} or rooting pair {v, w}.
struct SymmetryItem {
    std::vector<int> roots;        // one or two vertices, ascending
    std::vector<int> members;      // joint descendant set, ascending
    bool symmetric = false;
    bool independent = false;
    std::vector<int> witness;      // vertex map on the whole network (identity off members), empty if not symmetric
};

struct SymmetryReport {
    std::vector<SymmetryItem> vertices;
    std::vector<SymmetryItem> pairs;
    int leaves = 0;
    int f = 0;
    ExactInt group_order;  // |F|, from the automorphism group image on the leaves
    ExactInt labelings;    // l! / 2^f
};

struct SymmetryMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Subnetwork of v: every vertex all of whose root paths pass through v. Every
// tree vertex and the root give one. A pair {v, w} of incomparable tree vertices
// is listed when some vertex is cut off by the two together but by neither
// alone; of the pairs cutting off the same part only the lowest is kept.
std::vector<SymmetryItem> subnetwork_roots(const Dag& d, bool pairs);

// Network automorphisms that move nothing outside the item's subnetwork and fix
// its roots: for a vertex, those swapping its two children; for a pair, the
// nontrivial ones.
std::vector<std::vector<int>> symmetry_witnesses(const Dag& d, const SymmetryItem& item);

// Fills symmetric / independent / witness for every item and computes f.
SymmetryReport analyze_symmetry(const Dag& d);
SymmetryReport analyze_symmetry(const PhyloNetwork& net);

// |F| as the image of the unlabeled automorphism group on the leaf set.
ExactInt leaf_group_order(const Dag& d);
ExactInt leaf_group_order(const std::vector<std::vector<int>>& automorphisms, const Dag& d);

// |F| by brute force over all l! relabelings (l <= 8).
ExactInt burnside_group_order(const Dag& d);

// l!/2^f, failing loudly with SymmetryMismatch when 2^f != |F|.
ExactInt count_labelings(const PhyloNetwork& net);
ExactInt count_labelings(const Dag& d);

struct DenominatorCheck {
    bool pass = false;
    ExactInt numerator, denominator;  // value / l! in lowest terms
    std::string factored;             // e.g. "2^3 * 3 * 7", "1" for integers
};

DenominatorCheck denominator_check(const ExactInt& value, long l);

std::string report_json(const SymmetryReport& r, int indent = 2);

}  // namespace phylocount
