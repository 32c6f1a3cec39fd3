#pragma once

#include <compare>
#include <string>
#include <vector>

#include "phylocount/network.hpp"

namespace phylocount {

struct CanonicalCode {
    std::string bytes;
    auto operator<=>(const CanonicalCode&) const = default;
    std::string hex() const;
};

// Label-respecting mode needs a labeled network.
CanonicalCode canonical_code(const PhyloNetwork& net, bool respect_labels);

// Integer-label variant used on hot paths; labels are dag.label ranks.
std::string canonical_key(const Dag& d, bool respect_labels);

struct CanonicalForm {
    std::string code;
    std::vector<int> order;                      // order[position] = vertex
    std::vector<std::vector<int>> automorphisms;  // each maps vertex -> vertex, identity included
};

// Individualization-refinement with full backtracking; automorphisms are the
// search leaves that reproduce the minimal code.
CanonicalForm canonical_form(const Dag& d, bool respect_labels, bool collect_automorphisms);

// Plain backtracking isomorphism search, independent of the canonicalizer.
// Returns the vertex map a -> b or an empty vector.
std::vector<int> find_isomorphism(const Dag& a, const Dag& b, bool respect_labels);

}  // namespace phylocount
