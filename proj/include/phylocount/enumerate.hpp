#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "phylocount/exact.hpp"
#include "phylocount/network.hpp"

namespace phylocount {

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(int level, std::size_t produced, std::size_t budget);
    int level() const { return level_; }
    std::size_t produced() const { return produced_; }

private:
    int level_;
    std::size_t produced_;
};

inline constexpr std::size_t default_budget = 1000000;

struct ShapeEntry {
    long labelings = 0;  // distinct labeled networks with this shape
    Dag representative;  // one labeled member
};

struct EnumerationResult {
    NetworkClass cls = NetworkClass::TreeChild;
    int k = 0;
    int l = 0;
    ExactInt count = 0;
    std::vector<std::string> codes;        // sorted label-respecting keys, if requested
    std::vector<Dag> networks;             // in code order, if requested
    std::map<std::string, ShapeEntry> shapes;  // label-forgetting key -> entry, if requested
};

struct EnumerateOptions {
    bool keep_codes = false;
    bool keep_networks = false;
    bool shapes = false;
    std::size_t budget = default_budget;
};

// All (2l-3)!! leaf-labeled rooted binary trees, labels 1..l; 1 <= l <= 8.
std::vector<Dag> enumerate_trees(int l);

// Every valid network from subdividing an ordered pair of distinct edges
// (tree vertex on the first, reticulation on the second) plus the new edge,
// deduplicated by label-respecting code.
std::vector<Dag> add_reticulation(const Dag& net);

EnumerationResult enumerate_networks(NetworkClass cls, int k, int l, const EnumerateOptions& opt = {});

// Independent oracle: direct search over degree-constrained DAGs, n = 2l+2k-1 <= 9.
ExactInt exhaustive_dag_search(NetworkClass cls, int k, int l);

}  // namespace phylocount
