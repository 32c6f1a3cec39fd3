#pragma once

#include <string>
#include <vector>

#include "phylocount/closed_form.hpp"
#include "phylocount/enumerate.hpp"

namespace phylocount {

// n = 2l + 2k - 1
inline long vertex_count(int k, long l) { return 2 * l + 2 * k - 1; }

// Whether a method can produce the (k, size) cell. Enumeration is limited to
// n <= 15, which stays under the default budget.
bool method_applicable(Method m, int k, Labeling lab, long size);

// One count by one method; size is l for leaf labeling and n for vertex labeling.
// The series methods work to max(order, n).
ExactInt count_by(Method m, NetworkClass cls, int k, Labeling lab, long size, int order,
                  std::size_t budget = default_budget);

struct VerifyOptions {
    std::vector<NetworkClass> classes{NetworkClass::TreeChild, NetworkClass::Normal};
    std::vector<int> ks{1, 2, 3};
    int order = 31;
    long max_enumeration_n = 11;  // enumeration cells up to this many vertices
    long max_leaf = 12;           // leaf range for the direct formulas and the denominator check
};

struct VerifyLine {
    std::string check;
    bool ok;
    std::string detail;
};

// Cross-method equality suite; deterministic order.
std::vector<VerifyLine> verify_suite(const VerifyOptions& opt);

}  // namespace phylocount
