#include "phylocount/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "phylocount/series.hpp"
#include "phylocount/skeleton.hpp"
#include "phylocount/symmetry.hpp"

namespace phylocount {

namespace {

long to_n(int k, Labeling lab, long size) { return lab == Labeling::Leaf ? vertex_count(k, size) : size; }

// vertex count -> requested labeling
ExactInt relabel(const ExactInt& vertex, int k, Labeling lab, long n) {
    if (lab == Labeling::Vertex) return vertex;
    long l = (n - 2 * k + 1) / 2;
    ExactRat v(vertex * factorial(l), factorial(n));
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("vertex to leaf conversion gave a non-integer");
    return v.get_num();
}

}  // namespace

bool method_applicable(Method m, int k, Labeling lab, long size) {
    if (k < 1 || k > 3 || size < 1) return false;
    switch (m) {
        case Method::ClosedForm:
        case Method::Series: return true;
        case Method::Skeleton: return k >= 2;
        case Method::Enumeration: return to_n(k, lab, size) <= 15;
    }
    return false;
}

ExactInt count_by(Method m, NetworkClass cls, int k, Labeling lab, long size, int order, std::size_t budget) {
    if (k < 1 || k > 3) throw std::invalid_argument("k must be 1, 2 or 3");
    if (size < 1) throw std::invalid_argument("size must be positive");
    const long n = to_n(k, lab, size);
    if (n % 2 == 0) return 0;
    const long l = (n - 2 * k + 1) / 2;
    if (l < 1) return 0;
    switch (m) {
        case Method::ClosedForm:
            return lab == Labeling::Leaf ? count_leaf_labeled(cls, k, l) : count_vertex_labeled(cls, k, n);
        case Method::Series: {
            int ord = std::max<long>(order, n);
            return relabel(extract_count(egf(cls, k, ord), static_cast<int>(n)), k, lab, n);
        }
        case Method::Skeleton: {
            if (k < 2) throw std::invalid_argument("skeleton case sums exist for k = 2, 3 only");
            int ord = std::max<long>(order, n);
            return relabel(extract_count(case_sum(cls, k, ord), static_cast<int>(n)), k, lab, n);
        }
        case Method::Enumeration: {
            EnumerateOptions opt;
            opt.budget = budget;
            ExactInt leaf = enumerate_networks(cls, k, static_cast<int>(l), opt).count;
            if (lab == Labeling::Leaf) return leaf;
            return leaf * factorial(n) / factorial(l);
        }
    }
    throw std::invalid_argument("bad method");
}

std::vector<VerifyLine> verify_suite(const VerifyOptions& opt) {
    std::vector<VerifyLine> out;
    for (NetworkClass cls : opt.classes) {
        for (int k : opt.ks) {
            const std::string cell = std::string(to_string(cls)) + " k=" + std::to_string(k);
            TruncSeries e = egf(cls, k, opt.order);

            long bad = -1;
            for (long n = 1; n <= opt.order && bad < 0; n += 2)
                if (extract_count(e, static_cast<int>(n)) != count_vertex_labeled(cls, k, n)) bad = n;
            out.push_back({"closed-form = series, " + cell, bad < 0,
                           bad < 0 ? "odd n <= " + std::to_string(opt.order) : "differs at n=" + std::to_string(bad)});

            if (k >= 2) {
                TruncSeries s = case_sum(cls, k, opt.order);
                bad = -1;
                for (int n = 0; n <= opt.order && bad < 0; ++n)
                    if (s[n] != e[n]) bad = n;
                out.push_back({"skeleton = series, " + cell, bad < 0,
                               bad < 0 ? "all coefficients to z^" + std::to_string(opt.order)
                                       : "differs at z^" + std::to_string(bad)});

                bad = -1;
                for (long l = 1; l <= opt.max_leaf && bad < 0; ++l)
                    if (count_leaf_labeled_direct(cls, k, l) != count_leaf_labeled(cls, k, l)) bad = l;
                out.push_back({"direct leaf formula = converted, " + cell, bad < 0,
                               bad < 0 ? "l <= " + std::to_string(opt.max_leaf) : "differs at l=" + std::to_string(bad)});
            }

            for (long l = 1; vertex_count(k, l) <= opt.max_enumeration_n; ++l) {
                ExactInt a = count_leaf_labeled(cls, k, l);
                ExactInt b = count_by(Method::Enumeration, cls, k, Labeling::Leaf, l, opt.order);
                out.push_back({"enumeration = closed-form, " + cell + " l=" + std::to_string(l), a == b,
                               b.get_str() + (a == b ? "" : " vs " + a.get_str())});
            }

            bad = -1;
            std::string why;
            for (long l = 1; l <= opt.max_leaf && bad < 0; ++l) {
                DenominatorCheck c = denominator_check(count_leaf_labeled(cls, k, l), l);
                if (!c.pass) {
                    bad = l;
                    why = c.factored;
                }
            }
            out.push_back({"power-of-2 denominators, " + cell, bad < 0,
                           bad < 0 ? "l <= " + std::to_string(opt.max_leaf)
                                   : "l=" + std::to_string(bad) + " denominator " + why});
        }
    }
    return out;
}

}  // namespace phylocount
