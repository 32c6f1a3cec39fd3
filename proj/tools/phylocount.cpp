// phylocount: count tree-child and normal networks, cross-check the pipelines,
// analyze leaf-labeling symmetry.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "phylocount/pipeline.hpp"
#include "phylocount/series.hpp"
#include "phylocount/skeleton.hpp"
#include "phylocount/symmetry.hpp"

using namespace phylocount;
using nlohmann::json;

namespace {

enum Exit { Ok = 0, Mismatch = 1, BadArgs = 2, Budget = 3 };

struct Range {
    long lo = 0, hi = -1;
};

Range parse_range(const std::string& s) {
    Range r;
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stol(s);
        } else {
            r.lo = std::stol(s.substr(0, dots));
            r.hi = std::stol(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("bad size or range '" + s + "' (use N or A..B)");
    }
    if (r.lo < 1 || r.hi < r.lo) throw std::invalid_argument("empty or non-positive range '" + s + "'");
    return r;
}

struct CellArgs {
    std::string cls = "tree-child", labeling = "leaf", method = "closed-form", l, n;
    int k = 1;
};

void add_cell_options(CLI::App* sub, CellArgs& a, bool method_all) {
    sub->add_option("--class", a.cls, "tree-child | normal")->capture_default_str();
    sub->add_option("--labeling", a.labeling, "leaf | vertex")->capture_default_str();
    sub->add_option("--k", a.k, "number of reticulations (1..3)")->required();
    sub->add_option("--l", a.l, "leaves: N or A..B");
    sub->add_option("--n", a.n, "vertices: N or A..B (vertex labeling)");
    sub->add_option("--method", a.method,
                    method_all ? "closed-form | series | skeleton | enumeration | all"
                               : "closed-form | series | skeleton | enumeration")
        ->capture_default_str();
}

struct Cell {
    NetworkClass cls;
    Labeling lab;
    int k;
    Range sizes;
    std::vector<Method> methods;
};

Cell resolve(const CellArgs& a) {
    Cell c{parse_class(a.cls), parse_labeling(a.labeling), a.k, {}, {}};
    if (a.k < 1 || a.k > 3) throw std::invalid_argument("--k must be 1, 2 or 3");
    if (!a.l.empty() && !a.n.empty()) throw std::invalid_argument("give --l or --n, not both");
    if (a.l.empty() && a.n.empty()) throw std::invalid_argument("a size is required (--l or --n)");
    if (!a.n.empty()) {
        c.lab = Labeling::Vertex;
        c.sizes = parse_range(a.n);
    } else {
        if (c.lab == Labeling::Vertex) throw std::invalid_argument("vertex labeling takes --n");
        c.sizes = parse_range(a.l);
    }
    if (a.method == "all") {
        c.methods = {Method::ClosedForm, Method::Series, Method::Skeleton, Method::Enumeration};
        for (long s = c.sizes.lo; s <= c.sizes.hi; ++s)
            for (Method m : c.methods)
                if (!method_applicable(m, c.k, c.lab, s))
                    throw std::invalid_argument(std::string("method ") + to_string(m) +
                                                " does not apply at k=" + std::to_string(c.k) +
                                                ", size " + std::to_string(s));
    } else {
        c.methods = {parse_method(a.method)};
        if (!method_applicable(c.methods[0], c.k, c.lab, c.sizes.lo) ||
            !method_applicable(c.methods[0], c.k, c.lab, c.sizes.hi))
            throw std::invalid_argument("method " + a.method + " does not apply to this cell");
    }
    return c;
}

// fills the table; returns false on any cross-method disagreement
bool fill(const Cell& c, int order, CountTable& t) {
    for (long s = c.sizes.lo; s <= c.sizes.hi; ++s)
        for (Method m : c.methods) t.add({c.cls, c.lab, c.k, s}, m, count_by(m, c.cls, c.k, c.lab, s, order));
    for (const auto& key : t.mismatches())
        std::cerr << "mismatch: " << to_string(key.cls) << " " << to_string(key.labeling) << " k=" << key.k
                  << " size " << key.size << "\n";
    return t.mismatches().empty();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact counts of tree-child and normal phylogenetic networks"};
    app.require_subcommand(1);
    app.fallthrough();
    int order = default_order();
    app.add_option("--order", order, "series truncation order (PHYLOCOUNT_ORDER)")->capture_default_str();

    CellArgs count_args;
    auto* count = app.add_subcommand("count", "print one count");
    add_cell_options(count, count_args, true);

    CellArgs table_args;
    std::string table_format = "text";
    auto* table = app.add_subcommand("table", "print a sequence over a size range");
    add_cell_options(table, table_args, true);
    table->add_option("--format", table_format, "text | csv | json")->capture_default_str();

    std::string series_cls = "tree-child", series_format = "text";
    int series_k = 1;
    bool series_skeleton = false;
    auto* series = app.add_subcommand("series", "vertex-labeled counts n! [z^n] of the EGF");
    series->add_option("--class", series_cls)->capture_default_str();
    series->add_option("--k", series_k)->required();
    series->add_flag("--skeleton", series_skeleton, "use the skeleton case sum instead of the closed EGF");
    series->add_option("--format", series_format, "text | csv | json")->capture_default_str();

    std::string enum_cls = "tree-child";
    int enum_k = 1, enum_l = 3;
    bool enum_count = false;
    std::size_t enum_budget = default_budget;
    auto* enumerate = app.add_subcommand("enumerate", "stream all leaf-labeled networks as PNET");
    enumerate->add_option("--class", enum_cls)->capture_default_str();
    enumerate->add_option("--k", enum_k, "reticulations (0..3)")->required();
    enumerate->add_option("--l", enum_l, "leaves")->required();
    enumerate->add_flag("--count", enum_count, "print only the number of networks");
    enumerate->add_option("--budget", enum_budget, "max networks per insertion level")->capture_default_str();

    std::string sym_file;
    bool sym_burnside = false;
    auto* symmetry = app.add_subcommand("symmetry", "symmetry report of a network as JSON");
    symmetry->add_option("file", sym_file, "PNET file")->required();
    symmetry->add_flag("--burnside", sym_burnside, "also compute |F| over all l! relabelings (l <= 8)");

    std::string den_value;
    long den_l = 1;
    auto* dencheck = app.add_subcommand("dencheck", "is value / l! a dyadic rational?");
    dencheck->add_option("value", den_value)->required();
    dencheck->add_option("l", den_l)->required();

    std::vector<int> verify_ks;
    std::string verify_cls;
    bool verify_audit = false;
    long verify_enum_n = 11;
    auto* verify = app.add_subcommand("verify", "cross-method equality suite");
    verify->add_option("--k", verify_ks, "restrict to these k")->delimiter(',');
    verify->add_option("--class", verify_cls, "restrict to one class");
    verify->add_flag("--audit", verify_audit, "print the skeleton term log");
    verify->add_option("--enumerate-up-to", verify_enum_n, "enumeration cells up to this many vertices")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : BadArgs;
    }
    if (order < 1 || order > 1000) {
        std::cerr << "error: --order must be in 1..1000\n";
        return BadArgs;
    }

    try {
        if (*count) {
            Cell c = resolve(count_args);
            if (c.sizes.lo != c.sizes.hi) throw std::invalid_argument("count takes a single size; use table");
            CountTable t;
            bool ok = fill(c, order, t);
            std::cout << t.entries().begin()->second.begin()->second.get_str() << "\n";
            return ok ? Ok : Mismatch;
        }
        if (*table) {
            Cell c = resolve(table_args);
            CountTable t;
            bool ok = fill(c, order, t);
            if (table_format == "csv") {
                std::cout << t.to_csv();
            } else if (table_format == "json") {
                json a = json::array();
                for (const auto& [key, by] : t.entries())
                    for (const auto& [m, v] : by)
                        a.push_back({{"class", to_string(key.cls)},
                                     {"labeling", to_string(key.labeling)},
                                     {"k", key.k},
                                     {"size", key.size},
                                     {"count", v.get_str()},
                                     {"method", to_string(m)}});
                std::cout << a.dump(2) << "\n";
            } else if (table_format == "text") {
                bool first = true;
                for (const auto& [key, by] : t.entries()) {
                    std::cout << (first ? "" : ", ") << by.begin()->second.get_str();
                    first = false;
                }
                std::cout << "\n";
            } else {
                throw std::invalid_argument("unknown format " + table_format);
            }
            return ok ? Ok : Mismatch;
        }
        if (*series) {
            NetworkClass cls = parse_class(series_cls);
            TruncSeries s = series_skeleton ? case_sum(cls, series_k, order) : egf(cls, series_k, order);
            json a = json::array();
            if (series_format == "csv") std::cout << "n,count\n";
            for (int n = 0; n <= order; ++n) {
                std::string v = extract_count(s, n).get_str();
                if (series_format == "csv") std::cout << n << ',' << v << "\n";
                else if (series_format == "json") a.push_back({{"n", n}, {"count", v}});
                else if (series_format == "text") std::cout << n << ' ' << v << "\n";
                else throw std::invalid_argument("unknown format " + series_format);
            }
            if (series_format == "json") std::cout << a.dump(2) << "\n";
            return Ok;
        }
        if (*enumerate) {
            NetworkClass cls = parse_class(enum_cls);
            if (enum_k < 0 || enum_k > 3) throw std::invalid_argument("--k must be in 0..3");
            EnumerateOptions opt;
            opt.budget = enum_budget;
            opt.keep_networks = !enum_count;
            EnumerationResult r = enumerate_networks(cls, enum_k, enum_l, opt);
            if (enum_count) {
                std::cout << r.count.get_str() << "\n";
                return Ok;
            }
            int i = 0;
            for (const Dag& d : r.networks) {
                std::string name = std::string(cls == NetworkClass::TreeChild ? "tc" : "normal") + "_k" +
                                   std::to_string(enum_k) + "_l" + std::to_string(enum_l) + "_" +
                                   std::to_string(++i);
                std::cout << serialize_network(PhyloNetwork::from_dag(d, name));
            }
            return Ok;
        }
        if (*symmetry) {
            PhyloNetwork net = parse_network(read_file(sym_file));
            SymmetryReport r = analyze_symmetry(net);
            json j = json::parse(report_json(r));
            if (sym_burnside) j["burnside_group_order"] = burnside_group_order(net.dag()).get_str();
            std::cout << j.dump(2) << "\n";
            if (pow2(r.f) != r.group_order) {
                std::cerr << "2^f = " << pow2(r.f).get_str() << " differs from |F| = " << r.group_order.get_str()
                          << "\n";
                return Mismatch;
            }
            return Ok;
        }
        if (*dencheck) {
            ExactInt v;
            if (v.set_str(den_value, 10) != 0 || v < 0) throw std::invalid_argument("value must be a non-negative integer");
            if (den_l < 1) throw std::invalid_argument("l must be positive");
            DenominatorCheck c = denominator_check(v, den_l);
            std::cout << (c.pass ? "pass" : "fail") << " " << v.get_str() << "/" << den_l << "! = "
                      << c.numerator.get_str() << "/" << c.denominator.get_str() << " denominator " << c.factored
                      << "\n";
            return c.pass ? Ok : Mismatch;
        }
        if (*verify) {
            VerifyOptions opt;
            opt.order = order;
            opt.max_enumeration_n = verify_enum_n;
            if (!verify_ks.empty()) {
                for (int k : verify_ks)
                    if (k < 1 || k > 3) throw std::invalid_argument("--k must be 1, 2 or 3");
                opt.ks = verify_ks;
            }
            if (!verify_cls.empty()) opt.classes = {parse_class(verify_cls)};
            bool ok = true;
            for (const auto& line : verify_suite(opt)) {
                std::cout << (line.ok ? "ok       " : "MISMATCH ") << line.check << " (" << line.detail << ")\n";
                ok = ok && line.ok;
            }
            if (verify_audit) {
                for (NetworkClass cls : opt.classes)
                    for (int k : opt.ks) {
                        if (k < 2) continue;
                        std::vector<AuditLine> lines;
                        case_sum(cls, k, order, &lines);
                        std::cout << "\n" << format_audit(cls, k, lines);
                    }
            }
            return ok ? Ok : Mismatch;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Budget;
    } catch (const NetworkError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadArgs;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadArgs;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return Mismatch;
    }
    return Ok;
}
