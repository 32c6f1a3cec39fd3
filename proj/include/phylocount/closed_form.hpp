#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "phylocount/exact.hpp"
#include "phylocount/network.hpp"

namespace phylocount {

struct Polynomial {
    std::vector<ExactRat> c;  // c[i] multiplies n^i
    ExactRat operator()(const ExactRat& n) const;
    int degree() const;
};

struct RationalFunction {
    Polynomial num;  // integer coefficients
    Polynomial den;
    ExactRat operator()(const ExactRat& n) const { return num(n) / den(n); }
};

struct Formula {
    RationalFunction r;  // r̃_k(n)
    Polynomial p;        // p̃_k(n)
    long valid_from;     // smallest m where the expressions equal the coefficient
};

// r̃, p̃ for class and k = 1..3
const Formula& formula(NetworkClass cls, int k);

ExactInt count_vertex_labeled(NetworkClass cls, int k, long n);
ExactInt count_leaf_labeled(NetworkClass cls, int k, long l);
// the explicit leaf-labeled formulas for k = 2, 3
ExactInt count_leaf_labeled_direct(NetworkClass cls, int k, long l);

struct Estimate {
    std::string text;  // 30 significant digits
    double approx;
};
// count / (2 (sqrt2/e)^n n^(n+2k-1)), n odd
Estimate estimate_ck(NetworkClass cls, int k, long n);
// leaf-labeled: count / (2^(3k-1) (2/e)^l l^(l+2k-1))
Estimate estimate_ck_leaf(NetworkClass cls, int k, long l);
// relative difference below 5 * 10^-digits
bool agree_to_digits(const Estimate& a, const Estimate& b, int digits);

enum class Labeling { Vertex, Leaf };
enum class Method { ClosedForm, Series, Skeleton, Enumeration };
const char* to_string(Labeling l);
const char* to_string(Method m);
Labeling parse_labeling(const std::string& s);
Method parse_method(const std::string& s);

struct CountKey {
    NetworkClass cls;
    Labeling labeling;
    int k;
    long size;
    auto operator<=>(const CountKey&) const = default;
};

class CountTable {
public:
    void add(const CountKey& key, Method m, const ExactInt& v);
    const std::map<CountKey, std::map<Method, ExactInt>>& entries() const { return entries_; }
    // keys whose methods disagree
    std::vector<CountKey> mismatches() const;
    std::string to_csv() const;

private:
    std::map<CountKey, std::map<Method, ExactInt>> entries_;
};

}  // namespace phylocount
