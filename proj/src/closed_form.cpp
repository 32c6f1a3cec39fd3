#include "phylocount/closed_form.hpp"

#include <mpfr.h>

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace phylocount {

ExactRat Polynomial::operator()(const ExactRat& n) const {
    ExactRat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * n + *it;
    return r;
}

int Polynomial::degree() const {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (sgn(c[i]) != 0) return i;
    return -1;
}

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
    Polynomial p;
    for (long x : coeffs) p.c.emplace_back(x);
    return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c.assign(a.c.size() + b.c.size() - 1, ExactRat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

Polynomial scaled(Polynomial p, const ExactRat& s) {
    for (auto& x : p.c) x *= s;
    return p;
}

const Polynomial N = poly({0, 1});
Polynomial lin(long a, long b) { return poly({b, a}); }  // a n + b

std::vector<Formula> build_table() {
    const Polynomial one = poly({1});
    const Polynomial den3 = poly({-3, 6});  // 3(2n-1)
    std::vector<Formula> t(6);
    // tree-child
    t[0] = {{N, one}, poly({}) , 1};
    t[0].p = scaled(one, ExactRat(1, 2));
    t[1] = {{N * lin(1, -1) * lin(1, -2) * lin(3, -1), den3}, scaled(lin(1, -1) * lin(1, -2), ExactRat(1, 2)), 4};
    t[2] = {{N * N * lin(1, -1) * lin(1, -2) * lin(1, -3) * lin(1, -4), den3},
            scaled(lin(1, -2) * lin(1, -3) * lin(1, -4) * lin(48, -65), ExactRat(1, 192)), 6};
    // normal
    t[3] = {{lin(1, 2), one}, scaled(one, ExactRat(3, 2)), 1};
    t[4] = {{N * lin(3, -7) * poly({-4, 9, 1}), den3}, scaled(lin(1, 1) * lin(3, -7), ExactRat(1, 2)), 4};
    t[5] = {{N * lin(1, -1) * poly({40, 324, -158, 15, 1}), den3},
            scaled(poly({-7080, 9106, -1089, -751, 144}), ExactRat(1, 192)), 6};
    return t;
}

void check_k(int k) {
    if (k < 1 || k > 3) throw std::invalid_argument("unsupported k = " + std::to_string(k) + " (need 1..3)");
}

}  // namespace

const Formula& formula(NetworkClass cls, int k) {
    static const std::vector<Formula> table = build_table();
    check_k(k);
    return table[(cls == NetworkClass::TreeChild ? 0 : 3) + k - 1];
}

ExactInt count_vertex_labeled(NetworkClass cls, int k, long n) {
    const Formula& f = formula(cls, k);
    if (n < 1 || n % 2 == 0) return 0;
    long m = (n - 1) / 2;
    if (m < f.valid_from) return 0;
    ExactRat mm(m);
    ExactRat v = ExactRat(binomial(2 * m, m)) * pow2q(-m) * f.r(mm) - ExactRat(pow2(m)) * f.p(mm);
    v *= ExactRat(factorial(n));
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("closed form gave a non-integer");
    return v.get_num();
}

ExactInt count_leaf_labeled(NetworkClass cls, int k, long l) {
    check_k(k);
    if (l < 1) throw std::invalid_argument("l must be positive");
    long n = 2 * l + 2 * k - 1;
    ExactRat v(count_vertex_labeled(cls, k, n) * factorial(l), factorial(n));
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("vertex to leaf conversion gave a non-integer");
    return v.get_num();
}

ExactInt count_leaf_labeled_direct(NetworkClass cls, int k, long l) {
    if (k != 2 && k != 3) throw std::invalid_argument("direct leaf formulas exist for k = 2, 3 only");
    if (l < 1) throw std::invalid_argument("l must be positive");
    ExactRat L(l), a, b;
    ExactRat two_l = pow2q(l);
    bool tc = cls == NetworkClass::TreeChild;
    if (k == 2) {
        ExactRat lead = tc ? ExactRat((L + 1) * L * (L - 1) * (3 * L + 2))
                           : ExactRat((L + 1) * (3 * L - 4) * (L * L + 11 * L + 6));
        a = lead / (6 * (2 * L + 1) * two_l) * ExactRat(binomial(2 * l + 2, l + 1));
        b = tc ? ExactRat(two_l * L * (L - 1)) : ExactRat(two_l * (L + 2) * (3 * L - 4));
    } else {
        ExactRat lead = tc ? ExactRat((L + 2) * (L + 2) * (L + 1) * L * (L - 1) * (L - 2))
                           : ExactRat((L + 2) * (L + 1) * (L * L * L * L + 23 * L * L * L - 44 * L * L - 96 * L + 192));
        a = lead / (12 * (2 * L + 3) * two_l) * ExactRat(binomial(2 * l + 4, l + 2));
        b = tc ? ExactRat(two_l / 48 * L * (L - 1) * (L - 2) * (48 * L + 31))
               : ExactRat(two_l / 48 * (144 * L * L * L * L + 401 * L * L * L - 2139 * L * L + 346 * L + 3072));
    }
    ExactRat v = ExactRat(factorial(l)) * (a - b);
    v.canonicalize();
    if (v.get_den() != 1) throw std::logic_error("direct leaf formula gave a non-integer");
    return v.get_num();
}

namespace {

constexpr mpfr_prec_t kBits = 160;  // about 48 decimal digits

Estimate finish(mpfr_t q) {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.30Rg", q);
    Estimate e{buf, mpfr_get_d(q, MPFR_RNDN)};
    return e;
}

// count / (c * base^x * x^(x+e))
Estimate ratio(const ExactInt& count, const ExactInt& c, mpfr_t base, long x, long e) {
    mpfr_t q, t, d;
    mpfr_inits2(kBits, q, t, d, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_z(q, count.get_mpz_t(), MPFR_RNDN);
    mpfr_set_z(d, c.get_mpz_t(), MPFR_RNDN);
    mpfr_pow_si(t, base, x, MPFR_RNDN);
    mpfr_mul(d, d, t, MPFR_RNDN);
    mpfr_set_si(t, x, MPFR_RNDN);
    mpfr_pow_si(t, t, x + e, MPFR_RNDN);
    mpfr_mul(d, d, t, MPFR_RNDN);
    mpfr_div(q, q, d, MPFR_RNDN);
    Estimate r = finish(q);
    mpfr_clears(q, t, d, static_cast<mpfr_ptr>(nullptr));
    return r;
}

}  // namespace

Estimate estimate_ck(NetworkClass cls, int k, long n) {
    check_k(k);
    if (n < 1 || n % 2 == 0) throw std::invalid_argument("estimate_ck needs odd n");
    mpfr_t base, e;
    mpfr_inits2(kBits, base, e, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(e, 1, MPFR_RNDN);
    mpfr_exp(e, e, MPFR_RNDN);
    mpfr_sqrt_ui(base, 2, MPFR_RNDN);
    mpfr_div(base, base, e, MPFR_RNDN);
    Estimate r = ratio(count_vertex_labeled(cls, k, n), 2, base, n, 2 * k - 1);
    mpfr_clears(base, e, static_cast<mpfr_ptr>(nullptr));
    return r;
}

Estimate estimate_ck_leaf(NetworkClass cls, int k, long l) {
    check_k(k);
    mpfr_t base, e;
    mpfr_inits2(kBits, base, e, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(e, 1, MPFR_RNDN);
    mpfr_exp(e, e, MPFR_RNDN);
    mpfr_ui_div(base, 2, e, MPFR_RNDN);
    Estimate r = ratio(count_leaf_labeled(cls, k, l), pow2(3 * k - 1), base, l, 2 * k - 1);
    mpfr_clears(base, e, static_cast<mpfr_ptr>(nullptr));
    return r;
}

bool agree_to_digits(const Estimate& a, const Estimate& b, int digits) {
    double m = std::max(std::fabs(a.approx), std::fabs(b.approx));
    return std::fabs(a.approx - b.approx) < 5.0 * std::pow(10.0, -digits) * m;
}

const char* to_string(Labeling l) { return l == Labeling::Vertex ? "vertex" : "leaf"; }

const char* to_string(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed-form";
        case Method::Series: return "series";
        case Method::Skeleton: return "skeleton";
        case Method::Enumeration: return "enumeration";
    }
    return "?";
}

Labeling parse_labeling(const std::string& s) {
    if (s == "vertex") return Labeling::Vertex;
    if (s == "leaf") return Labeling::Leaf;
    throw std::invalid_argument("unknown labeling: " + s);
}

Method parse_method(const std::string& s) {
    if (s == "closed-form") return Method::ClosedForm;
    if (s == "series") return Method::Series;
    if (s == "skeleton") return Method::Skeleton;
    if (s == "enumeration") return Method::Enumeration;
    throw std::invalid_argument("unknown method: " + s);
}

void CountTable::add(const CountKey& key, Method m, const ExactInt& v) { entries_[key][m] = v; }

std::vector<CountKey> CountTable::mismatches() const {
    std::vector<CountKey> bad;
    for (const auto& [key, by] : entries_) {
        for (const auto& [m, v] : by)
            if (v != by.begin()->second) {
                bad.push_back(key);
                break;
            }
    }
    return bad;
}

std::string CountTable::to_csv() const {
    std::ostringstream os;
    os << "class,labeling,k,size,count,method\n";
    for (const auto& [key, by] : entries_)
        for (const auto& [m, v] : by)
            os << to_string(key.cls) << ',' << to_string(key.labeling) << ',' << key.k << ',' << key.size << ','
               << v.get_str() << ',' << to_string(m) << '\n';
    return os.str();
}

}  // namespace phylocount
