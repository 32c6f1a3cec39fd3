#include "phylocount/skeleton.hpp"

#include <sstream>
#include <stdexcept>

namespace phylocount {

// ---- JetSeries

JetSeries::JetSeries(int order) : order_(order) {
    for (auto& c : comp_) c = TruncSeries(order);
}

JetSeries JetSeries::scalar(const TruncSeries& s) {
    JetSeries j(s.order());
    j.set(0, s);
    return j;
}

JetSeries JetSeries::marker_sum(unsigned mask, int order) {
    JetSeries j(order);
    for (unsigned i = 0; i < 3; ++i)
        if (mask & (1u << i)) j.set(1u << i, TruncSeries::constant(1, order));
    return j;
}

TruncSeries JetSeries::component(unsigned m) const { return present_[m] ? comp_[m] : TruncSeries(order_); }

void JetSeries::set(unsigned m, TruncSeries s) {
    comp_[m] = std::move(s);
    present_[m] = true;
}

JetSeries& JetSeries::operator+=(const JetSeries& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (unsigned m = 0; m < 8; ++m) {
        if (!o.present_[m]) continue;
        if (present_[m]) comp_[m] += o.comp_[m];
        else set(m, o.comp_[m].truncated(order_));
    }
    return *this;
}

JetSeries& JetSeries::operator-=(const JetSeries& o) { return *this += o.scaled(-1); }

JetSeries operator+(JetSeries a, const JetSeries& b) { return a += b; }
JetSeries operator-(JetSeries a, const JetSeries& b) { return a -= b; }

JetSeries JetSeries::operator*(const JetSeries& o) const {
    JetSeries r(std::min(order_, o.order_));
    for (unsigned a = 0; a < 8; ++a) {
        if (!present_[a]) continue;
        for (unsigned b = 0; b < 8; ++b) {
            if (!o.present_[b] || (a & b)) continue;
            TruncSeries p = comp_[a] * o.comp_[b];
            if (r.present_[a | b]) r.comp_[a | b] += p;
            else r.set(a | b, std::move(p));
        }
    }
    return r;
}

JetSeries JetSeries::scaled(const ExactRat& s) const {
    JetSeries r = *this;
    for (unsigned m = 0; m < 8; ++m)
        if (r.present_[m]) r.comp_[m] *= s;
    return r;
}

JetSeries JetSeries::shifted(int k) const {
    JetSeries r = *this;
    for (unsigned m = 0; m < 8; ++m)
        if (r.present_[m]) r.comp_[m] = comp_[m].shifted(k);
    return r;
}

JetSeries JetSeries::truncated(int order) const {
    JetSeries r(order);
    for (unsigned m = 0; m < 8; ++m) {
        if (!present_[m]) continue;
        TruncSeries s(order);
        for (int i = 0; i <= std::min(order, order_); ++i) s[i] = comp_[m][i];
        r.set(m, std::move(s));
    }
    return r;
}

namespace {

// split into constant part and nilpotent part
JetSeries nilpotent_part(const JetSeries& j) {
    JetSeries n(j.order());
    for (unsigned m = 1; m < 8; ++m)
        if (j.has(m)) n.set(m, j.component(m));
    return n;
}

JetSeries one(int order) { return JetSeries::scalar(TruncSeries::constant(1, order)); }

JetSeries z_pow(int k, int order) { return JetSeries::scalar(TruncSeries::monomial(1, k, order)); }

}  // namespace

JetSeries JetSeries::inverse() const {
    TruncSeries a_inv = component(0).inverse();
    JetSeries x = nilpotent_part(*this) * scalar(a_inv);
    // a^-1 (1 - x + x^2 - x^3); x^4 = 0 with three markers
    JetSeries sum = one(order_), t = one(order_);
    for (int j = 1; j <= 3; ++j) {
        t = t * x.scaled(-1);
        sum += t;
    }
    return sum * scalar(a_inv);
}

JetSeries JetSeries::sqrt() const {
    TruncSeries a = component(0);
    TruncSeries root = a.sqrt();
    JetSeries x = nilpotent_part(*this) * scalar(a.inverse());
    static const ExactRat binom_half[4] = {ExactRat(1), ExactRat(1, 2), ExactRat(-1, 8), ExactRat(1, 16)};
    JetSeries sum = one(order_), t = one(order_);
    for (int j = 1; j <= 3; ++j) {
        t = t * x;
        sum += t.scaled(binom_half[j]);
    }
    return sum * scalar(root);
}

JetSeries JetSeries::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    JetSeries r = one(order_);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool JetSeries::operator==(const JetSeries& o) const {
    if (order_ != o.order_) return false;
    for (unsigned m = 0; m < 8; ++m)
        if (!(component(m) == o.component(m))) return false;
    return true;
}

// ---- generating functions

JetSeries motzkin_M(const JetSeries& y, int order) {
    // one extra order absorbs the exact division by z
    int w = order + 1;
    JetSeries yy = y.truncated(w);
    JetSeries z = z_pow(1, w);
    JetSeries inner = one(w) - z_pow(2, w).scaled(2) - (yy * z_pow(3, w)).scaled(4);
    JetSeries num = (one(w) + yy * z) * (one(w) - inner.sqrt());
    JetSeries den = one(w) + (yy * z).scaled(2);
    return (num.shifted(-1) * den.inverse()).truncated(order);
}

JetSeries motzkin_Mtilde(const JetSeries& y, int order) {
    JetSeries yy = y.truncated(order);
    return motzkin_M(y, order) * (one(order) + yy * z_pow(1, order)).inverse();
}

JetSeries path_Phat(const JetSeries& y, const JetSeries& yt, const JetSeries& yh, int order) {
    JetSeries z = z_pow(1, order);
    JetSeries den = one(order) - z * motzkin_M(yt, order) - z_pow(2, order) * y.truncated(order) *
                                                               motzkin_Mtilde(yt, order);
    return (one(order) + z * yh.truncated(order)) * den.inverse();
}

JetSeries path_Ptilde(const JetSeries& y, const JetSeries& yt, const JetSeries& yb, const JetSeries& yh,
                      int order) {
    JetSeries z = z_pow(1, order);
    JetSeries step = z + z_pow(2, order) * (y.truncated(order) + yb.truncated(order));
    JetSeries den = one(order) - step * motzkin_Mtilde(yt, order);
    return (one(order) + z * yh.truncated(order)) * den.inverse();
}

JetSeries path_P(const JetSeries& y, const JetSeries& yt, const JetSeries& yh, int order) {
    JetSeries z = z_pow(1, order);
    JetSeries step = z + (z_pow(2, order) * y.truncated(order)).scaled(2);
    JetSeries den = one(order) - step * motzkin_Mtilde(yt, order);
    return (one(order) + z * yh.truncated(order)) * den.inverse();
}

TruncSeries Y_operator(const JetSeries& j, unsigned markers) { return j.component(markers & 7u); }

const char* to_string(TermOrigin o) {
    switch (o) {
        case TermOrigin::Printed: return "printed";
        case TermOrigin::Corrected: return "corrected";
        case TermOrigin::Reconstructed: return "reconstructed";
        case TermOrigin::Completion: return "completion";
    }
    return "?";
}

// ---- expression evaluation

namespace {

unsigned parse_marker_sum(const std::string& s) {
    if (s == "0") return 0;
    unsigned mask = 0;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '+')) {
        if (part == "y1") mask |= 1;
        else if (part == "y2") mask |= 2;
        else if (part == "y3") mask |= 4;
        else throw std::invalid_argument("bad marker '" + part + "' in " + s);
    }
    return mask;
}

}  // namespace

JetSeries ExpressionEvaluator::call(const std::string& name, const std::vector<unsigned>& args) {
    std::string key = name;
    for (unsigned a : args) key += "," + std::to_string(a);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto arg = [&](size_t i) { return JetSeries::marker_sum(args[i], order_ + 1); };
    auto need = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument(name + " takes " + std::to_string(n) + " marker arguments");
    };
    JetSeries r;
    if (name == "M") {
        need(1);
        r = motzkin_M(arg(0), order_);
    } else if (name == "Mt") {
        need(1);
        r = motzkin_Mtilde(arg(0), order_);
    } else if (name == "Ph") {
        need(3);
        r = path_Phat(arg(0), arg(1), arg(2), order_);
    } else if (name == "Pt") {
        need(4);
        r = path_Ptilde(arg(0), arg(1), arg(2), arg(3), order_);
    } else if (name == "P") {
        need(3);
        r = path_P(arg(0), arg(1), arg(2), order_);
    } else {
        throw std::invalid_argument("unknown generating function " + name);
    }
    cache_.emplace(key, r);
    return r;
}

JetSeries ExpressionEvaluator::evaluate(const std::string& expr) {
    JetSeries acc = one(order_);
    std::stringstream ss(expr);
    std::string tok;
    while (ss >> tok) {
        int power = 1;
        std::string base = tok;
        auto close = tok.rfind(')');
        auto caret = tok.rfind('^');
        if (caret != std::string::npos && (close == std::string::npos || caret > close)) {
            power = std::stoi(tok.substr(caret + 1));
            base = tok.substr(0, caret);
        }
        if (base == "z") {
            acc = acc * z_pow(power, order_);
            continue;
        }
        auto open = base.find('(');
        if (open == std::string::npos || base.back() != ')')
            throw std::invalid_argument("cannot parse factor '" + tok + "'");
        std::string name = base.substr(0, open);
        std::vector<unsigned> args;
        std::stringstream as(base.substr(open + 1, base.size() - open - 2));
        std::string a;
        while (std::getline(as, a, ',')) args.push_back(parse_marker_sum(a));
        acc = acc * call(name, args).pow(power);
    }
    return acc;
}

// ---- term lists

namespace {

using O = TermOrigin;
const ExactRat one_r(1), half(1, 2), minus_one(-1), minus_half(-1, 2);

std::vector<SkeletonTerm> tree_child_2() {
    return {
        {"skeleton (a)", one_r, 3, "z^2 Mt(y1+y2) Ph(y2,y1+y2,0) Ph(0,y1+y2,0)", O::Reconstructed,
         "not displayed; g1 above g2 on one chain, g2 may point into the path below g1"},
        {"skeleton (b), case (i)", half, 3, "z^3 Mt(y1+y2)^2 Ph(0,y1+y2,0)^3", O::Printed, ""},
        {"skeleton (b), case (ii)", one_r, 3, "z^3 Mt(y2)^2 Ph(y1,y2,y1) Ph(0,y2,0)^2", O::Printed, ""},
    };
}

std::vector<SkeletonTerm> tree_child_3() {
    const std::string Y123 = "y1+y2+y3";
    return {
        {"skeleton (a)", one_r, 7,
         "z^3 Mt(y1+y2+y3) Ph(y2+y3,y1+y2+y3,0) Ph(y3,y1+y2+y3,0) Ph(0,y1+y2+y3,0)", O::Reconstructed,
         "not displayed; chain g1 > g2 > g3, each lower green may point into the paths below the higher ones"},
        {"skeleton (b), case 1", half, 7,
         "z^4 Mt(y1+y2+y3)^2 Ph(y3,y1+y2+y3,y3)^2 Ph(y3,y1+y2+y3,0) Ph(0,y1+y2+y3,0)", O::Printed, ""},
        {"skeleton (b), case 2", one_r, 7,
         "z^4 Mt(y2+y3)^2 Ph(y1+y3,y2+y3,y1+y3) Ph(y3,y2+y3,y3) Ph(y3,y2+y3,0) Ph(0,y2+y3,0)", O::Printed, ""},
        {"skeleton (b), case 3", minus_one, 7, "z^4 Mt(y2)^2 Ph(0,y2,y1) Ph(0,y2,y3) Ph(0,y2,0)^2", O::Printed,
         ""},
        {"skeleton (c), case 1", one_r, 7, "z^4 Mt(y1+y2+y3)^2 Ph(y2,y1+y2+y3,0) Ph(0,y1+y2+y3,0)^3",
         O::Corrected, "printed Ph(0,y1+y2+y3,0)^4; the path from g2 down to g3 must carry y2 (g2 may point there)"},
        {"skeleton (c), case 2", one_r, 7, "z^4 Mt(y2+y3)^2 Ph(y1,y2+y3,y1) Ph(y2,y2+y3,0) Ph(0,y2+y3,0)^2",
         O::Printed, ""},
        {"skeleton (c), case 3", one_r, 7, "z^4 Mt(y2+y3)^2 Ph(y1+y2,y2+y3,0) Ph(0,y2+y3,0)^3", O::Corrected,
         "printed Ph(y1+y2,y2+y3,y1); the first vertex of that path cannot take the pointer of g1"},
        {"skeleton (c), case 4", one_r, 7, "z^4 Mt(y1+y2)^2 Ph(y3,y1+y2,y3) Ph(y2,y1+y2,0) Ph(0,y1+y2,0)^2",
         O::Corrected, "printed Ph(0,y1+y2,0)^3, which gives five paths; the skeleton has four"},
        {"skeleton (c), case 5", one_r, 7, "z^4 Mt(y1+y3)^2 Ph(y2,y1+y3,y2) Ph(0,y1+y3,0)^3", O::Printed, ""},
        {"skeleton (c), case 6", one_r, 7, "z^4 Mt(y3)^2 Ph(y2,y3,y2) Ph(y1,y3,0) Ph(0,y3,0)^2", O::Printed, ""},
        {"skeleton (c), case 7", one_r, 7, "z^4 Mt(y1)^2 Ph(y2+y3,y1,y2+y3) Ph(0,y1,0)^3", O::Printed, ""},
        {"skeleton (d), case 1", half, 7, "z^5 Mt(y1+y2+y3)^3 Ph(0,y1+y2+y3,0)^5", O::Printed, ""},
        {"skeleton (d), case 2", one_r, 7, "z^5 Mt(y2+y3)^3 Ph(y1,y2+y3,y1) Ph(0,y2+y3,0)^4", O::Printed, ""},
        {"skeleton (d), case 3", one_r, 7, "z^5 Mt(y2+y3)^3 Ph(y1,y2+y3,y1) Ph(0,y2+y3,0)^4", O::Printed, ""},
        {"skeleton (d), case 4", one_r, 7, "z^5 Mt(y1+y2)^3 Ph(y3,y1+y2,y3) Ph(0,y1+y2,0)^4", O::Printed, ""},
        {"skeleton (d), case 5", half, 7, "z^5 Mt(y1+y2)^3 Ph(y3,y1+y2,y3) Ph(0,y1+y2,0)^4", O::Printed, ""},
        {"skeleton (d), case 6", one_r, 7, "z^5 Mt(y3)^3 Ph(y1,y3,y1) Ph(y2,y3,y2) Ph(0,y3,0)^3", O::Printed, ""},
        {"skeleton (d), case 7", half, 7, "z^5 Mt(y3)^3 Ph(y1+y2,y3,y1+y2) Ph(0,y3,0)^4", O::Printed, ""},
        {"skeleton (d), case 8", one_r, 7, "z^5 Mt(y2)^3 Ph(y1,y2,y1) Ph(y3,y2,y3) Ph(0,y2,0)^3", O::Printed, ""},
        {"skeleton (d), case 9", one_r, 7, "z^5 Mt(y2)^3 Ph(y1+y3,y2,y1+y3) Ph(y3,y2,y3) Ph(0,y2,0)^3", O::Printed,
         ""},
        {"skeleton (d), case 10", one_r, 7, "z^5 Mt(y2)^3 Ph(y1,y2,y1) Ph(y3,y2,y3) Ph(0,y2,0)^3", O::Printed, ""},
        {"skeleton (d), case 11", minus_one, 7, "z^5 Mt(y2)^3 Ph(0,y2,y1) Ph(0,y2,y3) Ph(0,y2,0)^3", O::Printed,
         ""},
    };
}

std::vector<SkeletonTerm> normal_2() {
    return {
        {"skeleton (a)", one_r, 3, "z^2 Mt(0) Pt(0,y1,0,0) Pt(0,y1+y2,0,0)", O::Printed, ""},
        {"skeleton (a), near-cycle subtraction", minus_one, 0, "z^7 Mt(0)^4 Pt(0,0,0,0)^5", O::Printed, ""},
        {"skeleton (b), case (i)", half, 3, "z^3 Mt(y1) Mt(y2) Pt(0,y1+y2,y1,0) Pt(0,y1+y2,y2,0) Pt(0,y1+y2,0,0)",
         O::Printed, ""},
        {"skeleton (b), case (ii)", one_r, 3, "z^3 Mt(y2) Mt(0) Pt(y1,y2,0,0) Pt(0,y2,0,0)^2", O::Corrected,
         "printed under a common factor 1/2; only case (i) is symmetric"},
    };
}

std::vector<SkeletonTerm> normal_3() {
    return {
        {"skeleton (a)", one_r, 7, "z^3 M(0) Pt(0,y1,0,0) Pt(0,y1+y2,0,0) Pt(0,y1+y2+y3,0,0)", O::Printed, ""},
        {"skeleton (a), subtraction (i)", minus_one, 4, "z^8 Mt(0)^4 Pt(0,0,0,0)^5 Pt(0,y3,0,0)", O::Printed, ""},
        {"skeleton (a), subtraction (ii)", minus_one, 4,
         "z^8 Mt(0) Mt(y3)^3 Pt(y3,y3,y3,0)^2 Pt(0,0,0,0)^2 Pt(0,y3,0,0)^2", O::Printed, ""},
        {"skeleton (a), subtraction (iii)", minus_one, 4, "z^8 Mt(0)^2 Mt(y3)^2 Pt(y3,y3,y3,0) Pt(0,0,0,0)^5",
         O::Printed, ""},
        {"skeleton (a), subtraction (iv)", minus_one, 2,
         "z^8 Mt(0)^3 Mt(y2) Pt(0,y2,y2,0) Pt(0,0,0,0)^2 Pt(0,y2,0,0)^3", O::Printed, ""},
        {"skeleton (a), subtraction (v)", minus_one, 1, "z^8 Mt(0)^3 Mt(y1) Pt(0,y1,y1,0) Pt(0,0,0,0) Pt(0,y1,0,0)^4",
         O::Printed, ""},
        {"skeleton (b), case 1", half, 7,
         "z^4 Mt(y1) Mt(y2) Pt(0,y1+y2,y2,0) Pt(0,y1+y2,y1,0) Pt(0,y1+y2,0,0) Pt(0,y1+y2+y3,0,0)", O::Corrected,
         "one factor printed as P(z,0,y1+y2,y1,0); read as the five-argument path series"},
        {"skeleton (b), case 2", one_r, 7, "z^4 Mt(0) Mt(y2) Pt(y1,y2,0,0) Pt(0,y2,0,0)^2 Pt(0,y2+y3,0,0)",
         O::Printed, ""},
        {"skeleton (b), subtraction (i)", minus_half, 3, "z^7 Mt(0)^4 Pt(y1+y2,0,0,0) Pt(0,0,0,0)^5", O::Printed,
         ""},
        {"skeleton (b), subtraction (ii)", minus_one, 3,
         "z^7 Mt(0) Mt(y1)^3 Pt(y2,y1,y1,0) Pt(y1,y1,y1,0) Pt(0,y1,0,0)^4", O::Printed, ""},
        {"skeleton (c), case 1", one_r, 7,
         "z^4 Mt(y1) Mt(y2+y3) Pt(0,y1+y2+y3,y2+y3,0) Pt(0,y1+y3,y1,0) Pt(0,y1+y2+y3,y1,0) Pt(0,y1+y2+y3,0,0)",
         O::Corrected, "last factor printed without its z argument"},
        {"skeleton (c), case 2", one_r, 7, "z^4 Mt(0) Mt(y2+y3) Pt(y1,y2+y3,0,0) Pt(0,y2+y3,0,0)^2 Pt(0,y3,0,0)",
         O::Printed, ""},
        {"skeleton (c), case 3", one_r, 7, "z^4 Mt(0) Mt(y2+y3) Pt(y1,y3,0,0) Pt(0,y2+y3,y2,0) Pt(0,y2+y3,0,0)^2",
         O::Printed, ""},
        {"skeleton (c), case 4", one_r, 7, "z^4 Mt(y1) Mt(y2) Pt(y3,y1+y2,y2,0) Pt(0,y1,0,0) Pt(0,y1+y2,0,0)^2",
         O::Printed, ""},
        {"skeleton (c), case 5", one_r, 7, "z^4 Mt(y1) Mt(y3) Pt(y2,y1+y3,y3,0) Pt(0,y1+y3,y1,0) Pt(0,y1+y3,0,0)^2",
         O::Printed, ""},
        {"skeleton (c), case 6", one_r, 7, "z^4 Mt(0) Mt(y1) Pt(y2,y3,0,0) Pt(y1,y3,0,0) Pt(0,y3,0,0)^2", O::Printed,
         ""},
        {"skeleton (c), case 7", one_r, 7, "z^4 Mt(0) Mt(y1) Pt(y2+y3,y1,0,0) Pt(0,y1,0,0)^3", O::Printed, ""},
        {"skeleton (c), subtraction row 1 (i)", minus_one, 1,
         "z^8 Mt(0)^3 Mt(y1) Pt(y1,y1,y1,0)^2 Pt(0,y1,0,0)^2 Pt(0,0,0,0)^2", O::Corrected,
         "one factor printed with four arguments P(z,0,0,0)"},
        {"skeleton (c), subtraction row 1 (ii)", minus_one, 1, "z^9 Mt(0) Mt(y1)^4 Pt(y1,y1,y1,0)^4 Pt(0,y1,0,0)^3",
         O::Printed, ""},
        {"skeleton (c), subtraction row 1 (iii)", minus_one, 1,
         "z^9 Mt(0) Mt(y1)^4 Pt(y1,y1,y1,0)^3 Pt(y1,y1,y1,y1)^2 Pt(0,y1,0,0)^2", O::Printed, ""},
        {"skeleton (c), subtraction row 1 (iv)", minus_one, 1, "z^9 Mt(0) Mt(y1)^4 Pt(y1,y1,y1,0)^4 Pt(0,y1,0,0)^3",
         O::Printed, ""},
        {"skeleton (c), subtraction row 1 (v)", minus_one, 1,
         "z^8 Mt(0) Mt(y1)^3 Pt(0,y1,y1,0)^2 Pt(y1,y1,y1,0) Pt(0,y1,0,0)^3", O::Printed, ""},
        {"skeleton (c), subtraction row 2 (i)", minus_one, 3,
         "z^6 Mt(y2) Mt(y1)^2 Pt(y2,y1+y2,y2,0) Pt(0,y1,0,0)^4", O::Printed, ""},
        {"skeleton (c), subtraction row 2 (ii)", minus_one, 0, "z^10 Mt(0)^5 Pt(0,0,0,0)^8", O::Corrected,
         "printed with four arguments P(z,0,0,0)"},
        {"skeleton (c), subtraction row 2 (iii)", minus_one, 0, "z^11 Mt(0)^6 Pt(0,0,0,0)^8", O::Printed, ""},
        {"skeleton (c), subtraction row 2 (iv)", minus_one, 0, "z^11 Mt(0)^6 Pt(0,0,0,0)^8", O::Printed, ""},
        {"skeleton (c), subtraction row 2, missing multiplicity", ExactRat(-5), 0, "z^11 Mt(0)^6 Pt(0,0,0,0)^8",
         O::Completion,
         "brute-force census of skeleton (c) at l=6 is 115605, the printed list gives 116055; the excess is "
         "exactly five copies of this marker-free term at every order checked"},
        {"skeleton (d), case 1", half, 7,
         "z^5 Mt(y1+y2) Mt(y1+y3) Mt(y2+y3) Pt(0,y1+y2+y3,y1+y2,0) Pt(0,y1+y2+y3,y1+y3,0) "
         "Pt(0,y1+y2+y3,y2+y3,0) Pt(0,y1+y2+y3,y3,0) Pt(0,y1+y2+y3,0,0)",
         O::Printed, ""},
        {"skeleton (d), case 2", one_r, 7,
         "z^5 Mt(y2) Mt(y3) Mt(y2+y3) Pt(y1,y2+y3,y3,0) Pt(0,y2+y3,y2,0) Pt(0,y2+y3,y3,0)^2 Pt(0,y2+y3,0,0)",
         O::Printed, ""},
        {"skeleton (d), case 3", one_r, 7,
         "z^5 Mt(y2) Mt(y3) Mt(y2+y3) Pt(y1,y2+y3,y2,0) Pt(0,y2+y3,y3,0) Pt(0,y2+y3,y2,0) Pt(0,y2+y3,0,0)^2",
         O::Printed, ""},
        {"skeleton (d), case 4", one_r, 7,
         "z^5 Mt(y1) Mt(y2) Mt(y1+y2) Pt(y3,y1+y2,y2,y3) Pt(0,y1+y2,y1,0) Pt(0,y1+y2,y2,0) Pt(0,y1+y2,0,0)^2",
         O::Printed, ""},
        {"skeleton (d), case 5", half, 7,
         "z^5 Mt(y1) Mt(y2) Mt(y1+y2) Pt(y3,y1+y2,0,0) Pt(0,y1+y2,y1,0) Pt(0,y1+y2,y2,0) Pt(0,y1+y2,0,0)^2",
         O::Printed, ""},
        {"skeleton (d), case 6", one_r, 7, "z^5 Mt(y3)^2 Mt(0) Pt(y1,y3,0,0) Pt(y2,y3,0,0) Pt(0,y3,0,0)^3",
         O::Printed, ""},
        {"skeleton (d), case 7", half, 7, "z^5 Mt(y3)^2 Mt(0) Pt(y1+y2,y3,0,0) Pt(0,y3,0,0)^4", O::Printed, ""},
        {"skeleton (d), case 8", one_r, 7, "z^5 Mt(y2)^2 Mt(0) Pt(y1,y2,0,0) Pt(y3,y2,0,y3) Pt(0,y2,0,0)^3",
         O::Printed, ""},
        {"skeleton (d), case 9", one_r, 7, "z^5 Mt(y2)^2 Mt(0) Pt(y1+y3,y2,0,y3) Pt(y3,y2,0,0) Pt(0,y2,0,0)^3",
         O::Printed, ""},
        {"skeleton (d), case 10", one_r, 7, "z^5 Mt(y2)^2 Mt(0) Pt(y1,y2,0,0) Pt(y3,y2,0,0) Pt(0,y2,0,0)^3",
         O::Printed, ""},
    };
}

}  // namespace

const std::vector<SkeletonTerm>& skeleton_terms(NetworkClass cls, int k) {
    static const std::vector<SkeletonTerm> t2 = tree_child_2(), t3 = tree_child_3(), n2 = normal_2(),
                                           n3 = normal_3();
    if (k != 2 && k != 3)
        throw std::invalid_argument("case sums exist for k = 2, 3 only (k = " + std::to_string(k) + ")");
    if (cls == NetworkClass::TreeChild) return k == 2 ? t2 : t3;
    return k == 2 ? n2 : n3;
}

TruncSeries case_sum(NetworkClass cls, int k, int order, std::vector<AuditLine>* audit) {
    const auto& terms = skeleton_terms(cls, k);
    ExpressionEvaluator ev(order);
    TruncSeries total(order);
    for (const auto& t : terms) {
        TruncSeries c = Y_operator(ev.evaluate(t.expr), t.derive) * t.coef;
        total += c;
        if (audit) audit->push_back({&t, c});
    }
    return total * pow2q(-k);
}

std::string format_audit(NetworkClass cls, int k, const std::vector<AuditLine>& lines, int first_counts) {
    std::ostringstream os;
    os << "# case sum " << to_string(cls) << " k=" << k << ", divided by " << (1 << k) << "\n";
    os << "# locus | origin | coefficient | derivative | expression | leaf-labeled contribution for l="
       << k + 1 << ".." << k + first_counts << " | note\n";
    for (const auto& line : lines) {
        const SkeletonTerm& t = *line.term;
        os << t.locus << " | " << to_string(t.origin) << " | " << to_string(t.coef) << " | ";
        if (t.derive == 0) os << "none";
        for (unsigned i = 0; i < 3; ++i)
            if (t.derive & (1u << i)) os << "d/dy" << i + 1;
        os << " | " << t.expr << " |";
        for (int l = k + 1; l <= k + first_counts; ++l) {
            int n = 2 * l + 2 * k - 1;
            if (n > line.contribution.order()) break;
            ExactRat v = line.contribution[n] * ExactRat(factorial(l)) * pow2q(-k);
            os << ' ' << to_string(v);
        }
        os << " |";
        if (!t.note.empty()) os << ' ' << t.note;
        os << "\n";
    }
    return os.str();
}

}  // namespace phylocount
