#include "phylocount/exact.hpp"

namespace phylocount {

ExactInt factorial(unsigned long n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

ExactInt binomial(unsigned long n, unsigned long k) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

ExactInt pow2(unsigned long e) {
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

ExactRat pow2q(long e) {
    if (e >= 0) return ExactRat(pow2(static_cast<unsigned long>(e)));
    ExactRat r(ExactInt(1), pow2(static_cast<unsigned long>(-e)));
    return r;
}

std::string to_string(const ExactRat& v) {
    ExactRat c(v);
    c.canonicalize();
    return c.get_str();
}

}  // namespace phylocount
