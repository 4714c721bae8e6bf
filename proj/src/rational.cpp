#include "confstab/rational.hpp"

#include <stdexcept>

namespace confstab {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    q.canonicalize();
    return q;
}

long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer out of range: " + z.get_str());
    return z.get_si();
}

long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("not an integer: " + q.get_str());
    return to_long(Integer(q.get_num()));
}

Integer factorial(int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace confstab
