#include "paulivol/exact.hpp"

#include <cctype>
#include <stdexcept>

namespace paulivol::exact {

Integer binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

Rational pow_rational(const Rational& q, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), e);
    // num/den already coprime, so the power is canonical except for sign
    // conventions, which mpz_pow_ui preserves (den > 0).
    return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
        Integer n, d;
        if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0 ||
            mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: malformed fraction '" + text + "'");
        return make_rational(n, d);
    }
    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string head = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
        const bool neg = !head.empty() && head[0] == '-';
        std::string digits = neg ? head.substr(1) : head;
        if (digits.empty()) digits = "0";
        digits += frac;
        Integer n;
        if (digits.empty() || mpz_set_str(n.get_mpz_t(), digits.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: malformed decimal '" + text + "'");
        Integer den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        if (neg) n = -n;
        return make_rational(n, den);
    }
    Integer n;
    if (mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: malformed integer '" + text + "'");
    return Rational(n);
}

std::string to_decimal_string(const Rational& q, unsigned digits) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    Integer scaled;
    // floor(q * 10^digits): rounding toward -inf in all cases.
    Integer num = q.get_num() * scale;
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    std::string body = scaled.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    std::string out = neg ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer ceil_sqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("ceil_sqrt: negative argument");
    Integer root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (rem != 0) root += 1;
    return root;
}

bool is_perfect_square(const Integer& n, Integer* root) {
    if (n < 0) return false;
    Integer r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t());
    if (root) *root = r;
    return rem == 0;
}

}  // namespace paulivol::exact
