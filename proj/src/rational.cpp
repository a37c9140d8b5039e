#include "p2stab/rational.hpp"

#include "p2stab/error.hpp"

#include <cctype>
#include <limits>

namespace p2stab {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
        fail("malformed rational '" + std::string(text) + "'");
    }
    Rational q;
    if (slash == std::string_view::npos) {
        q = Rational(Integer(std::string(num)));
    } else {
        Integer d(std::string(den), 10);
        if (d == 0) fail("zero denominator in '" + std::string(text) + "'");
        q = Rational(Integer(std::string(num)), d);
        q.canonicalize();
    }
    if (text.front() == '-') q = -q;
    return q;
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_str();
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        out.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q) {
    if (!is_integer(q)) fail("expected an integer, got " + to_string(q));
    const Integer& n = q.get_num();
    if (!n.fits_slong_p()) fail("integer out of range: " + to_string(q));
    return n.get_si();
}

int sign(const Rational& q) { return sgn(q); }

Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }

bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    Integer num = q.get_num();
    Integer den = q.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

double to_double(const Rational& q) { return q.get_d(); }

Integer lcm_of_denominators(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

Rational make_rational(long num, long den) {
    if (den == 0) fail("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace p2stab
