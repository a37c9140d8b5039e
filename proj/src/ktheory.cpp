#include "p2stab/ktheory.hpp"

#include "p2stab/error.hpp"
#include "p2stab/linalg.hpp"

namespace p2stab {

namespace {

const Rational kCanonicalDegree = -3;

Rational q(std::int64_t v) { return Rational(static_cast<long>(v)); }

}  // namespace

NumClass operator+(const NumClass& a, const NumClass& b) { return {a.r + b.r, a.d + b.d, a.s + b.s}; }
NumClass operator-(const NumClass& a, const NumClass& b) { return {a.r - b.r, a.d - b.d, a.s - b.s}; }
NumClass operator-(const NumClass& a) { return {-a.r, -a.d, -a.s}; }
NumClass operator*(const Rational& k, const NumClass& a) { return {k * a.r, k * a.d, k * a.s}; }

ChernCharacter::ChernCharacter(Rational r, Rational d, Rational s) : c_{std::move(r), std::move(d), std::move(s)} {
    if (!in_lattice(c_)) {
        fail("(" + to_string(c_.r) + "," + to_string(c_.d) + "," + to_string(c_.s) +
             ") is not in Z + Z + (1/2)Z");
    }
}

bool ChernCharacter::in_lattice(const NumClass& c) {
    return is_integer(c.r) && is_integer(c.d) && is_integer(2 * c.s);
}

ChernCharacter ChernCharacter::from(const NumClass& c) { return ChernCharacter(c.r, c.d, c.s); }

std::string ChernCharacter::str() const {
    return "(" + to_string(r()) + "," + to_string(d()) + "," + to_string(s()) + ")";
}

ChernCharacter operator+(const ChernCharacter& a, const ChernCharacter& b) { return ChernCharacter::from(a.num() + b.num()); }
ChernCharacter operator-(const ChernCharacter& a, const ChernCharacter& b) { return ChernCharacter::from(a.num() - b.num()); }
ChernCharacter operator-(const ChernCharacter& a) { return ChernCharacter::from(-a.num()); }
ChernCharacter operator*(std::int64_t k, const ChernCharacter& a) { return ChernCharacter::from(q(k) * a.num()); }

ChernCharacter ch_line_bundle(std::int64_t m) { return ChernCharacter(q(1), q(m), Rational(q(m * m) / 2)); }

ChernCharacter ch_cotangent(std::int64_t m) { return twist(ChernCharacter(2, -3, Rational(3, 2)), m); }

ChernCharacter ch_point() { return ChernCharacter(0, 0, 1); }

std::string DimensionVector::str() const {
    return "[" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "]";
}

HeartBasis::HeartBasis(Kind kind, std::int64_t k) : kind_(kind), k_(k) {
    if (kind == Kind::A) {
        basis_ = {ch_line_bundle(k - 1), -ch_line_bundle(k), ch_line_bundle(k + 1)};
    } else {
        basis_ = {ch_line_bundle(k - 1), -ch_cotangent(k + 1), ch_line_bundle(k)};
    }
}

HeartBasis HeartBasis::A(std::int64_t k) { return HeartBasis(Kind::A, k); }
HeartBasis HeartBasis::Aprime(std::int64_t k) { return HeartBasis(Kind::Aprime, k); }

HeartBasis HeartBasis::parse(const std::string& name) {
    if (name == "A1") return A(1);
    if (name == "A0") return A(0);
    if (name == "A1p") return Aprime(1);
    auto parse_k = [&](std::size_t offset) {
        Rational k = parse_rational(name.substr(offset));
        return to_int64(k);
    };
    if (name.rfind("Ak:", 0) == 0) return A(parse_k(3));
    if (name.rfind("Apk:", 0) == 0) return Aprime(parse_k(4));
    fail("unknown heart '" + name + "' (expected A1, A0, A1p, Ak:<k> or Apk:<k>)");
}

std::string HeartBasis::name() const {
    if (kind_ == Kind::A) {
        if (k_ == 0 || k_ == 1) return "A" + std::to_string(k_);
        return "Ak:" + std::to_string(k_);
    }
    if (k_ == 1) return "A1p";
    return "Apk:" + std::to_string(k_);
}

Rational mukai_pair(const NumClass& a, const NumClass& b) { return a.d * b.d - a.r * b.s - b.r * a.s; }

Rational euler_chi(const NumClass& a, const NumClass& b) {
    return a.r * b.r + Rational(3, 2) * (a.r * b.d - b.r * a.d) - mukai_pair(a, b);
}

NumClass twist(const NumClass& a, const Rational& k) {
    return {a.r, a.d + a.r * k, a.s + a.d * k + a.r * k * k / 2};
}

ChernCharacter twist(const ChernCharacter& a, std::int64_t k) { return ChernCharacter::from(twist(a.num(), q(k))); }

std::strong_ordering Slope::operator<=>(const Slope& o) const {
    if (infinite || o.infinite) {
        if (infinite && o.infinite) return std::strong_ordering::equal;
        return infinite ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    int c = cmp(value, o.value);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool Slope::operator==(const Slope& o) const { return (*this <=> o) == std::strong_ordering::equal; }

std::string Slope::str() const { return infinite ? "+inf" : to_string(value); }

Slopes slopes(const NumClass& a, const Rational& gamma) {
    if (a.r == 0) return {Slope{true, 0}, std::nullopt};
    Rational mu = a.d / a.r;
    // nu_gamma = ch2/r - d (K/2 + gamma) / r with K = -3
    Rational nu = a.s / a.r - a.d * (kCanonicalDegree / 2 + gamma) / a.r;
    return {Slope{false, mu}, nu};
}

std::strong_ordering gieseker_compare(const NumClass& f, const NumClass& e, const Rational& gamma) {
    if (f.r <= 0 || e.r <= 0) fail("rank required positive");
    auto sf = slopes(f, gamma);
    auto se = slopes(e, gamma);
    if (auto c = sf.mu <=> se.mu; c != 0) return c;
    int c = cmp(*sf.nu, *se.nu);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational bogomolov(const NumClass& a) { return a.d * a.d - 2 * a.r * a.s; }

Rational expected_dim(const NumClass& a) { return a.d * a.d - a.r * a.r + 1 - 2 * a.r * a.s; }

DimensionVector dimvec(const ChernCharacter& a, const HeartBasis& h) {
    Matrix m(3, 3);
    for (std::size_t j = 0; j < 3; ++j) {
        const auto& b = h.basis()[j];
        m(0, j) = b.r();
        m(1, j) = b.d();
        m(2, j) = b.s();
    }
    auto x = solve(m, Matrix::column({a.r(), a.d(), a.s()}), Field::rationals());
    if (!x) fail_verification("heart basis of " + h.name() + " is singular");
    DimensionVector v;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!is_integer((*x)(i, 0))) fail("class " + a.str() + " not in heart lattice of " + h.name());
        v[i] = to_int64((*x)(i, 0));
    }
    return v;
}

ChernCharacter chern_of_dimvec(const DimensionVector& v, const HeartBasis& h) {
    ChernCharacter out;
    for (std::size_t i = 0; i < 3; ++i) out = out + v[i] * h.basis()[i];
    return out;
}

}  // namespace p2stab
