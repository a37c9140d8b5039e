#include "p2stab/charge.hpp"

#include "p2stab/error.hpp"
#include "p2stab/parallel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace p2stab {

namespace {

// A_1 simple classes.
const std::array<ChernCharacter, 3>& a1_simples() {
    static const std::array<ChernCharacter, 3> s = HeartBasis::A(1).basis();
    return s;
}

bool in_closed_upper(const Rational& re, const Rational& im) { return im > 0 || (im == 0 && re < 0); }

bool in_closed_upper(std::complex<double> z) {
    return z.imag() > kFloatTolerance || (std::abs(z.imag()) <= kFloatTolerance && z.real() < -kFloatTolerance);
}

}  // namespace

ChargeValue operator*(const Rational& k, const ChargeValue& z) { return {k * z.re, k * z.im}; }

CentralCharge CentralCharge::exact(std::array<ChargeValue, 3> values, Origin origin, Rational im_scale) {
    require(im_scale > 0, "imaginary scale must be positive");
    CentralCharge z;
    z.backend_ = Backend::exact;
    z.origin_ = origin;
    Rational root;
    if (im_scale != 1 && rational_sqrt(im_scale, root)) {
        for (auto& v : values) v.im *= root;
        im_scale = 1;
    }
    z.exact_ = values;
    z.im_scale_ = im_scale;
    return z;
}

CentralCharge CentralCharge::floating(std::array<std::complex<double>, 3> values, Origin origin) {
    CentralCharge z;
    z.backend_ = Backend::floating;
    z.origin_ = origin;
    z.float_ = values;
    return z;
}

const std::array<ChargeValue, 3>& CentralCharge::values() const {
    if (backend_ != Backend::exact) fail("exact values requested from a floating central charge");
    return exact_;
}

std::array<std::complex<double>, 3> CentralCharge::approx() const {
    if (backend_ == Backend::floating) return float_;
    const double s = std::sqrt(to_double(im_scale_));
    std::array<std::complex<double>, 3> out;
    for (std::size_t i = 0; i < 3; ++i) out[i] = {to_double(exact_[i].re), to_double(exact_[i].im) * s};
    return out;
}

bool CentralCharge::basis_in_upper_half_plane() const {
    if (backend_ == Backend::exact) {
        for (const auto& v : exact_)
            if (!in_closed_upper(v.re, v.im)) return false;
        return true;
    }
    for (const auto& v : float_)
        if (!in_closed_upper(v)) return false;
    return true;
}

std::optional<Rational> GeometricValue::t() const {
    Rational root;
    if (rational_sqrt(t2, root)) return root;
    return std::nullopt;
}

double GeometricValue::im_approx() const { return to_double(im_coeff) * std::sqrt(to_double(t2)); }

GeometricValue z_geometric(const NumClass& a, const Rational& b, const Rational& t2) {
    if (t2 <= 0) fail("not in the ample range (t^2 must be positive)");
    Rational re = -a.s + a.d * b + a.r * (t2 - b * b) / 2;
    return {re, a.d - a.r * b, t2};
}

GeometricValue z_cha_form(const NumClass& a, const Rational& b, const Rational& t2) {
    if (a.r == 0) fail("rank-zero class");
    if (t2 <= 0) fail("not in the ample range (t^2 must be positive)");
    Rational shifted = a.d - a.r * b;
    Rational re = (bogomolov(a) + a.r * a.r * t2 - shifted * shifted) / (2 * a.r);
    return {re, shifted, t2};
}

CentralCharge z_geometric_charge(const Rational& b, const Rational& t2) {
    std::array<ChargeValue, 3> v;
    for (std::size_t i = 0; i < 3; ++i) {
        auto g = z_geometric(a1_simples()[i], b, t2);
        v[i] = {g.re, g.im_coeff};
    }
    auto z = CentralCharge::exact(v, CentralCharge::Origin::geometric, t2);
    z.param_b = b;
    z.param_t2 = t2;
    return z;
}

CentralCharge z_sigma_b(const Rational& b) {
    if (b <= 0 || b >= 1) fail("sigma_b defined for 0<b<1");
    auto z = CentralCharge::exact({ChargeValue{-b, 0}, ChargeValue{-1 + b, 0}, ChargeValue{-3 * b + 3, 1}},
                                  CentralCharge::Origin::sigma_b);
    z.param_b = b;
    return z;
}

ChargeValue eval(const CentralCharge& z, const DimensionVector& v) {
    ChargeValue out{0, 0};
    for (std::size_t i = 0; i < 3; ++i) out = out + Rational(static_cast<long>(v[i])) * z.values()[i];
    return out;
}

std::complex<double> eval_approx(const CentralCharge& z, const DimensionVector& v) {
    auto vals = z.approx();
    std::complex<double> out{0, 0};
    for (std::size_t i = 0; i < 3; ++i) out += static_cast<double>(v[i]) * vals[i];
    return out;
}

ChargeValue eval(const CentralCharge& z, const ChernCharacter& a) { return eval(z, dimvec(a, HeartBasis::A(1))); }

Phase phase(const ChargeValue& z) {
    if (z.re == 0 && z.im == 0) fail("zero charge");
    if (!in_closed_upper(z.re, z.im)) fail("not a stability-function value");
    Phase p;
    if (z.im == 0) {
        p.phi = 1;
        p.mu = Slope{true, 0};
    } else {
        p.mu = Slope{false, -z.re / z.im};
        if (z.re == 0) {
            p.phi = 0.5;
        } else {
            p.phi = std::atan2(to_double(z.im), to_double(z.re)) / std::numbers::pi;
        }
    }
    return p;
}

double phase_approx(std::complex<double> z) {
    if (std::abs(z) <= kFloatTolerance) fail("zero charge");
    if (!in_closed_upper(z)) fail("not a stability-function value");
    if (std::abs(z.imag()) <= kFloatTolerance) return 1.0;
    return std::atan2(z.imag(), z.real()) / std::numbers::pi;
}

GLMatrix::GLMatrix(Rational a, Rational b, Rational c, Rational d) : m_{std::move(a), std::move(b), std::move(c), std::move(d)} {
    if (det() <= 0) fail("not in GL+ (determinant must be positive)");
}

GLMatrix GLMatrix::inverse() const {
    Rational dt = det();
    return GLMatrix(m_[3] / dt, -m_[1] / dt, -m_[2] / dt, m_[0] / dt);
}

GLMatrix GLMatrix::operator*(const GLMatrix& o) const {
    const auto& a = m_;
    const auto& b = o.m_;
    return GLMatrix(a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
                    a[2] * b[1] + a[3] * b[3]);
}

std::pair<Rational, Rational> GLMatrix::apply(const Rational& x, const Rational& y) const {
    return {m_[0] * x + m_[1] * y, m_[2] * x + m_[3] * y};
}

CentralCharge gl_act(const GLMatrix& t, const CentralCharge& z) {
    if (!z.is_exact() || z.im_scale() != 1) {
        const auto& e = t.entries();
        return gl_act(GLMatrixF{{to_double(e[0]), to_double(e[1]), to_double(e[2]), to_double(e[3])}}, z);
    }
    GLMatrix inv = t.inverse();
    std::array<ChargeValue, 3> v;
    for (std::size_t i = 0; i < 3; ++i) {
        auto [x, y] = inv.apply(z.values()[i].re, z.values()[i].im);
        v[i] = {x, y};
    }
    return CentralCharge::exact(v, CentralCharge::Origin::custom);
}

CentralCharge gl_act(const GLMatrixF& t, const CentralCharge& z) {
    const double dt = t.det();
    if (!(dt > kFloatTolerance)) fail("not in GL+ (determinant must be positive)");
    const auto& m = t.m;
    const std::array<double, 4> inv{m[3] / dt, -m[1] / dt, -m[2] / dt, m[0] / dt};
    std::array<std::complex<double>, 3> out;
    auto vals = z.approx();
    for (std::size_t i = 0; i < 3; ++i) {
        double x = vals[i].real();
        double y = vals[i].imag();
        out[i] = {inv[0] * x + inv[1] * y, inv[2] * x + inv[3] * y};
    }
    return CentralCharge::floating(out, CentralCharge::Origin::custom);
}

std::pair<NumClass, NumClass> pi_sigma_b(const Rational& b) {
    if (b <= 0 || b >= 1) fail("sigma_b defined for 0<b<1");
    NumClass u{2 * b - 1, b + Rational(1, 2), b};
    NumClass v{-1, Rational(-1, 2), 0};
    return {u, v};
}

std::optional<GLMatrix> sigma_b_t_inverse(const Rational& b) {
    if (b <= 0 || b >= 1) fail("sigma_b defined for 0<b<1");
    Rational t;
    if (!rational_sqrt(b - b * b, t)) return std::nullopt;
    return GLMatrix(b - Rational(1, 2), 2 * b * b - 2 * b - Rational(1, 2), t, (2 * b - 1) * t);
}

GLMatrixF sigma_b_t_inverse_approx(const Rational& b) {
    if (b <= 0 || b >= 1) fail("sigma_b defined for 0<b<1");
    const double bb = to_double(b);
    const double t = std::sqrt(bb - bb * bb);
    return GLMatrixF{{bb - 0.5, 2 * bb * bb - 2 * bb - 0.5, t, (2 * bb - 1) * t}};
}

TIdentityReport verify_t_identity(const Rational& b, bool allow_float) {
    auto [u, v] = pi_sigma_b(b);
    TIdentityReport rep;
    auto tinv = sigma_b_t_inverse(b);
    if (tinv) {
        Rational t;
        rational_sqrt(b - b * b, t);
        const auto& e = tinv->entries();
        rep.exact = true;
        rep.t = t;
        rep.product = {e[0] * u + e[1] * v, e[2] * u + e[3] * v};
        rep.expected = {NumClass{1, b, b * b - b / 2}, NumClass{0, t, b * t}};
        rep.ok = rep.product == rep.expected;
        return rep;
    }
    if (!allow_float) fail("needs float backend (b - b^2 is not a rational square)");
    GLMatrixF m = sigma_b_t_inverse_approx(b);
    const double bb = to_double(b);
    const double t = std::sqrt(bb - bb * bb);
    auto comps = [](const NumClass& c) {
        return std::array<double, 3>{to_double(c.r), to_double(c.d), to_double(c.s)};
    };
    auto uu = comps(u);
    auto vv = comps(v);
    const std::array<std::array<double, 3>, 2> expected{{{1, bb, bb * bb - bb / 2}, {0, t, bb * t}}};
    double err = 0;
    for (std::size_t row = 0; row < 2; ++row)
        for (std::size_t k = 0; k < 3; ++k) {
            double val = m.m[2 * row] * uu[k] + m.m[2 * row + 1] * vv[k];
            err = std::max(err, std::abs(val - expected[row][k]));
        }
    rep.exact = false;
    rep.max_error = err;
    rep.ok = err <= kFloatTolerance;
    return rep;
}

AbcReport geom_conditions_abc(const CentralCharge& z) {
    const auto& v = z.values();
    auto det = [](const ChargeValue& beta, const ChargeValue& point) -> Rational { return beta.re * point.im - point.re * beta.im; };
    const ChargeValue point = v[0] + 2 * v[1] + v[2];
    AbcReport r;
    r.a = det(v[2], point);
    r.b = det(v[1] + v[2], point);
    r.c = det(2 * v[1] + v[2], point);
    r.ok = r.a > 0 && r.b > 0 && r.c > 0;
    return r;
}

HypothesesReport theorem1_hypotheses(const NumClass& a, const Rational& b, const Rational& t2) {
    if (a.r <= 0) fail("positive rank required");
    HypothesesReport h;
    h.z = z_geometric(a, b, t2);
    h.epsilon = a.d - a.r * b;
    h.ok_range = h.epsilon > 0 && h.epsilon * h.epsilon <= t2 && h.epsilon <= 1 / a.r;
    h.ok_t = t2 > 0 && t2 <= 1;
    h.ok_re = h.z.re >= 0;
    return h;
}

bool slope_identity_check(const NumClass& a, const Rational& b, const Rational& t2) {
    if (a.r == 0) fail("rank-zero class");
    if (a.d == a.r * b) fail("wall of infinite slope (d = r b)");
    auto z = z_geometric(a, b, t2);
    Rational lhs = -z.re / z.im_coeff;
    auto sl = slopes(a, b + Rational(3, 2));
    Rational rhs = (*sl.nu - (t2 - b * b) / 2) / (sl.mu.value - b);
    return lhs == rhs;
}

std::vector<ScanRow> charge_scan(const NumClass& a, const Rational& b_from, const Rational& b_to, int b_steps,
                                 const Rational& t2_from, const Rational& t2_to, int t2_steps) {
    require(b_steps >= 0 && t2_steps >= 0, "grid steps must be nonnegative");
    const std::size_t nb = static_cast<std::size_t>(b_steps) + 1;
    const std::size_t nt = static_cast<std::size_t>(t2_steps) + 1;
    auto point = [](const Rational& from, const Rational& to, int steps, std::size_t i) -> Rational {
        if (steps == 0) return from;
        return from + (to - from) * make_rational(static_cast<long>(i), steps);
    };
    return parallel_map(nb * nt, [&](std::size_t idx) {
        ScanRow row;
        row.b = point(b_from, b_to, b_steps, idx / nt);
        row.t2 = point(t2_from, t2_to, t2_steps, idx % nt);
        row.hyp = theorem1_hypotheses(a, row.b, row.t2);
        row.abc = geom_conditions_abc(z_geometric_charge(row.b, row.t2));
        return row;
    });
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    std::ostringstream os;
    os << "b,t2,epsilon,reZ,imZ_coeff,abc_a,abc_b,abc_c,hypotheses_ok\n";
    for (const auto& r : rows) {
        os << to_string(r.b) << ',' << to_string(r.t2) << ',' << to_string(r.hyp.epsilon) << ','
           << to_string(r.hyp.z.re) << ',' << to_string(r.hyp.z.im_coeff) << ',' << to_string(r.abc.a) << ','
           << to_string(r.abc.b) << ',' << to_string(r.abc.c) << ',' << (r.hyp.all() ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace p2stab
