#pragma once

// Central charges on K(P^2).
//
// A CentralCharge is stored by its values on the three simple classes
// [F0], [F1], [F2] of the heart A_1, i.e. on ch(O), -ch(O(1)), ch(O(2)).
// The exact backend keeps real parts and imaginary coefficients in Q; the
// actual imaginary part is coefficient * sqrt(im_scale). The geometric family
// Z_(bH,tH) has im_scale = t^2, folded to 1 whenever t is rational.

#include "p2stab/ktheory.hpp"
#include "p2stab/rational.hpp"

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace p2stab {

constexpr double kFloatTolerance = 1e-12;

struct ChargeValue {
    Rational re;
    Rational im;

    bool operator==(const ChargeValue&) const = default;
    ChargeValue operator+(const ChargeValue& o) const { return {re + o.re, im + o.im}; }
};

ChargeValue operator*(const Rational& k, const ChargeValue& z);

class CentralCharge {
public:
    enum class Backend { exact, floating };
    enum class Origin { geometric, sigma_b, custom };

    static CentralCharge exact(std::array<ChargeValue, 3> values, Origin origin = Origin::custom,
                               Rational im_scale = 1);
    static CentralCharge floating(std::array<std::complex<double>, 3> values, Origin origin = Origin::custom);

    Backend backend() const { return backend_; }
    Origin origin() const { return origin_; }
    bool is_exact() const { return backend_ == Backend::exact; }

    /// Exact basis values; imaginary parts in units of sqrt(im_scale()).
    const std::array<ChargeValue, 3>& values() const;
    const Rational& im_scale() const { return im_scale_; }
    std::array<std::complex<double>, 3> approx() const;

    /// Every basis value lies in {m exp(i pi phi) : m > 0, 0 < phi <= 1}.
    bool basis_in_upper_half_plane() const;

    std::optional<Rational> param_b;
    std::optional<Rational> param_t2;

private:
    Backend backend_ = Backend::exact;
    Origin origin_ = Origin::custom;
    std::array<ChargeValue, 3> exact_{};
    Rational im_scale_ = 1;
    std::array<std::complex<double>, 3> float_{};
};

/// Z_(bH,tH)(a): Re = -s + d b + r (t2 - b^2) / 2 and Im = (d - r b) t, with
/// the imaginary part carried as the coefficient of t = sqrt(t2).
struct GeometricValue {
    Rational re;
    Rational im_coeff;
    Rational t2;

    std::optional<Rational> t() const;
    double im_approx() const;
};

GeometricValue z_geometric(const NumClass& a, const Rational& b, const Rational& t2);
GeometricValue z_cha_form(const NumClass& a, const Rational& b, const Rational& t2);

/// Z_(bH,tH) as a CentralCharge on the A_1 simples.
CentralCharge z_geometric_charge(const Rational& b, const Rational& t2);

/// Z^b(F0) = -b, Z^b(F1) = -1 + b, Z^b(F2) = 3 - 3b + i.
CentralCharge z_sigma_b(const Rational& b);

ChargeValue eval(const CentralCharge& z, const DimensionVector& v);
std::complex<double> eval_approx(const CentralCharge& z, const DimensionVector& v);
/// Evaluates on a class expressed in the A_1 basis.
ChargeValue eval(const CentralCharge& z, const ChernCharacter& a);

struct Phase {
    double phi = 0;  // in (0, 1]
    Slope mu;        // -Re/Im, +inf on the negative real axis
};

Phase phase(const ChargeValue& z);
double phase_approx(std::complex<double> z);

class GLMatrix {
public:
    /// Row-major [[a, b], [c, d]]; det must be positive.
    GLMatrix(Rational a, Rational b, Rational c, Rational d);

    static GLMatrix identity() { return GLMatrix(1, 0, 0, 1); }

    const std::array<Rational, 4>& entries() const { return m_; }
    Rational det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    GLMatrix inverse() const;
    GLMatrix operator*(const GLMatrix& o) const;
    std::pair<Rational, Rational> apply(const Rational& x, const Rational& y) const;
    bool operator==(const GLMatrix&) const = default;

private:
    std::array<Rational, 4> m_;
};

/// Floating GL+ matrix for irrational data.
struct GLMatrixF {
    std::array<double, 4> m{1, 0, 0, 1};
    double det() const { return m[0] * m[3] - m[1] * m[2]; }
};

/// Z_{sigma g} := T^{-1} o Z.
CentralCharge gl_act(const GLMatrix& t, const CentralCharge& z);
CentralCharge gl_act(const GLMatrixF& t, const CentralCharge& z);

/// pi(sigma^b) = u + i v with u = (2b-1, b+1/2, b), v = (-1, -1/2, 0).
std::pair<NumClass, NumClass> pi_sigma_b(const Rational& b);

/// The matrix T^{-1} relating sigma^b to sigma_(bH,tH), t = sqrt(b - b^2);
/// nullopt when t is irrational.
std::optional<GLMatrix> sigma_b_t_inverse(const Rational& b);
GLMatrixF sigma_b_t_inverse_approx(const Rational& b);

struct TIdentityReport {
    bool ok = false;
    bool exact = false;
    std::optional<Rational> t;
    std::array<NumClass, 2> product;   // T^{-1} (u; v), exact mode only
    std::array<NumClass, 2> expected;  // (1, b, b^2 - b/2), (0, t, b t)
    double max_error = 0;              // float mode only
};

TIdentityReport verify_t_identity(const Rational& b, bool allow_float = false);

struct AbcReport {
    Rational a;
    Rational b;
    Rational c;
    bool ok = false;
};

/// The three 2x2 determinants with columns Z(beta), Z(O_x) for
/// beta = [F2], [F1]+[F2], 2[F1]+[F2]; in units of sqrt(im_scale).
AbcReport geom_conditions_abc(const CentralCharge& z);

struct HypothesesReport {
    Rational epsilon;
    GeometricValue z;
    bool ok_range = false;
    bool ok_re = false;
    bool ok_t = false;
    bool all() const { return ok_range && ok_re && ok_t; }
};

HypothesesReport theorem1_hypotheses(const NumClass& a, const Rational& b, const Rational& t2);

/// Compares -Re/Im of Z_(bH,tH) with (nu_gamma - (t^2 - b^2)/2) / (t mu - t b),
/// gamma = b + 3/2, both scaled by t.
bool slope_identity_check(const NumClass& a, const Rational& b, const Rational& t2);

struct ScanRow {
    Rational b;
    Rational t2;
    HypothesesReport hyp;
    AbcReport abc;
};

/// Evaluates the grid b_from + i (b_to - b_from)/b_steps, likewise for t2.
std::vector<ScanRow> charge_scan(const NumClass& a, const Rational& b_from, const Rational& b_to, int b_steps,
                                 const Rational& t2_from, const Rational& t2_to, int t2_steps);
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace p2stab
