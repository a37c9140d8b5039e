#include "p2stab/geometry.hpp"

#include "p2stab/error.hpp"

namespace p2stab {

namespace {

Point cross(const Point& a, const Point& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const Point& x) { return x[0] == 0 && x[1] == 0 && x[2] == 0; }

Matrix diag(const std::vector<Rational>& v) {
    Matrix m(v.size(), v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m(i, i) = v[i];
    return m;
}

std::vector<Rational> coordinate(const PointConfig& z, std::size_t i) {
    std::vector<Rational> out;
    for (const auto& x : z.points()) out.push_back(x[i]);
    return out;
}

}  // namespace

std::string to_string(const Point& x) { return "[" + to_string(x[0]) + ":" + to_string(x[1]) + ":" + to_string(x[2]) + "]"; }

bool same_projective_point(const Point& a, const Point& b) { return is_zero(cross(a, b)); }

PointConfig::PointConfig(std::vector<Point> points) : points_(std::move(points)) {
    for (const auto& x : points_)
        if (is_zero(x)) fail("zero coordinate triple is not a point");
    for (std::size_t i = 0; i < points_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (same_projective_point(points_[i], points_[j]))
                fail("non-reduced subscheme unsupported: points " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
}

QuiverRep module_point(const Point& x, std::int64_t) {
    if (is_zero(x)) fail("zero coordinate triple is not a point");
    const Field q = Field::rationals();
    Matrix row(1, 3, {x[0], x[1], x[2]});
    Matrix w = kernel(row, q);  // 3 x 2, columns span W_x
    std::array<Matrix, 3> gamma, delta;
    for (std::size_t i = 0; i < 3; ++i) gamma[i] = Matrix(2, 1, {w(i, 0), w(i, 1)});
    for (std::size_t j = 0; j < 3; ++j) {
        Matrix wj(3, 1);
        wj((j + 1) % 3, 0) = x[(j + 2) % 3];
        wj((j + 2) % 3, 0) = -x[(j + 1) % 3];
        auto c = solve(w, wj, q);
        if (!c) fail_verification("module_point: w_j outside W_x");
        delta[j] = c->transpose();
    }
    QuiverRep rep(Algebra::B, q, {1, 2, 1}, gamma, delta);
    if (!check_relations(rep).ok) fail_verification("module_point violates J");
    return rep;
}

QuiverRep bprime_module_points(const PointConfig& z) {
    const std::size_t n = z.size();
    require(n >= 1, "at least one point required");
    Matrix proj(n - 1, n);
    for (std::size_t r = 0; r + 1 < n; ++r) {
        proj(r, r) = 1;
        proj(r, n - 1) = -1;
    }
    const Field q = Field::rationals();
    std::array<Matrix, 3> gamma, delta;
    for (std::size_t i = 0; i < 3; ++i) {
        gamma[i] = diag(coordinate(z, i));
        delta[i] = multiply(proj, gamma[i], q);
    }
    QuiverRep rep(Algebra::Bprime, q, {n, n, n - 1}, gamma, delta);
    if (!check_relations(rep).ok) fail_verification("bprime_module_points violates J'");
    return rep;
}

IdealModule module_ideal_A1(const PointConfig& z) {
    TiltResult t = tilt_Bprime_to_B(bprime_module_points(z));
    return {t.rep, t.generic};
}

QuiverRep module_ideal_A0(const PointConfig& z) {
    const std::size_t n = z.size();
    require(n >= 1, "at least one point required");
    QuiverRep sum = module_point(z[0], 0);
    for (std::size_t k = 1; k < n; ++k) sum = direct_sum(sum, module_point(z[k], 0));
    Matrix ones(n, 1);
    for (std::size_t k = 0; k < n; ++k) ones(k, 0) = 1;
    SubspaceTriple line{{zero_space(n), zero_space(2 * n), ones}};
    if (!is_invariant(sum, line)) fail_verification("module_ideal_A0: evaluation line is not a submodule");
    QuiverRep m = quotient_by(sum, line);
    // (0,0,1) + (n,2n,n-1) = (n,2n,n)
    if (m.dimvec() + DimensionVector{{0, 0, 1}} != sum.dimvec()) fail_verification("module_ideal_A0: class bookkeeping");
    return m;
}

Rational composite_form(std::size_t i, std::size_t j, const Point& x) {
    if (i == (j + 1) % 3) return x[(j + 2) % 3];
    if (i == (j + 2) % 3) return -x[(j + 1) % 3];
    return 0;
}

bool composite_diagonality(const QuiverRep& n, const PointConfig& z) {
    if (n.dim(0) != z.size() || n.dim(2) != z.size()) return false;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            std::vector<Rational> d;
            for (const auto& x : z.points()) d.push_back(composite_form(i, j, x));
            if (!(n.composite(i, j) == diag(d))) return false;
        }
    }
    return true;
}

CollinearReport collinear_test(const PointConfig& z) {
    CollinearReport r;
    Matrix coords(z.size(), 3);
    for (std::size_t k = 0; k < z.size(); ++k)
        for (std::size_t i = 0; i < 3; ++i) coords(k, i) = z[k][i];
    const Field q = Field::rationals();
    // a common kernel functional exists iff the rank is at most 2
    r.by_rank = kernel(coords, q).cols() >= 1;
    r.collinear = r.by_rank;
    if (z.size() >= 3) {
        r.by_hom = !hom_space(simple(Algebra::B, 1), module_ideal_A0(z)).empty();
        r.agree = *r.by_hom == r.by_rank;
    }
    return r;
}

std::string to_string(WallKind w) { return w == WallKind::theta1_1 ? "theta1_1" : "theta0_0"; }

WallKind parse_wall(const std::string& s) {
    if (s == "theta1_1") return WallKind::theta1_1;
    if (s == "theta0_0") return WallKind::theta0_0;
    fail("unknown wall '" + s + "' (expected theta1_1 or theta0_0)");
}

FiltrationData wall_filtration_data(const PointConfig& z, WallKind wall, const SearchOptions& opt) {
    const auto n = static_cast<long>(z.size());
    require(n >= 1, "at least one point required");
    FiltrationData out;
    out.wall = wall;
    if (wall == WallKind::theta1_1) {
        out.theta = ThetaVector{{Rational(-n), 0, Rational(n)}};
        QuiverRep m = module_ideal_A1(z).rep;
        JHResult jh = jh_factors(m, out.theta, opt);
        out.factors_certified = jh.certified;
        std::vector<QuiverRep> points;
        for (const auto& x : z.points()) points.push_back(module_point(x));
        std::vector<bool> used(points.size(), false);
        std::size_t matched = 0;
        for (const auto& f : jh.factors) {
            out.factor_dims.push_back(f.dimvec());
            int hit = -1;
            if (f.dims() == Dims{1, 2, 1}) {
                for (std::size_t k = 0; k < points.size() && hit < 0; ++k) {
                    if (used[k]) continue;
                    if (iso_test(f, points[k], opt.seed).isomorphic) {
                        used[k] = true;
                        hit = static_cast<int>(k);
                        ++matched;
                    }
                }
            }
            out.point_match.push_back(hit);
        }
        out.all_points_matched = matched == points.size();
        return out;
    }

    if (!collinear_test(z).collinear) fail("wall theta0_0 requires collinear configuration");
    out.theta = ThetaVector{{Rational(1 - n), 0, Rational(n)}};
    QuiverRep m = module_ideal_A0(z);
    auto hom = hom_space(simple(Algebra::B, 1), m);
    if (hom.empty()) fail_verification("collinear configuration without a map from Cv1");
    SubspaceTriple image{{zero_space(m.dim(0)), hom[0][1], zero_space(m.dim(2))}};
    SubspaceTriple sub = generated_submodule(m, image);
    out.sub_dims = sub.dims();
    QuiverRep quot = quotient_by(m, sub);
    out.quotient_dims = quot.dimvec();
    out.quotient_class = chern_of_dimvec(quot.dimvec(), HeartBasis::A(0));
    // class of O_l(1-n)[1]
    out.quotient_class_ok = static_cast<const NumClass&>(*out.quotient_class) ==
                            NumClass{0, -1, Rational(2 * n - 1, 2)};
    return out;
}

}  // namespace p2stab
