#include "p2stab/walls.hpp"

#include "p2stab/error.hpp"
#include "p2stab/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace p2stab {

namespace {

using Vec2 = std::array<Rational, 2>;

Rational cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
Rational dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

// Position of v on the circle starting at angle 0: upper half first.
bool upper_half(const Vec2& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); }

bool angle_less(const Vec2& a, const Vec2& b) {
    bool ha = upper_half(a), hb = upper_half(b);
    if (ha != hb) return ha;
    return cross2(a, b) > 0;
}

Vec2 to_q(const std::array<Integer, 2>& v) { return {Rational(v[0]), Rational(v[1])}; }

ThetaVector integer_theta(const std::array<Integer, 3>& v) {
    return ThetaVector{{Rational(v[0]), Rational(v[1]), Rational(v[2])}};
}

Integer pair_int(const ThetaVector& t, const DimensionVector& d) {
    Rational x = t(d);
    return x.get_num();
}

// Row Hermite normal form of a 2 x 3 integer matrix of rank 2.
void hermite(std::array<std::array<Integer, 3>, 2>& m) {
    std::size_t row = 0;
    for (std::size_t c = 0; c < 3 && row < 2; ++c) {
        // Euclid on rows row..1 in column c
        while (true) {
            std::size_t piv = 2;
            for (std::size_t r = row; r < 2; ++r)
                if (m[r][c] != 0 && (piv == 2 || abs(m[r][c]) < abs(m[piv][c]))) piv = r;
            if (piv == 2) break;
            std::swap(m[row], m[piv]);
            bool done = true;
            for (std::size_t r = row + 1; r < 2; ++r) {
                if (m[r][c] == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[row][c].get_mpz_t());
                for (std::size_t j = 0; j < 3; ++j) m[r][j] -= q * m[row][j];
                if (m[r][c] != 0) done = false;
            }
            if (done) break;
        }
        if (m[row][c] == 0) continue;
        if (m[row][c] < 0)
            for (auto& x : m[row]) x = -x;
        for (std::size_t r = 0; r < row; ++r) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[row][c].get_mpz_t());
            for (std::size_t j = 0; j < 3; ++j) m[r][j] -= q * m[row][j];
        }
        ++row;
    }
}

std::array<Integer, 2> primitive(Integer a, Integer b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (g != 0) {
        a /= g;
        b /= g;
    }
    if (a < 0 || (a == 0 && b < 0)) {
        a = -a;
        b = -b;
    }
    return {a, b};
}

// Rotation angle from `start` to `v` in direction sigma, as a vector whose
// counterclockwise angle from the positive axis is that rotation.
Vec2 relative(const Vec2& start, const Vec2& v, int sigma) {
    Rational c = cross2(start, v);
    return {dot2(start, v), sigma > 0 ? c : -c};
}

bool in_open_cone(const Vec2& a, const Vec2& b, const Vec2& x, int sigma) {
    const bool half = cross2(a, b) == 0;  // b = -a: half plane
    if (sigma * sign(cross2(a, x)) <= 0) return false;
    return half || sigma * sign(cross2(x, b)) > 0;
}

}  // namespace

std::array<Rational, 2> PerpPlane::coords(const ThetaVector& theta) const {
    Matrix a(3, 2), rhs(3, 1);
    for (std::size_t i = 0; i < 3; ++i) {
        a(i, 0) = basis[0][i];
        a(i, 1) = basis[1][i];
        rhs(i, 0) = theta[i];
    }
    auto x = solve(a, rhs, Field::rationals());
    if (!x) fail("not in the perpendicular plane");
    return {(*x)(0, 0), (*x)(1, 0)};
}

ThetaVector PerpPlane::point(const std::array<Rational, 2>& pq) const { return pq[0] * basis[0] + pq[1] * basis[1]; }

PerpPlane perp_plane(const DimensionVector& d) {
    require(!d.is_zero(), "class must be nonzero");
    std::array<Integer, 3> v{Integer(static_cast<long>(d[0])), Integer(static_cast<long>(d[1])),
                             Integer(static_cast<long>(d[2]))};
    std::array<std::array<Integer, 3>, 3> u{};  // columns of a unimodular matrix
    for (std::size_t i = 0; i < 3; ++i) u[i][i] = 1;
    while (true) {
        std::size_t k = 3, nonzero = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            if (v[i] == 0) continue;
            ++nonzero;
            if (k == 3 || abs(v[i]) < abs(v[k])) k = i;
        }
        if (nonzero <= 1) {
            std::array<std::array<Integer, 3>, 2> m;
            std::size_t row = 0;
            for (std::size_t j = 0; j < 3; ++j)
                if (j != k) m[row++] = u[j];
            hermite(m);
            return {d, {integer_theta(m[0]), integer_theta(m[1])}};
        }
        for (std::size_t j = 0; j < 3; ++j) {
            if (j == k || v[j] == 0) continue;
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), v[j].get_mpz_t(), v[k].get_mpz_t());
            v[j] -= q * v[k];
            for (std::size_t i = 0; i < 3; ++i) u[j][i] -= q * u[k][i];
        }
    }
}

std::array<Integer, 2> Wall::direction() const {
    Integer x = -normal[1], y = normal[0];
    if (y < 0 || (y == 0 && x < 0)) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

ThetaVector king_theta(const CentralCharge& z, const DimensionVector& mclass) {
    require(z.is_exact(), "king_theta needs an exact central charge");
    ChargeValue m = eval(z, mclass);
    if (m.re == 0 && m.im == 0) fail("zero charge on the module class");
    ThetaVector t;
    for (std::size_t i = 0; i < 3; ++i) {
        const ChargeValue& e = z.values()[i];
        t[i] = e.re * m.im - m.re * e.im;
    }
    return t;
}

ThetaVector theta_b1(std::int64_t n, const Rational& b) { return theta_family_r(n, 1, b); }

ThetaVector theta_b0(std::int64_t n, const Rational& b) {
    const Rational q(static_cast<long>(n));
    return (1 - b) * ThetaVector{{1 - q, 0, q}} + b * ThetaVector{{-2 * q, q, 0}};
}

ThetaVector theta_family_r(std::int64_t n, std::int64_t r, const Rational& b) {
    const Rational q(static_cast<long>(n));
    return (1 - b) * ThetaVector{{0, -q, 2 * q + 1}} + b * ThetaVector{{-q, 0, q + 1 - Rational(static_cast<long>(r))}};
}

DimensionVector ideal_class_A1(std::int64_t n, std::int64_t r) { return {{n + 1 - r, 2 * n + 1, n}}; }
DimensionVector ideal_class_A0(std::int64_t n) { return {{n, 2 * n, n - 1}}; }

FamilyConsistency family_consistency(std::int64_t n, const Rational& b) {
    FamilyConsistency res;
    const std::array<ChernCharacter, 3> basis{ch_line_bundle(0), ch_line_bundle(1), ch_point()};
    const ThetaVector t1 = theta_b1(n, b), t0 = theta_b0(n, b);
    res.ok = true;
    for (std::size_t i = 0; i < 3; ++i) {
        res.lhs[i] = t1(dimvec(basis[i], HeartBasis::A(1)));
        res.rhs[i] = t0(dimvec(basis[i], HeartBasis::A(0)));
        res.ok = res.ok && res.lhs[i] == res.rhs[i];
    }
    return res;
}

std::vector<Wall> numerical_walls(const DimensionVector& d) {
    require(d.nonnegative() && !d.is_zero(), "class must be nonnegative and nonzero");
    const PerpPlane plane = perp_plane(d);
    std::map<std::array<Integer, 2>, Wall> lines;
    for (std::int64_t a = 0; a <= d[0]; ++a)
        for (std::int64_t b = 0; b <= d[1]; ++b)
            for (std::int64_t c = 0; c <= d[2]; ++c) {
                DimensionVector w{{a, b, c}};
                auto nrm = primitive(pair_int(plane.basis[0], w), pair_int(plane.basis[1], w));
                if (nrm[0] == 0 && nrm[1] == 0) continue;  // zero or proportional to d
                auto& wall = lines[nrm];
                wall.normal = nrm;
                wall.witnesses.push_back(w);
            }
    std::vector<Wall> out;
    for (auto& [_, w] : lines) out.push_back(std::move(w));
    std::sort(out.begin(), out.end(),
              [](const Wall& x, const Wall& y) { return angle_less(to_q(x.direction()), to_q(y.direction())); });
    return out;
}

WallDiagram wall_diagram(const DimensionVector& d) { return {perp_plane(d), numerical_walls(d), {}}; }

Rational default_epsilon(std::int64_t n) { return Rational(1, 100 * (n + 1)); }

Side parse_side(const std::string& heart) {
    if (heart == "A1") return Side::A1;
    if (heart == "A0") return Side::A0;
    fail("heart must be A1 or A0 here, got '" + heart + "'");
}

std::string to_string(Side s) { return s == Side::A1 ? "A1" : "A0"; }

namespace {

struct SideData {
    DimensionVector cls;
    ThetaVector r0, r1;
};

SideData side_data(std::int64_t n, Side side) {
    require(n >= 1, "n must be positive");
    if (side == Side::A1) return {ideal_class_A1(n), theta_b1(n, 0), theta_b1(n, 1)};
    return {ideal_class_A0(n), theta_b0(n, 0), theta_b0(n, 1)};
}

// First wall ray met when rotating away from `start` in direction sigma.
Vec2 next_ray(const std::vector<Wall>& walls, const Vec2& start, int sigma) {
    std::optional<Vec2> best, best_rel;
    for (const auto& w : walls) {
        Vec2 dir = to_q(w.direction());
        for (int s : {1, -1}) {
            Vec2 ray{s * dir[0], s * dir[1]};
            Vec2 rel = relative(start, ray, sigma);
            if (rel[1] == 0 && rel[0] > 0) continue;  // the start ray itself
            if (!best || angle_less(rel, *best_rel)) {
                best = ray;
                best_rel = rel;
            }
        }
    }
    if (!best) return {-start[0], -start[1]};
    return *best;
}

}  // namespace

std::array<ThetaVector, 2> adjacent_chamber(std::int64_t n, Side side) {
    SideData sd = side_data(n, side);
    PerpPlane plane = perp_plane(sd.cls);
    Vec2 r0 = plane.coords(sd.r0), r1 = plane.coords(sd.r1);
    const int s = sign(cross2(r0, r1));
    auto walls = numerical_walls(sd.cls);
    if (side == Side::A1) return {sd.r1, plane.point(next_ray(walls, r1, s))};
    return {sd.r0, plane.point(next_ray(walls, r0, -s))};
}

ChamberResult chamber_membership(const ThetaVector& theta, std::int64_t n, Side side) {
    SideData sd = side_data(n, side);
    if (theta(sd.cls) != 0) fail("not in the perpendicular plane");
    PerpPlane plane = perp_plane(sd.cls);
    ChamberResult res;
    res.cp2 = {sd.r0, sd.r1};
    Vec2 x = plane.coords(theta), r0 = plane.coords(sd.r0), r1 = plane.coords(sd.r1);
    const int s = sign(cross2(r0, r1));
    if (in_open_cone(r0, r1, x, s)) {
        res.label = "C_P2";
        return res;
    }
    auto adj = adjacent_chamber(n, side);
    res.adjacent = adj;
    Vec2 a = plane.coords(adj[0]), b = plane.coords(adj[1]);
    const int sigma = side == Side::A1 ? s : -s;
    if (in_open_cone(a, b, x, sigma)) {
        res.label = side == Side::A1 ? "C_plus" : "C_minus";
        return res;
    }
    for (const auto& w : numerical_walls(sd.cls)) {
        if (cross2(to_q(w.direction()), x) == 0) {
            res.label = "on_wall";
            res.wall_witness = w.witnesses.front();
            return res;
        }
    }
    res.label = "other";
    return res;
}

WallDiagram ideal_wall_diagram(std::int64_t n, Side side) {
    SideData sd = side_data(n, side);
    WallDiagram dg = wall_diagram(sd.cls);
    dg.chambers.push_back({"C_P2", {sd.r0, sd.r1}});
    dg.chambers.push_back({side == Side::A1 ? "C_plus" : "C_minus", adjacent_chamber(n, side)});
    return dg;
}

WallCrossReport hilbert_report(std::int64_t n, const std::vector<PointConfig>& configs, const SearchOptions& opt) {
    require(n >= 1, "n must be positive");
    for (const auto& z : configs)
        if (static_cast<std::int64_t>(z.size()) != n)
            fail("every configuration must have exactly n = " + std::to_string(n) + " points");
    bool has_col = false, has_noncol = false;
    for (const auto& z : configs) (collinear_test(z).collinear ? has_col : has_noncol) = true;
    if (n >= 3 && !(has_col && has_noncol)) fail("n >= 3 needs at least one collinear and one non-collinear configuration");

    WallCrossReport rep;
    rep.n = n;
    rep.epsilon = default_epsilon(n);
    const Rational eps = rep.epsilon;

    rep.a1 = ideal_wall_diagram(n, Side::A1);
    rep.a0 = ideal_wall_diagram(n, Side::A0);
    if (n < 2) rep.notes.push_back("A0 side skipped: the theta(b)_0 chamber statement needs n >= 2");
    if (n < 3) rep.notes.push_back("every configuration is collinear for n < 3");

    rep.configs = parallel_map(configs.size(), [&](std::size_t idx) {
        const PointConfig& z = configs[idx];
        ConfigCheck c;
        c.index = idx;
        c.collinear = collinear_test(z).collinear;
        auto semistable = [](const KingResult& k) {
            return k.verdict == Verdict::stable || k.verdict == Verdict::semistable;
        };
        QuiverRep m1 = module_ideal_A1(z).rep;
        SubmoduleSearch s1 = submodule_search(m1, opt);
        KingResult k1 = king_test(s1, theta_b1(n, Rational(1, 2)));
        c.cp2_A1 = to_string(k1.verdict);
        c.cp2_A1_certified = k1.certified;
        bool ok = semistable(k1) && k1.certified;

        FiltrationData f = wall_filtration_data(z, WallKind::theta1_1, opt);
        c.jh_dims = f.factor_dims;
        c.jh_points_matched = f.all_points_matched;
        ok = ok && f.all_points_matched;

        if (n >= 2) {
            QuiverRep m0 = module_ideal_A0(z);
            SubmoduleSearch s0 = submodule_search(m0, opt);
            KingResult k0 = king_test(s0, theta_b0(n, Rational(1, 2)));
            c.cp2_A0 = to_string(k0.verdict);
            c.cp2_A0_certified = k0.certified;
            ok = ok && semistable(k0) && k0.certified;
            KingResult km = king_test(s0, theta_b0(n, -eps));
            c.minus_side = to_string(km.verdict);
            c.minus_witness = km.witness;
            c.minus_certified = km.certified;
            c.minus_expected = c.collinear ? (km.verdict == Verdict::unstable && km.witness == DimensionVector{{0, 1, 0}})
                                           : semistable(km);
            ok = ok && c.minus_expected && km.certified;
        } else {
            c.cp2_A0 = "skipped";
            c.minus_side = "skipped";
            c.minus_expected = true;
        }

        KingResult kd = king_test(dualize(m1), theta_b1(n, 1 + eps), opt);
        c.dual_plus = to_string(kd.verdict);
        c.dual_plus_certified = kd.certified;
        c.ok = ok && semistable(kd) && kd.certified;
        return c;
    });

    // S-equivalence classes at theta(1)_1 versus supports.
    const ThetaVector wall = theta_b1(n, 1);
    std::vector<QuiverRep> mods;
    for (const auto& z : configs) mods.push_back(module_ideal_A1(z).rep);
    std::vector<std::size_t> cls(configs.size());
    std::iota(cls.begin(), cls.end(), 0);
    auto same_support = [&](std::size_t i, std::size_t j) {
        for (const auto& x : configs[i].points()) {
            bool hit = false;
            for (const auto& y : configs[j].points()) hit = hit || same_projective_point(x, y);
            if (!hit) return false;
        }
        return true;
    };
    rep.s_classes_match_support = true;
    for (std::size_t i = 0; i < configs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (cls[j] != j) continue;
            SEquivResult se = s_equiv(mods[i], mods[j], wall, opt);
            if (se.equivalent) {
                cls[i] = j;
                break;
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < configs.size(); ++i) groups[cls[i]].push_back(i);
    for (auto& [_, g] : groups) rep.s_classes.push_back(g);
    for (std::size_t i = 0; i < configs.size(); ++i)
        for (std::size_t j = 0; j < configs.size(); ++j)
            if ((cls[i] == cls[j]) != same_support(i, j)) rep.s_classes_match_support = false;

    rep.ok = rep.s_classes_match_support;
    for (const auto& c : rep.configs) rep.ok = rep.ok && c.ok;

    // The two walls carry realized witnesses: mark them verified.
    auto verify = [](WallDiagram& dg, const ThetaVector& ray) {
        Vec2 x = dg.plane.coords(ray);
        for (auto& w : dg.walls)
            if (cross2(to_q(w.direction()), x) == 0) w.status = "verified";
    };
    if (rep.ok) {
        verify(rep.a1, theta_b1(n, 1));
        if (n >= 2 && has_col) verify(rep.a0, theta_b0(n, 0));
    }
    return rep;
}

}  // namespace p2stab
