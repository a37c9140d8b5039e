#include "p2stab/quiver.hpp"

#include "p2stab/error.hpp"

#include <cmath>
#include <random>

namespace p2stab {

std::string to_string(Algebra a) { return a == Algebra::B ? "B" : "Bprime"; }

Algebra parse_algebra(const std::string& s) {
    if (s == "B") return Algebra::B;
    if (s == "Bprime") return Algebra::Bprime;
    fail("unknown algebra '" + s + "' (expected B or Bprime)");
}

Rational ThetaVector::operator()(const DimensionVector& v) const {
    Rational out = 0;
    for (std::size_t i = 0; i < 3; ++i) out += w[i] * Rational(static_cast<long>(v[i]));
    return out;
}

ThetaVector ThetaVector::operator+(const ThetaVector& o) const { return {{w[0] + o.w[0], w[1] + o.w[1], w[2] + o.w[2]}}; }
ThetaVector ThetaVector::operator-() const { return {{-w[0], -w[1], -w[2]}}; }

std::string ThetaVector::str() const {
    return "[" + to_string(w[0]) + "," + to_string(w[1]) + "," + to_string(w[2]) + "]";
}

ThetaVector operator*(const Rational& k, const ThetaVector& t) { return {{k * t.w[0], k * t.w[1], k * t.w[2]}}; }

ThetaVector reverse_negate(const ThetaVector& t) { return {{-t.w[2], -t.w[1], -t.w[0]}}; }

QuiverRep::QuiverRep(Algebra algebra, Field field, Dims dims, std::array<Matrix, 3> gamma, std::array<Matrix, 3> delta)
    : algebra_(algebra), field_(field), dims_(dims) {
    for (std::size_t i = 0; i < 3; ++i) {
        if (gamma[i].rows() != dims[1] || gamma[i].cols() != dims[0]) {
            fail("dimension mismatch: gamma[" + std::to_string(i) + "] must be " + std::to_string(dims[1]) + "x" +
                 std::to_string(dims[0]));
        }
        if (delta[i].rows() != dims[2] || delta[i].cols() != dims[1]) {
            fail("dimension mismatch: delta[" + std::to_string(i) + "] must be " + std::to_string(dims[2]) + "x" +
                 std::to_string(dims[1]));
        }
        gamma_[i] = reduce(gamma[i], field);
        delta_[i] = reduce(delta[i], field);
    }
}

QuiverRep QuiverRep::zero(Algebra algebra, Field field) {
    return QuiverRep(algebra, field, {0, 0, 0}, {Matrix(0, 0), Matrix(0, 0), Matrix(0, 0)},
                     {Matrix(0, 0), Matrix(0, 0), Matrix(0, 0)});
}

DimensionVector QuiverRep::dimvec() const {
    return {{static_cast<std::int64_t>(dims_[0]), static_cast<std::int64_t>(dims_[1]),
             static_cast<std::int64_t>(dims_[2])}};
}

Matrix QuiverRep::composite(std::size_t i, std::size_t j) const { return multiply(delta_[j], gamma_[i], field_); }

RelationCheck check_relations(const QuiverRep& rep) {
    const Field& f = rep.field();
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) {
            Matrix a = rep.composite(i, j);
            Matrix b = rep.composite(j, i);
            Matrix rel;
            if (rep.algebra() == Algebra::B) {
                rel = i == j ? a : add(a, b, f);
            } else {
                if (i == j) continue;
                rel = subtract(a, b, f);
            }
            if (!rel.is_zero()) return {false, std::make_pair(i, j)};
        }
    }
    return {};
}

QuiverRep simple(Algebra algebra, std::size_t vertex, Field field) {
    require(vertex < 3, "vertex must be 0, 1 or 2");
    Dims d{0, 0, 0};
    d[vertex] = 1;
    std::array<Matrix, 3> g{Matrix(d[1], d[0]), Matrix(d[1], d[0]), Matrix(d[1], d[0])};
    std::array<Matrix, 3> de{Matrix(d[2], d[1]), Matrix(d[2], d[1]), Matrix(d[2], d[1])};
    return QuiverRep(algebra, field, d, g, de);
}

namespace {

Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

void require_compatible(const QuiverRep& a, const QuiverRep& b) {
    require(a.algebra() == b.algebra(), "modules over different algebras");
    require(a.field() == b.field(), "modules over different fields");
}

}  // namespace

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
    require_compatible(a, b);
    Dims d{a.dim(0) + b.dim(0), a.dim(1) + b.dim(1), a.dim(2) + b.dim(2)};
    std::array<Matrix, 3> g, de;
    for (std::size_t i = 0; i < 3; ++i) {
        g[i] = block_diag(a.gamma(i), b.gamma(i));
        de[i] = block_diag(a.delta(i), b.delta(i));
    }
    return QuiverRep(a.algebra(), a.field(), d, g, de);
}

DimensionVector SubspaceTriple::dims() const {
    return {{static_cast<std::int64_t>(basis[0].cols()), static_cast<std::int64_t>(basis[1].cols()),
             static_cast<std::int64_t>(basis[2].cols())}};
}

SubspaceTriple canonical(const SubspaceTriple& t, const Field& f) {
    return {{span(t.basis[0], f), span(t.basis[1], f), span(t.basis[2], f)}};
}

std::string key(const SubspaceTriple& t) {
    return to_string(t.basis[0]) + "|" + to_string(t.basis[1]) + "|" + to_string(t.basis[2]);
}

bool is_invariant(const QuiverRep& rep, const SubspaceTriple& u) {
    const Field& f = rep.field();
    for (std::size_t v = 0; v < 3; ++v) {
        if (u.basis[v].rows() != rep.dim(v)) fail("subspace at vertex " + std::to_string(v) + " has wrong ambient dimension");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (!subspace_contains(u.basis[1], multiply(rep.gamma(i), u.basis[0], f), f)) return false;
        if (!subspace_contains(u.basis[2], multiply(rep.delta(i), u.basis[1], f), f)) return false;
    }
    return true;
}

QuiverRep sub_from(const QuiverRep& rep, const SubspaceTriple& u) {
    if (!is_invariant(rep, u)) fail("not a submodule");
    const Field& f = rep.field();
    SubspaceTriple c = canonical(u, f);
    auto coords = [&](const Matrix& target, const Matrix& image) {
        auto x = solve(target, image, f);
        if (!x) fail_verification("sub_from: image escapes the target subspace");
        return *x;
    };
    std::array<Matrix, 3> g, de;
    for (std::size_t i = 0; i < 3; ++i) {
        g[i] = coords(c.basis[1], multiply(rep.gamma(i), c.basis[0], f));
        de[i] = coords(c.basis[2], multiply(rep.delta(i), c.basis[1], f));
    }
    return QuiverRep(rep.algebra(), f, {c.basis[0].cols(), c.basis[1].cols(), c.basis[2].cols()}, g, de);
}

QuiverRep quotient_by(const QuiverRep& rep, const SubspaceTriple& u) {
    if (!is_invariant(rep, u)) fail("not a submodule");
    const Field& f = rep.field();
    std::array<QuotientMap, 3> q;
    for (std::size_t v = 0; v < 3; ++v) q[v] = quotient_map(u.basis[v], rep.dim(v), f);
    std::array<Matrix, 3> g, de;
    for (std::size_t i = 0; i < 3; ++i) {
        g[i] = multiply(q[1].q, multiply(rep.gamma(i), q[0].section, f), f);
        de[i] = multiply(q[2].q, multiply(rep.delta(i), q[1].section, f), f);
    }
    return QuiverRep(rep.algebra(), f, {q[0].q.rows(), q[1].q.rows(), q[2].q.rows()}, g, de);
}

std::vector<Morphism> hom_space(const QuiverRep& a, const QuiverRep& b) {
    require_compatible(a, b);
    const Field& f = a.field();
    std::array<std::size_t, 3> offset{};
    std::size_t unknowns = 0;
    for (std::size_t v = 0; v < 3; ++v) {
        offset[v] = unknowns;
        unknowns += b.dim(v) * a.dim(v);
    }
    auto var = [&](std::size_t v, std::size_t r, std::size_t c) { return offset[v] + r * a.dim(v) + c; };

    // For an arrow x : src -> dst with matrices xa (dst_a x src_a), xb:
    //   f_dst xa - xb f_src = 0, one equation per entry (dst_b x src_a).
    std::vector<std::vector<std::pair<std::size_t, Rational>>> rows;
    auto add_arrow = [&](const Matrix& xa, const Matrix& xb, std::size_t src, std::size_t dst) {
        for (std::size_t r = 0; r < b.dim(dst); ++r) {
            for (std::size_t c = 0; c < a.dim(src); ++c) {
                std::vector<std::pair<std::size_t, Rational>> eq;
                for (std::size_t k = 0; k < a.dim(dst); ++k)
                    if (xa(k, c) != 0) eq.emplace_back(var(dst, r, k), xa(k, c));
                for (std::size_t k = 0; k < b.dim(src); ++k)
                    if (xb(r, k) != 0) eq.emplace_back(var(src, k, c), f.neg(xb(r, k)));
                if (!eq.empty()) rows.push_back(std::move(eq));
            }
        }
    };
    for (std::size_t i = 0; i < 3; ++i) {
        add_arrow(a.gamma(i), b.gamma(i), 0, 1);
        add_arrow(a.delta(i), b.delta(i), 1, 2);
    }
    Matrix system(rows.size(), unknowns);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (const auto& [c, val] : rows[r]) system(r, c) = f.add(system(r, c), val);
    Matrix k = kernel(system, f);

    std::vector<Morphism> basis;
    for (std::size_t col = 0; col < k.cols(); ++col) {
        Morphism m;
        for (std::size_t v = 0; v < 3; ++v) {
            m[v] = Matrix(b.dim(v), a.dim(v));
            for (std::size_t r = 0; r < b.dim(v); ++r)
                for (std::size_t c = 0; c < a.dim(v); ++c) m[v](r, c) = k(var(v, r, c), col);
        }
        basis.push_back(std::move(m));
    }
    return basis;
}

bool is_morphism(const QuiverRep& a, const QuiverRep& b, const Morphism& m) {
    const Field& f = a.field();
    for (std::size_t i = 0; i < 3; ++i) {
        if (!(multiply(m[1], a.gamma(i), f) == multiply(b.gamma(i), m[0], f))) return false;
        if (!(multiply(m[2], a.delta(i), f) == multiply(b.delta(i), m[1], f))) return false;
    }
    return true;
}

namespace {

bool invertible_at_all_vertices(const Morphism& m, const Field& f) {
    for (const auto& x : m) {
        if (x.rows() == 0) continue;
        if (determinant(x, f) == 0) return false;
    }
    return true;
}

Morphism combine(const std::vector<Morphism>& basis, const std::vector<Rational>& coeff, const Field& f) {
    Morphism out;
    for (std::size_t v = 0; v < 3; ++v) out[v] = Matrix(basis[0][v].rows(), basis[0][v].cols());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (coeff[k] == 0) continue;
        for (std::size_t v = 0; v < 3; ++v) out[v] = add(out[v], scale(basis[k][v], coeff[k], f), f);
    }
    return out;
}

}  // namespace

IsoResult iso_test(const QuiverRep& a, const QuiverRep& b, std::uint64_t seed) {
    require_compatible(a, b);
    IsoResult res;
    if (a.dims() != b.dims()) {
        res.certain = true;
        return res;
    }
    const Field& f = a.field();
    if (a.total_dim() == 0) {
        res.isomorphic = res.certain = true;
        return res;
    }
    auto basis = hom_space(a, b);
    if (basis.empty()) {
        res.certain = true;
        return res;
    }
    const std::size_t k = basis.size();

    // Small prime fields: enumerate the whole Hom space.
    if (f.is_prime()) {
        double total = std::pow(static_cast<double>(f.p), static_cast<double>(k));
        if (total <= 65536.0) {
            std::vector<Rational> coeff(k, 0);
            const auto count = static_cast<std::uint64_t>(total);
            for (std::uint64_t idx = 0; idx < count; ++idx) {
                std::uint64_t rest = idx;
                for (std::size_t c = 0; c < k; ++c) {
                    coeff[c] = static_cast<unsigned long>(rest % f.p);
                    rest /= f.p;
                }
                ++res.samples;
                Morphism m = combine(basis, coeff, f);
                if (invertible_at_all_vertices(m, f)) {
                    res.isomorphic = res.certain = true;
                    res.witness = m;
                    return res;
                }
            }
            res.certain = true;
            return res;
        }
    }

    constexpr int kSamples = 20;
    const std::uint64_t range = f.is_prime() ? f.p : (std::uint64_t{1} << 31);
    std::mt19937_64 rng(seed);
    std::vector<Rational> coeff(k);
    for (int s = 0; s < kSamples; ++s) {
        for (auto& c : coeff) c = static_cast<unsigned long>(rng() % range);
        ++res.samples;
        Morphism m = combine(basis, coeff, f);
        if (invertible_at_all_vertices(m, f)) {
            res.isomorphic = res.certain = true;
            res.witness = m;
            return res;
        }
    }
    // The product of vertex determinants has degree total_dim in the coefficients.
    double per_sample = std::min(1.0, static_cast<double>(a.total_dim()) / static_cast<double>(range));
    res.failure_bound = std::pow(per_sample, kSamples);
    return res;
}

QuiverRep dualize(const QuiverRep& rep) {
    std::array<Matrix, 3> g, de;
    for (std::size_t i = 0; i < 3; ++i) {
        g[i] = rep.delta(i).transpose();
        de[i] = rep.gamma(i).transpose();
    }
    return QuiverRep(rep.algebra(), rep.field(), {rep.dim(2), rep.dim(1), rep.dim(0)}, g, de);
}

QuiverRep tilt_B_to_Bprime(const QuiverRep& n) {
    require(n.algebra() == Algebra::B, "tilt_B_to_Bprime expects a B-module");
    const Field& f = n.field();
    const std::size_t n0 = n.dim(0), n1 = n.dim(1), n2 = n.dim(2);
    Matrix delta_v = vstack({n.delta(0), n.delta(1), n.delta(2)}, n1);
    if (rank(delta_v, f) != n1) fail("object leaves mod-B' (theta1 >= 0 regime): delta_V is not injective");
    QuotientMap coker = quotient_map(span(delta_v, f), 3 * n2, f);
    const std::size_t m2 = coker.q.rows();

    std::array<Matrix, 3> g, de;
    for (std::size_t i = 0; i < 3; ++i) {
        g[i] = multiply(n.delta((i + 1) % 3), n.gamma((i + 2) % 3), f);
        Matrix slot(3 * n2, n2);
        for (std::size_t r = 0; r < n2; ++r) slot(i * n2 + r, r) = 1;
        de[i] = multiply(coker.q, slot, f);
    }
    QuiverRep m(Algebra::Bprime, f, {n0, n2, m2}, g, de);
    if (!check_relations(m).ok) fail_verification("tilt_B_to_Bprime produced a module violating J'");
    return m;
}

TiltResult tilt_Bprime_to_B(const QuiverRep& m) {
    require(m.algebra() == Algebra::Bprime, "tilt_Bprime_to_B expects a B'-module");
    const Field& f = m.field();
    const std::size_t m0 = m.dim(0), m1 = m.dim(1), m2 = m.dim(2);
    Matrix delta_up = hstack({m.delta(0), m.delta(1), m.delta(2)}, m2);
    Matrix ker = kernel(delta_up, f);
    const std::size_t n1 = ker.cols();

    std::array<Matrix, 3> g, de;
    for (std::size_t i = 0; i < 3; ++i) {
        // gamma*_i|_N = gamma*_{i+1}|_M (x) e_{i+2} - gamma*_{i+2}|_M (x) e_{i+1}
        Matrix img(3 * m1, m0);
        const std::size_t plus = (i + 2) % 3, minus = (i + 1) % 3;
        const Matrix& gp = m.gamma((i + 1) % 3);
        const Matrix& gm = m.gamma((i + 2) % 3);
        for (std::size_t r = 0; r < m1; ++r) {
            for (std::size_t c = 0; c < m0; ++c) {
                img(plus * m1 + r, c) = f.add(img(plus * m1 + r, c), gp(r, c));
                img(minus * m1 + r, c) = f.sub(img(minus * m1 + r, c), gm(r, c));
            }
        }
        auto x = solve(ker, img, f);
        if (!x) fail_verification("tilt_Bprime_to_B: gamma image leaves ker(delta^V); input violates J'");
        g[i] = *x;
        de[i] = ker.block(i * m1, 0, m1, n1);
    }
    TiltResult res{QuiverRep(Algebra::B, f, {m0, n1, m1}, g, de), rank(delta_up, f) == m2};
    if (!check_relations(res.rep).ok) fail_verification("tilt_Bprime_to_B produced a module violating J");
    return res;
}

ThetaVector theta_transform(const ThetaVector& t) { return {{t[0], 3 * t[1] + t[2], -t[1]}}; }

}  // namespace p2stab
