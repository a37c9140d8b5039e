#include "p2stab/stability.hpp"

#include "p2stab/error.hpp"
#include "p2stab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

namespace p2stab {

namespace {

// ---------------------------------------------------------------------------
// Small-prime linear algebra on machine words, used by Layer 2.

using Vec = std::vector<std::uint32_t>;
using Rows = std::vector<Vec>;

struct Zp {
    std::uint32_t p;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
    }
    std::uint32_t inv(std::uint32_t a) const {
        std::uint64_t r = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(r);
    }
};

// Reduced row echelon form in place; zero rows dropped. Returns pivot columns.
std::vector<std::size_t> rref_rows(Rows& rows, std::size_t ncols, const Zp& f) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const std::uint32_t iv = f.inv(rows[r][c]);
        for (auto& x : rows[r]) x = f.mul(x, iv);
        for (std::size_t o = 0; o < rows.size(); ++o) {
            if (o == r || rows[o][c] == 0) continue;
            const std::uint32_t k = rows[o][c];
            for (std::size_t j = c; j < ncols; ++j) rows[o][j] = f.sub(rows[o][j], f.mul(k, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::size_t rank_rows(Rows rows, std::size_t ncols, const Zp& f) { return rref_rows(rows, ncols, f).size(); }

Vec apply_rows(const Rows& m, const Vec& v, const Zp& f) {
    Vec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j) acc += static_cast<std::uint64_t>(m[i][j]) * v[j] % f.p;
        out[i] = static_cast<std::uint32_t>(acc % f.p);
    }
    return out;
}

// Row vector times matrix: (a m), with m of shape rows x cols.
Vec row_times(const Vec& a, const Rows& m, std::size_t cols, const Zp& f) {
    Vec out(cols, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < cols; ++j) out[j] = f.add(out[j], f.mul(a[i], m[i][j]));
    }
    return out;
}

bool is_pivot(const std::vector<std::size_t>& piv, std::size_t c) {
    return std::find(piv.begin(), piv.end(), c) != piv.end();
}

// Rows spanning the annihilator of the row space of an rref matrix.
Rows annihilator_rows(const Rows& rref, const std::vector<std::size_t>& piv, std::size_t n, const Zp& f) {
    Rows out;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot(piv, c)) continue;
        Vec a(n, 0);
        a[c] = 1;
        for (std::size_t r = 0; r < rref.size(); ++r) a[piv[r]] = f.sub(0, rref[r][c]);
        out.push_back(std::move(a));
    }
    return out;
}

// Kernel basis of m (rows x ncols) as row vectors.
Rows kernel_rows(Rows m, std::size_t ncols, const Zp& f) {
    auto piv = rref_rows(m, ncols, f);
    Rows out;
    for (std::size_t c = 0; c < ncols; ++c) {
        if (is_pivot(piv, c)) continue;
        Vec v(ncols, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < m.size(); ++r) v[piv[r]] = f.sub(0, m[r][c]);
        out.push_back(std::move(v));
    }
    return out;
}

double gaussian_binomial(std::size_t m, std::size_t k, double p) {
    double out = 1;
    for (std::size_t i = 0; i < k; ++i) out *= (std::pow(p, double(m - i)) - 1) / (std::pow(p, double(i + 1)) - 1);
    return out;
}

double subspace_count(std::size_t m, double p) {
    double s = 0;
    for (std::size_t k = 0; k <= m; ++k) s += gaussian_binomial(m, k, p);
    return s;
}

// Visits every k-dimensional subspace of F_p^m once, as an rref basis.
void for_each_subspace(std::size_t m, std::size_t k, const Zp& f, const std::function<void(const Rows&)>& visit) {
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t c = piv[r] + 1; c < m; ++c)
                if (!is_pivot(piv, c)) free.emplace_back(r, c);
        Rows basis(k, Vec(m, 0));
        for (std::size_t r = 0; r < k; ++r) basis[r][piv[r]] = 1;
        while (true) {
            visit(basis);
            std::size_t idx = 0;
            while (idx < free.size()) {
                auto [r, c] = free[idx];
                if (++basis[r][c] < f.p) break;
                basis[r][c] = 0;
                ++idx;
            }
            if (idx == free.size()) break;
        }
        // next combination of pivot columns
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == m - k + i - 1) --i;
        if (i == 0) return;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

struct ZpRep {
    Zp f;
    std::size_t n[3];
    std::array<Rows, 3> gamma;  // n1 x n0
    std::array<Rows, 3> delta;  // n2 x n1
};

Rows to_rows(const Matrix& m, const Field& field) {
    Rows out(m.rows(), Vec(m.cols(), 0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = static_cast<std::uint32_t>(field.reduce(m(i, j)).get_num().get_ui());
    return out;
}

ZpRep to_zp(const QuiverRep& rep, std::uint32_t p) {
    Field field = Field::prime(p);
    ZpRep z{{p}, {rep.dim(0), rep.dim(1), rep.dim(2)}, {}, {}};
    for (std::size_t i = 0; i < 3; ++i) {
        z.gamma[i] = to_rows(rep.gamma(i), field);
        z.delta[i] = to_rows(rep.delta(i), field);
    }
    return z;
}

Matrix columns_of(const Rows& rows, std::size_t n) {
    Matrix m(n, rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t r = 0; r < n; ++r) m(r, c) = static_cast<unsigned long>(rows[c][r]);
    return m;
}

// Extends the rref rows `base` by vectors from `pool` until it has `target` rows.
Rows extend_by(Rows base, const Rows& pool, std::size_t target, std::size_t n, const Zp& f) {
    for (const auto& v : pool) {
        if (base.size() >= target) break;
        Rows trial = base;
        trial.push_back(v);
        if (rank_rows(trial, n, f) > base.size()) base.push_back(v);
    }
    return base;
}

Rows standard_rows(std::size_t n) {
    Rows out(n, Vec(n, 0));
    for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
    return out;
}

using Found = std::map<DimensionVector, SubspaceTriple>;

// Enumerate U1; U0 ranges over subspaces of the common preimage and U2 over
// spaces containing the image.
void enumerate_by_middle(const ZpRep& z, Found& out) {
    const auto& f = z.f;
    const std::size_t n0 = z.n[0], n1 = z.n[1], n2 = z.n[2];
    for (std::size_t k1 = 0; k1 <= n1; ++k1) {
        for_each_subspace(n1, k1, f, [&](const Rows& u1) {
            std::vector<std::size_t> piv(k1);
            for (std::size_t r = 0; r < k1; ++r)
                piv[r] = static_cast<std::size_t>(std::find_if(u1[r].begin(), u1[r].end(), [](auto x) { return x != 0; }) - u1[r].begin());
            Rows ann = annihilator_rows(u1, piv, n1, f);
            Rows cond;
            for (const auto& a : ann)
                for (std::size_t i = 0; i < 3; ++i) cond.push_back(row_times(a, z.gamma[i], n0, f));
            const std::size_t max0 = n0 - rank_rows(cond, n0, f);
            Rows img;
            for (const auto& u : u1)
                for (std::size_t j = 0; j < 3; ++j) img.push_back(apply_rows(z.delta[j], u, f));
            rref_rows(img, n2, f);
            const std::size_t min2 = img.size();
            for (std::size_t a = 0; a <= max0; ++a) {
                for (std::size_t c = min2; c <= n2; ++c) {
                    DimensionVector d{{std::int64_t(a), std::int64_t(k1), std::int64_t(c)}};
                    if (out.count(d)) continue;
                    Rows c0 = kernel_rows(cond, n0, f);
                    c0.resize(a);
                    Rows u2 = extend_by(img, standard_rows(n2), c, n2, f);
                    out[d] = SubspaceTriple{{columns_of(c0, n0), columns_of(u1, n1), columns_of(u2, n2)}};
                }
            }
        });
    }
}

// Enumerate U0 and U2 containing delta(gamma(U0)); U1 ranges between the
// image of U0 and the common preimage of U2.
void enumerate_by_ends(const ZpRep& z, Found& out) {
    const auto& f = z.f;
    const std::size_t n0 = z.n[0], n1 = z.n[1], n2 = z.n[2];
    for (std::size_t k0 = 0; k0 <= n0; ++k0) {
        for_each_subspace(n0, k0, f, [&](const Rows& u0) {
            Rows a;
            for (const auto& u : u0)
                for (std::size_t i = 0; i < 3; ++i) a.push_back(apply_rows(z.gamma[i], u, f));
            rref_rows(a, n1, f);
            Rows w;
            for (const auto& v : a)
                for (std::size_t j = 0; j < 3; ++j) w.push_back(apply_rows(z.delta[j], v, f));
            auto wpiv = rref_rows(w, n2, f);
            std::vector<std::size_t> freecols;
            for (std::size_t c = 0; c < n2; ++c)
                if (!is_pivot(wpiv, c)) freecols.push_back(c);
            const std::size_t q = freecols.size();
            for (std::size_t k2 = 0; k2 <= q; ++k2) {
                for_each_subspace(q, k2, f, [&](const Rows& lift) {
                    Rows u2 = w;
                    for (const auto& l : lift) {
                        Vec v(n2, 0);
                        for (std::size_t t = 0; t < q; ++t) v[freecols[t]] = l[t];
                        u2.push_back(std::move(v));
                    }
                    auto piv2 = rref_rows(u2, n2, f);
                    Rows ann = annihilator_rows(u2, piv2, n2, f);
                    Rows cond;
                    for (const auto& an : ann)
                        for (std::size_t j = 0; j < 3; ++j) cond.push_back(row_times(an, z.delta[j], n1, f));
                    const std::size_t dim_b = n1 - rank_rows(cond, n1, f);
                    for (std::size_t k = a.size(); k <= dim_b; ++k) {
                        DimensionVector d{{std::int64_t(k0), std::int64_t(k), std::int64_t(u2.size())}};
                        if (out.count(d)) continue;
                        Rows u1 = extend_by(a, kernel_rows(cond, n1, f), k, n1, f);
                        out[d] = SubspaceTriple{{columns_of(u0, n0), columns_of(u1, n1), columns_of(u2, n2)}};
                    }
                });
            }
        });
    }
}

double cost_middle(const Dims& d, double p) { return subspace_count(d[1], p); }
double cost_ends(const Dims& d, double p) { return subspace_count(d[0], p) * subspace_count(d[2], p); }

std::optional<Found> layer2_zp(const QuiverRep& rep, std::uint32_t p, double budget) {
    const double cm = cost_middle(rep.dims(), p), ce = cost_ends(rep.dims(), p);
    if (std::min(cm, ce) > budget) return std::nullopt;
    ZpRep z = to_zp(rep, p);
    Found out;
    if (cm <= ce) enumerate_by_middle(z, out);
    else enumerate_by_ends(z, out);
    return out;
}

// Largest primes below 2^16 whose Layer 2 cost fits the budget and that
// avoid every denominator of the module.
std::vector<std::uint32_t> choose_primes(const QuiverRep& rep, double budget, int count) {
    std::vector<Rational> entries;
    for (std::size_t i = 0; i < 3; ++i) {
        for (const auto& x : rep.gamma(i).data()) entries.push_back(x);
        for (const auto& x : rep.delta(i).data()) entries.push_back(x);
    }
    const Integer den = lcm_of_denominators(entries);
    std::uint32_t hi = 65521;
    auto cost = [&](double p) { return std::min(cost_middle(rep.dims(), p), cost_ends(rep.dims(), p)); };
    if (cost(2) > budget) return {};
    std::uint32_t lo = 2;
    while (lo < hi) {  // largest p with cost(p) <= budget
        std::uint32_t mid = lo + (hi - lo + 1) / 2;
        if (cost(mid) <= budget) lo = mid;
        else hi = mid - 1;
    }
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = lo; p >= 2 && static_cast<int>(out.size()) < count; --p) {
        if (!is_prime_number(p)) continue;
        if (mpz_divisible_ui_p(den.get_mpz_t(), p)) continue;
        out.push_back(p);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Layer 1.

SubspaceTriple triple(const Matrix& a, const Matrix& b, const Matrix& c) { return {{a, b, c}}; }

Matrix random_vector(std::size_t n, std::mt19937_64& rng, const Field& f) {
    Matrix v(n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = f.reduce(Rational(static_cast<long>(rng() % 7) - 3));
    return v;
}

Matrix random_hyperplane(std::size_t n, std::mt19937_64& rng, const Field& f) {
    Matrix row(1, n);
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
        row(0, i) = f.reduce(Rational(static_cast<long>(rng() % 7) - 3));
        nonzero = nonzero || row(0, i) != 0;
    }
    if (!nonzero && n > 0) row(0, 0) = 1;
    return kernel(row, f);
}

Matrix basis_vector(std::size_t n, std::size_t k) {
    Matrix v(n, 1);
    v(k, 0) = 1;
    return v;
}

}  // namespace

SubspaceTriple generated_submodule(const QuiverRep& rep, const SubspaceTriple& u) {
    const Field& f = rep.field();
    Matrix u0 = span(u.basis[0], f);
    Matrix u1 = u.basis[1];
    for (std::size_t i = 0; i < 3; ++i) u1 = hstack(u1, multiply(rep.gamma(i), u0, f));
    u1 = span(u1, f);
    Matrix u2 = u.basis[2];
    for (std::size_t j = 0; j < 3; ++j) u2 = hstack(u2, multiply(rep.delta(j), u1, f));
    return triple(u0, u1, span(u2, f));
}

SubspaceTriple largest_submodule_inside(const QuiverRep& rep, const SubspaceTriple& v) {
    const Field& f = rep.field();
    Matrix v2 = span(v.basis[2], f);
    Matrix v1 = span(v.basis[1], f);
    for (std::size_t j = 0; j < 3; ++j) v1 = subspace_intersection(v1, preimage(rep.delta(j), v2, f), f);
    Matrix v0 = span(v.basis[0], f);
    for (std::size_t i = 0; i < 3; ++i) v0 = subspace_intersection(v0, preimage(rep.gamma(i), v1, f), f);
    return triple(span(v0, f), span(v1, f), v2);
}

std::map<DimensionVector, SubspaceTriple> layer1_submodules(const QuiverRep& rep, const SearchOptions& opt) {
    const Field& f = rep.field();
    const Dims& n = rep.dims();
    std::mt19937_64 rng(opt.seed);
    std::map<std::string, SubspaceTriple> lattice;
    std::vector<SubspaceTriple> order;

    auto add = [&](const SubspaceTriple& s) {
        SubspaceTriple c = canonical(s, f);
        auto k = key(c);
        if (lattice.count(k)) return false;
        lattice.emplace(k, c);
        order.push_back(c);
        return true;
    };
    auto full = [&](std::size_t v) { return full_space(n[v]); };
    auto none = [&](std::size_t v) { return zero_space(n[v]); };
    auto only = [&](std::size_t v, const Matrix& m) {
        SubspaceTriple t = triple(none(0), none(1), none(2));
        t.basis[v] = m;
        return t;
    };

    add(triple(none(0), none(1), none(2)));
    add(triple(full(0), full(1), full(2)));
    for (std::size_t v = 0; v < 3; ++v) {
        add(generated_submodule(rep, only(v, full(v))));
        for (std::size_t k = 0; k < n[v]; ++k) add(generated_submodule(rep, only(v, basis_vector(n[v], k))));
        for (int r = 0; r < opt.random_vectors && n[v] > 0; ++r)
            add(generated_submodule(rep, only(v, random_vector(n[v], rng, f))));
    }
    for (unsigned mask = 0; mask < 8; ++mask) {
        SubspaceTriple t;
        for (std::size_t v = 0; v < 3; ++v) t.basis[v] = (mask >> v & 1) ? full(v) : none(v);
        add(largest_submodule_inside(rep, t));
    }
    for (std::size_t v = 0; v < 3; ++v) {
        if (n[v] == 0) continue;
        for (std::size_t k = 0; k < n[v]; ++k) {
            SubspaceTriple t = triple(full(0), full(1), full(2));
            Matrix row(1, n[v]);
            row(0, k) = 1;
            t.basis[v] = kernel(row, f);
            add(largest_submodule_inside(rep, t));
        }
        for (int r = 0; r < opt.random_vectors; ++r) {
            SubspaceTriple t = triple(full(0), full(1), full(2));
            t.basis[v] = random_hyperplane(n[v], rng, f);
            add(largest_submodule_inside(rep, t));
        }
    }

    // Close under sums and intersections.
    for (std::size_t i = 0; i < order.size() && order.size() < opt.cap; ++i) {
        for (std::size_t j = 0; j < i && order.size() < opt.cap; ++j) {
            const SubspaceTriple a = order[i], b = order[j];
            SubspaceTriple s, t;
            for (std::size_t v = 0; v < 3; ++v) {
                s.basis[v] = subspace_sum(a.basis[v], b.basis[v], f);
                t.basis[v] = subspace_intersection(a.basis[v], b.basis[v], f);
            }
            add(s);
            add(t);
        }
    }

    // One round of extensions: grow by a random vector, shrink by a random hyperplane.
    const std::size_t before = order.size();
    for (std::size_t i = 0; i < before && order.size() < 2 * opt.cap; ++i) {
        for (std::size_t v = 0; v < 3; ++v) {
            if (n[v] == 0) continue;
            const SubspaceTriple s = order[i];
            if (static_cast<std::size_t>(s.basis[v].cols()) < n[v]) {
                SubspaceTriple g = s;
                g.basis[v] = hstack(g.basis[v], random_vector(n[v], rng, f));
                add(generated_submodule(rep, g));
            }
            if (s.basis[v].cols() > 0) {
                SubspaceTriple h = s;
                h.basis[v] = subspace_intersection(h.basis[v], random_hyperplane(n[v], rng, f), f);
                add(largest_submodule_inside(rep, h));
            }
        }
    }

    std::map<DimensionVector, SubspaceTriple> out;
    for (const auto& s : order) {
        if (!is_invariant(rep, s)) fail_verification("layer 1 produced a non-invariant triple");
        out.emplace(s.dims(), s);
    }
    return out;
}

std::optional<std::set<DimensionVector>> layer2_dimvecs(const QuiverRep& rep, double budget) {
    require(rep.field().is_prime(), "layer2_dimvecs expects a module over a prime field");
    auto found = layer2_zp(rep, rep.field().p, budget);
    if (!found) return std::nullopt;
    std::set<DimensionVector> out;
    for (const auto& [d, _] : *found) out.insert(d);
    return out;
}

std::set<DimensionVector> SubmoduleSearch::dimvecs() const {
    if (complete) return *upper;
    std::set<DimensionVector> out;
    for (const auto& [d, _] : lower) out.insert(d);
    return out;
}

std::string SubmoduleSearch::layers() const {
    std::string s = "layer1";
    if (upper) {
        s += "+layer2(F_";
        for (std::size_t i = 0; i < primes.size(); ++i) s += (i ? "," : "") + std::to_string(primes[i]);
        s += ")";
    }
    return s;
}

SubmoduleSearch submodule_search(const QuiverRep& rep, const SearchOptions& opt) {
    SubmoduleSearch res;
    res.full = rep.dimvec();
    res.lower = layer1_submodules(rep, opt);
    if (opt.layer2) {
        const Field& f = rep.field();
        if (f.is_prime()) {
            if (auto found = layer2_zp(rep, f.p, opt.budget)) {
                res.primes = {f.p};
                res.upper.emplace();
                for (auto& [d, w] : *found) {
                    res.upper->insert(d);
                    res.lower.emplace(d, w);  // genuine submodules over this field
                }
            }
        } else {
            auto primes = choose_primes(rep, opt.budget, opt.max_primes);
            auto results = parallel_map(primes.size(), [&](std::size_t i) { return *layer2_zp(rep, primes[i], opt.budget); });
            if (!primes.empty()) {
                res.primes = primes;
                std::set<DimensionVector> acc;
                for (const auto& [d, _] : results[0]) acc.insert(d);
                for (std::size_t i = 1; i < results.size(); ++i) {
                    std::set<DimensionVector> next;
                    for (const auto& d : acc)
                        if (results[i].count(d)) next.insert(d);
                    acc = std::move(next);
                }
                for (const auto& [d, _] : res.lower) {
                    if (!acc.count(d)) fail_verification("layer 2 refutes a realized submodule " + d.str());
                }
                res.upper = std::move(acc);
            }
        }
    }
    if (res.upper) res.complete = res.upper->size() == res.lower.size();
    return res;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::stable: return "stable";
        case Verdict::semistable: return "semistable";
        case Verdict::unstable: return "unstable";
        case Verdict::theta_nonvanishing: return "theta-nonvanishing";
    }
    return "?";
}

KingResult king_test(const SubmoduleSearch& search, const ThetaVector& theta) {
    KingResult res;
    res.layers = search.layers();
    if (theta(search.full) != 0) {
        res.certified = true;
        return res;
    }
    auto proper = [&](const DimensionVector& d) { return !d.is_zero() && d != search.full; };

    // Realized destabilizer: most negative first, then smallest.
    std::optional<DimensionVector> neg;
    for (const auto& [d, _] : search.lower)
        if (theta(d) < 0 && (!neg || theta(d) < theta(*neg))) neg = d;
    if (neg) {
        res.verdict = Verdict::unstable;
        res.certified = true;
        res.witness = neg;
        res.witness_subspaces = search.lower.at(*neg);
        return res;
    }
    std::optional<DimensionVector> zero;
    for (const auto& [d, _] : search.lower)
        if (proper(d) && theta(d) == 0) {
            zero = d;
            break;
        }
    bool upper_neg = false, upper_zero = false;
    if (search.upper) {
        for (const auto& d : *search.upper) {
            if (theta(d) < 0) upper_neg = true;
            if (proper(d) && theta(d) == 0) upper_zero = true;
        }
    }
    if (zero) {
        res.verdict = Verdict::semistable;
        res.witness = zero;
        res.witness_subspaces = search.lower.at(*zero);
        res.certified = search.upper.has_value() && !upper_neg;
        return res;
    }
    res.verdict = Verdict::stable;
    res.certified = search.upper.has_value() && !upper_neg && !upper_zero;
    return res;
}

KingResult king_test(const QuiverRep& rep, const ThetaVector& theta, const SearchOptions& opt) {
    return king_test(submodule_search(rep, opt), theta);
}

namespace {

void jh_rec(const QuiverRep& rep, const ThetaVector& theta, const SearchOptions& opt, JHResult& out, int depth) {
    if (rep.total_dim() == 0) return;
    if (depth > 64) fail_verification("Jordan-Holder recursion too deep");
    SearchOptions l1 = opt;
    l1.layer2 = false;
    SubmoduleSearch s = submodule_search(rep, l1);
    KingResult k = king_test(s, theta);
    if (k.verdict == Verdict::theta_nonvanishing) fail("module is not theta-semistable: theta(dims) != 0");
    if (k.verdict == Verdict::unstable)
        fail_verification("module is not theta-semistable: destabilizing submodule " + k.witness->str());

    // Smallest realized proper submodule with theta = 0.
    const SubspaceTriple* best = nullptr;
    DimensionVector best_d;
    for (const auto& [d, w] : s.lower) {
        if (d.is_zero() || d == s.full || theta(d) != 0) continue;
        if (!best || d.total() < best_d.total()) {
            best = &w;
            best_d = d;
        }
    }
    if (!best) {
        KingResult full = king_test(rep, theta, opt);
        if (full.verdict == Verdict::unstable)
            fail_verification("module is not theta-semistable: destabilizing submodule " + full.witness->str());
        if (full.verdict != Verdict::stable || !full.certified) out.certified = false;
        out.factors.push_back(rep);
        return;
    }
    jh_rec(sub_from(rep, *best), theta, opt, out, depth + 1);
    jh_rec(quotient_by(rep, *best), theta, opt, out, depth + 1);
}

}  // namespace

JHResult jh_factors(const QuiverRep& rep, const ThetaVector& theta, const SearchOptions& opt) {
    JHResult out;
    jh_rec(rep, theta, opt, out, 0);
    return out;
}

SEquivResult s_equiv(const QuiverRep& a, const QuiverRep& b, const ThetaVector& theta, const SearchOptions& opt) {
    SEquivResult res;
    JHResult fa = jh_factors(a, theta, opt), fb = jh_factors(b, theta, opt);
    for (const auto& x : fa.factors) res.factors_a.push_back(x.dimvec());
    for (const auto& x : fb.factors) res.factors_b.push_back(x.dimvec());
    res.certain = fa.certified && fb.certified;
    if (fa.factors.size() != fb.factors.size()) return res;
    std::vector<bool> used(fb.factors.size(), false);
    for (const auto& x : fa.factors) {
        bool matched = false;
        for (std::size_t j = 0; j < fb.factors.size() && !matched; ++j) {
            if (used[j] || x.dims() != fb.factors[j].dims()) continue;
            IsoResult iso = iso_test(x, fb.factors[j], opt.seed);
            if (iso.isomorphic) {
                used[j] = true;
                matched = true;
            } else if (!iso.certain) {
                res.certain = false;
            }
        }
        if (!matched) return res;
    }
    res.equivalent = true;
    return res;
}

}  // namespace p2stab
