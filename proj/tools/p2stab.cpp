#include "p2stab/acceptance.hpp"
#include "p2stab/charge.hpp"
#include "p2stab/error.hpp"
#include "p2stab/geometry.hpp"
#include "p2stab/io.hpp"
#include "p2stab/ktheory.hpp"
#include "p2stab/quiver.hpp"
#include "p2stab/stability.hpp"
#include "p2stab/walls.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <string>

using namespace p2stab;

namespace {

struct Ctx {
    std::uint64_t seed = 0;
    std::string out;
};

void emit_text(const Ctx& ctx, const std::string& text) {
    std::string s = text;
    if (s.empty() || s.back() != '\n') s += '\n';
    if (ctx.out.empty())
        std::cout << s;
    else
        write_file_atomic(ctx.out, s);
}

void emit_json(const Ctx& ctx, json body) {
    body["header"] = header_json(ctx.seed);
    emit_text(ctx, body.dump(2));
}

std::string strip_brackets(std::string s) {
    std::string out;
    for (char c : s)
        if (c != '[' && c != ']' && c != '(' && c != ')' && c != ' ') out += c;
    return out;
}

std::array<Rational, 3> parse_triple(const std::string& text, const std::string& what) {
    auto v = parse_rational_list(strip_brackets(text));
    require(v.size() == 3, what + " needs three comma-separated entries, got '" + text + "'");
    return {v[0], v[1], v[2]};
}

ChernCharacter parse_ch(const std::string& text) {
    auto v = parse_triple(text, "Chern character");
    return ChernCharacter(v[0], v[1], v[2]);
}

ThetaVector parse_theta(const std::string& text) { return ThetaVector{parse_triple(text, "theta")}; }

DimensionVector parse_dims(const std::string& text) {
    auto v = parse_triple(text, "dimension vector");
    DimensionVector d;
    for (std::size_t i = 0; i < 3; ++i) {
        require(is_integer(v[i]), "dimension vector entries must be integers");
        d[i] = to_int64(v[i]);
    }
    return d;
}

// Accepts a bare module object or a tool output wrapping one under "module".
QuiverRep load_module(const std::string& path) {
    json j = read_json_file(path);
    if (j.is_object() && j.contains("module")) return module_from_json(j["module"]);
    return module_from_json(j);
}

json factors_json(const std::vector<QuiverRep>& factors) {
    json arr = json::array();
    for (const auto& f : factors) arr.push_back({{"dims", dimvec_json(f.dimvec())}, {"module", module_json(f)}});
    return arr;
}

void demand_exact(bool exact, bool certified, const std::string& what) {
    if (exact && !certified)
        throw Error(ErrorKind::incomplete, what + " is not certified by the submodule oracle (--exact)");
}

std::vector<ThetaVector> family_samples(std::int64_t n, Side side) {
    std::vector<ThetaVector> out;
    for (int i = 0; i <= 20; ++i) {
        Rational b = make_rational(i, 20);
        out.push_back(side == Side::A1 ? theta_b1(n, b) : theta_b0(n, b));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact stability conditions and quiver moduli on the projective plane"};
    app.require_subcommand(1);
    Ctx ctx;
    app.add_option("--seed", ctx.seed, "Seed for probabilistic isomorphism tests")->capture_default_str();
    std::function<int()> action;

    // ---- chern
    auto* chern = app.add_subcommand("chern", "Chern characters on P^2");
    chern->require_subcommand(1);
    std::string ch_a, ch_b, ch, heart = "A1", dims_s;
    std::int64_t k = 0;
    {
        auto* c = chern->add_subcommand("euler", "Euler pairing chi(a, b)");
        c->add_option("--a", ch_a)->required();
        c->add_option("--b", ch_b)->required();
        c->callback([&] { action = [&] { emit_text(ctx, to_string(euler_chi(parse_ch(ch_a).num(), parse_ch(ch_b).num()))); return 0; }; });
    }
    {
        auto* c = chern->add_subcommand("mukai", "Mukai pairing (a, b)");
        c->add_option("--a", ch_a)->required();
        c->add_option("--b", ch_b)->required();
        c->callback([&] { action = [&] { emit_text(ctx, to_string(mukai_pair(parse_ch(ch_a).num(), parse_ch(ch_b).num()))); return 0; }; });
    }
    {
        auto* c = chern->add_subcommand("twist", "Twist by O(k)");
        c->add_option("--ch", ch)->required();
        c->add_option("--k", k)->required();
        c->callback([&] { action = [&] { emit_text(ctx, twist(parse_ch(ch), k).str()); return 0; }; });
    }
    {
        auto* c = chern->add_subcommand("dimvec", "Dimension vector in a heart basis (or back with --dims)");
        auto* o1 = c->add_option("--ch", ch);
        auto* o2 = c->add_option("--dims", dims_s, "Inverse: Chern character of a dimension vector");
        o1->excludes(o2);
        c->add_option("--heart", heart, "A1, A0, A1p, Ak:<k> or Apk:<k>")->capture_default_str();
        c->callback([&] {
            action = [&] {
                HeartBasis h = HeartBasis::parse(heart);
                if (!dims_s.empty())
                    emit_text(ctx, chern_of_dimvec(parse_dims(dims_s), h).str());
                else {
                    require(!ch.empty(), "one of --ch or --dims is required");
                    emit_text(ctx, dimvec(parse_ch(ch), h).str());
                }
                return 0;
            };
        });
    }
    {
        auto* c = chern->add_subcommand("bogomolov", "Discriminant d^2 - 2 r s");
        c->add_option("--ch", ch)->required();
        c->callback([&] { action = [&] { emit_text(ctx, to_string(bogomolov(parse_ch(ch).num()))); return 0; }; });
    }
    {
        auto* c = chern->add_subcommand("expected-dim", "Expected dimension of the moduli space");
        c->add_option("--ch", ch)->required();
        c->callback([&] { action = [&] { emit_text(ctx, to_string(expected_dim(parse_ch(ch).num()))); return 0; }; });
    }

    // ---- charge
    auto* charge = app.add_subcommand("charge", "Central charges");
    charge->require_subcommand(1);
    std::string b_s, t2_s;
    bool allow_float = false;
    {
        auto* c = charge->add_subcommand("eval", "Z(class): geometric with --t2, else sigma_b");
        c->add_option("--b", b_s)->required();
        c->add_option("--t2", t2_s, "t^2 for the geometric charge");
        auto* o1 = c->add_option("--ch", ch);
        auto* o2 = c->add_option("--dims", dims_s, "Dimension vector in the A1 basis");
        o1->excludes(o2);
        c->callback([&] {
            action = [&] {
                require(!ch.empty() || !dims_s.empty(), "one of --ch or --dims is required");
                Rational b = parse_rational(b_s);
                json j;
                if (!t2_s.empty()) {
                    NumClass a = ch.empty() ? chern_of_dimvec(parse_dims(dims_s), HeartBasis::A(1)).num() : parse_ch(ch).num();
                    GeometricValue g = z_geometric(a, b, parse_rational(t2_s));
                    j = {{"re", rational_json(g.re)}, {"im_coeff", rational_json(g.im_coeff)}, {"t2", rational_json(g.t2)}};
                    if (auto t = g.t()) j["t"] = rational_json(*t);
                } else {
                    CentralCharge z = z_sigma_b(b);
                    ChargeValue v = ch.empty() ? eval(z, parse_dims(dims_s)) : eval(z, parse_ch(ch));
                    j = {{"re", rational_json(v.re)}, {"im", rational_json(v.im)}};
                    if (v.re != 0 || v.im != 0) j["slope"] = phase(v).mu.str();
                }
                emit_text(ctx, j.dump());
                return 0;
            };
        });
    }
    {
        auto* c = charge->add_subcommand("sigma-b", "Z^b on the simples of the A1 quiver");
        c->add_option("--b", b_s)->required();
        c->callback([&] {
            action = [&] {
                CentralCharge z = z_sigma_b(parse_rational(b_s));
                json arr = json::array();
                for (const auto& v : z.values()) arr.push_back(json::array({rational_json(v.re), rational_json(v.im)}));
                emit_text(ctx, arr.dump());
                return 0;
            };
        });
    }
    {
        auto* c = charge->add_subcommand("abc", "Geometricity determinants (a, b, c)");
        c->add_option("--b", b_s)->required();
        c->add_option("--t2", t2_s, "Use the geometric charge Z_(b,t)");
        c->callback([&] {
            action = [&] {
                Rational b = parse_rational(b_s);
                AbcReport r = geom_conditions_abc(t2_s.empty() ? z_sigma_b(b) : z_geometric_charge(b, parse_rational(t2_s)));
                json j = {{"a", rational_json(r.a)}, {"b", rational_json(r.b)}, {"c", rational_json(r.c)}, {"ok", r.ok}};
                emit_text(ctx, j.dump());
                return 0;
            };
        });
    }
    {
        auto* c = charge->add_subcommand("hypotheses", "Check the comparison-theorem hypotheses at (b, t^2)");
        c->add_option("--ch", ch)->required();
        c->add_option("--b", b_s)->required();
        c->add_option("--t2", t2_s)->required();
        c->callback([&] {
            action = [&] {
                HypothesesReport h = theorem1_hypotheses(parse_ch(ch).num(), parse_rational(b_s), parse_rational(t2_s));
                json j = {{"epsilon", rational_json(h.epsilon)},
                          {"ok_range", h.ok_range},
                          {"ok_t", h.ok_t},
                          {"ok_re", h.ok_re},
                          {"ok", h.all()},
                          {"re", rational_json(h.z.re)},
                          {"im_coeff", rational_json(h.z.im_coeff)}};
                emit_text(ctx, j.dump());
                return 0;
            };
        });
    }
    {
        auto* c = charge->add_subcommand("verify-T", "Check Z^b = T . Z_(b', t) on the simples");
        c->add_option("--b", b_s)->required();
        c->add_flag("--float", allow_float, "Fall back to floating point when t is irrational");
        c->callback([&] {
            action = [&] {
                TIdentityReport r = verify_t_identity(parse_rational(b_s), allow_float);
                if (!r.ok) {
                    emit_text(ctx, "FAIL");
                    return 3;
                }
                emit_text(ctx, r.exact ? "OK (exact)" : "OK (float)");
                return 0;
            };
        });
    }
    std::string b_from = "0", b_to = "1", t2_from = "1/4", t2_to = "1";
    int b_steps = 4, t2_steps = 3;
    {
        auto* c = charge->add_subcommand("scan", "CSV of hypotheses and (a, b, c) over a (b, t^2) grid");
        c->add_option("--ch", ch)->required();
        c->add_option("--b-from", b_from)->capture_default_str();
        c->add_option("--b-to", b_to)->capture_default_str();
        c->add_option("--b-steps", b_steps)->capture_default_str();
        c->add_option("--t2-from", t2_from)->capture_default_str();
        c->add_option("--t2-to", t2_to)->capture_default_str();
        c->add_option("--t2-steps", t2_steps)->capture_default_str();
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                auto rows = charge_scan(parse_ch(ch).num(), parse_rational(b_from), parse_rational(b_to), b_steps,
                                        parse_rational(t2_from), parse_rational(t2_to), t2_steps);
                emit_text(ctx, scan_csv(rows));
                return 0;
            };
        });
    }

    // ---- module
    auto* module = app.add_subcommand("module", "Quiver modules (JSON in/out)");
    module->require_subcommand(1);
    std::string in, in_b, theta_s, points, kind = "ideal-A1";
    std::size_t config = 0, point_index = 0;
    bool exact = false;
    {
        auto* c = module->add_subcommand("check", "Check the quiver relations");
        c->add_option("--in", in)->required();
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                QuiverRep m = load_module(in);
                RelationCheck r = check_relations(m);
                json j = {{"algebra", to_string(m.algebra())}, {"dims", dimvec_json(m.dimvec())}, {"relations_ok", r.ok}};
                if (r.violation) j["violation"] = json::array({r.violation->first, r.violation->second});
                emit_json(ctx, j);
                return r.ok ? 0 : 3;
            };
        });
    }
    SearchOptions sopt;
    {
        auto* c = module->add_subcommand("king", "King (semi)stability for a weight theta");
        c->add_option("--in", in)->required();
        c->add_option("--theta", theta_s)->required();
        c->add_flag("--exact", exact, "Fail with exit 4 unless the verdict is certified");
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                QuiverRep m = load_module(in);
                sopt.seed = ctx.seed;
                KingResult r = king_test(m, parse_theta(theta_s), sopt);
                demand_exact(exact, r.certified, "the verdict");
                json j = king_json(r);
                j["dims"] = dimvec_json(m.dimvec());
                emit_json(ctx, j);
                return 0;
            };
        });
    }
    {
        auto* c = module->add_subcommand("submodules", "Dimension vectors of submodules");
        c->add_option("--in", in)->required();
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                sopt.seed = ctx.seed;
                SubmoduleSearch s = submodule_search(load_module(in), sopt);
                json dv = json::array();
                for (const auto& d : s.dimvecs()) dv.push_back(dimvec_json(d));
                emit_json(ctx, {{"dims", dimvec_json(s.full)}, {"submodules", dv}, {"complete", s.complete}, {"layers", s.layers()}});
                return 0;
            };
        });
    }
    {
        auto* c = module->add_subcommand("jh", "Jordan-Holder factors for a weight theta");
        c->add_option("--in", in)->required();
        c->add_option("--theta", theta_s)->required();
        c->add_flag("--exact", exact, "Fail with exit 4 unless every factor is certified");
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                sopt.seed = ctx.seed;
                JHResult r = jh_factors(load_module(in), parse_theta(theta_s), sopt);
                demand_exact(exact, r.certified, "the filtration");
                json dims = json::array();
                for (const auto& f : r.factors) dims.push_back(dimvec_json(f.dimvec()));
                emit_json(ctx, {{"factor_dims", dims}, {"factors", factors_json(r.factors)}, {"certified", r.certified}});
                return 0;
            };
        });
    }
    {
        auto* c = module->add_subcommand("dual", "Dual module (arrows reversed, transposed)");
        c->add_option("--in", in)->required();
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                emit_json(ctx, {{"module", module_json(dualize(load_module(in)))}});
                return 0;
            };
        });
    }
    {
        auto* c = module->add_subcommand("tilt", "Tilt between B and B' modules");
        c->add_option("--in", in)->required();
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                QuiverRep m = load_module(in);
                json j;
                if (m.algebra() == Algebra::B) {
                    j["module"] = module_json(tilt_B_to_Bprime(m));
                } else {
                    TiltResult t = tilt_Bprime_to_B(m);
                    j["module"] = module_json(t.rep);
                    j["generic"] = t.generic;
                }
                emit_json(ctx, j);
                return 0;
            };
        });
    }
    {
        auto* c = module->add_subcommand("hom", "Basis of Hom(a, b)");
        c->add_option("--a", in)->required();
        c->add_option("--b", in_b)->required();
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                auto basis = hom_space(load_module(in), load_module(in_b));
                json arr = json::array();
                for (const auto& f : basis) arr.push_back(json::array({matrix_json(f[0]), matrix_json(f[1]), matrix_json(f[2])}));
                emit_json(ctx, {{"dim", basis.size()}, {"basis", arr}});
                return 0;
            };
        });
    }
    {
        auto* c = module->add_subcommand("iso", "Isomorphism test");
        c->add_option("--a", in)->required();
        c->add_option("--b", in_b)->required();
        c->add_flag("--exact", exact, "Fail with exit 4 if a negative answer is only probabilistic");
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                IsoResult r = iso_test(load_module(in), load_module(in_b), ctx.seed);
                demand_exact(exact, r.certain, "non-isomorphism");
                json j = {{"isomorphic", r.isomorphic}, {"certain", r.certain}, {"samples", r.samples},
                          {"failure_bound", r.failure_bound}};
                if (r.witness) j["witness"] = json::array({matrix_json((*r.witness)[0]), matrix_json((*r.witness)[1]), matrix_json((*r.witness)[2])});
                emit_json(ctx, j);
                return 0;
            };
        });
    }
    {
        auto* c = module->add_subcommand("from-points", "Module of a point configuration");
        c->add_option("--points", points)->required();
        c->add_option("--kind", kind, "point | ideal-A1 | ideal-A0 | bprime")->capture_default_str();
        c->add_option("--config", config, "Configuration index in a multi-config file")->capture_default_str();
        c->add_option("--index", point_index, "Point index for --kind point")->capture_default_str();
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                auto configs = points_from_json(read_json_file(points));
                require(config < configs.size(), "--config out of range");
                const PointConfig& z = configs[config];
                json j;
                if (kind == "point") {
                    require(point_index < z.size(), "--index out of range");
                    j["module"] = module_json(module_point(z[point_index]));
                } else if (kind == "ideal-A1") {
                    IdealModule m = module_ideal_A1(z);
                    j["module"] = module_json(m.rep);
                    j["generic"] = m.generic;
                } else if (kind == "ideal-A0") {
                    j["module"] = module_json(module_ideal_A0(z));
                } else if (kind == "bprime") {
                    j["module"] = module_json(bprime_module_points(z));
                } else {
                    fail("unknown --kind '" + kind + "'");
                }
                emit_json(ctx, j);
                return 0;
            };
        });
    }

    // ---- walls
    auto* walls = app.add_subcommand("walls", "Walls and chambers in the weight plane");
    walls->require_subcommand(1);
    std::string class_s;
    std::int64_t n = 0, r = 1;
    bool family = false;
    auto diagram_from = [&]() -> WallDiagram {
        if (!class_s.empty()) return wall_diagram(parse_dims(class_s));
        require(n >= 1, "give --class or --n >= 1");
        return ideal_wall_diagram(n, parse_side(heart));
    };
    {
        auto* c = walls->add_subcommand("enumerate", "Numerical walls and chambers of a class");
        c->add_option("--class", class_s, "Dimension vector");
        c->add_option("--n", n, "Ideal-sheaf class of n points");
        c->add_option("--heart", heart, "A1 or A0 (with --n)")->capture_default_str();
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                emit_json(ctx, {{"diagram", walls_json(diagram_from())}});
                return 0;
            };
        });
    }
    {
        auto* c = walls->add_subcommand("theta-family", "theta(b) for the ideal-sheaf class of n points");
        c->add_option("--n", n)->required();
        c->add_option("--b", b_s)->required();
        c->add_option("--heart", heart, "A1 or A0")->capture_default_str();
        c->add_option("--r", r, "Rank variant (A1 only)")->capture_default_str();
        c->callback([&] {
            action = [&] {
                Rational b = parse_rational(b_s);
                require(n >= 1, "--n must be positive");
                ThetaVector t;
                if (parse_side(heart) == Side::A1)
                    t = r == 1 ? theta_b1(n, b) : theta_family_r(n, r, b);
                else {
                    require(r == 1, "--r applies to A1 only");
                    t = theta_b0(n, b);
                }
                emit_text(ctx, t.str());
                return 0;
            };
        });
    }
    {
        auto* c = walls->add_subcommand("chamber", "Chamber of a weight in the plane of the ideal class");
        c->add_option("--theta", theta_s)->required();
        c->add_option("--n", n)->required();
        c->add_option("--heart", heart, "A1 or A0")->capture_default_str();
        c->callback([&] {
            action = [&] {
                ChamberResult cr = chamber_membership(parse_theta(theta_s), n, parse_side(heart));
                json j = {{"chamber", cr.label}, {"C_P2", json::array({theta_json(cr.cp2[0]), theta_json(cr.cp2[1])})}};
                if (cr.adjacent) j["adjacent"] = json::array({theta_json((*cr.adjacent)[0]), theta_json((*cr.adjacent)[1])});
                if (cr.wall_witness) j["wall_witness"] = dimvec_json(*cr.wall_witness);
                emit_text(ctx, j.dump());
                return 0;
            };
        });
    }
    {
        auto* c = walls->add_subcommand("svg", "Draw the wall diagram");
        c->add_option("--class", class_s, "Dimension vector");
        c->add_option("--n", n, "Ideal-sheaf class of n points");
        c->add_option("--heart", heart, "A1 or A0 (with --n)")->capture_default_str();
        c->add_flag("--family", family, "Overlay theta(b), b in [0,1] (with --n)");
        c->add_option("--out", ctx.out);
        c->callback([&] {
            action = [&] {
                WallDiagram d = diagram_from();
                std::vector<ThetaVector> fam;
                if (family) {
                    require(class_s.empty(), "--family needs --n");
                    fam = family_samples(n, parse_side(heart));
                }
                emit_text(ctx, wall_svg(d, fam, family ? "theta(b)" : ""));
                return 0;
            };
        });
    }

    // ---- hilbert
    auto* hilbert = app.add_subcommand("hilbert", "Wall-crossing for Hilbert schemes of points");
    hilbert->require_subcommand(1);
    std::string svg_out;
    {
        auto* c = hilbert->add_subcommand("report", "Checks on both walls for point configurations");
        c->add_option("--n", n)->required();
        c->add_option("--points", points)->required();
        c->add_option("--out", ctx.out);
        c->add_option("--svg", svg_out, "Also draw the A1 diagram with the theta(b) family");
        c->callback([&] {
            action = [&] {
                require(n >= 1, "--n must be positive");
                auto configs = points_from_json(read_json_file(points));
                for (const auto& z : configs)
                    require(static_cast<std::int64_t>(z.size()) == n,
                            "configuration has " + std::to_string(z.size()) + " points, expected " + std::to_string(n));
                sopt.seed = ctx.seed;
                WallCrossReport rep = hilbert_report(n, configs, sopt);
                std::string svg = svg_out.empty() ? "" : wall_svg(rep.a1, family_samples(n, Side::A1), "theta(b)");
                emit_json(ctx, report_json(rep));
                if (!svg_out.empty()) write_file_atomic(svg_out, svg);
                return rep.ok ? 0 : 3;
            };
        });
    }

    // ---- selftest
    std::string level = "quick";
    {
        auto* c = app.add_subcommand("selftest", "Run the acceptance suite");
        c->add_option("--level", level, "quick or full")->capture_default_str();
        c->callback([&] {
            action = [&] {
                Level lv = parse_level(level);
                bool ok = true;
                run_acceptance(lv, ctx.seed, [&](const CriterionResult& res) {
                    std::cout << format_result(res) << std::endl;
                    ok = ok && res.pass;
                });
                return ok ? 0 : 3;
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action ? action() : 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
