#include "p2stab/io.hpp"

#include "p2stab/error.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace p2stab {

json header_json(std::uint64_t seed) { return {{"tool", kToolName}, {"version", kToolVersion}, {"seed", seed}}; }

Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    fail("expected an exact rational string, got " + j.dump());
}

json rational_json(const Rational& q) { return to_string(q); }

json chern_json(const ChernCharacter& c) { return json::array({to_string(c.r()), to_string(c.d()), to_string(c.s())}); }

ChernCharacter chern_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) fail("Chern character must be a triple");
    return ChernCharacter(rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]));
}

json dimvec_json(const DimensionVector& d) { return json::array({d[0], d[1], d[2]}); }

DimensionVector dimvec_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) fail("dimension vector must be a triple");
    DimensionVector d;
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer()) fail("dimension vector entries must be integers");
        d[i] = j[i].get<std::int64_t>();
    }
    return d;
}

json theta_json(const ThetaVector& t) { return json::array({to_string(t[0]), to_string(t[1]), to_string(t[2])}); }

ThetaVector theta_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) fail("theta must be a triple");
    return ThetaVector{{rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2])}};
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array()) fail(what + ": matrix must be an array of rows");
    // An empty array stands for any matrix with a zero dimension.
    if (j.empty() && (rows == 0 || cols == 0)) return Matrix(rows, cols);
    if (j.size() != rows) fail("dimension mismatch: " + what + " needs " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            fail("dimension mismatch: " + what + " row " + std::to_string(r) + " needs " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
    }
    return m;
}

json field_json(const Field& f) {
    if (f.is_prime()) return {{"kind", "prime"}, {"p", f.p}};
    return {{"kind", "rational"}};
}

Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind")) fail("field must be an object with a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Field::rationals();
    if (kind == "prime") {
        if (!j.contains("p") || !j.at("p").is_number_unsigned()) fail("prime field needs an integer p");
        return Field::prime(j.at("p").get<std::uint32_t>());
    }
    fail("unknown field kind '" + kind + "'");
}

json module_json(const QuiverRep& rep) {
    json g = json::array(), d = json::array();
    for (std::size_t i = 0; i < 3; ++i) {
        g.push_back(matrix_json(rep.gamma(i)));
        d.push_back(matrix_json(rep.delta(i)));
    }
    return {{"algebra", to_string(rep.algebra())},
            {"field", field_json(rep.field())},
            {"dims", json::array({rep.dim(0), rep.dim(1), rep.dim(2)})},
            {"gamma", g},
            {"delta", d}};
}

QuiverRep module_from_json(const json& j) {
    try {
        if (!j.is_object()) fail("module file must be a JSON object");
        for (const char* k : {"algebra", "dims", "gamma", "delta"})
            if (!j.contains(k)) fail(std::string("module file lacks '") + k + "'");
        Algebra a = parse_algebra(j.at("algebra").get<std::string>());
        Field f = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
        const json& dj = j.at("dims");
        if (!dj.is_array() || dj.size() != 3) fail("dims must be a triple");
        Dims dims;
        for (std::size_t i = 0; i < 3; ++i) {
            if (!dj[i].is_number_integer() || dj[i].get<std::int64_t>() < 0) fail("dims must be nonnegative integers");
            dims[i] = dj[i].get<std::size_t>();
        }
        const json& gj = j.at("gamma");
        const json& dlj = j.at("delta");
        if (!gj.is_array() || gj.size() != 3 || !dlj.is_array() || dlj.size() != 3)
            fail("gamma and delta must each list three matrices");
        std::array<Matrix, 3> g, d;
        for (std::size_t i = 0; i < 3; ++i) {
            g[i] = matrix_from_json(gj[i], dims[1], dims[0], "gamma[" + std::to_string(i) + "]");
            d[i] = matrix_from_json(dlj[i], dims[2], dims[1], "delta[" + std::to_string(i) + "]");
            if (f.is_prime()) {
                for (const auto* m : {&g[i], &d[i]})
                    for (const auto& x : m->data())
                        if (!f.admits(x)) fail("entry " + to_string(x) + " is not defined over " + f.name());
            }
        }
        return QuiverRep(a, f, dims, g, d);
    } catch (const json::exception& e) {
        fail(std::string("malformed module file: ") + e.what());
    }
}

json subspaces_json(const SubspaceTriple& t) {
    return json::array({matrix_json(t.basis[0]), matrix_json(t.basis[1]), matrix_json(t.basis[2])});
}

json king_json(const KingResult& k) {
    json out = {{"verdict", to_string(k.verdict)}, {"certified", k.certified}, {"layers", k.layers}};
    if (!k.certified) out["flag"] = "probabilistic";
    if (k.witness) out["witness"] = dimvec_json(*k.witness);
    if (k.witness_subspaces) out["witness_subspaces"] = subspaces_json(*k.witness_subspaces);
    return out;
}

namespace {

PointConfig config_from_json(const json& pts) {
    if (!pts.is_array()) fail("points must be an array of coordinate triples");
    std::vector<Point> out;
    for (const auto& p : pts) {
        if (!p.is_array() || p.size() != 3) fail("each point must be a homogeneous triple");
        out.push_back({rational_from_json(p[0]), rational_from_json(p[1]), rational_from_json(p[2])});
    }
    return PointConfig(std::move(out));
}

}  // namespace

std::vector<PointConfig> points_from_json(const json& j) {
    try {
        if (!j.is_object()) fail("points file must be a JSON object");
        if (j.contains("points")) return {config_from_json(j.at("points"))};
        if (j.contains("configs")) {
            std::vector<PointConfig> out;
            for (const auto& c : j.at("configs")) out.push_back(config_from_json(c.is_object() ? c.at("points") : c));
            return out;
        }
        fail("points file needs 'points' or 'configs'");
    } catch (const json::exception& e) {
        fail(std::string("malformed points file: ") + e.what());
    }
}

json points_json(const PointConfig& z) {
    json pts = json::array();
    for (const auto& x : z.points()) pts.push_back(json::array({to_string(x[0]), to_string(x[1]), to_string(x[2])}));
    return {{"points", pts}};
}

json walls_json(const WallDiagram& d) {
    json walls = json::array();
    for (const auto& w : d.walls) {
        json wit = json::array();
        for (const auto& x : w.witnesses) wit.push_back(dimvec_json(x));
        walls.push_back({{"witness", dimvec_json(w.witnesses.front())},
                         {"witnesses", wit},
                         {"normal_in_plane", json::array({w.normal[0].get_str(), w.normal[1].get_str()})},
                         {"status", w.status}});
    }
    json chambers = json::array();
    for (const auto& c : d.chambers)
        chambers.push_back({{"label", c.label}, {"rays", json::array({theta_json(c.rays[0]), theta_json(c.rays[1])})}});
    return {{"class", dimvec_json(d.plane.cls)},
            {"plane_basis", json::array({theta_json(d.plane.basis[0]), theta_json(d.plane.basis[1])})},
            {"walls", walls},
            {"chambers", chambers}};
}

WallDiagram walls_from_json(const json& j) {
    try {
        WallDiagram d;
        d.plane.cls = dimvec_from_json(j.at("class"));
        d.plane.basis = {theta_from_json(j.at("plane_basis").at(0)), theta_from_json(j.at("plane_basis").at(1))};
        for (const auto& w : j.at("walls")) {
            Wall x;
            if (w.contains("witnesses")) {
                for (const auto& v : w.at("witnesses")) x.witnesses.push_back(dimvec_from_json(v));
            } else {
                x.witnesses.push_back(dimvec_from_json(w.at("witness")));
            }
            const auto& nrm = w.at("normal_in_plane");
            x.normal = {Integer(nrm.at(0).get<std::string>()), Integer(nrm.at(1).get<std::string>())};
            x.status = w.at("status").get<std::string>();
            d.walls.push_back(std::move(x));
        }
        for (const auto& c : j.at("chambers"))
            d.chambers.push_back({c.at("label").get<std::string>(),
                                  {theta_from_json(c.at("rays").at(0)), theta_from_json(c.at("rays").at(1))}});
        return d;
    } catch (const json::exception& e) {
        fail(std::string("malformed walls file: ") + e.what());
    }
}

json report_json(const WallCrossReport& r) {
    json configs = json::array();
    for (const auto& c : r.configs) {
        json jh = json::array();
        for (const auto& d : c.jh_dims) jh.push_back(dimvec_json(d));
        json x = {{"index", c.index},
                  {"collinear", c.collinear},
                  {"cp2_A1", {{"verdict", c.cp2_A1}, {"certified", c.cp2_A1_certified}}},
                  {"cp2_A0", {{"verdict", c.cp2_A0}, {"certified", c.cp2_A0_certified}}},
                  {"jh_theta1_1", {{"factors", jh}, {"points_matched", c.jh_points_matched}}},
                  {"theta0_minus_eps", {{"verdict", c.minus_side}, {"certified", c.minus_certified}, {"as_expected", c.minus_expected}}},
                  {"dual_theta1_plus_eps", {{"verdict", c.dual_plus}, {"certified", c.dual_plus_certified}}},
                  {"ok", c.ok}};
        if (c.minus_witness) x["theta0_minus_eps"]["witness"] = dimvec_json(*c.minus_witness);
        configs.push_back(x);
    }
    json diagram = json::array({
        {{"from", "C_P2"}, {"to", "C_plus"}, {"heart", "A1"}, {"wall", "theta(1)_1"}, {"label", "Hilbert-Chow"}},
        {{"from", "C_P2"}, {"to", "C_minus"}, {"heart", "A0"}, {"wall", "theta(0)_0"}, {"label", "zeta-contraction"}},
    });
    return {{"n", r.n},
            {"epsilon", to_string(r.epsilon)},
            {"A1", walls_json(r.a1)},
            {"A0", walls_json(r.a0)},
            {"configs", configs},
            {"s_classes", r.s_classes},
            {"s_classes_match_support", r.s_classes_match_support},
            {"diagram", diagram},
            {"notes", r.notes},
            {"ok", r.ok}};
}

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
    return buf;
}

struct Screen {
    double x, y;
};

constexpr double kCenter = 400, kRadius = 350;

Screen unit_dir(const std::array<Rational, 2>& v) {
    double x = to_double(v[0]), y = to_double(v[1]);
    double n = std::hypot(x, y);
    return {x / n, y / n};
}

Screen at(const Screen& u, double r) { return {kCenter + r * u.x, kCenter - r * u.y}; }

}  // namespace

std::string wall_svg(const WallDiagram& d, const std::vector<ThetaVector>& family, const std::string& family_label) {
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
    s << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
    s << "<text x=\"20\" y=\"30\" font-family=\"monospace\" font-size=\"16\">class " << d.plane.cls.str()
      << "  basis " << d.plane.basis[0].str() << " " << d.plane.basis[1].str() << "</text>\n";
    const char* fills[] = {"#9ecae1", "#fdae6b", "#a1d99b", "#bcbddc"};
    std::size_t ci = 0;
    for (const auto& c : d.chambers) {
        auto a = d.plane.coords(c.rays[0]), b = d.plane.coords(c.rays[1]);
        Screen pa = at(unit_dir(a), kRadius), pb = at(unit_dir(b), kRadius);
        const bool ccw = a[0] * b[1] - a[1] * b[0] > 0;
        s << "<path d=\"M 400 400 L " << fmt(pa.x) << " " << fmt(pa.y) << " A 350 350 0 0 " << (ccw ? 0 : 1) << " "
          << fmt(pb.x) << " " << fmt(pb.y) << " Z\" fill=\"" << fills[ci++ % 4] << "\" fill-opacity=\"0.5\"/>\n";
        // label at the middle direction
        Screen ua = unit_dir(a), ub = unit_dir(b);
        Screen mid{ua.x + ub.x, ua.y + ub.y};
        double n = std::hypot(mid.x, mid.y);
        if (n > 1e-9) {
            Screen p = at({mid.x / n, mid.y / n}, 0.55 * kRadius);
            s << "<text x=\"" << fmt(p.x) << "\" y=\"" << fmt(p.y)
              << "\" font-family=\"monospace\" font-size=\"18\" text-anchor=\"middle\">" << c.label << "</text>\n";
        }
    }
    s << "<circle cx=\"400\" cy=\"400\" r=\"350\" fill=\"none\" stroke=\"#444\"/>\n";
    s << "<line x1=\"40\" y1=\"400\" x2=\"760\" y2=\"400\" stroke=\"#bbb\"/>\n";
    s << "<line x1=\"400\" y1=\"40\" x2=\"400\" y2=\"760\" stroke=\"#bbb\"/>\n";
    for (const auto& w : d.walls) {
        auto dir = w.direction();
        Screen u = unit_dir({Rational(dir[0]), Rational(dir[1])});
        Screen p = at(u, kRadius), q = at({-u.x, -u.y}, kRadius);
        const bool verified = w.status == "verified";
        s << "<line x1=\"" << fmt(q.x) << "\" y1=\"" << fmt(q.y) << "\" x2=\"" << fmt(p.x) << "\" y2=\"" << fmt(p.y)
          << (verified ? "\" stroke=\"#d62728\" stroke-width=\"2\"/>\n" : "\" stroke=\"#999\" stroke-width=\"1\" stroke-dasharray=\"4 3\"/>\n");
        Screen t = at(u, kRadius + 12);
        s << "<text x=\"" << fmt(t.x) << "\" y=\"" << fmt(t.y)
          << "\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\">" << w.witnesses.front().str() << "</text>\n";
    }
    if (!family.empty()) {
        s << "<polyline fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"3\" points=\"";
        for (std::size_t i = 0; i < family.size(); ++i) {
            Screen p = at(unit_dir(d.plane.coords(family[i])), 0.8 * kRadius);
            s << (i ? " " : "") << fmt(p.x) << "," << fmt(p.y);
        }
        s << "\"/>\n";
        Screen p0 = at(unit_dir(d.plane.coords(family.front())), 0.8 * kRadius - 16);
        Screen p1 = at(unit_dir(d.plane.coords(family.back())), 0.8 * kRadius - 16);
        s << "<text x=\"" << fmt(p0.x) << "\" y=\"" << fmt(p0.y) << "\" font-family=\"monospace\" font-size=\"12\">"
          << family_label << " b=0</text>\n";
        s << "<text x=\"" << fmt(p1.x) << "\" y=\"" << fmt(p1.y) << "\" font-family=\"monospace\" font-size=\"12\">"
          << family_label << " b=1</text>\n";
    }
    s << "</svg>\n";
    return s.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

json read_json_file(const std::string& path) {
    std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail("invalid JSON in " + path + ": " + e.what());
    }
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) fail("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) fail("write failed for " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        fail("cannot rename onto " + path + ": " + ec.message());
    }
}

}  // namespace p2stab
