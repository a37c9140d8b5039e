#pragma once

// The weight plane d^perp of a module class d: King weights from central
// charges, the theta(b) families of the ideal-sheaf classes, numerical walls,
// chambers and the Hilbert-scheme wall-crossing report.

#include "p2stab/charge.hpp"
#include "p2stab/geometry.hpp"
#include "p2stab/quiver.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace p2stab {

struct PerpPlane {
    DimensionVector cls;
    std::array<ThetaVector, 2> basis;  // integral, Hermite reduced

    /// Coordinates (p, q) with theta = p basis[0] + q basis[1].
    std::array<Rational, 2> coords(const ThetaVector& theta) const;
    ThetaVector point(const std::array<Rational, 2>& pq) const;
    bool contains(const ThetaVector& theta) const { return theta(cls) == 0; }
    bool operator==(const PerpPlane&) const = default;
};

PerpPlane perp_plane(const DimensionVector& d);

struct Wall {
    std::vector<DimensionVector> witnesses;
    std::array<Integer, 2> normal;  // primitive, first nonzero entry positive
    std::string status = "numerical";

    /// Direction of the line in plane coordinates, angle in [0, pi).
    std::array<Integer, 2> direction() const;
    bool operator==(const Wall&) const = default;
};

struct Chamber {
    std::string label;
    std::array<ThetaVector, 2> rays;  // open cone, counterclockwise or as listed
    bool operator==(const Chamber&) const = default;
};

struct WallDiagram {
    PerpPlane plane;
    std::vector<Wall> walls;
    std::vector<Chamber> chambers;
    bool operator==(const WallDiagram&) const = default;
};

/// theta(beta) = Re Z(beta) Im Z(m) - Re Z(m) Im Z(beta), with m the module class.
ThetaVector king_theta(const CentralCharge& z, const DimensionVector& mclass);

ThetaVector theta_b1(std::int64_t n, const Rational& b);
ThetaVector theta_b0(std::int64_t n, const Rational& b);
ThetaVector theta_family_r(std::int64_t n, std::int64_t r, const Rational& b);

DimensionVector ideal_class_A1(std::int64_t n, std::int64_t r = 1);  // (n+1-r, 2n+1, n)
DimensionVector ideal_class_A0(std::int64_t n);                      // (n, 2n, n-1)

struct FamilyConsistency {
    bool ok = false;
    std::array<Rational, 3> lhs;  // theta(b)_1 o dimvec(-, A1) on O, O(1), O_x
    std::array<Rational, 3> rhs;  // theta(b)_0 o dimvec(-, A0)
};

FamilyConsistency family_consistency(std::int64_t n, const Rational& b);

std::vector<Wall> numerical_walls(const DimensionVector& d);
WallDiagram wall_diagram(const DimensionVector& d);

Rational default_epsilon(std::int64_t n);

enum class Side { A1, A0 };
Side parse_side(const std::string& heart);
std::string to_string(Side s);

struct ChamberResult {
    std::string label;  // C_P2, C_plus, C_minus, on_wall, other
    std::array<ThetaVector, 2> cp2;
    std::optional<std::array<ThetaVector, 2>> adjacent;
    std::optional<DimensionVector> wall_witness;
};

/// Cone tests in the plane of the ideal class on the given side.
std::array<ThetaVector, 2> adjacent_chamber(std::int64_t n, Side side);
/// Walls of the ideal class together with C_P2 and its neighbour across the Hilbert-scheme wall.
WallDiagram ideal_wall_diagram(std::int64_t n, Side side);
ChamberResult chamber_membership(const ThetaVector& theta, std::int64_t n, Side side);

struct ConfigCheck {
    std::size_t index = 0;
    bool collinear = false;
    std::string cp2_A1;           // verdict at theta_b1(n, 1/2)
    bool cp2_A1_certified = false;
    std::string cp2_A0;           // verdict at theta_b0(n, 1/2), "skipped" for n = 1
    bool cp2_A0_certified = false;
    std::vector<DimensionVector> jh_dims;
    bool jh_points_matched = false;
    std::string minus_side;       // verdict at theta_b0(n, -eps)
    std::optional<DimensionVector> minus_witness;
    bool minus_certified = false;
    bool minus_expected = false;
    std::string dual_plus;        // dual at theta_b1(n, 1 + eps)
    bool dual_plus_certified = false;
    bool ok = false;
};

struct WallCrossReport {
    std::int64_t n = 0;
    Rational epsilon;
    WallDiagram a1;
    WallDiagram a0;
    std::vector<ConfigCheck> configs;
    std::vector<std::vector<std::size_t>> s_classes;  // configs grouped by S-equivalence at theta(1)_1
    bool s_classes_match_support = false;
    std::vector<std::string> notes;
    bool ok = false;
};

WallCrossReport hilbert_report(std::int64_t n, const std::vector<PointConfig>& configs,
                               const SearchOptions& opt = {});

}  // namespace p2stab
