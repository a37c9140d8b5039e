#pragma once

// Modules attached to points of P^2: skyscrapers, ideal sheaves of reduced
// subschemes in the hearts A_1 and A_0, and the data along the two walls of
// the Hilbert scheme.

#include "p2stab/quiver.hpp"
#include "p2stab/stability.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace p2stab {

using Point = std::array<Rational, 3>;

std::string to_string(const Point& x);

/// Distinct points with fixed representatives (never rescaled).
class PointConfig {
public:
    PointConfig() = default;
    explicit PointConfig(std::vector<Point> points);

    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }

private:
    std::vector<Point> points_;
};

bool same_projective_point(const Point& a, const Point& b);

/// B-module of O_x: dims (1,2,1). k only tags the heart A_k.
QuiverRep module_point(const Point& x, std::int64_t k = 1);

/// B'-module with dims (n, n, n-1): gamma_i = diag(x_i), delta_j = P diag(x_j)
/// where P drops the all-ones direction.
QuiverRep bprime_module_points(const PointConfig& z);

struct IdealModule {
    QuiverRep rep;
    bool generic = true;  // delta^V surjective
};

/// Ideal sheaf module in A_1, dims (n, 2n+1, n).
IdealModule module_ideal_A1(const PointConfig& z);
/// Ideal sheaf module in A_0, dims (n, 2n, n-1): sum of point modules
/// modulo the all-ones line at vertex 2.
QuiverRep module_ideal_A0(const PointConfig& z);

/// The linear forms l_ij (i, j = 0..2) with delta_j gamma_i = diag(l_ij(x)).
Rational composite_form(std::size_t i, std::size_t j, const Point& x);
/// For a B-module whose N0 and N2 are indexed by the points of z.
bool composite_diagonality(const QuiverRep& n, const PointConfig& z);

struct CollinearReport {
    bool collinear = false;
    bool by_rank = false;
    std::optional<bool> by_hom;  // n >= 3 only
    bool agree = true;
};

CollinearReport collinear_test(const PointConfig& z);

enum class WallKind { theta1_1, theta0_0 };
std::string to_string(WallKind w);
WallKind parse_wall(const std::string& s);

struct FiltrationData {
    WallKind wall;
    ThetaVector theta;
    // theta1_1
    std::vector<DimensionVector> factor_dims;
    std::vector<int> point_match;  // factor index -> support point index, -1 if none
    bool factors_certified = false;
    bool all_points_matched = false;
    // theta0_0
    std::optional<DimensionVector> sub_dims;
    std::optional<DimensionVector> quotient_dims;
    std::optional<ChernCharacter> quotient_class;
    bool quotient_class_ok = false;
};

FiltrationData wall_filtration_data(const PointConfig& z, WallKind wall, const SearchOptions& opt = {});

}  // namespace p2stab
