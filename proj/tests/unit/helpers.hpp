#pragma once

#include "p2stab/error.hpp"
#include "p2stab/geometry.hpp"
#include "p2stab/ktheory.hpp"
#include "p2stab/quiver.hpp"
#include "p2stab/rational.hpp"

#include <doctest.h>

#include <string>

namespace p2stab::test {

inline Rational q(const std::string& s) { return parse_rational(s); }
inline NumClass nc(const std::string& r, const std::string& d, const std::string& s) { return {q(r), q(d), q(s)}; }
inline DimensionVector dv(std::int64_t a, std::int64_t b, std::int64_t c) { return DimensionVector{{a, b, c}}; }
inline ThetaVector th(const Rational& a, const Rational& b, const Rational& c) { return ThetaVector{{a, b, c}}; }
inline Point pt(long a, long b, long c) { return Point{Rational(a), Rational(b), Rational(c)}; }

}  // namespace p2stab::test

namespace doctest {
template <>
struct StringMaker<p2stab::Rational> {
    static String convert(const p2stab::Rational& x) { return p2stab::to_string(x).c_str(); }
};
template <>
struct StringMaker<p2stab::DimensionVector> {
    static String convert(const p2stab::DimensionVector& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<p2stab::ThetaVector> {
    static String convert(const p2stab::ThetaVector& x) { return x.str().c_str(); }
};
template <>
struct StringMaker<p2stab::ChernCharacter> {
    static String convert(const p2stab::ChernCharacter& x) { return x.str().c_str(); }
};
}  // namespace doctest
