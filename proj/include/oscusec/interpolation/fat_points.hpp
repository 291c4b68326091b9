#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "oscusec/algebra/context.hpp"
#include "oscusec/algebra/matrix.hpp"
#include "oscusec/interpolation/linear_system.hpp"

namespace oscusec {

struct GenericLocation {
  friend bool operator==(GenericLocation, GenericLocation) = default;
};

// Generic point of the hyperplane {last chart coordinate = 0}. P^n only.
struct HyperplaneLocation {
  friend bool operator==(HyperplaneLocation, HyperplaneLocation) = default;
};

struct ExplicitLocation {
  std::vector<std::int64_t> coords;
  friend bool operator==(const ExplicitLocation&, const ExplicitLocation&) = default;
};

using PointLocation = std::variant<GenericLocation, HyperplaneLocation, ExplicitLocation>;

struct FatPoint {
  int multiplicity = 1;
  PointLocation location = GenericLocation{};

  static FatPoint generic(int m) { return {m, GenericLocation{}}; }
  static FatPoint on_hyperplane(int m) { return {m, HyperplaneLocation{}}; }
  static FatPoint at(int m, std::vector<std::int64_t> coords) {
    return {m, ExplicitLocation{std::move(coords)}};
  }

  friend bool operator==(const FatPoint&, const FatPoint&) = default;
};

struct FatPointScheme {
  std::vector<FatPoint> points;

  FatPointScheme& add(const FatPoint& p, int count = 1) {
    for (int i = 0; i < count; ++i) points.push_back(p);
    return *this;
  }

  // `count` generic points of multiplicity m.
  static FatPointScheme uniform(int m, int count) {
    FatPointScheme s;
    s.add(FatPoint::generic(m), count);
    return s;
  }

  std::int64_t conditions(const LinearSystemSpec& spec) const;

  friend bool operator==(const FatPointScheme&, const FatPointScheme&) = default;
};

using ChartPoint = std::vector<FieldElement>;

// One row per multi-index |I| <= m-1: the partial derivative d^I of every basis
// monomial evaluated at `point`. Throws DegenerateChart when the point does not
// have chart_dim coordinates.
ExactMatrix condition_rows(const LinearSystemSpec& spec, const PrimeField& field,
                           std::span<const FieldElement> point, int multiplicity);

// Realizes the scheme's locations: generic points are drawn from rng, points on
// the hyperplane get a zero last coordinate, explicit ones are reduced mod p.
std::vector<ChartPoint> realize_points(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                                       const PrimeField& field, RandomStream& rng);

// conditions(scheme) x basis_size matrix; row blocks in scheme order.
ExactMatrix build_matrix(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                         const PrimeField& field, RandomStream& rng);

}  // namespace oscusec
