#include "oscusec/interpolation/fat_points.hpp"

#include <algorithm>

#include "oscusec/error.hpp"

namespace oscusec {

std::int64_t FatPointScheme::conditions(const LinearSystemSpec& spec) const {
  std::int64_t total = 0;
  for (const auto& p : points) total += spec.conditions_for(p.multiplicity);
  return total;
}

namespace {

int max_exponent(const std::vector<ExponentVector>& basis) {
  int top = 0;
  for (const auto& e : basis) {
    for (int v : e) top = std::max(top, v);
  }
  return top;
}

// Appends the derivative rows of one point to `out`.
void append_condition_rows(const std::vector<ExponentVector>& basis, const PrimeField& field,
                           std::span<const FieldElement> point, int multiplicity,
                           ExactMatrix::Builder& out) {
  const int dim = static_cast<int>(point.size());
  const int top = max_exponent(basis);

  // powers[j][e] = x_j^e, falling[e][i] = e (e-1) ... (e-i+1).
  std::vector<std::vector<FieldElement>> powers(dim, std::vector<FieldElement>(top + 1));
  for (int j = 0; j < dim; ++j) {
    powers[j][0] = FieldElement(1);
    for (int e = 1; e <= top; ++e) powers[j][e] = field.mul(powers[j][e - 1], point[j]);
  }
  std::vector<std::vector<FieldElement>> falling(top + 1, std::vector<FieldElement>(top + 1));
  for (int e = 0; e <= top; ++e) {
    for (int i = 0; i <= top; ++i) falling[e][i] = falling_factorial(field, e, i);
  }

  std::vector<FieldElement> row(basis.size());
  for (const auto& order : exponents_up_to(dim, multiplicity - 1)) {
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto& e = basis[c];
      FieldElement v(1);
      for (int j = 0; j < dim && !v.is_zero(); ++j) {
        if (order[j] > e[j]) {
          v = FieldElement(0);
          break;
        }
        v = field.mul(v, field.mul(falling[e[j]][order[j]], powers[j][e[j] - order[j]]));
      }
      row[c] = v;
    }
    out.add_row(row);
  }
}

void check_chart(const LinearSystemSpec& spec, std::size_t coords) {
  if (static_cast<int>(coords) != spec.chart_dim()) {
    throw DegenerateChart("point has " + std::to_string(coords) + " chart coordinates, " +
                          spec.describe() + " needs " + std::to_string(spec.chart_dim()));
  }
}

}  // namespace

ExactMatrix condition_rows(const LinearSystemSpec& spec, const PrimeField& field,
                           std::span<const FieldElement> point, int multiplicity) {
  if (multiplicity < 1) throw InputError("multiplicity must be >= 1");
  check_chart(spec, point.size());
  const auto basis = monomial_basis(spec);
  ExactMatrix::Builder builder(field, basis.size());
  append_condition_rows(basis, field, point, multiplicity, builder);
  return std::move(builder).build();
}

std::vector<ChartPoint> realize_points(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                                       const PrimeField& field, RandomStream& rng) {
  const int dim = spec.chart_dim();
  std::vector<ChartPoint> out;
  out.reserve(scheme.points.size());
  for (const auto& p : scheme.points) {
    if (p.multiplicity < 1) throw InputError("multiplicity must be >= 1");
    if (std::holds_alternative<GenericLocation>(p.location)) {
      out.push_back(random_affine_point(field, dim, rng));
    } else if (std::holds_alternative<HyperplaneLocation>(p.location)) {
      if (!spec.is_projective()) {
        throw DegenerateChart("hyperplane points are only defined on projective space");
      }
      ChartPoint pt = random_affine_point(field, dim, rng);
      pt.back() = FieldElement(0);
      out.push_back(std::move(pt));
    } else {
      const auto& coords = std::get<ExplicitLocation>(p.location).coords;
      check_chart(spec, coords.size());
      ChartPoint pt;
      pt.reserve(coords.size());
      for (std::int64_t c : coords) pt.push_back(field.from_int(c));
      out.push_back(std::move(pt));
    }
  }
  return out;
}

ExactMatrix build_matrix(const LinearSystemSpec& spec, const FatPointScheme& scheme,
                         const PrimeField& field, RandomStream& rng) {
  const auto basis = monomial_basis(spec);
  const auto points = realize_points(spec, scheme, field, rng);
  ExactMatrix::Builder builder(field, basis.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    append_condition_rows(basis, field, points[i], scheme.points[i].multiplicity, builder);
  }
  return std::move(builder).build();
}

}  // namespace oscusec
