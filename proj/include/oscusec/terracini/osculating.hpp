#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "oscusec/algebra/context.hpp"
#include "oscusec/algebra/matrix.hpp"
#include "oscusec/interpolation/fat_points.hpp"
#include "oscusec/interpolation/linear_system.hpp"

namespace oscusec {

// The vectors p_I(0), |I| <= order, of the monomial parametrization at a point.
struct OsculatingFrame {
  ChartPoint base_point;
  int order = 0;
  ExactMatrix frame;

  // Projective dimension of the osculating space: rank - 1.
  std::int64_t dimension() const;
};

// Frame rows come from the Taylor expansion of every basis monomial around
// the point: row I = I! * [t^I] x^E(point + t).
OsculatingFrame osculating_frame(const LinearSystemSpec& spec, const PrimeField& field,
                                 std::span<const FieldElement> point, int order);

// dim of the span of order-m osculating spaces at h+1 generic points, max over trials.
std::int64_t secant_osculating_dim(const LinearSystemSpec& spec, int order, int h,
                                   const ComputeContext& ctx);

// rank of the interpolation matrix of h+1 generic points of multiplicity
// order+1, minus one. Same number as secant_osculating_dim by duality.
std::int64_t interpolation_osculating_dim(const LinearSystemSpec& spec, int order, int h,
                                          const ComputeContext& ctx);

// One factor of a join. column_map[c] is the ambient coordinate that receives
// basis monomial c; the caller supplies it, there is no automatic re-embedding.
struct JoinFactor {
  LinearSystemSpec spec;
  std::optional<std::vector<std::int64_t>> point;  // generic when empty
  std::vector<std::size_t> column_map;
};

struct JoinSpec {
  std::size_t ambient_size = 0;  // r + 1
  std::vector<JoinFactor> factors;
  int order = 0;
};

// h+1 copies of the same embedding, i.e. the secant variety as a join.
JoinSpec secant_join(const LinearSystemSpec& spec, int h, int order);

// Column map sending the basis of `small` into the basis of `big` by matching
// exponent vectors. Throws InputError if some monomial of `small` is missing.
std::vector<std::size_t> pad_by_exponents(const LinearSystemSpec& small,
                                          const LinearSystemSpec& big);

// Builds Phi(q_0..q_h, a_0..a_h) = sum a_i Phi_i(q_i) as a polynomial map on the
// product chart and differentiates it at a random preimage with nonzero
// scalings: order <= m in the chart coordinates, order <= 1 in the scalings. Returns rank - 1, max over trials.
std::int64_t join_osculating_dim(const JoinSpec& join, const ComputeContext& ctx);

}  // namespace oscusec
