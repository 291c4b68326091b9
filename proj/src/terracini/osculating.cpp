#include "oscusec/terracini/osculating.hpp"

#include <algorithm>
#include <map>

#include "oscusec/error.hpp"

namespace oscusec {

std::int64_t OsculatingFrame::dimension() const {
  return static_cast<std::int64_t>(rank(frame)) - 1;
}

OsculatingFrame osculating_frame(const LinearSystemSpec& spec, const PrimeField& field,
                                 std::span<const FieldElement> point, int order) {
  if (order < 0) throw InputError("osculating order must be >= 0");
  const int dim = spec.chart_dim();
  if (static_cast<int>(point.size()) != dim) {
    throw DegenerateChart("base point has the wrong number of chart coordinates for " +
                          spec.describe());
  }
  const auto basis = monomial_basis(spec);

  ExactMatrix::Builder builder(field, basis.size());
  std::vector<FieldElement> row(basis.size());
  for (const auto& index : exponents_up_to(dim, order)) {
    FieldElement index_factorial(1);
    for (int i : index) index_factorial = field.mul(index_factorial, falling_factorial(field, i, i));
    for (std::size_t c = 0; c < basis.size(); ++c) {
      // [t^I] prod_j (x_j + t_j)^{e_j} = prod_j C(e_j, i_j) x_j^{e_j - i_j}
      FieldElement coeff(1);
      for (int j = 0; j < dim; ++j) {
        const int e = basis[c][j];
        const int i = index[j];
        if (i > e) {
          coeff = FieldElement(0);
          break;
        }
        coeff = field.mul(coeff, field.mul(binomial_mod(field, e, i),
                                           field.pow(point[j], static_cast<std::uint64_t>(e - i))));
      }
      row[c] = field.mul(index_factorial, coeff);
    }
    builder.add_row(row);
  }
  return {ChartPoint(point.begin(), point.end()), order, std::move(builder).build()};
}

std::int64_t secant_osculating_dim(const LinearSystemSpec& spec, int order, int h,
                                   const ComputeContext& ctx) {
  if (order < 0 || h < 0) throw InputError("order and h must be >= 0");
  if (ctx.trials < 1) throw InputError("at least one trial is required");
  std::int64_t best = -1;
  for (int t = 0; t < ctx.trials; ++t) {
    RandomStream rng = ctx.trial_stream(t);
    ExactMatrix::Builder stack(ctx.field, static_cast<std::size_t>(spec.basis_size()));
    for (int i = 0; i <= h; ++i) {
      const ChartPoint p = random_affine_point(ctx.field, spec.chart_dim(), rng);
      stack.append(osculating_frame(spec, ctx.field, p, order).frame);
    }
    best = std::max(best, static_cast<std::int64_t>(rank(std::move(stack).build())) - 1);
  }
  return best;
}

std::int64_t interpolation_osculating_dim(const LinearSystemSpec& spec, int order, int h,
                                          const ComputeContext& ctx) {
  if (order < 0 || h < 0) throw InputError("order and h must be >= 0");
  if (ctx.trials < 1) throw InputError("at least one trial is required");
  const FatPointScheme scheme = FatPointScheme::uniform(order + 1, h + 1);
  std::int64_t best = -1;
  for (int t = 0; t < ctx.trials; ++t) {
    RandomStream rng = ctx.trial_stream(t);
    const ExactMatrix m = build_matrix(spec, scheme, ctx.field, rng);
    best = std::max(best, static_cast<std::int64_t>(rank(m)) - 1);
  }
  return best;
}

JoinSpec secant_join(const LinearSystemSpec& spec, int h, int order) {
  if (h < 0) throw InputError("h must be >= 0");
  const auto size = static_cast<std::size_t>(spec.basis_size());
  std::vector<std::size_t> identity(size);
  for (std::size_t i = 0; i < size; ++i) identity[i] = i;
  JoinSpec join{size, {}, order};
  for (int i = 0; i <= h; ++i) join.factors.push_back({spec, std::nullopt, identity});
  return join;
}

std::vector<std::size_t> pad_by_exponents(const LinearSystemSpec& small,
                                          const LinearSystemSpec& big) {
  if (small.chart_dim() != big.chart_dim()) {
    throw InputError("padding needs factors with the same chart dimension");
  }
  const auto big_basis = monomial_basis(big);
  std::map<ExponentVector, std::size_t> position;
  for (std::size_t i = 0; i < big_basis.size(); ++i) position.emplace(big_basis[i], i);
  std::vector<std::size_t> map;
  for (const auto& e : monomial_basis(small)) {
    auto it = position.find(e);
    if (it == position.end()) {
      throw InputError("basis of " + small.describe() + " does not embed into " + big.describe());
    }
    map.push_back(it->second);
  }
  return map;
}

namespace {

// One monomial coeff * prod_v t_v^{exps[v]} of a coordinate of the join map.
struct Term {
  FieldElement coeff;
  ExponentVector exps;
};

void validate(const JoinSpec& join) {
  if (join.factors.empty()) throw InputError("a join needs at least one factor");
  if (join.order < 0) throw InputError("osculating order must be >= 0");
  for (const auto& f : join.factors) {
    if (f.column_map.size() != static_cast<std::size_t>(f.spec.basis_size())) {
      throw InputError("column map of " + f.spec.describe() + " has the wrong length");
    }
    std::vector<std::size_t> sorted = f.column_map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("column map of " + f.spec.describe() + " repeats a coordinate");
    }
    if (!sorted.empty() && sorted.back() >= join.ambient_size) {
      throw InputError("column map of " + f.spec.describe() + " leaves the ambient space");
    }
    if (f.point && static_cast<int>(f.point->size()) != f.spec.chart_dim()) {
      throw DegenerateChart("join factor point has the wrong number of chart coordinates");
    }
  }
}

}  // namespace

std::int64_t join_osculating_dim(const JoinSpec& join, const ComputeContext& ctx) {
  validate(join);
  if (ctx.trials < 1) throw InputError("at least one trial is required");
  const PrimeField& field = ctx.field;

  // Variables: the chart coordinates of every factor, then one scaling per factor.
  std::vector<int> offset;
  int vars = 0;
  for (const auto& f : join.factors) {
    offset.push_back(vars);
    vars += f.spec.chart_dim();
  }
  const int scaling_offset = vars;
  vars += static_cast<int>(join.factors.size());

  std::vector<std::vector<Term>> coords(join.ambient_size);
  int top = 1;
  for (std::size_t i = 0; i < join.factors.size(); ++i) {
    const auto& f = join.factors[i];
    const auto basis = monomial_basis(f.spec);
    for (std::size_t c = 0; c < basis.size(); ++c) {
      ExponentVector exps(static_cast<std::size_t>(vars), 0);
      for (int j = 0; j < f.spec.chart_dim(); ++j) {
        exps[offset[i] + j] = basis[c][j];
        top = std::max(top, basis[c][j]);
      }
      exps[scaling_offset + static_cast<int>(i)] = 1;
      coords[f.column_map[c]].push_back({FieldElement(1), std::move(exps)});
    }
  }

  // Order <= m in the chart coordinates and at most one derivative in a
  // scaling: the span of all d^I Phi_i, |I| <= m, including m = 0.
  std::vector<ExponentVector> indices;
  for (auto chart_index : exponents_up_to(scaling_offset, join.order)) {
    chart_index.resize(static_cast<std::size_t>(vars), 0);
    indices.push_back(chart_index);
    for (std::size_t i = 0; i < join.factors.size(); ++i) {
      ExponentVector with_scaling = chart_index;
      with_scaling[scaling_offset + i] = 1;
      indices.push_back(std::move(with_scaling));
    }
  }
  std::vector<std::vector<FieldElement>> falling(top + 1, std::vector<FieldElement>(top + 1));
  for (int e = 0; e <= top; ++e) {
    for (int k = 0; k <= top; ++k) falling[e][k] = falling_factorial(field, e, k);
  }

  std::int64_t best = -1;
  for (int t = 0; t < ctx.trials; ++t) {
    RandomStream rng = ctx.trial_stream(t);
    std::vector<FieldElement> at(static_cast<std::size_t>(vars));
    for (std::size_t i = 0; i < join.factors.size(); ++i) {
      const auto& f = join.factors[i];
      ChartPoint q = f.point ? ChartPoint{} : random_affine_point(field, f.spec.chart_dim(), rng);
      if (f.point) {
        for (std::int64_t c : *f.point) q.push_back(field.from_int(c));
      }
      std::copy(q.begin(), q.end(), at.begin() + offset[i]);
    }
    // Scalings are generic and nonzero, so the point lies on a general secant.
    for (std::size_t i = 0; i < join.factors.size(); ++i) {
      at[scaling_offset + i] = rng.nonzero(field);
    }
    std::vector<std::vector<FieldElement>> powers(at.size(), std::vector<FieldElement>(top + 1));
    for (std::size_t v = 0; v < at.size(); ++v) {
      powers[v][0] = FieldElement(1);
      for (int e = 1; e <= top; ++e) powers[v][e] = field.mul(powers[v][e - 1], at[v]);
    }

    ExactMatrix::Builder derivatives(field, join.ambient_size);
    std::vector<FieldElement> row(join.ambient_size);
    for (const auto& index : indices) {
      for (std::size_t c = 0; c < join.ambient_size; ++c) {
        FieldElement sum(0);
        for (const Term& term : coords[c]) {
          FieldElement v = term.coeff;
          for (int k = 0; k < vars && !v.is_zero(); ++k) {
            const int e = term.exps[k];
            const int d = index[k];
            if (d > e) {
              v = FieldElement(0);
              break;
            }
            if (e == 0) continue;
            v = field.mul(v, field.mul(falling[e][d], powers[k][e - d]));
          }
          sum = field.add(sum, v);
        }
        row[c] = sum;
      }
      derivatives.add_row(row);
    }
    best = std::max(best, static_cast<std::int64_t>(rank(std::move(derivatives).build())) - 1);
  }
  return best;
}

}  // namespace oscusec
