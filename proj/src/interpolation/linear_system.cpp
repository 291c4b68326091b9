#include "oscusec/interpolation/linear_system.hpp"

#include "oscusec/error.hpp"

namespace oscusec {

LinearSystemSpec LinearSystemSpec::projective(int ambient_dim, int degree) {
  if (ambient_dim < 1) throw InputError("projective ambient dimension must be >= 1");
  if (degree < 0) throw InputError("degree must be >= 0");
  return LinearSystemSpec(ProjectiveSystem{ambient_dim, degree});
}

LinearSystemSpec LinearSystemSpec::hirzebruch(int twist, int h_coeff, int f_coeff) {
  if (twist < 0 || h_coeff < 0 || f_coeff < 0) {
    throw InputError("Hirzebruch parameters n, a, b must be >= 0");
  }
  return LinearSystemSpec(HirzebruchSystem{twist, h_coeff, f_coeff});
}

int LinearSystemSpec::chart_dim() const noexcept {
  return is_projective() ? projective_system().ambient_dim : 2;
}

std::int64_t LinearSystemSpec::basis_size() const {
  if (is_projective()) {
    const auto& p = projective_system();
    return binomial(p.degree + p.ambient_dim, p.ambient_dim);
  }
  const auto& h = hirzebruch_system();
  std::int64_t total = 0;
  for (int i = 0; i <= h.h_coeff; ++i) total += h.f_coeff + std::int64_t{h.twist} * i + 1;
  return total;
}

std::int64_t LinearSystemSpec::conditions_for(int multiplicity) const {
  if (multiplicity < 1) throw InputError("multiplicity must be >= 1");
  const int n = chart_dim();
  return binomial(n + multiplicity - 1, n);
}

std::string LinearSystemSpec::describe() const {
  if (is_projective()) {
    const auto& p = projective_system();
    return "P^" + std::to_string(p.ambient_dim) + "(" + std::to_string(p.degree) + ")";
  }
  const auto& h = hirzebruch_system();
  return "F_" + std::to_string(h.twist) + "(" + std::to_string(h.h_coeff) + "H+" +
         std::to_string(h.f_coeff) + "F)";
}

std::vector<ExponentVector> monomial_basis(const LinearSystemSpec& spec) {
  if (spec.is_projective()) {
    const auto& p = spec.projective_system();
    return exponents_up_to(p.ambient_dim, p.degree);
  }
  const auto& h = spec.hirzebruch_system();
  std::vector<ExponentVector> basis;
  for (int i = 0; i <= h.h_coeff; ++i) {
    for (int j = 0; j <= h.f_coeff + h.twist * i; ++j) basis.push_back({i, j});
  }
  return basis;
}

}  // namespace oscusec
