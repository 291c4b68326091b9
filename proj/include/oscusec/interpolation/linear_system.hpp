#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "oscusec/combinatorics.hpp"

namespace oscusec {

// Forms of degree d on P^n.
struct ProjectiveSystem {
  int ambient_dim = 1;
  int degree = 0;
  friend bool operator==(const ProjectiveSystem&, const ProjectiveSystem&) = default;
};

// The class aH + bF on the Hirzebruch surface F_n (F^2 = 0, H^2 = n, F.H = 1).
struct HirzebruchSystem {
  int twist = 0;
  int h_coeff = 0;
  int f_coeff = 0;
  friend bool operator==(const HirzebruchSystem&, const HirzebruchSystem&) = default;
};

class LinearSystemSpec {
 public:
  // Throw InputError on negative or zero-dimensional parameters.
  static LinearSystemSpec projective(int ambient_dim, int degree);
  static LinearSystemSpec hirzebruch(int twist, int h_coeff, int f_coeff);

  bool is_projective() const noexcept {
    return std::holds_alternative<ProjectiveSystem>(system_);
  }
  const ProjectiveSystem& projective_system() const { return std::get<ProjectiveSystem>(system_); }
  const HirzebruchSystem& hirzebruch_system() const { return std::get<HirzebruchSystem>(system_); }

  // Number of affine chart coordinates: n on P^n, 2 on a Hirzebruch surface.
  int chart_dim() const noexcept;

  // Dimension of the space of sections.
  std::int64_t basis_size() const;

  // Conditions imposed by one fat point of the given multiplicity.
  std::int64_t conditions_for(int multiplicity) const;

  // "P^3(4)" or "F_1(2H+3F)".
  std::string describe() const;

  friend bool operator==(const LinearSystemSpec&, const LinearSystemSpec&) = default;

 private:
  explicit LinearSystemSpec(std::variant<ProjectiveSystem, HirzebruchSystem> s)
      : system_(s) {}

  std::variant<ProjectiveSystem, HirzebruchSystem> system_;
};

// Chart monomial basis in lexicographic order. On P^n the last homogeneous
// variable is dehomogenized, giving all e with |e| <= d. On F_n the chart
// monomials are x^i y^j with 0 <= i <= a, 0 <= j <= b + n i.
std::vector<ExponentVector> monomial_basis(const LinearSystemSpec& spec);

}  // namespace oscusec
