#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oscusec {

// C(n+2, 2) a + b = C(t+n, n) with 0 <= b < C(n+2, 2).
struct SplitPair {
  int t = 0;
  int n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  friend bool operator==(const SplitPair&, const SplitPair&) = default;
};

// Needs t >= 2 and n >= 2; throws InputError otherwise.
SplitPair split(int t, int n);

// One evaluated inequality `left relation right`, kept for reporting.
struct Inequality {
  std::string label;
  std::int64_t left = 0;
  std::string relation;  // "<=" or ">="
  std::int64_t right = 0;
  bool holds = false;
};

struct ConditionVerdict {
  enum class Kind { CertifiedByA, CertifiedByB, NotCertified };

  Kind kind = Kind::NotCertified;
  std::int64_t gamma = 0;
  std::vector<Inequality> evaluated;

  bool certified() const noexcept { return kind != Kind::NotCertified; }
};

std::string to_string(ConditionVerdict::Kind kind);

// gamma = max{0, k - b - 4}. A: 10a + 4b + 3 gamma + 2k <= C(k+3, 3).
// Throws DegreeTooSmall for k < 4.
ConditionVerdict check_A(int k, std::int64_t a, std::int64_t b);

// B: 10a + 4b >= C(k+3, 3) + 3 gamma + 2k. Throws DegreeTooSmall for k < 4.
ConditionVerdict check_B(int k, std::int64_t a, std::int64_t b);

// Triple points in P^3: subabundant side 10(h+1) + 5d - 12 <= C(d+3, 3)
// reported as CertifiedByA, superabundant side 10(h+1) >= C(d+3, 3) + 5d - 12
// as CertifiedByB. Throws DegreeTooSmall for d < 4, InputError for h < 1.
ConditionVerdict theorem2_verdict(int d, int h);

// min(10 (h+1), C(d+3, 3)) - 1: dim T^2 of S^h(V_{3,d}) when the triple-point
// system is non-special.
std::int64_t theorem2_predicted_dimension(int d, int h);

// Plane Veronese table for h in {1, 2, 4, 5, 6, 7} and 1 <= m <= 20, evaluated
// with integer cross-multiplication. Throws UnsupportedH / UnsupportedM.
bool corollary1_verdict(int d, int m, int h);

// (h+1) C(m+1, 2) - 1.
std::int64_t corollary1_predicted_dimension(int m, int h);

// Special plane systems of degree k through a triple and b double general points.
bool p2_exceptional(int k, std::int64_t a, std::int64_t b);

struct HirzebruchMatch {
  bool exceptional = false;
  // Matched only through a family whose last entry is a free symbol; the
  // reading of that symbol as a wildcard is an interpretation.
  bool interpretation_dependent = false;
  std::string family;  // which tuple or family matched, empty if none
};

// Exceptional tuples (n, a, b, m, h+1) for aH + bF on F_n with points of
// multiplicity m <= 3. Throws InputError for m > 3.
HirzebruchMatch hirzebruch_exceptional(int n, std::int64_t a, std::int64_t b, int m,
                                       std::int64_t points);

// The list is written with the fibre coefficient first: its tuple (n, a, b)
// is the class bH + aF. This takes the class h_coeff H + f_coeff F instead,
// and on F_0 also tries the class with the two rulings exchanged.
HirzebruchMatch hirzebruch_class_exceptional(int n, std::int64_t h_coeff, std::int64_t f_coeff,
                                             int m, std::int64_t points);

}  // namespace oscusec
