#include "oscusec/horace/conditions.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "oscusec/combinatorics.hpp"
#include "oscusec/error.hpp"

namespace oscusec {

std::string to_string(ConditionVerdict::Kind kind) {
  switch (kind) {
    case ConditionVerdict::Kind::CertifiedByA:
      return "CertifiedByA";
    case ConditionVerdict::Kind::CertifiedByB:
      return "CertifiedByB";
    case ConditionVerdict::Kind::NotCertified:
      return "NotCertified";
  }
  return "NotCertified";
}

SplitPair split(int t, int n) {
  if (t < 2 || n < 2) throw InputError("split needs t >= 2 and n >= 2");
  const std::int64_t block = binomial(n + 2, 2);
  const std::int64_t total = binomial(t + n, n);
  return {t, n, total / block, total % block};
}

namespace {

Inequality at_most(std::string label, std::int64_t left, std::int64_t right) {
  return {std::move(label), left, "<=", right, left <= right};
}

Inequality at_least(std::string label, std::int64_t left, std::int64_t right) {
  return {std::move(label), left, ">=", right, left >= right};
}

std::int64_t gamma_for(int k, std::int64_t b) {
  return std::max<std::int64_t>(0, k - b - 4);
}

void check_counts(int k, std::int64_t a, std::int64_t b) {
  if (k < 4) throw DegreeTooSmall(k, 4);
  if (a < 0 || b < 0) throw InputError("point counts must be >= 0");
}

}  // namespace

ConditionVerdict check_A(int k, std::int64_t a, std::int64_t b) {
  check_counts(k, a, b);
  ConditionVerdict v;
  v.gamma = gamma_for(k, b);
  v.evaluated.push_back(at_most("10a+4b+3gamma+2k <= C(k+3,3)",
                                10 * a + 4 * b + 3 * v.gamma + 2 * std::int64_t{k},
                                binomial(k + 3, 3)));
  v.kind = v.evaluated.back().holds ? ConditionVerdict::Kind::CertifiedByA
                                    : ConditionVerdict::Kind::NotCertified;
  return v;
}

ConditionVerdict check_B(int k, std::int64_t a, std::int64_t b) {
  check_counts(k, a, b);
  ConditionVerdict v;
  v.gamma = gamma_for(k, b);
  v.evaluated.push_back(at_least("10a+4b >= C(k+3,3)+3gamma+2k", 10 * a + 4 * b,
                                 binomial(k + 3, 3) + 3 * v.gamma + 2 * std::int64_t{k}));
  v.kind = v.evaluated.back().holds ? ConditionVerdict::Kind::CertifiedByB
                                    : ConditionVerdict::Kind::NotCertified;
  return v;
}

ConditionVerdict theorem2_verdict(int d, int h) {
  if (d < 4) throw DegreeTooSmall(d, 4);
  if (h < 1) throw InputError("theorem2_verdict needs h >= 1");
  const std::int64_t points = std::int64_t{h} + 1;
  const std::int64_t sections = binomial(d + 3, 3);
  ConditionVerdict v;
  v.gamma = d - 4;  // b = 0
  v.evaluated.push_back(at_most("10(h+1)+5d-12 <= C(d+3,3)", 10 * points + 5 * d - 12, sections));
  v.evaluated.push_back(at_least("10(h+1) >= C(d+3,3)+5d-12", 10 * points, sections + 5 * d - 12));
  if (v.evaluated[0].holds) {
    v.kind = ConditionVerdict::Kind::CertifiedByA;
  } else if (v.evaluated[1].holds) {
    v.kind = ConditionVerdict::Kind::CertifiedByB;
  }
  return v;
}

std::int64_t theorem2_predicted_dimension(int d, int h) {
  return std::min<std::int64_t>(10 * (std::int64_t{h} + 1), binomial(d + 3, 3)) - 1;
}

bool corollary1_verdict(int d, int m, int h) {
  if (m < 1 || m > 20) throw UnsupportedM(m);
  if (d < 1) throw InputError("corollary1_verdict needs d >= 1");
  // Each clause is "d < lo_num m / lo_den" or "d > (hi_num m - 2) / hi_den".
  struct Clause {
    int lo_num, lo_den, hi_num, hi_den;
  };
  Clause c{};
  switch (h) {
    case 1: c = {1, 1, 2, 1}; break;
    case 2: c = {3, 2, 2, 1}; break;
    case 4: c = {2, 1, 5, 2}; break;
    case 5: c = {12, 5, 5, 2}; break;
    case 6: c = {21, 8, 8, 3}; break;
    case 7: c = {48, 17, 17, 6}; break;
    default: throw UnsupportedH(h);
  }
  const bool below = c.lo_den * d < c.lo_num * m;
  const bool above = c.hi_den * d > c.hi_num * m - 2;
  return below || above;
}

std::int64_t corollary1_predicted_dimension(int m, int h) {
  return (std::int64_t{h} + 1) * binomial(m + 1, 2) - 1;
}

bool p2_exceptional(int k, std::int64_t a, std::int64_t b) {
  static constexpr std::array<std::tuple<int, int, int>, 9> kSpecial{{
      {2, 0, 2}, {3, 2, 0}, {3, 1, 1}, {4, 0, 5}, {4, 2, 1},
      {4, 2, 0}, {5, 2, 3}, {6, 5, 0}, {6, 4, 1},
  }};
  return std::any_of(kSpecial.begin(), kSpecial.end(), [&](const auto& e) {
    return std::get<0>(e) == k && std::get<1>(e) == a && std::get<2>(e) == b;
  });
}

HirzebruchMatch hirzebruch_exceptional(int n, std::int64_t a, std::int64_t b, int m,
                                       std::int64_t points) {
  if (m > 3) throw InputError("the Hirzebruch exceptional list covers m <= 3 only");
  struct Fixed {
    int n, a, b, m, s;
    const char* name;
  };
  static constexpr std::array<Fixed, 4> kFixed{{
      {1, 0, 4, 2, 5, "(1,0,4,2,5)"},
      {1, 0, 6, 3, 5, "(1,0,6,3,5)"},
      {5, 1, 4, 3, 10, "(5,1,4,3,10)"},
      {6, 0, 4, 3, 11, "(6,0,4,3,11)"},
  }};
  for (const auto& f : kFixed) {
    if (f.n == n && f.a == a && f.b == b && f.m == m && f.s == points) return {true, false, f.name};
  }

  // Families parameterized by an integer e >= 0: a = a_mul e + a_add, s = 2e + n + 1.
  struct Family {
    std::int64_t a_mul, a_add_base;
    bool a_add_has_n;
    std::int64_t b;
    int m;
    const char* name;
  };
  static constexpr std::array<Family, 4> kFamilies{{
      {2, 0, false, 2, 2, "(n,2e,2,2,2e+n+1)"},
      {4, 1, true, 2, 3, "(n,4e+n+1,2,3,2e+n+1)"},
      {3, 1, false, 3, 3, "(n,3e+1,3,3,2e+n+1)"},
      {3, 0, false, 3, 3, "(n,3e,3,3,2e+n+1)"},
  }};
  for (const auto& f : kFamilies) {
    if (f.b != b || f.m != m) continue;
    const std::int64_t a_add = f.a_add_base + (f.a_add_has_n ? n : 0);
    const std::int64_t rest = a - a_add;
    if (rest < 0 || rest % f.a_mul != 0) continue;
    const std::int64_t e = rest / f.a_mul;
    if (points == 2 * e + n + 1) return {true, false, f.name};
  }

  // Families whose last entry is the free symbol r.
  struct Wildcard {
    std::int64_t b;
    int m;
    const char* name;
  };
  static constexpr std::array<Wildcard, 3> kWildcards{{
      {0, 2, "(n,e,0,2,r)"},
      {1, 3, "(n,e,1,3,r)"},
      {0, 3, "(n,e,0,3,r)"},
  }};
  for (const auto& w : kWildcards) {
    if (w.b == b && w.m == m && a >= 0) return {true, true, w.name};
  }
  return {};
}

HirzebruchMatch hirzebruch_class_exceptional(int n, std::int64_t h_coeff, std::int64_t f_coeff,
                                             int m, std::int64_t points) {
  const auto match = hirzebruch_exceptional(n, f_coeff, h_coeff, m, points);
  if (match.exceptional || n != 0) return match;
  // On F_0 the two rulings are exchanged by an automorphism.
  auto swapped = hirzebruch_exceptional(n, h_coeff, f_coeff, m, points);
  if (swapped.exceptional) swapped.family += " with the rulings exchanged";
  return swapped;
}

}  // namespace oscusec
