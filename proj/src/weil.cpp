/*
 * Copyright 2026 k3ord authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 */
#include "weil.hpp"

#include <algorithm>
#include <complex>

#include <Eigen/Dense>

namespace k3ord {

namespace {

constexpr double kRootTol = 1e-8; // relative tolerance on root moduli

BigInt bpow(const BigInt& b, unsigned e) { return boost::multiprecision::pow(b, e); }

// exact valuation; a != 0
std::int64_t ord_at(BigInt a, std::uint64_t p) {
  std::int64_t v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

using IPoint = std::pair<int, std::int64_t>;

// lower convex hull of points with strictly increasing x; collinear interior
// points are dropped, so the result lists true vertices only
std::vector<IPoint> lower_hull(const std::vector<IPoint>& pts) {
  std::vector<IPoint> h;
  for (const auto& pt : pts) {
    while (h.size() >= 2) {
      const auto& a = h[h.size() - 2];
      const auto& b = h[h.size() - 1];
      __int128 cross = static_cast<__int128>(b.first - a.first) * (pt.second - a.second) -
                       static_cast<__int128>(b.second - a.second) * (pt.first - a.first);
      if (cross <= 0)
        h.pop_back();
      else
        break;
    }
    h.push_back(pt);
  }
  return h;
}

bool clause_ok(const ValidationReport& rep, char c) {
  for (const auto& chk : rep.checks)
    if (chk.clause == c) return chk.pass;
  return false;
}

void require_structural(const FrobeniusPoly& P, const char* what) {
  ValidationReport rep = validate_weil(P);
  if (!(clause_ok(rep, 'a') && clause_ok(rep, 'b') && clause_ok(rep, 'c'))) {
    std::string why;
    for (const auto& chk : rep.checks)
      if (!chk.pass && chk.clause <= 'c') {
        why = chk.detail;
        break;
      }
    fail(Errc::invalid_argument, std::string(what) + " needs a structurally valid polynomial: " + why);
  }
}

BigInt binom22(unsigned j) {
  BigInt b = 1;
  for (unsigned i = 1; i <= j; ++i) b = b * (22 - i + 1) / i;
  return b;
}

} // namespace

BigInt FrobeniusPoly::q() const { return bpow(BigInt(p), r); }

FrobeniusPoly frobenius_from_coeffs(std::uint64_t p, std::uint32_t r, std::vector<BigInt> a) {
  if (!is_prime_u64(p)) fail(Errc::invalid_argument, "characteristic must be prime");
  if (r < 1) fail(Errc::invalid_argument, "field exponent r must be at least 1");
  if (a.empty() || a.size() > 23)
    fail(Errc::invalid_argument, "coefficient list must hold 1 to 23 entries");
  return FrobeniusPoly{p, r, std::move(a)};
}

double unit_circle_deviation(const QPoly& f) {
  QPoly sf = squarefree_part_q(f);
  qtrim(sf);
  const int d = static_cast<int>(sf.size()) - 1;
  if (d < 1) return 0.0;
  std::vector<double> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = BigRat(sf[i] / sf[d]).convert_to<double>();
  c[d] = 1.0;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(d, d);
  for (int i = 1; i < d; ++i) M(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) M(i, d - 1) = -c[i];
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  double worst = 0.0;
  for (int i = 0; i < d; ++i) {
    std::complex<double> z = es.eigenvalues()[i];
    // a few Newton steps sharpen the companion eigenvalue; roots are simple
    for (int it = 0; it < 8; ++it) {
      std::complex<double> fv = c[d], dv = 0.0;
      for (int k = d - 1; k >= 0; --k) {
        dv = dv * z + fv;
        fv = fv * z + c[k];
      }
      if (std::abs(dv) < 1e-300) break;
      std::complex<double> step = fv / dv;
      z -= step;
      if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
    }
    worst = std::max(worst, std::abs(std::abs(z) - 1.0));
  }
  return worst;
}

ValidationReport validate_weil(const FrobeniusPoly& P) {
  if (P.is_partial())
    fail(Errc::invalid_argument, "validation needs all 23 coefficients");
  if (!is_prime_u64(P.p)) fail(Errc::invalid_argument, "characteristic must be prime");
  ValidationReport rep;
  auto add = [&](char cl, bool ok, std::string detail) {
    rep.checks.push_back(WeilCheck{cl, ok, std::move(detail)});
    return ok;
  };
  const BigInt q = P.q();
  const BigInt q22 = bpow(q, 22);

  bool a_ok = add('a', P.a[0] == 1,
                  P.a[0] == 1 ? "a_0 = 1" : "a_0 = " + P.a[0].str() + ", expected 1");

  int eps = 0;
  if (P.a[22] == q22) eps = 1;
  else if (P.a[22] == -q22) eps = -1;
  rep.epsilon = eps;
  bool b_ok = add('b', eps != 0,
                  eps != 0 ? "a_22 = " + std::string(eps == 1 ? "+" : "-") + "q^22, eps = " +
                                 std::to_string(eps)
                           : "a_22 = " + P.a[22].str() + " is not +-q^22");

  bool c_ok = eps != 0;
  std::string c_detail = c_ok ? "a_{22-j} = eps q^{22-2j} a_j for j = 0..11" : "sign eps undetermined";
  if (eps != 0) {
    for (unsigned j = 0; j <= 11; ++j) {
      BigInt expect = eps * bpow(q, 22 - 2 * j) * P.a[j];
      if (P.a[22 - j] != expect) {
        c_ok = false;
        c_detail = "a_" + std::to_string(22 - j) + " = " + P.a[22 - j].str() +
                   " breaks the functional equation (expected " + expect.str() + ")";
        break;
      }
    }
  }
  add('c', c_ok, c_detail);

  bool d_ok = false;
  std::string d_detail;
  if (P.a[22] == 0) {
    d_detail = "degree collapsed: a_22 = 0";
  } else {
    QPoly g(23);
    BigInt qj = 1;
    for (unsigned j = 0; j <= 22; ++j) {
      g[j] = BigRat(P.a[j], qj); // scaled so honest roots sit on the unit circle
      qj *= q;
    }
    double dev = unit_circle_deviation(g);
    d_ok = dev <= kRootTol;
    d_detail = "max relative root-modulus deviation " + std::to_string(dev);
  }
  add('d', d_ok, d_detail);

  bool e_ok = true;
  std::string e_detail = "zero-sloped at the five smallest primes away from p";
  if (P.a[0] == 0 || P.a[22] == 0) {
    e_ok = false;
    e_detail = "an endpoint coefficient vanishes";
  } else {
    unsigned used = 0;
    for (std::uint64_t ell = 2; used < 5 && e_ok; ++ell) {
      if (!is_prime_u64(ell) || ell == P.p) continue;
      ++used;
      std::vector<IPoint> pts;
      for (int j = 0; j <= 22; ++j)
        if (P.a[j] != 0) pts.push_back({j, ord_at(P.a[j], ell)});
      auto hull = lower_hull(pts);
      for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        if (hull[i].second != hull[i + 1].second) {
          e_ok = false;
          e_detail = "nonzero slope in the " + std::to_string(ell) + "-adic polygon";
          break;
        }
      }
      if (e_ok && hull.front().second != 0) {
        e_ok = false;
        e_detail = "positive " + std::to_string(ell) + "-adic valuation at j = 0";
      }
    }
  }
  add('e', e_ok, e_detail);

  rep.structural_pass = a_ok && b_ok && c_ok && e_ok;
  rep.numeric_pass = d_ok;
  rep.pass = rep.structural_pass && d_ok;
  rep.numerical_root_failure = rep.structural_pass && !d_ok;
  return rep;
}

PowerSums power_sums_from_counts(const std::vector<CountResult>& counts, std::uint64_t p,
                                 std::uint32_t r) {
  if (!is_prime_u64(p)) fail(Errc::invalid_argument, "characteristic must be prime");
  if (r < 1) fail(Errc::invalid_argument, "field exponent r must be at least 1");
  if (counts.empty()) fail(Errc::invalid_argument, "no counts supplied");
  PowerSums ps;
  ps.p = p;
  ps.r = r;
  ps.q = bpow(BigInt(p), r);
  BigInt qn = 1;
  for (std::size_t n = 1; n <= counts.size(); ++n) {
    qn *= ps.q;
    const CountResult& c = counts[n - 1];
    if (c.q != qn)
      fail(Errc::invalid_argument, "count " + std::to_string(n) + " is over F_" + c.q.str() +
                                       ", expected F_" + qn.str());
    if (boost::multiprecision::abs(c.s1) > 22 * qn)
      fail(Errc::inconsistent, "Weil bound violated at n = " + std::to_string(n) + ": |" +
                                   c.s1.str() + "| > 22 q^n");
    ps.s.push_back(c.s1);
  }
  return ps;
}

PowerSums power_sums_of(const FrobeniusPoly& P, unsigned k) {
  if (P.is_partial()) fail(Errc::invalid_argument, "power sums need all 23 coefficients");
  PowerSums ps;
  ps.p = P.p;
  ps.r = P.r;
  ps.q = P.q();
  for (unsigned m = 1; m <= k; ++m) {
    BigInt acc = 0;
    if (m <= 22) acc = BigInt(m) * P.a[m];
    for (unsigned j = 1; j < m && j <= 22; ++j) acc += P.a[j] * ps.s[m - j - 1];
    ps.s.push_back(-acc);
  }
  return ps;
}

Reconstruction reconstruct_from_power_sums(const PowerSums& ps, const std::optional<BigInt>& s12) {
  if (ps.s.size() < 11) fail(Errc::invalid_argument, "reconstruction needs s_1..s_11");
  const BigInt q = bpow(BigInt(ps.p), ps.r);
  std::vector<BigInt> a(23, BigInt(0));
  a[0] = 1;
  for (unsigned m = 1; m <= 11; ++m) {
    BigInt acc = ps.s[m - 1];
    for (unsigned j = 1; j < m; ++j) acc += a[j] * ps.s[m - j - 1];
    acc = -acc;
    if (acc % m != 0)
      fail(Errc::inconsistent, "Newton identity gives a non-integer a_" + std::to_string(m));
    a[m] = acc / m;
  }
  auto complete = [&](int eps) {
    FrobeniusPoly P{ps.p, ps.r, a};
    for (unsigned j = 0; j <= 10; ++j) P.a[22 - j] = eps * bpow(q, 22 - 2 * j) * a[j];
    return P;
  };
  std::vector<FrobeniusPoly> cands;
  cands.push_back(complete(1));
  if (a[11] == 0) cands.push_back(complete(-1)); // j = 11 no longer pins the sign
  std::vector<FrobeniusPoly> valid;
  for (auto& c : cands)
    if (validate_weil(c).pass) valid.push_back(std::move(c));
  if (valid.empty())
    fail(Errc::inconsistent, "no functional-equation completion passes validation");
  if (valid.size() > 1 && s12) {
    std::vector<FrobeniusPoly> matched;
    for (auto& c : valid)
      if (power_sums_of(c, 12).s[11] == *s12) matched.push_back(std::move(c));
    if (matched.empty()) fail(Errc::inconsistent, "s_12 matches neither sign candidate");
    valid = std::move(matched);
  }
  Reconstruction rec;
  rec.ambiguous = valid.size() > 1;
  rec.candidates = std::move(valid);
  return rec;
}

NewtonPolygon newton_polygon(const FrobeniusPoly& P) {
  require_structural(P, "newton_polygon");
  NewtonPolygon np;
  np.p = P.p;
  np.r = P.r;
  const std::int64_t r = P.r;
  std::vector<IPoint> pts;
  for (int j = 0; j <= 22; ++j) {
    if (P.a[j] == 0) continue; // valuation infinity, never on the lower hull
    pts.push_back({j, ord_at(P.a[j], P.p)});
  }
  for (const auto& [j, v] : pts) np.points.push_back({j, Rational(v, r)});
  const auto hull = lower_hull(pts);
  for (const auto& [j, v] : hull) np.vertices.push_back({j, Rational(v, r)});
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const auto& [x0, y0] = hull[i];
    const auto& [x1, y1] = hull[i + 1];
    Rational slope(y1 - y0, static_cast<std::int64_t>(x1 - x0) * r);
    for (int k = 0; k < x1 - x0; ++k) np.slopes.push_back(slope);
  }
  return np;
}

HeightClass classify_height(const NewtonPolygon& np) {
  HeightClass out;
  if (np.slopes.size() != 22) {
    out.kind = HeightClass::Kind::invalid;
    out.reason = "polygon carries " + std::to_string(np.slopes.size()) + " slopes, expected 22";
    return out;
  }
  const Rational one(1);
  bool all_one = true;
  for (const auto& s : np.slopes)
    if (!(s == one)) {
      all_one = false;
      break;
    }
  if (all_one) {
    out.kind = HeightClass::Kind::supersingular;
    out.h = kInfiniteHeight;
    return out;
  }
  const Rational s0 = np.slopes.front();
  if (s0.num != s0.den - 1) {
    out.kind = HeightClass::Kind::invalid;
    out.reason = "leading slope " + s0.str() + " is not of the form (h-1)/h";
    return out;
  }
  const std::int64_t h = s0.den;
  if (h > 10) {
    out.kind = HeightClass::Kind::invalid;
    out.reason = "slope pattern implies height " + std::to_string(h) + ", above the K3 bound 10";
    return out;
  }
  std::vector<Rational> want;
  for (std::int64_t i = 0; i < h; ++i) want.emplace_back(h - 1, h);
  for (std::int64_t i = 0; i < 22 - 2 * h; ++i) want.emplace_back(1);
  for (std::int64_t i = 0; i < h; ++i) want.emplace_back(h + 1, h);
  for (std::size_t i = 0; i < 22; ++i) {
    if (!(np.slopes[i] == want[i])) {
      out.kind = HeightClass::Kind::invalid;
      out.reason = "slope " + np.slopes[i].str() + " at position " + std::to_string(i) +
                   " deviates from the height-" + std::to_string(h) + " pattern (expected " +
                   want[i].str() + ")";
      return out;
    }
  }
  out.kind = h == 1 ? HeightClass::Kind::ordinary : HeightClass::Kind::finite;
  out.h = static_cast<unsigned>(h);
  return out;
}

bool is_ordinary_from_a1(const FrobeniusPoly& P) {
  if (P.a.size() < 2) fail(Errc::invalid_argument, "a_1 is required");
  return P.a[1] % P.p != 0;
}

SupersingularResult supersingular_exact(const FrobeniusPoly& P) {
  require_structural(P, "supersingular_exact");
  const BigInt q = P.q();
  SupersingularResult res;
  ZPoly R(23);
  BigInt qj = 1;
  for (unsigned j = 0; j <= 22; ++j) {
    if (P.a[j] % qj != 0) {
      res.failing_index = static_cast<int>(j);
      res.reason = "q^" + std::to_string(j) + " does not divide a_" + std::to_string(j);
      return res;
    }
    R[j] = P.a[j] / qj;
    qj *= q;
  }
  ztrim(R);
  for (std::uint32_t n : admissible_orders(22)) {
    if (zdeg(R) == 0) break;
    const ZPoly& phi = cyclotomic(n);
    std::uint32_t mult = 0;
    ZPoly quot;
    while (zdeg(R) >= zdeg(phi) && exact_divide(R, phi, &quot)) {
      R = quot;
      ++mult;
    }
    if (mult) res.orders.push_back({n, mult});
  }
  if (zdeg(R) == 0) {
    res.yes = true;
  } else {
    res.reason = "residual factor of degree " + std::to_string(zdeg(R)) +
                 " has no cyclotomic divisor";
  }
  return res;
}

std::vector<unsigned> height_candidates_partial(const std::vector<BigInt>& a, std::uint64_t p,
                                                std::uint32_t r) {
  if (!is_prime_u64(p)) fail(Errc::invalid_argument, "characteristic must be prime");
  if (r < 1) fail(Errc::invalid_argument, "field exponent r must be at least 1");
  if (a.size() < 2 || a.size() > 12)
    fail(Errc::invalid_argument, "prefix must supply a_0..a_k with 1 <= k <= 11");
  if (a[0] != 1) fail(Errc::invalid_argument, "a_0 must be 1");
  const unsigned k = static_cast<unsigned>(a.size()) - 1;
  std::vector<std::int64_t> val(k + 1, -1); // -1: coefficient zero, valuation infinite
  for (unsigned j = 1; j <= k; ++j)
    if (a[j] != 0) val[j] = ord_at(a[j], p);

  std::vector<unsigned> out;
  const std::int64_t R = r;
  for (std::int64_t h = 1; h <= 10; ++h) {
    bool ok = true;
    for (unsigned j = 1; j <= k && ok; ++j) {
      if (val[j] < 0) continue;
      // hull of the height-h pattern: y = j (h-1)/h for j <= h, y = j-1 after
      if (j <= static_cast<unsigned>(h))
        ok = val[j] * h >= static_cast<std::int64_t>(j) * (h - 1) * R;
      else
        ok = val[j] >= (static_cast<std::int64_t>(j) - 1) * R;
    }
    // the interior vertex (h, h-1) must be hit exactly once visible
    if (ok && static_cast<unsigned>(h) <= k) ok = val[h] == (h - 1) * R;
    if (ok) out.push_back(static_cast<unsigned>(h));
  }
  bool inf_ok = true;
  for (unsigned j = 1; j <= k && inf_ok; ++j) {
    if (val[j] < 0) continue;
    inf_ok = val[j] >= static_cast<std::int64_t>(j) * R;
  }
  if (inf_ok) out.push_back(kInfiniteHeight);
  return out;
}

Ogus2Verdict ogus2_check(const std::vector<BigInt>& b, std::uint64_t p, std::uint64_t ell) {
  if (!is_prime_u64(p) || !is_prime_u64(ell))
    fail(Errc::invalid_argument, "p and l must be prime");
  if (ell <= 44) fail(Errc::invalid_argument, "l must exceed 44 = 2 * 22");
  if (b.size() != 23) fail(Errc::invalid_argument, "need 23 coefficients b_0..b_22");
  Ogus2Verdict v;
  v.hypotheses[0] = (p - 1) % ell == 0;
  bool cong = true, exact = true;
  BigInt pj = 1;
  for (unsigned j = 0; j <= 22 && (cong || exact); ++j) {
    BigInt target = binom22(j);
    if (j % 2 == 1) target = -target;
    if ((b[j] - target) % ell != 0) cong = false;
    if (b[j] != target * pj) exact = false;
    pj *= p;
  }
  v.hypotheses[1] = cong;
  v.hypotheses[2] = b[0] == 1;
  {
    QPoly g(23);
    BigInt pk = 1;
    for (unsigned j = 0; j <= 22; ++j) {
      g[j] = BigRat(b[j], pk);
      pk *= p;
    }
    v.hypotheses[3] = unit_circle_deviation(g) <= kRootTol;
  }
  v.hypotheses[4] = b[1] % p == 0;
  v.conclusion_holds = exact;
  return v;
}

AlgebraicPart algebraic_part(const FrobeniusPoly& P) {
  require_structural(P, "algebraic_part");
  const BigInt q = P.q();
  ZPoly R(P.a.begin(), P.a.end());
  ztrim(R);
  AlgebraicPart out;
  for (std::uint32_t n : admissible_orders(22)) {
    const ZPoly phi_q = scale_arg(cyclotomic(n), q);
    std::uint32_t mult = 0;
    ZPoly quot;
    while (zdeg(R) >= zdeg(phi_q) && exact_divide(R, phi_q, &quot)) {
      R = quot;
      ++mult;
    }
    if (mult) {
      out.orders.push_back({n, mult});
      out.degree += mult * euler_phi(n);
    }
    if (zdeg(R) == 0) break;
  }
  return out;
}

} // namespace k3ord
