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
#include "quartic.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace k3ord {

namespace {

constexpr std::uint64_t kZechLimit = 1ull << 20;

} // namespace

QuarticSurface::QuarticSurface(std::string name, std::vector<QuarticTerm> terms)
    : name_(std::move(name)) {
  std::map<std::array<std::uint8_t, 4>, BigInt> merged;
  for (const auto& t : terms) {
    unsigned deg = 0;
    for (auto e : t.e) deg += e;
    if (deg != 4)
      fail(Errc::invalid_argument, "exponent vector does not sum to 4 in surface '" + name_ + "'");
    merged[t.e] += t.coeff;
  }
  for (auto& [e, c] : merged) {
    if (c == 0) continue;
    terms_.push_back(QuarticTerm{e, std::move(c)});
  }
  if (terms_.empty())
    fail(Errc::invalid_argument, "surface '" + name_ + "' has no nonzero term");
}

ReducedSurface reduce_mod_p(const QuarticSurface& s, std::uint64_t p) {
  if (!is_prime_u64(p)) fail(Errc::invalid_argument, "reduction modulus must be prime");
  ReducedSurface rs;
  rs.base_name_ = s.name();
  rs.p_ = p;
  for (const auto& t : s.terms()) {
    BigInt r = t.coeff % p;
    if (r < 0) r += p;
    if (r == 0) continue;
    rs.terms_.push_back(RTerm{t.e, static_cast<std::uint64_t>(r)});
  }
  if (rs.terms_.empty())
    fail(Errc::degenerate, "surface '" + s.name() + "' vanishes identically mod " + std::to_string(p));
  return rs;
}

std::vector<RTerm> ReducedSurface::partial(unsigned i) const {
  if (i > 3) fail(Errc::invalid_argument, "variable index out of range");
  std::vector<RTerm> out;
  for (const auto& t : terms_) {
    if (t.e[i] == 0) continue;
    std::uint64_t c = mulmod_u64(t.c, t.e[i], p_);
    if (c == 0) continue;
    RTerm d = t;
    d.c = c;
    d.e[i] -= 1;
    out.push_back(d);
  }
  return out;
}

namespace {

struct FeTerm {
  std::array<std::uint8_t, 4> e{};
  Fe c;
};

std::vector<FeTerm> lift_terms(const std::vector<RTerm>& terms, const Fq& field) {
  std::vector<FeTerm> out;
  out.reserve(terms.size());
  for (const auto& t : terms)
    out.push_back(FeTerm{t.e, field.from_int(static_cast<std::int64_t>(t.c))});
  return out;
}

Fe eval_terms(const Fq& field, const std::vector<FeTerm>& terms, const std::array<Fe, 4>& pt) {
  std::array<std::array<Fe, 5>, 4> pw;
  for (unsigned i = 0; i < 4; ++i) {
    pw[i][0] = field.one();
    for (unsigned k = 1; k <= 4; ++k) pw[i][k] = field.mul(pw[i][k - 1], pt[i]);
  }
  Fe acc = field.zero();
  for (const auto& t : terms) {
    Fe v = field.mul(t.c, pw[0][t.e[0]]);
    v = field.mul(v, pw[1][t.e[1]]);
    v = field.mul(v, pw[2][t.e[2]]);
    v = field.mul(v, pw[3][t.e[3]]);
    acc = field.add(acc, v);
  }
  return acc;
}

std::uint64_t pow_u64_small(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// Visits every canonical representative of P^3(F_q) (first nonzero coordinate
// 1); fn returning true stops the walk early.
template <class F>
void for_each_projective_point(const Fq& field, F&& fn) {
  const std::uint64_t q = field.q_u64();
  for (unsigned chart = 0; chart < 4; ++chart) {
    std::array<Fe, 4> pt;
    for (unsigned j = 0; j < chart; ++j) pt[j] = field.zero();
    pt[chart] = field.one();
    const unsigned m = 3 - chart;
    const std::uint64_t total = pow_u64_small(q, m);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (unsigned j = chart + 1; j < 4; ++j) {
        pt[j] = field.element_at(r % q);
        r /= q;
      }
      if (fn(pt)) return;
    }
  }
}

BigInt projective_points(const BigInt& q) { return q * q * q + q * q + q + 1; }

} // namespace

CountResult count_points_naive(const ReducedSurface& rs, const Fq& field, std::uint64_t budget) {
  if (field.p() != rs.p())
    fail(Errc::invalid_argument, "field characteristic does not match the reduction prime");
  const BigInt q = field.q();
  const BigInt total = projective_points(q);
  if (total > budget)
    fail(Errc::budget, "count over F_" + q.str() + " needs " + total.str() +
                           " point evaluations, budget is " + std::to_string(budget));
  const auto terms = lift_terms(rs.terms(), field);
  std::uint64_t cnt = 0;
  for_each_projective_point(field, [&](const std::array<Fe, 4>& pt) {
    if (eval_terms(field, terms, pt).is_zero()) ++cnt;
    return false;
  });
  CountResult res;
  res.q = q;
  res.count = cnt;
  res.s1 = res.count - 1 - q * q;
  return res;
}

namespace {

// ---- fast kernel, prime field: machine words + finite differences --------

// number of w in [0,p) with cf[0] + cf[1] w + ... + cf[4] w^4 = 0 mod p;
// successive values via the forward-difference recurrence (4 additions each)
std::uint64_t roots_in_slice(const std::array<std::uint64_t, 5>& cf, std::uint64_t p) {
  std::uint64_t d[5];
  for (unsigned w = 0; w < 5; ++w) {
    std::uint64_t x = w % p;
    std::uint64_t v = cf[4];
    for (int k = 3; k >= 0; --k) v = (mulmod_u64(v, x, p) + cf[k]) % p;
    d[w] = v;
  }
  for (int k = 1; k <= 4; ++k)
    for (int i = 4; i >= k; --i) d[i] = (d[i] + p - d[i - 1]) % p;
  std::uint64_t r0 = d[0], r1 = d[1], r2 = d[2], r3 = d[3];
  const std::uint64_t r4 = d[4];
  std::uint64_t cnt = 0;
  for (std::uint64_t w = 0; w < p; ++w) {
    cnt += (r0 == 0);
    r0 += r1; if (r0 >= p) r0 -= p;
    r1 += r2; if (r1 >= p) r1 -= p;
    r2 += r3; if (r2 >= p) r2 -= p;
    r3 += r4; if (r3 >= p) r3 -= p;
  }
  return cnt;
}

std::uint64_t count_fast_prime(const ReducedSurface& rs, std::uint64_t p, unsigned threads) {
  const auto& terms = rs.terms();

  // chart x = 1: specialize to a quartic in w per (y, z)
  auto count_y_range = [&](std::uint64_t ylo, std::uint64_t yhi) {
    std::uint64_t cnt = 0;
    std::array<std::uint64_t, 5> ypw{}, zpw{};
    ypw[0] = zpw[0] = 1 % p;
    for (std::uint64_t y = ylo; y < yhi; ++y) {
      for (unsigned k = 1; k <= 4; ++k) ypw[k] = mulmod_u64(ypw[k - 1], y, p);
      for (std::uint64_t z = 0; z < p; ++z) {
        for (unsigned k = 1; k <= 4; ++k) zpw[k] = mulmod_u64(zpw[k - 1], z, p);
        std::array<std::uint64_t, 5> cf{};
        for (const auto& t : terms) {
          std::uint64_t v = mulmod_u64(t.c, ypw[t.e[1]], p);
          v = mulmod_u64(v, zpw[t.e[2]], p);
          cf[t.e[3]] = (cf[t.e[3]] + v) % p;
        }
        cnt += roots_in_slice(cf, p);
      }
    }
    return cnt;
  };

  std::uint64_t cnt = 0;
  unsigned nt = std::max(1u, threads);
  if (nt > p) nt = static_cast<unsigned>(p);
  if (nt == 1) {
    cnt = count_y_range(0, p);
  } else {
    std::vector<std::uint64_t> partial(nt, 0);
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nt; ++i) {
      std::uint64_t lo = p * i / nt, hi = p * (i + 1) / nt;
      pool.emplace_back([&, i, lo, hi] { partial[i] = count_y_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (auto v : partial) cnt += v;
  }

  // chart x = 0, y = 1
  std::array<std::uint64_t, 5> zpw{};
  zpw[0] = 1 % p;
  for (std::uint64_t z = 0; z < p; ++z) {
    for (unsigned k = 1; k <= 4; ++k) zpw[k] = mulmod_u64(zpw[k - 1], z, p);
    std::array<std::uint64_t, 5> cf{};
    for (const auto& t : terms) {
      if (t.e[0] != 0) continue;
      cf[t.e[3]] = (cf[t.e[3]] + mulmod_u64(t.c, zpw[t.e[2]], p)) % p;
    }
    cnt += roots_in_slice(cf, p);
  }

  // chart x = y = 0, z = 1
  {
    std::array<std::uint64_t, 5> cf{};
    for (const auto& t : terms) {
      if (t.e[0] != 0 || t.e[1] != 0) continue;
      cf[t.e[3]] = (cf[t.e[3]] + t.c) % p;
    }
    cnt += roots_in_slice(cf, p);
  }

  // the single point (0:0:0:1): f there is the w^4 coefficient
  {
    bool zero = true;
    for (const auto& t : terms)
      if (t.e[3] == 4) zero = false; // reduced terms are nonzero mod p
    if (zero) ++cnt;
  }
  return cnt;
}

// ---- fast kernel, extensions: same chart walk over an arithmetic adapter -

struct ZechOps {
  const FqTables* t;
  using V = std::uint64_t;
  std::uint64_t q() const { return t->q(); }
  V element(std::uint64_t i) const { return i; }
  V from_residue(std::uint64_t r) const { return r; } // residues index themselves
  V zero() const { return 0; }
  V add(V a, V b) const { return t->add(a, b); }
  V mul(V a, V b) const { return t->mul(a, b); }
  bool is_zero(V a) const { return a == 0; }
};

struct FeOps {
  const Fq* k;
  std::uint64_t qv;
  using V = Fe;
  std::uint64_t q() const { return qv; }
  V element(std::uint64_t i) const { return k->element_at(i); }
  V from_residue(std::uint64_t r) const { return k->from_int(static_cast<std::int64_t>(r)); }
  V zero() const { return k->zero(); }
  V add(const V& a, const V& b) const { return k->add(a, b); }
  V mul(const V& a, const V& b) const { return k->mul(a, b); }
  bool is_zero(const V& a) const { return a.is_zero(); }
};

template <class Ops>
std::uint64_t count_indexed(const Ops& ops, const std::vector<RTerm>& terms, unsigned threads) {
  using V = typename Ops::V;
  const std::uint64_t q = ops.q();

  auto powers_of = [&](const V& x, std::array<V, 5>& pw) {
    pw[0] = ops.from_residue(1);
    for (unsigned k = 1; k <= 4; ++k) pw[k] = ops.mul(pw[k - 1], x);
  };
  auto slice_roots = [&](const std::array<V, 5>& cf) {
    std::uint64_t cnt = 0;
    for (std::uint64_t wi = 0; wi < q; ++wi) {
      V w = ops.element(wi);
      V v = cf[4];
      for (int k = 3; k >= 0; --k) v = ops.add(ops.mul(v, w), cf[k]);
      cnt += ops.is_zero(v);
    }
    return cnt;
  };

  auto count_y_range = [&](std::uint64_t ylo, std::uint64_t yhi) {
    std::uint64_t cnt = 0;
    std::array<V, 5> ypw, zpw;
    for (std::uint64_t yi = ylo; yi < yhi; ++yi) {
      powers_of(ops.element(yi), ypw);
      for (std::uint64_t zi = 0; zi < q; ++zi) {
        powers_of(ops.element(zi), zpw);
        std::array<V, 5> cf{ops.zero(), ops.zero(), ops.zero(), ops.zero(), ops.zero()};
        for (const auto& t : terms) {
          V v = ops.mul(ops.from_residue(t.c), ops.mul(ypw[t.e[1]], zpw[t.e[2]]));
          cf[t.e[3]] = ops.add(cf[t.e[3]], v);
        }
        cnt += slice_roots(cf);
      }
    }
    return cnt;
  };

  std::uint64_t cnt = 0;
  unsigned nt = std::max(1u, threads);
  if (nt > q) nt = static_cast<unsigned>(q);
  if (nt == 1) {
    cnt = count_y_range(0, q);
  } else {
    std::vector<std::uint64_t> partial(nt, 0);
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nt; ++i) {
      std::uint64_t lo = q * i / nt, hi = q * (i + 1) / nt;
      pool.emplace_back([&, i, lo, hi] { partial[i] = count_y_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (auto v : partial) cnt += v;
  }

  std::array<V, 5> zpw;
  for (std::uint64_t zi = 0; zi < q; ++zi) {
    powers_of(ops.element(zi), zpw);
    std::array<V, 5> cf{ops.zero(), ops.zero(), ops.zero(), ops.zero(), ops.zero()};
    for (const auto& t : terms) {
      if (t.e[0] != 0) continue;
      cf[t.e[3]] = ops.add(cf[t.e[3]], ops.mul(ops.from_residue(t.c), zpw[t.e[2]]));
    }
    cnt += slice_roots(cf);
  }
  {
    std::array<V, 5> cf{ops.zero(), ops.zero(), ops.zero(), ops.zero(), ops.zero()};
    for (const auto& t : terms) {
      if (t.e[0] != 0 || t.e[1] != 0) continue;
      cf[t.e[3]] = ops.add(cf[t.e[3]], ops.from_residue(t.c));
    }
    cnt += slice_roots(cf);
  }
  {
    bool zero = true;
    for (const auto& t : terms)
      if (t.e[3] == 4) zero = false;
    if (zero) ++cnt;
  }
  return cnt;
}

} // namespace

CountResult count_points_fast(const ReducedSurface& rs, const Fq& field, unsigned threads,
                              std::uint64_t budget) {
  if (field.p() != rs.p())
    fail(Errc::invalid_argument, "field characteristic does not match the reduction prime");
  const BigInt q = field.q();
  const BigInt total = projective_points(q);
  if (total > budget)
    fail(Errc::budget, "count over F_" + q.str() + " needs " + total.str() +
                           " point evaluations, budget is " + std::to_string(budget));
  std::uint64_t cnt;
  if (field.degree() == 1) {
    cnt = count_fast_prime(rs, field.p(), threads);
  } else if (field.q_u64() <= kZechLimit) {
    cnt = count_indexed(ZechOps{&field.tables()}, rs.terms(), threads);
  } else {
    cnt = count_indexed(FeOps{&field, field.q_u64()}, rs.terms(), threads);
  }
  CountResult res;
  res.q = q;
  res.count = cnt;
  res.s1 = res.count - 1 - q * q;
  return res;
}

SmoothnessReport singular_scan(const ReducedSurface& rs, std::uint32_t depth, std::uint64_t budget) {
  if (depth < 1) fail(Errc::invalid_argument, "scan depth must be at least 1");
  SmoothnessReport rep;
  rep.p = rs.p();
  for (std::uint32_t j = 1; j <= depth; ++j) {
    const BigInt qj = boost::multiprecision::pow(BigInt(rs.p()), j);
    // five polynomial evaluations per point (f and four partials)
    if (5 * projective_points(qj) > budget) break;
    const Fq field = Fq::extension(rs.p(), j);
    const auto f = lift_terms(rs.terms(), field);
    std::array<std::vector<FeTerm>, 4> df;
    for (unsigned i = 0; i < 4; ++i) df[i] = lift_terms(rs.partial(i), field);
    bool found = false;
    for_each_projective_point(field, [&](const std::array<Fe, 4>& pt) {
      if (!eval_terms(field, f, pt).is_zero()) return false;
      for (unsigned i = 0; i < 4; ++i)
        if (!eval_terms(field, df[i], pt).is_zero()) return false;
      rep.singular_found = true;
      rep.witness = ProjectivePoint{j, pt};
      found = true;
      return true;
    });
    rep.depth_scanned = j;
    if (found) break;
  }
  return rep;
}

bool verify_witness(const ReducedSurface& rs, const ProjectivePoint& pt) {
  const Fq field = Fq::extension(rs.p(), pt.ext_degree);
  bool leading = true;
  for (const auto& c : pt.coords) {
    if (c.p != rs.p() || c.n != pt.ext_degree) return false;
    if (leading && !c.is_zero()) {
      if (c != field.one()) return false; // canonical form
      leading = false;
    }
  }
  if (leading) return false; // all coordinates zero: not projective
  auto eval = [&](const std::vector<RTerm>& terms) {
    Fe acc = field.zero();
    for (const auto& t : terms) {
      Fe v = field.from_int(static_cast<std::int64_t>(t.c));
      for (unsigned i = 0; i < 4; ++i) v = field.mul(v, field.pow_u64(pt.coords[i], t.e[i]));
      acc = field.add(acc, v);
    }
    return acc.is_zero();
  };
  if (!eval(rs.terms())) return false;
  for (unsigned i = 0; i < 4; ++i)
    if (!eval(rs.partial(i))) return false;
  return true;
}

OrdinaryVerdict is_ordinary(const QuarticSurface& s, std::uint64_t p, std::uint32_t depth,
                            unsigned threads, std::uint64_t budget) {
  OrdinaryVerdict v;
  std::optional<ReducedSurface> rs;
  try {
    rs = reduce_mod_p(s, p);
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate) throw;
    v.verdict = ReductionKind::bad_reduction;
    v.reason = "degenerate";
    return v;
  }
  v.smoothness = singular_scan(*rs, depth, budget);
  if (v.smoothness->singular_found) {
    v.verdict = ReductionKind::bad_reduction;
    v.reason = "singular";
    return v;
  }
  const Fq field = Fq::prime_field(p);
  v.count = count_points_fast(*rs, field, threads, budget);
  if (boost::multiprecision::abs(v.count->s1) > BigInt(22) * p) {
    v.verdict = ReductionKind::bad_reduction;
    v.reason = "weil_violation";
    return v;
  }
  v.verdict = v.count->s1 % p != 0 ? ReductionKind::ordinary : ReductionKind::non_ordinary;
  return v;
}

} // namespace k3ord
