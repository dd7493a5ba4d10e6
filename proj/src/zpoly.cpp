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
#include "zpoly.hpp"

#include <map>
#include <mutex>

namespace k3ord {

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zderivative(const ZPoly& a) {
  ZPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned>(i));
  ztrim(r);
  return r;
}

BigInt zeval(const ZPoly& a, const BigInt& x) {
  BigInt v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * x + a[i];
  return v;
}

ZPoly scale_arg(const ZPoly& f, const BigInt& c) {
  ZPoly r = f;
  BigInt ck = 1;
  for (std::size_t i = 1; i < r.size(); ++i) {
    ck *= c;
    r[i] *= ck;
  }
  ztrim(r);
  return r;
}

QPoly to_q(const ZPoly& a) {
  QPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = BigRat(a[i]);
  return r;
}

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly qdivmod(QPoly a, const QPoly& b, QPoly* quot) {
  qtrim(a);
  if (b.empty()) fail(Errc::invalid_argument, "polynomial division by zero");
  const int db = static_cast<int>(b.size()) - 1;
  QPoly q;
  if (static_cast<int>(a.size()) - 1 >= db) q.assign(a.size() - b.size() + 1, BigRat(0));
  while (static_cast<int>(a.size()) - 1 >= db) {
    int shift = static_cast<int>(a.size()) - 1 - db;
    BigRat coef = a.back() / b.back();
    q[shift] = coef;
    for (int i = 0; i <= db; ++i) a[i + shift] -= coef * b[i];
    a.pop_back();
    qtrim(a);
  }
  if (quot) *quot = std::move(q);
  return a;
}

QPoly qgcd(QPoly a, QPoly b) {
  qtrim(a);
  qtrim(b);
  while (!b.empty()) {
    QPoly r = qdivmod(a, b, nullptr);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigRat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

QPoly qderivative(const QPoly& a) {
  QPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * static_cast<unsigned>(i));
  qtrim(r);
  return r;
}

QPoly squarefree_part_q(const QPoly& f) {
  QPoly qf = f;
  qtrim(qf);
  if (qf.size() <= 1) return qf;
  QPoly g = qgcd(qf, qderivative(qf));
  if (g.size() <= 1) return qf;
  QPoly quot;
  QPoly rem = qdivmod(qf, g, &quot);
  if (!rem.empty()) fail(Errc::internal, "gcd does not divide its argument");
  return quot;
}

QPoly squarefree_part(const ZPoly& f) { return squarefree_part_q(to_q(f)); }

bool exact_divide(const ZPoly& num, const ZPoly& den, ZPoly* quot) {
  if (den.empty()) return false;
  QPoly q;
  QPoly rem = qdivmod(to_q(num), to_q(den), &q);
  if (!rem.empty()) return false;
  ZPoly z(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (boost::multiprecision::denominator(q[i]) != 1) return false;
    z[i] = boost::multiprecision::numerator(q[i]);
  }
  ztrim(z);
  if (quot) *quot = std::move(z);
  return true;
}

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d) {
    if (n % d == 0) {
      result -= result / d;
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

const ZPoly& cyclotomic(std::uint32_t n) {
  if (n == 0) fail(Errc::invalid_argument, "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<std::uint32_t, ZPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  // Phi_d = (t^d - 1) / prod_{e | d, e < d} Phi_e; filling divisors of n in
  // ascending order keeps every proper divisor already cached.
  for (std::uint32_t d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    ZPoly num(d + 1, BigInt(0));
    num[0] = -1;
    num[d] = 1;
    for (std::uint32_t e = 1; e < d; ++e) {
      if (d % e != 0) continue;
      ZPoly q;
      if (!exact_divide(num, cache.at(e), &q)) fail(Errc::internal, "cyclotomic division failed");
      num = std::move(q);
    }
    cache.emplace(d, std::move(num));
  }
  return cache.at(n);
}

std::vector<std::uint32_t> admissible_orders(std::uint32_t max_phi) {
  std::vector<std::uint32_t> out;
  // phi(n) >= sqrt(n/2) for all n >= 1, so n <= 2*max_phi^2 suffices
  std::uint64_t bound = 2ull * max_phi * max_phi + 1;
  for (std::uint32_t n = 1; n <= bound; ++n)
    if (euler_phi(n) <= max_phi) out.push_back(n);
  return out;
}

} // namespace k3ord
