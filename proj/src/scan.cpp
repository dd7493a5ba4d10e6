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
#include "scan.hpp"

#include <atomic>
#include <mutex>
#include <thread>

namespace k3ord {

const char* to_string(PrimeStatus s) {
  switch (s) {
    case PrimeStatus::good_presumed: return "good_presumed";
    case PrimeStatus::bad_singular: return "bad_singular";
    case PrimeStatus::bad_weil_violation: return "bad_weil_violation";
    case PrimeStatus::degenerate: return "degenerate";
    case PrimeStatus::skipped_budget: return "skipped_budget";
  }
  return "unknown";
}

namespace {

PrimeRecord scan_one(const QuarticSurface& s, std::uint64_t p, const ScanConfig& cfg) {
  PrimeRecord rec;
  rec.p = p;
  std::optional<ReducedSurface> rs;
  try {
    rs = reduce_mod_p(s, p);
  } catch (const Error& e) {
    if (e.code() != Errc::degenerate) throw;
    rec.status = PrimeStatus::degenerate;
    return rec;
  }
  try {
    const SmoothnessReport rep = singular_scan(*rs, cfg.depth, cfg.budget);
    if (rep.singular_found) {
      rec.status = PrimeStatus::bad_singular;
      return rec;
    }
    const Fq field = Fq::prime_field(p);
    const CountResult cr = cfg.use_naive_counter
                               ? count_points_naive(*rs, field, cfg.budget)
                               : count_points_fast(*rs, field, 1, cfg.budget);
    rec.count = cr.count;
    rec.s1 = cr.s1;
    BigInt a1 = (-cr.s1) % p;
    if (a1 < 0) a1 += p;
    rec.a1_mod_p = static_cast<std::uint64_t>(a1);
    if (boost::multiprecision::abs(cr.s1) > BigInt(22) * p) {
      rec.status = PrimeStatus::bad_weil_violation;
      return rec;
    }
    rec.status = PrimeStatus::good_presumed;
    rec.ordinary = cr.s1 % p != 0;
  } catch (const Error& e) {
    if (e.code() != Errc::budget) throw;
    rec = PrimeRecord{};
    rec.p = p;
    rec.status = PrimeStatus::skipped_budget;
  }
  return rec;
}

} // namespace

ScanSummary summarize(const std::vector<PrimeRecord>& records) {
  ScanSummary sum;
  sum.total = records.size();
  for (const auto& r : records) {
    sum.by_status[static_cast<int>(r.status)] += 1;
    if (r.status == PrimeStatus::good_presumed) {
      ++sum.good;
      if (r.ordinary.value_or(false))
        ++sum.ordinary;
      else
        sum.non_ordinary_good.push_back(r.p);
    }
  }
  if (sum.good > 0) sum.fraction = {{sum.ordinary, sum.good}};
  return sum;
}

ScanReport run_scan(const QuarticSurface& s, const ScanConfig& config) {
  if (config.p_min < 2 || config.p_min > config.p_max)
    fail(Errc::invalid_argument, "prime range requires 2 <= p_min <= p_max");
  if (config.depth < 1) fail(Errc::invalid_argument, "scan depth must be at least 1");
  if (config.workers < 1) fail(Errc::invalid_argument, "worker count must be at least 1");

  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = config.p_min; p <= config.p_max; ++p)
    if (is_prime_u64(p)) primes.push_back(p);

  ScanReport rep;
  rep.surface_name = s.name();
  rep.config = config;
  rep.records.resize(primes.size());

  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(config.workers, std::max<std::size_t>(primes.size(), 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < primes.size(); ++i) rep.records[i] = scan_one(s, primes[i], config);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= primes.size()) return;
        try {
          rep.records[i] = scan_one(s, primes[i], config);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
  }

  rep.summary = summarize(rep.records);
  return rep;
}

} // namespace k3ord
