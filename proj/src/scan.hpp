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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quartic.hpp"

namespace k3ord {

enum class PrimeStatus { good_presumed, bad_singular, bad_weil_violation, degenerate, skipped_budget };

const char* to_string(PrimeStatus s);

struct ScanConfig {
  std::uint64_t p_min = 2;
  std::uint64_t p_max = 2;
  std::uint32_t depth = 2;
  unsigned workers = 1; // execution detail; not echoed into reports
  std::uint64_t budget = kDefaultBudget;
  bool use_naive_counter = false; // oracle path for fixture generation
};

struct PrimeRecord {
  std::uint64_t p = 0;
  PrimeStatus status = PrimeStatus::degenerate;
  std::optional<BigInt> count;
  std::optional<BigInt> s1;
  std::optional<std::uint64_t> a1_mod_p; // a_1 = -s_1 reduced into [0,p)
  std::optional<bool> ordinary;          // present iff good_presumed
};

struct ScanSummary {
  std::size_t total = 0;
  std::size_t by_status[5] = {0, 0, 0, 0, 0}; // indexed by PrimeStatus order
  std::size_t good = 0;
  std::size_t ordinary = 0;
  // ordinary / good as an exact fraction; absent when good = 0
  std::optional<std::pair<std::uint64_t, std::uint64_t>> fraction;
  std::vector<std::uint64_t> non_ordinary_good; // ascending
};

struct ScanReport {
  std::string surface_name;
  ScanConfig config;
  std::vector<PrimeRecord> records; // ascending p
  ScanSummary summary;
};

// One record per prime in [p_min, p_max].  Work is distributed over
// config.workers threads; each record is a pure function of (surface, p,
// depth, budget), and records come back sorted by p, so the report does not
// depend on the worker count.
ScanReport run_scan(const QuarticSurface& s, const ScanConfig& config);

ScanSummary summarize(const std::vector<PrimeRecord>& records);

} // namespace k3ord
