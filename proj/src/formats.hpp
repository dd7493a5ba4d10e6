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

#include <string>

#include "quartic.hpp"
#include "scan.hpp"
#include "weil.hpp"

namespace k3ord {

inline constexpr int kSchemaVersion = 1;

// Surface documents: { name, degree: 4, variables: 4,
//   terms: [ { exponents: [e0,e1,e2,e3], coefficient: "decimal" } ] }
QuarticSurface surface_from_json(const std::string& text);
QuarticSurface surface_from_file(const std::string& path);
std::string surface_to_json(const QuarticSurface& s);

// Polynomial documents: { p, r, coefficients: ["a0",...,"a22"] } for full
// input, or coefficients_prefix with k+1 entries for a known prefix.
FrobeniusPoly poly_from_json(const std::string& text);
FrobeniusPoly poly_from_file(const std::string& path);
std::string poly_to_json(const FrobeniusPoly& P);

// Power-sum documents: { p, r, sums: ["s1",...,"sk"] }
PowerSums power_sums_from_json(const std::string& text);
PowerSums power_sums_from_file(const std::string& path);
std::string power_sums_to_json(const PowerSums& ps);

// CSV: "# schema_version=N" comment, header p,status,count,s1,a1_mod_p,ordinary,
// then one row per record with empty cells for absent values.
std::string scan_report_csv(const ScanReport& rep);

// Structured summary; deliberately omits the worker count so reports are
// byte-identical however the scan was parallelized.
std::string scan_summary_json(const ScanReport& rep);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace k3ord
