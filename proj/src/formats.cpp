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
#include "formats.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace k3ord {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

BigInt parse_bigint(const json& v, const std::string& what) {
  try {
    if (v.is_string()) return BigInt(v.get<std::string>());
    if (v.is_number_unsigned()) return BigInt(v.get<std::uint64_t>());
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
  } catch (const std::exception&) {
  }
  fail(Errc::parse, what + " must be an integer written as a decimal string");
}

std::uint64_t parse_u64(const json& v, const std::string& what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0)
    return static_cast<std::uint64_t>(v.get<std::int64_t>());
  if (v.is_string()) {
    BigInt b = parse_bigint(v, what);
    if (b >= 0 && b <= BigInt(~0ull)) return static_cast<std::uint64_t>(b);
  }
  fail(Errc::parse, what + " must be a nonnegative integer");
}

json parse_document(const std::string& text, const char* kind) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::parse, std::string(kind) + " document is not valid JSON: " + e.what());
  }
}

} // namespace

QuarticSurface surface_from_json(const std::string& text) {
  const json doc = parse_document(text, "surface");
  try {
    if (!doc.is_object()) fail(Errc::parse, "surface document must be an object");
    const std::string name = doc.value("name", std::string("unnamed"));
    if (parse_u64(doc.at("degree"), "degree") != 4)
      fail(Errc::parse, "surface degree must be 4");
    if (parse_u64(doc.at("variables"), "variables") != 4)
      fail(Errc::parse, "surface variable count must be 4");
    const json& jterms = doc.at("terms");
    if (!jterms.is_array() || jterms.empty())
      fail(Errc::parse, "terms must be a nonempty list");
    std::vector<QuarticTerm> terms;
    for (const json& jt : jterms) {
      const json& je = jt.at("exponents");
      if (!je.is_array() || je.size() != 4)
        fail(Errc::parse, "exponents must be a list of 4 entries");
      QuarticTerm t;
      for (unsigned i = 0; i < 4; ++i) {
        std::uint64_t e = parse_u64(je[i], "exponent");
        if (e > 4) fail(Errc::parse, "exponent exceeds the degree 4");
        t.e[i] = static_cast<std::uint8_t>(e);
      }
      t.coeff = parse_bigint(jt.at("coefficient"), "coefficient");
      terms.push_back(std::move(t));
    }
    return QuarticSurface(name, std::move(terms));
  } catch (const json::exception& e) {
    fail(Errc::parse, std::string("malformed surface document: ") + e.what());
  }
}

QuarticSurface surface_from_file(const std::string& path) {
  return surface_from_json(read_text_file(path));
}

std::string surface_to_json(const QuarticSurface& s) {
  ojson doc;
  doc["name"] = s.name();
  doc["degree"] = 4;
  doc["variables"] = 4;
  doc["terms"] = ojson::array();
  for (const auto& t : s.terms()) {
    ojson jt;
    jt["exponents"] = {t.e[0], t.e[1], t.e[2], t.e[3]};
    jt["coefficient"] = t.coeff.str();
    doc["terms"].push_back(std::move(jt));
  }
  return doc.dump(2) + "\n";
}

FrobeniusPoly poly_from_json(const std::string& text) {
  const json doc = parse_document(text, "polynomial");
  try {
    if (!doc.is_object()) fail(Errc::parse, "polynomial document must be an object");
    const std::uint64_t p = parse_u64(doc.at("p"), "p");
    const std::uint64_t r = parse_u64(doc.at("r"), "r");
    if (r < 1 || r > 0xffffffffu) fail(Errc::parse, "r out of range");
    const bool full = doc.contains("coefficients");
    const bool prefix = doc.contains("coefficients_prefix");
    if (full == prefix)
      fail(Errc::parse, "exactly one of coefficients / coefficients_prefix is required");
    const json& jc = full ? doc.at("coefficients") : doc.at("coefficients_prefix");
    if (!jc.is_array()) fail(Errc::parse, "coefficient list must be an array");
    if (full && jc.size() != 23) fail(Errc::parse, "coefficients must hold exactly 23 entries");
    if (prefix && (jc.empty() || jc.size() > 22))
      fail(Errc::parse, "coefficients_prefix must hold 1 to 22 entries");
    std::vector<BigInt> a;
    for (const json& v : jc) a.push_back(parse_bigint(v, "coefficient"));
    return frobenius_from_coeffs(p, static_cast<std::uint32_t>(r), std::move(a));
  } catch (const json::exception& e) {
    fail(Errc::parse, std::string("malformed polynomial document: ") + e.what());
  }
}

FrobeniusPoly poly_from_file(const std::string& path) {
  return poly_from_json(read_text_file(path));
}

std::string poly_to_json(const FrobeniusPoly& P) {
  ojson doc;
  doc["p"] = P.p;
  doc["r"] = P.r;
  ojson coeffs = ojson::array();
  for (const auto& c : P.a) coeffs.push_back(c.str());
  doc[P.is_partial() ? "coefficients_prefix" : "coefficients"] = std::move(coeffs);
  return doc.dump(2) + "\n";
}

PowerSums power_sums_from_json(const std::string& text) {
  const json doc = parse_document(text, "power-sum");
  try {
    if (!doc.is_object()) fail(Errc::parse, "power-sum document must be an object");
    PowerSums ps;
    ps.p = parse_u64(doc.at("p"), "p");
    if (!is_prime_u64(ps.p)) fail(Errc::parse, "p must be prime");
    const std::uint64_t r = parse_u64(doc.at("r"), "r");
    if (r < 1 || r > 0xffffffffu) fail(Errc::parse, "r out of range");
    ps.r = static_cast<std::uint32_t>(r);
    ps.q = boost::multiprecision::pow(BigInt(ps.p), ps.r);
    const json& js = doc.at("sums");
    if (!js.is_array() || js.empty()) fail(Errc::parse, "sums must be a nonempty list");
    for (const json& v : js) ps.s.push_back(parse_bigint(v, "power sum"));
    return ps;
  } catch (const json::exception& e) {
    fail(Errc::parse, std::string("malformed power-sum document: ") + e.what());
  }
}

PowerSums power_sums_from_file(const std::string& path) {
  return power_sums_from_json(read_text_file(path));
}

std::string power_sums_to_json(const PowerSums& ps) {
  ojson doc;
  doc["p"] = ps.p;
  doc["r"] = ps.r;
  ojson sums = ojson::array();
  for (const auto& s : ps.s) sums.push_back(s.str());
  doc["sums"] = std::move(sums);
  return doc.dump(2) + "\n";
}

std::string scan_report_csv(const ScanReport& rep) {
  std::ostringstream out;
  out << "# schema_version=" << kSchemaVersion << "\n";
  out << "p,status,count,s1,a1_mod_p,ordinary\n";
  for (const auto& r : rep.records) {
    out << r.p << ',' << to_string(r.status) << ',';
    if (r.count) out << r.count->str();
    out << ',';
    if (r.s1) out << r.s1->str();
    out << ',';
    if (r.a1_mod_p) out << *r.a1_mod_p;
    out << ',';
    if (r.ordinary) out << (*r.ordinary ? "true" : "false");
    out << '\n';
  }
  return out.str();
}

std::string scan_summary_json(const ScanReport& rep) {
  ojson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["surface"] = rep.surface_name;
  doc["p_min"] = rep.config.p_min;
  doc["p_max"] = rep.config.p_max;
  doc["depth"] = rep.config.depth;
  doc["budget"] = rep.config.budget;
  doc["records"] = rep.summary.total;
  ojson statuses;
  for (int i = 0; i < 5; ++i)
    statuses[to_string(static_cast<PrimeStatus>(i))] = rep.summary.by_status[i];
  doc["statuses"] = std::move(statuses);
  if (rep.summary.fraction) {
    const auto [num, den] = *rep.summary.fraction;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(num) / static_cast<double>(den));
    ojson frac;
    frac["numerator"] = num;
    frac["denominator"] = den;
    frac["decimal"] = buf;
    doc["ordinary_fraction"] = std::move(frac);
  } else {
    doc["ordinary_fraction"] = nullptr;
  }
  doc["non_ordinary_good"] = rep.summary.non_ordinary_good;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) fail(Errc::io, "read error on '" + path + "'");
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(Errc::io, "cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) fail(Errc::io, "write error on '" + path + "'");
}

} // namespace k3ord
