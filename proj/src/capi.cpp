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
#include "k3ord.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "formats.hpp"
#include "quartic.hpp"
#include "scan.hpp"
#include "weil.hpp"

#ifndef K3ORD_VERSION_STR
#define K3ORD_VERSION_STR "0.0.0"
#endif

struct k3ord_surface {
  k3ord::QuarticSurface impl;
};
struct k3ord_poly {
  k3ord::FrobeniusPoly impl;
};
struct k3ord_scan_report {
  k3ord::ScanReport impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

k3ord_status map_errc(k3ord::Errc c) {
  using k3ord::Errc;
  switch (c) {
    case Errc::invalid_argument: return K3ORD_ERR_INVALID_ARGUMENT;
    case Errc::parse: return K3ORD_ERR_PARSE;
    case Errc::degenerate: return K3ORD_ERR_DEGENERATE;
    case Errc::budget: return K3ORD_ERR_BUDGET;
    case Errc::io: return K3ORD_ERR_IO;
    case Errc::inconsistent: return K3ORD_ERR_INCONSISTENT;
    case Errc::internal: return K3ORD_ERR_INTERNAL;
  }
  return K3ORD_ERR_INTERNAL;
}

template <class F>
k3ord_status guarded(F&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const k3ord::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return K3ORD_ERR_INTERNAL;
  }
}

k3ord_status bad_argument(const char* msg) {
  g_last_error = msg;
  return K3ORD_ERR_INVALID_ARGUMENT;
}

std::uint64_t effective_budget(std::uint64_t budget) {
  return budget ? budget : k3ord::kDefaultBudget;
}

unsigned effective_threads(unsigned threads) { return threads ? threads : 1; }

std::string coeff_list(const std::vector<k3ord::BigInt>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += a[i].str();
  }
  return out;
}

void append_reconstruction(std::ostringstream& kv, const k3ord::PowerSums& ps) {
  if (ps.s.size() < 11) {
    kv << "reconstruction=unattempted\n";
    return;
  }
  std::optional<k3ord::BigInt> s12;
  if (ps.s.size() >= 12) s12 = ps.s[11];
  try {
    const k3ord::Reconstruction rec = k3ord::reconstruct_from_power_sums(ps, s12);
    kv << "reconstruction=" << (rec.ambiguous ? "ambiguous" : "ok") << "\n";
    kv << "candidates=" << rec.candidates.size() << "\n";
    for (std::size_t i = 0; i < rec.candidates.size(); ++i)
      kv << "candidate_" << (i + 1) << "=" << coeff_list(rec.candidates[i].a) << "\n";
  } catch (const k3ord::Error& e) {
    kv << "reconstruction=failed\n";
    kv << "reconstruction_error=" << e.what() << "\n";
  }
}

std::string zeta_kv(const k3ord::PowerSums& ps) {
  std::ostringstream kv;
  kv << "p=" << ps.p << "\n";
  kv << "r=" << ps.r << "\n";
  kv << "q=" << ps.q.str() << "\n";
  kv << "max_n=" << ps.s.size() << "\n";
  for (std::size_t n = 1; n <= ps.s.size(); ++n) kv << "s" << n << "=" << ps.s[n - 1].str() << "\n";
  append_reconstruction(kv, ps);
  return kv.str();
}

} // namespace

extern "C" {

const char* k3ord_version(void) { return K3ORD_VERSION_STR; }

const char* k3ord_status_name(k3ord_status status) {
  switch (status) {
    case K3ORD_OK: return "ok";
    case K3ORD_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case K3ORD_ERR_PARSE: return "parse_error";
    case K3ORD_ERR_DEGENERATE: return "degenerate_reduction";
    case K3ORD_ERR_BUDGET: return "budget_exceeded";
    case K3ORD_ERR_IO: return "io_error";
    case K3ORD_ERR_INCONSISTENT: return "inconsistent_input";
    case K3ORD_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* k3ord_last_error(void) { return g_last_error.c_str(); }

void k3ord_string_free(char* text) { std::free(text); }

k3ord_status k3ord_surface_from_file(const char* path, k3ord_surface** out) {
  if (!path || !out) return bad_argument("path and out must be non-null");
  return guarded([&] {
    *out = new k3ord_surface{k3ord::surface_from_file(path)};
    return K3ORD_OK;
  });
}

k3ord_status k3ord_surface_from_json(const char* text, k3ord_surface** out) {
  if (!text || !out) return bad_argument("text and out must be non-null");
  return guarded([&] {
    *out = new k3ord_surface{k3ord::surface_from_json(text)};
    return K3ORD_OK;
  });
}

const char* k3ord_surface_name(const k3ord_surface* s) {
  return s ? s->impl.name().c_str() : "";
}

void k3ord_surface_free(k3ord_surface* s) { delete s; }

k3ord_status k3ord_count_points(const k3ord_surface* s, uint64_t p, uint32_t n, unsigned threads,
                                uint64_t budget, char** out) {
  if (!s || !out) return bad_argument("surface and out must be non-null");
  return guarded([&] {
    const k3ord::ReducedSurface rs = k3ord::reduce_mod_p(s->impl, p);
    const k3ord::Fq field = k3ord::Fq::extension(p, n);
    const k3ord::CountResult cr =
        k3ord::count_points_fast(rs, field, effective_threads(threads), effective_budget(budget));
    std::ostringstream kv;
    kv << "q=" << cr.q.str() << "\n";
    kv << "count=" << cr.count.str() << "\n";
    kv << "s1=" << cr.s1.str() << "\n";
    if (n == 1) {
      k3ord::BigInt a1 = -cr.s1;
      k3ord::BigInt a1m = a1 % p;
      if (a1m < 0) a1m += p;
      kv << "a1=" << a1.str() << "\n";
      kv << "a1_mod_p=" << a1m.str() << "\n";
    }
    *out = dup_string(kv.str());
    return K3ORD_OK;
  });
}

k3ord_status k3ord_is_ordinary(const k3ord_surface* s, uint64_t p, uint32_t depth,
                               unsigned threads, uint64_t budget, k3ord_verdict* verdict,
                               char** out) {
  if (!s || !verdict || !out) return bad_argument("surface, verdict and out must be non-null");
  return guarded([&] {
    const k3ord::OrdinaryVerdict v = k3ord::is_ordinary(
        s->impl, p, depth ? depth : 2, effective_threads(threads), effective_budget(budget));
    switch (v.verdict) {
      case k3ord::ReductionKind::ordinary: *verdict = K3ORD_VERDICT_ORDINARY; break;
      case k3ord::ReductionKind::non_ordinary: *verdict = K3ORD_VERDICT_NON_ORDINARY; break;
      case k3ord::ReductionKind::bad_reduction: *verdict = K3ORD_VERDICT_BAD_REDUCTION; break;
    }
    std::ostringstream kv;
    kv << "verdict="
       << (v.verdict == k3ord::ReductionKind::ordinary
               ? "ordinary"
               : v.verdict == k3ord::ReductionKind::non_ordinary ? "non_ordinary"
                                                                 : "bad_reduction")
       << "\n";
    if (!v.reason.empty()) kv << "reason=" << v.reason << "\n";
    if (v.smoothness) {
      kv << "depth_scanned=" << v.smoothness->depth_scanned << "\n";
      if (v.smoothness->witness) {
        const auto& w = *v.smoothness->witness;
        const k3ord::Fq field = k3ord::Fq::extension(p, w.ext_degree);
        kv << "witness_degree=" << w.ext_degree << "\n";
        kv << "witness_indices=" << field.index_of(w.coords[0]) << ","
           << field.index_of(w.coords[1]) << "," << field.index_of(w.coords[2]) << ","
           << field.index_of(w.coords[3]) << "\n";
      }
    }
    if (v.count) {
      kv << "count=" << v.count->count.str() << "\n";
      kv << "s1=" << v.count->s1.str() << "\n";
      k3ord::BigInt a1m = -v.count->s1 % p;
      if (a1m < 0) a1m += p;
      kv << "a1_mod_p=" << a1m.str() << "\n";
    }
    *out = dup_string(kv.str());
    return K3ORD_OK;
  });
}

k3ord_status k3ord_zeta(const k3ord_surface* s, uint64_t p, uint32_t max_n, unsigned threads,
                        uint64_t budget, char** out) {
  if (!s || !out) return bad_argument("surface and out must be non-null");
  if (max_n < 1 || max_n > 16) return bad_argument("max_n must be in [1,16]");
  return guarded([&] {
    const k3ord::ReducedSurface rs = k3ord::reduce_mod_p(s->impl, p);
    std::vector<k3ord::CountResult> counts;
    for (std::uint32_t n = 1; n <= max_n; ++n) {
      const k3ord::Fq field = k3ord::Fq::extension(p, n);
      counts.push_back(k3ord::count_points_fast(rs, field, effective_threads(threads),
                                                effective_budget(budget)));
    }
    const k3ord::PowerSums ps = k3ord::power_sums_from_counts(counts, p, 1);
    *out = dup_string(zeta_kv(ps));
    return K3ORD_OK;
  });
}

k3ord_status k3ord_zeta_from_sums(const char* sums_json, char** out) {
  if (!sums_json || !out) return bad_argument("sums_json and out must be non-null");
  return guarded([&] {
    const k3ord::PowerSums ps = k3ord::power_sums_from_json(sums_json);
    *out = dup_string(zeta_kv(ps));
    return K3ORD_OK;
  });
}

k3ord_status k3ord_scan_run(const k3ord_surface* s, uint64_t p_min, uint64_t p_max, uint32_t depth,
                            unsigned workers, uint64_t budget, int use_naive_counter,
                            k3ord_scan_report** out) {
  if (!s || !out) return bad_argument("surface and out must be non-null");
  return guarded([&] {
    k3ord::ScanConfig cfg;
    cfg.p_min = p_min;
    cfg.p_max = p_max;
    cfg.depth = depth ? depth : 2;
    cfg.workers = effective_threads(workers);
    cfg.budget = effective_budget(budget);
    cfg.use_naive_counter = use_naive_counter != 0;
    *out = new k3ord_scan_report{k3ord::run_scan(s->impl, cfg)};
    return K3ORD_OK;
  });
}

k3ord_status k3ord_scan_report_csv(const k3ord_scan_report* rep, char** out) {
  if (!rep || !out) return bad_argument("report and out must be non-null");
  return guarded([&] {
    *out = dup_string(k3ord::scan_report_csv(rep->impl));
    return K3ORD_OK;
  });
}

k3ord_status k3ord_scan_report_summary(const k3ord_scan_report* rep, char** out) {
  if (!rep || !out) return bad_argument("report and out must be non-null");
  return guarded([&] {
    *out = dup_string(k3ord::scan_summary_json(rep->impl));
    return K3ORD_OK;
  });
}

void k3ord_scan_report_free(k3ord_scan_report* rep) { delete rep; }

k3ord_status k3ord_poly_from_file(const char* path, k3ord_poly** out) {
  if (!path || !out) return bad_argument("path and out must be non-null");
  return guarded([&] {
    *out = new k3ord_poly{k3ord::poly_from_file(path)};
    return K3ORD_OK;
  });
}

k3ord_status k3ord_poly_from_json(const char* text, k3ord_poly** out) {
  if (!text || !out) return bad_argument("text and out must be non-null");
  return guarded([&] {
    *out = new k3ord_poly{k3ord::poly_from_json(text)};
    return K3ORD_OK;
  });
}

int k3ord_poly_is_partial(const k3ord_poly* P) { return P && P->impl.is_partial() ? 1 : 0; }

void k3ord_poly_free(k3ord_poly* P) { delete P; }

k3ord_status k3ord_validate(const k3ord_poly* P, int* pass, char** out) {
  if (!P || !pass || !out) return bad_argument("poly, pass and out must be non-null");
  return guarded([&] {
    const k3ord::ValidationReport rep = k3ord::validate_weil(P->impl);
    std::ostringstream kv;
    for (const auto& chk : rep.checks) {
      kv << chk.clause << "=" << (chk.pass ? "pass" : "fail") << "\n";
      kv << chk.clause << "_detail=" << chk.detail << "\n";
    }
    kv << "epsilon=" << rep.epsilon << "\n";
    kv << "structural=" << (rep.structural_pass ? "true" : "false") << "\n";
    kv << "numeric=" << (rep.numeric_pass ? "true" : "false") << "\n";
    kv << "numerical_root_failure=" << (rep.numerical_root_failure ? "true" : "false") << "\n";
    kv << "pass=" << (rep.pass ? "true" : "false") << "\n";
    *pass = rep.pass ? 1 : 0;
    *out = dup_string(kv.str());
    return K3ORD_OK;
  });
}

k3ord_status k3ord_newton_polygon(const k3ord_poly* P, char** out) {
  if (!P || !out) return bad_argument("poly and out must be non-null");
  return guarded([&] {
    const k3ord::NewtonPolygon np = k3ord::newton_polygon(P->impl);
    std::ostringstream kv;
    kv << "p=" << np.p << "\n";
    kv << "r=" << np.r << "\n";
    kv << "points=";
    for (std::size_t i = 0; i < np.points.size(); ++i) {
      if (i) kv << ",";
      kv << np.points[i].first << ":" << np.points[i].second.str();
    }
    kv << "\nvertices=";
    for (std::size_t i = 0; i < np.vertices.size(); ++i) {
      if (i) kv << ",";
      kv << np.vertices[i].first << ":" << np.vertices[i].second.str();
    }
    kv << "\nslopes=";
    k3ord::Rational sum(0);
    for (std::size_t i = 0; i < np.slopes.size(); ++i) {
      if (i) kv << ",";
      kv << np.slopes[i].str();
      sum = sum + np.slopes[i];
    }
    kv << "\nslope_sum=" << sum.str() << "\n";
    *out = dup_string(kv.str());
    return K3ORD_OK;
  });
}

k3ord_status k3ord_classify(const k3ord_poly* P, k3ord_height_kind* kind, unsigned* h,
                            char** out) {
  if (!P || !kind || !h || !out) return bad_argument("poly, kind, h and out must be non-null");
  return guarded([&] {
    std::ostringstream kv;
    *h = 0;
    if (P->impl.is_partial()) {
      const std::vector<unsigned> cands =
          k3ord::height_candidates_partial(P->impl.a, P->impl.p, P->impl.r);
      *kind = K3ORD_HEIGHT_CANDIDATES;
      kv << "class=candidates\n";
      kv << "k=" << (P->impl.a.size() - 1) << "\n";
      kv << "candidates=";
      for (std::size_t i = 0; i < cands.size(); ++i) {
        if (i) kv << ",";
        if (cands[i] == k3ord::kInfiniteHeight)
          kv << "infinity";
        else
          kv << cands[i];
      }
      kv << "\n";
      *out = dup_string(kv.str());
      return K3ORD_OK;
    }
    const k3ord::HeightClass hc = k3ord::classify_height(k3ord::newton_polygon(P->impl));
    switch (hc.kind) {
      case k3ord::HeightClass::Kind::ordinary:
        *kind = K3ORD_HEIGHT_ORDINARY;
        *h = hc.h;
        kv << "class=ordinary\nheight=1\n";
        break;
      case k3ord::HeightClass::Kind::finite:
        *kind = K3ORD_HEIGHT_FINITE;
        *h = hc.h;
        kv << "class=finite\nheight=" << hc.h << "\n";
        break;
      case k3ord::HeightClass::Kind::supersingular:
        *kind = K3ORD_HEIGHT_SUPERSINGULAR;
        kv << "class=supersingular\nheight=infinity\n";
        break;
      case k3ord::HeightClass::Kind::invalid:
        *kind = K3ORD_HEIGHT_INVALID;
        kv << "class=invalid\nreason=" << hc.reason << "\n";
        break;
    }
    *out = dup_string(kv.str());
    return K3ORD_OK;
  });
}

k3ord_status k3ord_supersingular(const k3ord_poly* P, int* yes, char** out) {
  if (!P || !yes || !out) return bad_argument("poly, yes and out must be non-null");
  return guarded([&] {
    const k3ord::SupersingularResult res = k3ord::supersingular_exact(P->impl);
    std::ostringstream kv;
    kv << "supersingular=" << (res.yes ? "true" : "false") << "\n";
    if (res.yes) {
      kv << "orders=";
      for (std::size_t i = 0; i < res.orders.size(); ++i) {
        if (i) kv << ",";
        kv << res.orders[i].first << "^" << res.orders[i].second;
      }
      kv << "\n";
    } else {
      if (res.failing_index >= 0) kv << "failing_index=" << res.failing_index << "\n";
      kv << "reason=" << res.reason << "\n";
    }
    *yes = res.yes ? 1 : 0;
    *out = dup_string(kv.str());
    return K3ORD_OK;
  });
}

k3ord_status k3ord_ogus_rigidity(const k3ord_poly* P, uint64_t p, uint64_t ell,
                                 int* hypotheses_hold, int* conclusion_holds, char** out) {
  if (!P || !hypotheses_hold || !conclusion_holds || !out)
    return bad_argument("poly, outputs must be non-null");
  return guarded([&] {
    const k3ord::Ogus2Verdict v = k3ord::ogus2_check(P->impl.a, p, ell);
    static const char* names[5] = {"i", "ii", "iii", "iv", "v"};
    std::ostringstream kv;
    for (int i = 0; i < 5; ++i)
      kv << "hypothesis_" << names[i] << "=" << (v.hypotheses[i] ? "pass" : "fail") << "\n";
    kv << "hypotheses=" << (v.all_hypotheses() ? "pass" : "fail") << "\n";
    kv << "conclusion=" << (v.conclusion_holds ? "true" : "false") << "\n";
    *hypotheses_hold = v.all_hypotheses() ? 1 : 0;
    *conclusion_holds = v.conclusion_holds ? 1 : 0;
    *out = dup_string(kv.str());
    return K3ORD_OK;
  });
}

} // extern "C"
