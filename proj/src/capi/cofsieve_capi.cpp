// Copyright 2026 The cofsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cofsieve/cofsieve.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/error.hpp"
#include "crystal/crystal.hpp"
#include "csp/csp.hpp"
#include "fillings/filling.hpp"
#include "hall_littlewood/hall_littlewood.hpp"
#include "llt/llt.hpp"
#include "rsk_charge/rsk.hpp"
#include "symfunc/sympoly.hpp"

struct cofs_sympoly {
  cofsieve::SymPoly poly;
};

struct cofs_report {
  std::string text;
  std::string json;
  bool passed = false;
  bool applicable = true;
};

namespace {

using namespace cofsieve;
using json = nlohmann::ordered_json;

thread_local std::string last_error;

template <class F>
cofs_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return COFS_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return e.kind() == ErrorKind::Parse ? COFS_ERR_PARSE : COFS_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return COFS_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorKind::InvalidArgument, std::string(what) + " is NULL");
}

std::string arg(const char* s, const char* what) {
  need(s, what);
  return s;
}

// "q+2*q^2-q^3" -> "q + 2*q^2 - q^3"
std::string spaced(const std::string& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && (s[i] == '+' || s[i] == '-') && s[i - 1] != '^') {
      out += ' ';
      out += s[i];
      out += ' ';
    } else {
      out += s[i];
    }
  }
  return out;
}

cofs_report* make_report(const CspReport& r) {
  auto* out = new cofs_report;
  out->text = r.to_text();
  out->json = r.to_json();
  out->passed = r.pass();
  out->applicable = r.applicable;
  return out;
}

std::string orbits_text(const SkewShape& shape, int n, int m, const char* content,
                        const std::vector<std::vector<Filling>>& orbs) {
  std::string s = "orbits of phi on COF(" + shape.to_string() + ", m=" + std::to_string(m) + ")";
  if (content) s += " with content " + std::string(content);
  s += ", n=" + std::to_string(n) + "\n";
  std::size_t total = 0;
  for (std::size_t k = 0; k < orbs.size(); ++k) {
    total += orbs[k].size();
    s += "orbit " + std::to_string(k + 1) + " (size " + std::to_string(orbs[k].size()) + ")\n";
    for (const auto& f : orbs[k])
      s += "  " + f.to_string() + "  maj " + std::to_string(maj(f)) + "\n";
  }
  s += std::to_string(orbs.size()) + " orbits, " + std::to_string(total) + " fillings\n";
  return s;
}

std::string orbits_json(const SkewShape& shape, int n, int m, const char* content,
                        const std::vector<std::vector<Filling>>& orbs) {
  json j;
  j["shape"] = shape.to_string();
  j["n"] = n;
  j["m"] = m;
  if (content) j["content"] = Composition::parse(content).parts;
  j["orbits"] = json::array();
  for (const auto& orb : orbs) {
    json o;
    o["size"] = orb.size();
    o["fillings"] = json::array();
    for (const auto& f : orb) o["fillings"].push_back({{"filling", f.to_string()}, {"maj", maj(f)}});
    j["orbits"].push_back(o);
  }
  return j.dump();
}

}  // namespace

extern "C" {

const char* cofs_version(void) { return "1.0.0"; }

const char* cofs_last_error(void) { return last_error.c_str(); }

void cofs_string_free(char* s) { std::free(s); }

cofs_status cofs_macdonald_e(const char* shape, int m, int conjugate, cofs_sympoly** out) {
  return guarded([&] {
    need(out, "out");
    SkewShape sh = SkewShape::parse(arg(shape, "shape"));
    if (conjugate) sh = sh.conjugate();
    *out = new cofs_sympoly{macdonald_e(sh, m)};
  });
}

cofs_status cofs_llt(const char* strips, int m, cofs_sympoly** out) {
  return guarded([&] {
    need(out, "out");
    if (m < 1) fail(ErrorKind::InvalidArgument, "need at least one variable");
    *out = new cofs_sympoly{llt_poly(VStripTuple::parse(arg(strips, "strips")), m)};
  });
}

cofs_status cofs_transformed_hl(const char* mu, int m, cofs_sympoly** out) {
  return guarded([&] {
    need(out, "out");
    *out = new cofs_sympoly{transformed_hl(Partition::parse(arg(mu, "mu")), m)};
  });
}

cofs_status cofs_sympoly_convert(const cofs_sympoly* f, cofs_basis basis, cofs_sympoly** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    *out = new cofs_sympoly{basis == COFS_BASIS_SCHUR ? to_schur(f->poly) : from_schur(f->poly)};
  });
}

cofs_status cofs_sympoly_format(const cofs_sympoly* f, cofs_format format, char** out) {
  return guarded([&] {
    need(f, "f");
    need(out, "out");
    if (format == COFS_FORMAT_DOT) fail(ErrorKind::InvalidArgument, "no DOT form for polynomials");
    *out = dup(format == COFS_FORMAT_JSON ? f->poly.to_json() : f->poly.to_string());
  });
}

int cofs_sympoly_num_terms(const cofs_sympoly* f) {
  return f ? static_cast<int>(f->poly.terms().size()) : 0;
}

void cofs_sympoly_free(cofs_sympoly* f) { delete f; }

cofs_status cofs_kostka_foulkes(const char* lambda, const char* mu, char** out) {
  return guarded([&] {
    need(out, "out");
    const QPoly k = kostka_foulkes(Partition::parse(arg(lambda, "lambda")),
                                   Composition::parse(arg(mu, "mu")));
    *out = dup(spaced(k.to_string()));
  });
}

cofs_status cofs_mininv(const char* strips, int* out) {
  return guarded([&] {
    need(out, "out");
    *out = mininv(VStripTuple::parse(arg(strips, "strips")));
  });
}

cofs_status cofs_orbits(const char* base, int n, int m, const char* content, cofs_format format,
                        char** out) {
  return guarded([&] {
    need(out, "out");
    const SkewShape sh = SkewShape::parse(arg(base, "base")).scaled(n);
    std::optional<Composition> c;
    if (content) c = Composition::parse(content);
    const auto orbs = orbits(sh, n, m, c);
    if (format == COFS_FORMAT_DOT) fail(ErrorKind::InvalidArgument, "no DOT form for orbits");
    *out = dup(format == COFS_FORMAT_JSON ? orbits_json(sh, n, m, content, orbs)
                                          : orbits_text(sh, n, m, content, orbs));
  });
}

cofs_status cofs_crystal(const char* shape, int m, cofs_format format, char** out) {
  return guarded([&] {
    need(out, "out");
    const CrystalGraph g = crystal_graph(SkewShape::parse(arg(shape, "shape")), m);
    if (format == COFS_FORMAT_TEXT) fail(ErrorKind::InvalidArgument, "crystal graphs are DOT or JSON");
    *out = dup(format == COFS_FORMAT_JSON ? g.to_json() : g.to_dot());
  });
}

cofs_status cofs_rsk(const char* word, cofs_format format, char** out) {
  return guarded([&] {
    need(out, "out");
    const BurgeWord w = BurgeWord::parse(arg(word, "word"));
    const auto [p, q] = rsk(w);
    if (format == COFS_FORMAT_DOT) fail(ErrorKind::InvalidArgument, "no DOT form for tableaux");
    if (format == COFS_FORMAT_JSON) {
      json j;
      j["P"] = json::parse(p.to_json());
      j["Q"] = json::parse(q.to_json());
      *out = dup(j.dump());
    } else {
      *out = dup("P = " + p.to_string() + "\nQ = " + q.to_string() + "\n");
    }
  });
}

cofs_status cofs_csp_main(const char* base, int n, int m, cofs_report** out) {
  return guarded([&] {
    need(out, "out");
    *out = make_report(macdonald_csp_suite(SkewShape::parse(arg(base, "base")), n, m));
  });
}

cofs_status cofs_csp_refined(const char* base, int n, const char* content, cofs_report** out) {
  return guarded([&] {
    need(out, "out");
    *out = make_report(refined_csp_suite(SkewShape::parse(arg(base, "base")), n,
                                         Composition::parse(arg(content, "content"))));
  });
}

cofs_status cofs_csp_sigma(const char* shape, int m, const char* sigma, cofs_report** out) {
  return guarded([&] {
    need(out, "out");
    const SkewShape sh = SkewShape::parse(arg(shape, "shape"));
    *out = make_report(sigma_csp_suite(sh, m, parse_permutation(arg(sigma, "sigma"), m)));
  });
}

cofs_status cofs_llt_theorem(const char* shape, int m, cofs_report** out) {
  return guarded([&] {
    need(out, "out");
    const LltReport r = verify_llt_theorem(SkewShape::parse(arg(shape, "shape")), m);
    const SymPoly e = to_schur(r.e), l = to_schur(r.llt);
    auto* rep = new cofs_report;
    rep->passed = r.ok();
    rep->text = "shape " + r.shape.to_string() + "\nstrips " + r.strips.to_string() +
                "\nmininv = " + std::to_string(r.mininv) + "\nE = " + e.to_string() +
                "\nLLT = " + l.to_string() + "\ntheorem " + (r.theorem_ok ? "ok" : "FAILED") +
                "\ncharge " + (r.charge_ok ? "ok" : "FAILED") + "\n" +
                (r.ok() ? "PASS" : "FAIL") + "\n";
    json j;
    j["shape"] = r.shape.to_string();
    j["strips"] = r.strips.to_string();
    j["mininv"] = r.mininv;
    j["e"] = json::parse(e.to_json());
    j["llt"] = json::parse(l.to_json());
    j["theorem_ok"] = r.theorem_ok;
    j["charge_ok"] = r.charge_ok;
    j["pass"] = r.ok();
    rep->json = j.dump();
    *out = rep;
  });
}

cofs_status cofs_e_as_hl(const char* lambda, int m, cofs_report** out) {
  return guarded([&] {
    need(out, "out");
    const Partition lam = Partition::parse(arg(lambda, "lambda"));
    const bool ok = verify_e_as_hl(lam, m);
    const SymPoly e = to_schur(macdonald_e(SkewShape(lam), m));
    auto* rep = new cofs_report;
    rep->passed = ok;
    rep->text = "E = " + e.to_string() + "\n" + (ok ? "PASS" : "FAIL") + "\n";
    json j;
    j["lambda"] = lam.to_string();
    j["m"] = m;
    j["e"] = json::parse(e.to_json());
    j["pass"] = ok;
    rep->json = j.dump();
    *out = rep;
  });
}

int cofs_report_passed(const cofs_report* r) { return r && r->passed ? 1 : 0; }

int cofs_report_applicable(const cofs_report* r) { return r && r->applicable ? 1 : 0; }

cofs_status cofs_report_format(const cofs_report* r, cofs_format format, char** out) {
  return guarded([&] {
    need(r, "report");
    need(out, "out");
    if (format == COFS_FORMAT_DOT) fail(ErrorKind::InvalidArgument, "no DOT form for reports");
    *out = dup(format == COFS_FORMAT_JSON ? r->json : r->text);
  });
}

void cofs_report_free(cofs_report* r) { delete r; }

}  // extern "C"
