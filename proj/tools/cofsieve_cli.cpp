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

// Command-line front end. Uses only the C interface.
//
// Exit codes: 0 success / PASS / NOT-APPLICABLE, 1 verification FAIL,
// 2 usage or parse error, 3 domain error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cofsieve/cofsieve.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

int status_exit(cofs_status s) {
  if (s == COFS_OK) return kExitPass;
  std::cerr << "error: " << cofs_last_error() << "\n";
  return s == COFS_ERR_PARSE ? kExitUsage : kExitDomain;
}

void print(const std::string& s) {
  std::cout << s;
  if (s.empty() || s.back() != '\n') std::cout << '\n';
}

// Prints an owned C string and releases it. The handle is read only after
// the call producing it has been evaluated.
int emit(cofs_status s, char** out) {
  if (s != COFS_OK) return status_exit(s);
  print(*out);
  cofs_string_free(*out);
  return kExitPass;
}

cofs_format parse_format(const std::string& name) {
  if (name == "json") return COFS_FORMAT_JSON;
  if (name == "dot") return COFS_FORMAT_DOT;
  return COFS_FORMAT_TEXT;
}

int emit_poly(cofs_status s, cofs_sympoly** out, const std::string& basis,
              const std::string& format) {
  if (s != COFS_OK) return status_exit(s);
  cofs_sympoly* f = *out;
  cofs_sympoly* shown = f;
  if (basis == "schur") {
    s = cofs_sympoly_convert(f, COFS_BASIS_SCHUR, &shown);
    cofs_sympoly_free(f);
    if (s != COFS_OK) return status_exit(s);
  }
  char* text = nullptr;
  s = cofs_sympoly_format(shown, parse_format(format), &text);
  cofs_sympoly_free(shown);
  return emit(s, &text);
}

int emit_report(cofs_status s, cofs_report** out, bool as_json) {
  if (s != COFS_OK) return status_exit(s);
  cofs_report* r = *out;
  char* text = nullptr;
  s = cofs_report_format(r, as_json ? COFS_FORMAT_JSON : COFS_FORMAT_TEXT, &text);
  // A report whose hypotheses fail is not a falsified statement.
  const bool passed = cofs_report_passed(r) || !cofs_report_applicable(r);
  cofs_report_free(r);
  if (s != COFS_OK) return status_exit(s);
  print(text);
  cofs_string_free(text);
  return passed ? kExitPass : kExitFail;
}

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("rsk", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coinversion-free fillings, cyclic sieving and related symmetric functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cofs_version()));

  int result = kExitPass;
  const std::vector<std::string> bases{"monomial", "schur"};

  // e
  std::string e_shape, e_basis = "monomial", e_format = "text";
  int e_m = 0;
  bool e_conj = false;
  auto* e = app.add_subcommand("e", "Print E_shape(x_1..x_m; q, 0)");
  e->add_option("shape", e_shape, "Partition or skew shape, e.g. 2,1 or 4,4,3,1/3,1")->required();
  e->add_option("--m", e_m, "Number of variables")->required()->check(CLI::PositiveNumber);
  e->add_option("--basis", e_basis)->check(CLI::IsMember(bases));
  e->add_option("--format", e_format)->check(CLI::IsMember({"text", "json"}));
  e->add_flag("--conjugate", e_conj, "Use the conjugate shape");
  e->callback([&] {
    cofs_sympoly* f = nullptr;
    result = emit_poly(cofs_macdonald_e(e_shape.c_str(), e_m, e_conj ? 1 : 0, &f), &f, e_basis, e_format);
  });

  // csp
  auto* csp = app.add_subcommand("csp", "Cyclic sieving checks");
  csp->require_subcommand(1);
  std::string c_shape, c_content, c_sigma;
  int c_n = 1, c_m = 0;
  bool c_json = false;
  auto common = [&](CLI::App* sub, bool needs_m) {
    sub->add_option("shape", c_shape, "Base shape")->required();
    sub->add_flag("--json", c_json, "JSON report");
    if (needs_m) sub->add_option("--m", c_m, "Number of values")->required()->check(CLI::PositiveNumber);
  };
  auto* c_main = csp->add_subcommand("main", "COF(n*lambda, m) under phi");
  common(c_main, true);
  c_main->add_option("--n", c_n)->required()->check(CLI::PositiveNumber);
  c_main->callback([&] {
    if (c_shape.find('/') != std::string::npos) {
      std::cerr << "error: 'csp main' takes a partition; use 'csp skew' for skew shapes\n";
      result = kExitUsage;
      return;
    }
    cofs_report* r = nullptr;
    result = emit_report(cofs_csp_main(c_shape.c_str(), c_n, c_m, &r), &r, c_json);
  });
  auto* c_skew = csp->add_subcommand("skew", "COF(n*lambda/n*mu, m) under phi");
  common(c_skew, true);
  c_skew->add_option("--n", c_n)->required()->check(CLI::PositiveNumber);
  c_skew->callback([&] {
    cofs_report* r = nullptr;
    result = emit_report(cofs_csp_main(c_shape.c_str(), c_n, c_m, &r), &r, c_json);
  });
  auto* c_ref = csp->add_subcommand("refined", "Fillings of n*lambda with a fixed content");
  common(c_ref, false);
  c_ref->add_option("--n", c_n)->required()->check(CLI::PositiveNumber);
  c_ref->add_option("--content", c_content, "Content, e.g. 8,2,2")->required();
  c_ref->callback([&] {
    cofs_report* r = nullptr;
    result = emit_report(cofs_csp_refined(c_shape.c_str(), c_n, c_content.c_str(), &r), &r, c_json);
  });
  auto* c_sig = csp->add_subcommand("sigma", "COF(lambda, m) under a permutation of the values");
  common(c_sig, true);
  c_sig->add_option("--sigma", c_sigma, "Permutation, e.g. (1234) or 2,3,4,1")->required();
  c_sig->callback([&] {
    cofs_report* r = nullptr;
    result = emit_report(cofs_csp_sigma(c_shape.c_str(), c_m, c_sigma.c_str(), &r), &r, c_json);
  });

  // orbits
  std::string o_shape, o_content, o_format = "text";
  int o_n = 1, o_m = 0;
  auto* orb = app.add_subcommand("orbits", "Orbit table of phi");
  orb->add_option("shape", o_shape, "Base shape; phi acts on COF(n*shape, m)")->required();
  orb->add_option("--n", o_n)->required()->check(CLI::PositiveNumber);
  orb->add_option("--m", o_m)->required()->check(CLI::PositiveNumber);
  orb->add_option("--content", o_content);
  orb->add_option("--format", o_format)->check(CLI::IsMember({"text", "json"}));
  orb->callback([&] {
    char* out = nullptr;
    const char* content = o_content.empty() ? nullptr : o_content.c_str();
    result = emit(cofs_orbits(o_shape.c_str(), o_n, o_m, content, parse_format(o_format), &out), &out);
  });

  // crystal
  std::string g_shape, g_format = "dot";
  int g_m = 0;
  auto* cry = app.add_subcommand("crystal", "Crystal graph on COF(shape, m)");
  cry->add_option("shape", g_shape)->required();
  cry->add_option("--m", g_m)->required()->check(CLI::PositiveNumber);
  cry->add_option("--format", g_format)->check(CLI::IsMember({"dot", "json"}));
  cry->callback([&] {
    char* out = nullptr;
    result = emit(cofs_crystal(g_shape.c_str(), g_m, parse_format(g_format), &out), &out);
  });

  // rsk
  std::string r_file, r_format = "text";
  auto* rsk = app.add_subcommand("rsk", "RSK of a Burge word (JSON or two lines; stdin by default)");
  rsk->add_option("file", r_file, "Input file, '-' for stdin");
  rsk->add_option("--format", r_format)->check(CLI::IsMember({"text", "json"}));
  rsk->callback([&] {
    const std::string word = read_all(r_file);
    char* out = nullptr;
    result = emit(cofs_rsk(word.c_str(), parse_format(r_format), &out), &out);
  });

  // kostka
  std::string k_lambda, k_mu;
  auto* kos = app.add_subcommand("kostka", "Kostka-Foulkes polynomial K_{lambda,mu}(q)");
  kos->add_option("lambda", k_lambda)->required();
  kos->add_option("mu", k_mu)->required();
  kos->callback([&] {
    char* out = nullptr;
    result = emit(cofs_kostka_foulkes(k_lambda.c_str(), k_mu.c_str(), &out), &out);
  });

  // llt
  std::string l_strips, l_basis = "schur", l_format = "text";
  int l_m = 0;
  bool l_only_mininv = false;
  auto* llt = app.add_subcommand("llt", "Vertical-strip LLT polynomial and mininv");
  llt->add_option("strips", l_strips, "Tuple of strips, e.g. 3/0,3/1,2/1,3/0")->required();
  llt->add_option("--m", l_m, "Number of variables")->check(CLI::PositiveNumber);
  llt->add_flag("--mininv", l_only_mininv, "Print only mininv");
  llt->add_option("--basis", l_basis)->check(CLI::IsMember(bases));
  llt->add_option("--format", l_format)->check(CLI::IsMember({"text", "json"}));
  llt->callback([&] {
    int mi = 0;
    if (cofs_status s = cofs_mininv(l_strips.c_str(), &mi); s != COFS_OK) {
      result = status_exit(s);
      return;
    }
    if (!l_only_mininv) {
      if (l_m < 1) {
        std::cerr << "error: --m is required unless --mininv is given\n";
        result = kExitUsage;
        return;
      }
      cofs_sympoly* f = nullptr;
      if (l_format == "text") std::cout << "LLT = ";
      result = emit_poly(cofs_llt(l_strips.c_str(), l_m, &f), &f, l_basis, l_format);
      if (result != kExitPass || l_format == "json") return;
    }
    std::cout << "mininv = " << mi << "\n";
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Check an identity on one input");
  ver->require_subcommand(1);
  std::string v_shape;
  int v_m = 0;
  bool v_json = false;
  auto* v_llt = ver->add_subcommand("llt", "E of the conjugate shape = q^-mininv LLT");
  auto* v_hl = ver->add_subcommand("hl", "E_lambda = omega Q'_lambda'");
  for (auto* sub : {v_llt, v_hl}) {
    sub->add_option("shape", v_shape)->required();
    sub->add_option("--m", v_m)->required()->check(CLI::PositiveNumber);
    sub->add_flag("--json", v_json);
  }
  v_llt->callback([&] {
    cofs_report* r = nullptr;
    result = emit_report(cofs_llt_theorem(v_shape.c_str(), v_m, &r), &r, v_json);
  });
  v_hl->callback([&] {
    cofs_report* r = nullptr;
    result = emit_report(cofs_e_as_hl(v_shape.c_str(), v_m, &r), &r, v_json);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitPass : kExitUsage;
  }
  std::cout.flush();
  return result;
}
