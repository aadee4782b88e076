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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <thread>

#include "cofsieve/cofsieve.h"

namespace {

// Takes ownership of a returned string.
std::string take(char* s) {
  std::string out = s ? s : "";
  cofs_string_free(s);
  return out;
}

std::string poly_text(cofs_sympoly* f, cofs_basis basis = COFS_BASIS_MONOMIAL) {
  cofs_sympoly* g = nullptr;
  REQUIRE(cofs_sympoly_convert(f, basis, &g) == COFS_OK);
  char* text = nullptr;
  REQUIRE(cofs_sympoly_format(g, COFS_FORMAT_TEXT, &text) == COFS_OK);
  cofs_sympoly_free(g);
  return take(text);
}

}  // namespace

TEST_CASE("E in both bases") {
  cofs_sympoly* f = nullptr;
  REQUIRE(cofs_macdonald_e("2,1", 3, 0, &f) == COFS_OK);
  CHECK(poly_text(f) == "m[2,1] + (2+q)*m[1,1,1]");
  CHECK(poly_text(f, COFS_BASIS_SCHUR) == "s[2,1] + q*s[1,1,1]");
  CHECK(cofs_sympoly_num_terms(f) == 2);
  char* json = nullptr;
  REQUIRE(cofs_sympoly_format(f, COFS_FORMAT_JSON, &json) == COFS_OK);
  CHECK(take(json) ==
        R"({"m":3,"basis":"monomial","terms":[{"key":[2,1],"coeff":"1"},{"key":[1,1,1],"coeff":"2+q"}]})");
  cofs_sympoly_free(f);

  REQUIRE(cofs_macdonald_e("4,4,3,1/3,1", 8, 1, &f) == COFS_OK);
  cofs_sympoly* s = nullptr;
  REQUIRE(cofs_sympoly_convert(f, COFS_BASIS_SCHUR, &s) == COFS_OK);
  CHECK(cofs_sympoly_num_terms(s) == 13);
  cofs_sympoly_free(s);
  cofs_sympoly_free(f);
}

TEST_CASE("errors map to status codes") {
  cofs_sympoly* f = nullptr;
  CHECK(cofs_macdonald_e("2,x", 3, 0, &f) == COFS_ERR_PARSE);
  CHECK(std::string(cofs_last_error()).find("ParseError") == 0);
  CHECK(f == nullptr);
  CHECK(cofs_macdonald_e("1,1,1", 2, 0, &f) == COFS_ERR_DOMAIN);
  CHECK(cofs_macdonald_e(nullptr, 2, 0, &f) == COFS_ERR_DOMAIN);
  CHECK(cofs_macdonald_e("1", 1, 0, nullptr) == COFS_ERR_DOMAIN);
  char* out = nullptr;
  CHECK(cofs_kostka_foulkes("2", "1", &out) == COFS_ERR_DOMAIN);
  CHECK(std::string(cofs_last_error()).find("SizeMismatch") == 0);
  // A later success clears the message.
  REQUIRE(cofs_kostka_foulkes("2", "1,1", &out) == COFS_OK);
  CHECK(take(out) == "q");
  CHECK(std::string(cofs_last_error()).empty());
  // Null handles are tolerated by the free functions and queries.
  cofs_sympoly_free(nullptr);
  cofs_report_free(nullptr);
  cofs_string_free(nullptr);
  CHECK(cofs_report_passed(nullptr) == 0);
}

TEST_CASE("the last error is per thread") {
  char* out = nullptr;
  CHECK(cofs_kostka_foulkes("2", "1", &out) == COFS_ERR_DOMAIN);
  std::string other;
  std::thread([&] {
    char* o = nullptr;
    CHECK(cofs_kostka_foulkes("4,2,1", "3,2,1,1", &o) == COFS_OK);
    cofs_string_free(o);
    other = cofs_last_error();
  }).join();
  CHECK(other.empty());
  CHECK(std::string(cofs_last_error()).find("SizeMismatch") == 0);
}

TEST_CASE("Kostka-Foulkes and LLT") {
  char* out = nullptr;
  REQUIRE(cofs_kostka_foulkes("4,2,1", "3,2,1,1", &out) == COFS_OK);
  CHECK(take(out) == "q + 2*q^2 + q^3");
  int mi = -1;
  REQUIRE(cofs_mininv("3/0,3/1,2/1,3/0", &mi) == COFS_OK);
  CHECK(mi == 7);
  CHECK(cofs_mininv("3/4", &mi) == COFS_ERR_PARSE);
  cofs_sympoly* f = nullptr;
  REQUIRE(cofs_llt("2/0,1/0", 3, &f) == COFS_OK);
  CHECK(poly_text(f, COFS_BASIS_SCHUR) == "s[2,1] + q*s[1,1,1]");
  cofs_sympoly_free(f);
  REQUIRE(cofs_transformed_hl("1,1", 2, &f) == COFS_OK);
  CHECK(poly_text(f, COFS_BASIS_SCHUR) == "q*s[2] + s[1,1]");
  cofs_sympoly_free(f);
}

TEST_CASE("reports") {
  cofs_report* r = nullptr;
  REQUIRE(cofs_csp_refined("2,1", 4, "8,2,2", &r) == COFS_OK);
  CHECK(cofs_report_passed(r) == 1);
  CHECK(cofs_report_applicable(r) == 1);
  char* text = nullptr;
  REQUIRE(cofs_report_format(r, COFS_FORMAT_TEXT, &text) == COFS_OK);
  const std::string t = take(text);
  CHECK(t.find("f(q) = 1+q+2*q^2+q^3+q^4") != std::string::npos);
  CHECK(t.find("4\t6\t6\tyes") != std::string::npos);
  CHECK(t.substr(t.size() - 5) == "PASS\n");
  char* json = nullptr;
  REQUIRE(cofs_report_format(r, COFS_FORMAT_JSON, &json) == COFS_OK);
  CHECK(take(json).find("\"pass\":true") != std::string::npos);
  CHECK(cofs_report_format(r, COFS_FORMAT_DOT, &json) == COFS_ERR_DOMAIN);
  cofs_report_free(r);

  REQUIRE(cofs_csp_main("1", 1, 5, &r) == COFS_OK);
  CHECK(cofs_report_passed(r) == 1);
  cofs_report_free(r);
  CHECK(cofs_csp_main("2,1", 4, 3, &r) == COFS_OK);  // 4λ always has blocks of 4 columns
  cofs_report_free(r);

  // σ that does not act nearly freely.
  REQUIRE(cofs_csp_sigma("1", 4, "(12)", &r) == COFS_OK);
  CHECK(cofs_report_applicable(r) == 0);
  cofs_report_free(r);

  REQUIRE(cofs_llt_theorem("4,4,3,1/3,1", 8, &r) == COFS_OK);
  CHECK(cofs_report_passed(r) == 1);
  cofs_report_free(r);
  CHECK(cofs_llt_theorem("1,1,1", 3, &r) == COFS_ERR_DOMAIN);
  REQUIRE(cofs_e_as_hl("3,2,1", 6, &r) == COFS_OK);
  CHECK(cofs_report_passed(r) == 1);
  cofs_report_free(r);
}

TEST_CASE("orbits, crystal and rsk") {
  char* out = nullptr;
  REQUIRE(cofs_orbits("2,1", 4, 3, "8,2,2", COFS_FORMAT_TEXT, &out) == COFS_OK);
  const std::string t = take(out);
  CHECK(t.find("orbit 1 (size 4)") != std::string::npos);
  CHECK(t.find("orbit 2 (size 2)") != std::string::npos);
  CHECK(t.find("2 orbits, 6 fillings") != std::string::npos);
  REQUIRE(cofs_orbits("1", 2, 2, nullptr, COFS_FORMAT_JSON, &out) == COFS_OK);
  CHECK(take(out).find("\"orbits\":[{\"size\":1") != std::string::npos);
  CHECK(cofs_orbits("1", 2, 2, "1,x", COFS_FORMAT_TEXT, &out) == COFS_ERR_PARSE);

  REQUIRE(cofs_crystal("2", 2, COFS_FORMAT_DOT, &out) == COFS_OK);
  CHECK(take(out) ==
        "digraph crystal {\n  n0 [label=\"11\"];\n  n1 [label=\"12\"];\n  n2 [label=\"21\"];\n"
        "  n3 [label=\"22\"];\n  n0 -> n2 [label=\"1\"];\n  n2 -> n3 [label=\"1\"];\n}\n");
  CHECK(cofs_crystal("2", 2, COFS_FORMAT_TEXT, &out) == COFS_ERR_DOMAIN);

  REQUIRE(cofs_rsk("1 1 2 3\n2 1 1 1\n", COFS_FORMAT_TEXT, &out) == COFS_OK);
  CHECK(take(out) == "P = 111/2\nQ = 123/1\n");
  REQUIRE(cofs_rsk(R"({"top":[1,1,2,3],"bottom":[2,1,1,1]})", COFS_FORMAT_JSON, &out) == COFS_OK);
  CHECK(take(out).rfind("{\"P\":{\"outer\":[3,1]", 0) == 0);
  CHECK(cofs_rsk("1 2\n1", COFS_FORMAT_TEXT, &out) != COFS_OK);
}

TEST_CASE("version") { CHECK(std::string(cofs_version()) == "1.0.0"); }
