#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "support.hpp"
#include "tzeta/error.hpp"
#include "tzeta/germ.hpp"
#include "tzeta/io.hpp"

using namespace tzeta;
using namespace tzeta::testing;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Unsupported;
}

std::string with_message(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

const char* kOverlap = R"({
  "ambient_vf_dim": 1,
  "blocks": [
    {"res": {"grade": 0, "dim": 0, "euler": 1, "sign": "+", "weight": "0/1"},
     "gamma": {"ambient": 1, "cells": [
       {"signs": ["+"], "equalities": [], "strict": [{"coeffs": ["1/1"], "rhs": "0/1", "dir": ">"}, {"coeffs": ["1/1"], "rhs": "2/1", "dir": "<"}]},
       {"signs": ["+"], "equalities": [], "strict": [{"coeffs": ["1/1"], "rhs": "1/1", "dir": ">"}, {"coeffs": ["1/1"], "rhs": "3/1", "dir": "<"}]}
     ]}}
  ]
})";

const char* kMixed = R"({
  "ambient_vf_dim": 1,
  "blocks": [
    {"res": {"grade": 1, "dim": 0, "euler": 1, "sign": "+", "weight": "0/1"}, "gamma": {"ambient": 0, "cells": [{"signs": []}]}},
    {"res": {"grade": 2, "dim": 0, "euler": 1, "sign": "-", "weight": "1/2"}, "gamma": {"ambient": 0, "cells": [{"signs": []}]}}
  ]
})";

}  // namespace

TEST_CASE("round trip of compiled presentations") {
  BlockSum b = compile_monomial(parse_germ("x^2*y^3"), FiberSide::Plus);
  std::string text = dump_presentation(b);
  BlockSum back = parse_presentation(text);
  CHECK(back == b);
  CHECK(dump_presentation(back) == text);
  CHECK(text.find("\"weight\": \"0/1\"") != std::string::npos);
  CHECK(text.find("\"euler\": -1") != std::string::npos);
}

TEST_CASE("file round trip and declared q") {
  BlockSum b = compile_monomial(parse_germ("x*y*z"), FiberSide::Minus);
  b.q = Rat(1);
  auto path = (std::filesystem::temp_directory_path() / "tzeta_io_test.json").string();
  save_presentation(path, b);
  BlockSum back = load_presentation(path);
  std::remove(path.c_str());
  CHECK(back == b);
  REQUIRE(back.q);
  CHECK(*back.q == Rat(1));
}

TEST_CASE("loader errors") {
  CHECK(kind_of([] { parse_presentation(kOverlap); }) == ErrorKind::NonDisjointCells);
  CHECK(with_message([] { parse_presentation(kOverlap); }).find("blocks[0]") != std::string::npos);
  CHECK(with_message([] { parse_presentation(kOverlap); }).find("cells 0 and 1") != std::string::npos);
  // The mixed file is otherwise well formed: block 0 has grade 1, block 1 grade 2.
  CHECK(kind_of([] { parse_presentation(kMixed); }) == ErrorKind::GradeMismatch);
  CHECK(kind_of([] { parse_presentation("{not json"); }) == ErrorKind::SchemaViolation);
  CHECK(kind_of([] { parse_presentation(R"({"blocks": []})"); }) == ErrorKind::SchemaViolation);
  CHECK(kind_of([] {
          parse_presentation(R"({"ambient_vf_dim": 0, "blocks": [{"res": {"grade": 0, "dim": 0,
            "euler": 1, "sign": "*", "weight": "0/1"}, "gamma": {"ambient": 0, "cells": [{"signs": []}]}}]})");
        }) == ErrorKind::SchemaViolation);
  CHECK(with_message([] {
          parse_presentation(R"({"ambient_vf_dim": 1, "blocks": [{"res": {"grade": 0, "dim": 0,
            "euler": 1, "sign": "+", "weight": "0/1"}, "gamma": {"ambient": 1, "cells": [{"signs": ["+"],
            "equalities": [{"coeffs": ["1/0"], "rhs": "0/1"}]}]}}]})");
        }).find("cells[0].equalities[0].coeffs[0]") != std::string::npos);
}

TEST_CASE("Γ-set files") {
  GammaSet g{1, {box_cell({{Rat(0), Rat(1)}}), point_cell({Rat(1)})}};
  std::string text = dump_gamma_set(g);
  CHECK(parse_gamma_set(text) == g);
  CHECK(dump_gamma_set(parse_gamma_set(text)) == text);
}
