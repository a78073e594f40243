#include <doctest.h>
#include <json.hpp>

#include <string>

#include "liefam/liefam.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  liefam_string_free(s);
  return out;
}

const char* kNonCommuting = R"({
  "version": 1, "n": 2,
  "basis": [[[0, 1], [0, 0]], [[0, 0], [1, 0]], [[1, 0], [0, -1]]],
  "involutions": {
    "theta": {"form": "map", "transpose": true, "sign": -1},
    "sigma": {"form": "conjugator", "antilinear": true, "matrix": [[1, 1], [0, -1]]}
  }
})";

}  // namespace

TEST_CASE("version and catalog") {
  CHECK(std::string(liefam_version()) == "0.1.0");
  char* out = nullptr;
  REQUIRE(liefam_catalog_json(&out) == LIEFAM_OK);
  const json j = json::parse(take(out));
  REQUIRE(j.is_array());
  bool found = false;
  for (const auto& e : j) found = found || e["name"] == "sl2-split-compact";
  CHECK(found);
}

TEST_CASE("verify through the C interface") {
  liefam_document* doc = nullptr;
  REQUIRE(liefam_document_from_catalog("sl2-split-compact", &doc) == LIEFAM_OK);
  char* report = nullptr;
  int passed = -1;
  REQUIRE(liefam_verify(doc, LIEFAM_MODE_ALGEBRA, 1, R"(["1:1", "-1:1", "0:1"])", &report, &passed) == LIEFAM_OK);
  CHECK(passed == 1);
  const json j = json::parse(take(report));
  CHECK(j["sample"].size() == 3);
  CHECK(j["summary"]["status"] == "pass");

  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(liefam_verify(doc, LIEFAM_MODE_ALL, 5, nullptr, &a, nullptr) == LIEFAM_OK);
  REQUIRE(liefam_verify(doc, LIEFAM_MODE_ALL, 5, nullptr, &b, nullptr) == LIEFAM_OK);
  CHECK(take(a) == take(b));

  CHECK(liefam_verify(doc, LIEFAM_MODE_ALL, 1, "[\"0:0\"]", &report, &passed) == LIEFAM_INPUT_ERROR);
  CHECK(liefam_verify(doc, LIEFAM_MODE_ALL, 1, "not json", &report, &passed) == LIEFAM_INPUT_ERROR);
  CHECK(liefam_verify(doc, static_cast<liefam_mode>(9), 1, nullptr, &report, &passed) == LIEFAM_INPUT_ERROR);
  liefam_document_free(doc);
}

TEST_CASE("fiber reports") {
  liefam_document* doc = nullptr;
  REQUIRE(liefam_document_from_catalog("sl2-split-compact", &doc) == LIEFAM_OK);
  char* out = nullptr;
  REQUIRE(liefam_fiber(doc, "4:1", &out) == LIEFAM_OK);
  CHECK(json::parse(take(out))["witness"]["status"] == "exact");
  CHECK(liefam_fiber(doc, "4", &out) == LIEFAM_INPUT_ERROR);
  CHECK(std::string(liefam_last_error()).size() > 0);
  liefam_document_free(doc);
}

TEST_CASE("error codes") {
  liefam_document* doc = nullptr;
  CHECK(liefam_document_from_catalog("missing", &doc) == LIEFAM_INPUT_ERROR);
  CHECK(liefam_document_from_json("{", &doc) == LIEFAM_INPUT_ERROR);
  CHECK(liefam_document_from_file("/nonexistent.json", &doc) == LIEFAM_INPUT_ERROR);
  CHECK(liefam_document_from_json(kNonCommuting, &doc) == LIEFAM_INPUT_ERROR);
  const std::string err = liefam_last_error();
  CHECK(err.find("/involutions") == 0);
  CHECK(err.find("do not commute") != std::string::npos);
  CHECK(liefam_document_from_json(nullptr, &doc) == LIEFAM_INPUT_ERROR);
  CHECK(liefam_verify(nullptr, LIEFAM_MODE_ALL, 1, nullptr, nullptr, nullptr) == LIEFAM_INPUT_ERROR);

  REQUIRE(liefam_document_from_catalog("sl2-split-compact", &doc) == LIEFAM_OK);
  CHECK(std::string(liefam_last_error()).empty());
  liefam_document_free(doc);

  json j = json::parse(kNonCommuting);
  j["involutions"]["sigma"] = {{"form", "map"}, {"conjugate", true}};
  REQUIRE(liefam_document_from_json(j.dump().c_str(), &doc) == LIEFAM_OK);
  char* out = nullptr;
  CHECK(liefam_verify(doc, LIEFAM_MODE_GROUP, 1, nullptr, &out, nullptr) == LIEFAM_CONFIGURATION_ERROR);
  liefam_document_free(doc);
}

TEST_CASE("scalar normalization") {
  char* out = nullptr;
  REQUIRE(liefam_scalar_normalize("3/6+2/4i", &out) == LIEFAM_OK);
  CHECK(take(out) == "1/2+1/2i");
  REQUIRE(liefam_scalar_normalize("0-1i", &out) == LIEFAM_OK);
  CHECK(take(out) == "-i");
  CHECK(liefam_scalar_normalize("1/0", &out) == LIEFAM_INPUT_ERROR);
}
