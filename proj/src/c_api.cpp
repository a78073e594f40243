#include "liefam/liefam.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "liefam/catalog.hpp"
#include "liefam/report.hpp"

struct liefam_document {
  liefam::InputDocument doc;
};

namespace {

thread_local std::string last_error;

liefam_status fail(liefam_status s, const std::string& message) {
  last_error = message;
  return s;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
liefam_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return LIEFAM_OK;
  } catch (const liefam::ParseError& e) {
    return fail(LIEFAM_INPUT_ERROR, e.what());
  } catch (const liefam::TheoremViolation& e) {
    return fail(LIEFAM_THEOREM_VIOLATION, e.what());
  } catch (const liefam::DimensionError& e) {
    return fail(LIEFAM_DIMENSION_ERROR, e.what());
  } catch (const liefam::FieldError& e) {
    return fail(LIEFAM_FIELD_ERROR, e.what());
  } catch (const liefam::DomainError& e) {
    return fail(LIEFAM_DOMAIN_ERROR, e.what());
  } catch (const liefam::ConfigurationError& e) {
    return fail(LIEFAM_CONFIGURATION_ERROR, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(LIEFAM_INPUT_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(LIEFAM_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(LIEFAM_INTERNAL_ERROR, "unknown error");
  }
}

liefam_status null_argument(const char* name) {
  return fail(LIEFAM_INPUT_ERROR, std::string("null argument: ") + name);
}

}  // namespace

extern "C" {

const char* liefam_version(void) { return liefam::library_version(); }

const char* liefam_last_error(void) { return last_error.c_str(); }

void liefam_string_free(char* s) { std::free(s); }

liefam_status liefam_catalog_json(char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& e : liefam::catalog()) j.push_back({{"name", e.name}, {"summary", e.summary}});
    *out = dup(j.dump(2));
  });
}

liefam_status liefam_document_from_json(const char* json, liefam_document** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new liefam_document{liefam::parse_document_text(json)}; });
}

liefam_status liefam_document_from_file(const char* path, liefam_document** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new liefam_document{liefam::load_document(path)}; });
}

liefam_status liefam_document_from_catalog(const char* name, liefam_document** out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new liefam_document{liefam::parse_document(liefam::catalog_document(name))}; });
}

void liefam_document_free(liefam_document* doc) { delete doc; }

liefam_status liefam_verify(const liefam_document* doc, liefam_mode mode, uint64_t seed, const char* points_json,
                            char** report, int* passed) {
  if (!doc) return null_argument("doc");
  if (!report) return null_argument("report");
  return guarded([&] {
    liefam::VerifyOptions opt;
    switch (mode) {
      case LIEFAM_MODE_ALGEBRA:
        opt.mode = liefam::VerifyMode::Algebra;
        break;
      case LIEFAM_MODE_GROUP:
        opt.mode = liefam::VerifyMode::Group;
        break;
      case LIEFAM_MODE_ALL:
        opt.mode = liefam::VerifyMode::All;
        break;
      default:
        throw liefam::ParseError("unknown mode " + std::to_string(static_cast<int>(mode)));
    }
    opt.seed = seed;
    if (points_json) {
      nlohmann::ordered_json j;
      try {
        j = nlohmann::ordered_json::parse(points_json);
      } catch (const nlohmann::json::parse_error& e) {
        throw liefam::ParseError(e.what());
      }
      opt.points = liefam::parse_points(j, "");
    }
    const liefam::VerifyResult r = liefam::verify(doc->doc, opt);
    *report = dup(r.report.dump(2));
    if (passed) *passed = r.passed ? 1 : 0;
  });
}

liefam_status liefam_fiber(const liefam_document* doc, const char* point, char** report) {
  if (!doc) return null_argument("doc");
  if (!point) return null_argument("point");
  if (!report) return null_argument("report");
  return guarded([&] { *report = dup(liefam::fiber_report(doc->doc, liefam::ProjPoint::parse(point)).dump(2)); });
}

liefam_status liefam_scalar_normalize(const char* text, char** out) {
  if (!text) return null_argument("text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = dup(liefam::GaussianRational::parse(text).to_string()); });
}

}  // extern "C"
