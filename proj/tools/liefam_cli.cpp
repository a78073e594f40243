// liefam: catalog, verify and fiber subcommands over the C API.
//
// Exit codes: 0 all checks pass, 1 theorem violation, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "liefam/liefam.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

int exit_code(liefam_status s) { return s == LIEFAM_THEOREM_VIOLATION ? kExitViolation : kExitInput; }

int report_error(liefam_status s) {
  std::cerr << "liefam: " << liefam_last_error() << "\n";
  return exit_code(s);
}

class Document {
 public:
  ~Document() { liefam_document_free(doc_); }
  liefam_document* get() const { return doc_; }
  liefam_document** out() { return &doc_; }

 private:
  liefam_document* doc_ = nullptr;
};

class OwnedString {
 public:
  ~OwnedString() { liefam_string_free(s_); }
  char** out() { return &s_; }
  std::string str() const { return s_ ? s_ : ""; }

 private:
  char* s_ = nullptr;
};

bool emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return true;
  }
  std::ofstream f(out_path);
  f << text << "\n";
  if (!f) {
    std::cerr << "liefam: cannot write " << out_path << "\n";
    return false;
  }
  return true;
}

liefam_status load(Document& doc, const std::string& input, const std::string& example) {
  if (!input.empty()) return liefam_document_from_file(input.c_str(), doc.out());
  return liefam_document_from_catalog(example.c_str(), doc.out());
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) return std::nullopt;
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Families of Lie algebras and groups over CP^1 from commuting involutions"};
  app.set_version_flag("--version", std::string(liefam_version()));
  app.require_subcommand(1);

  std::string input, example, mode = "all", sample, out;
  std::vector<std::string> points;
  std::uint64_t seed = 1;

  auto* cat = app.add_subcommand("catalog", "List the built-in examples as JSON");
  cat->add_option("--out", out, "Write to a file instead of stdout");

  auto* ver = app.add_subcommand("verify", "Run the verification suite and print a JSON report");
  auto* fib = app.add_subcommand("fiber", "Print one fiber as JSON");
  for (auto* sub : {ver, fib}) {
    auto* in = sub->add_option("--input", input, "Input document (JSON)")->check(CLI::ExistingFile);
    auto* ex = sub->add_option("--example", example, "Built-in example name");
    in->excludes(ex);
    sub->add_option("--out", out, "Write to a file instead of stdout");
  }
  ver->add_option("--point", points, "Sample point a:b (repeatable); replaces the default sample");
  ver->add_option("--mode", mode, "algebra, group or all")->check(CLI::IsMember({"algebra", "group", "all"}));
  ver->add_option("--seed", seed, "Seed for random points and group samples");
  ver->add_option("--sample", sample, "JSON file with a point list")->check(CLI::ExistingFile)->excludes("--point");
  fib->add_option("--point", points, "Point a:b")->required()->expected(1);

  CLI11_PARSE(app, argc, argv);

  if (cat->parsed()) {
    OwnedString s;
    if (liefam_status st = liefam_catalog_json(s.out()); st != LIEFAM_OK) return report_error(st);
    return emit(s.str(), out) ? kExitPass : kExitInput;
  }

  if (input.empty() && example.empty()) {
    std::cerr << "liefam: one of --input or --example is required\n";
    return kExitInput;
  }
  Document doc;
  if (liefam_status st = load(doc, input, example); st != LIEFAM_OK) return report_error(st);

  if (fib->parsed()) {
    OwnedString s;
    if (liefam_status st = liefam_fiber(doc.get(), points.front().c_str(), s.out()); st != LIEFAM_OK)
      return report_error(st);
    return emit(s.str(), out) ? kExitPass : kExitInput;
  }

  std::optional<std::string> points_json;
  if (!sample.empty()) {
    points_json = read_file(sample);
    if (!points_json) {
      std::cerr << "liefam: cannot read " << sample << "\n";
      return kExitInput;
    }
  } else if (!points.empty()) {
    points_json = nlohmann::json(points).dump();
  }
  const liefam_mode m = mode == "algebra" ? LIEFAM_MODE_ALGEBRA : mode == "group" ? LIEFAM_MODE_GROUP : LIEFAM_MODE_ALL;
  OwnedString report;
  int passed = 0;
  if (liefam_status st =
          liefam_verify(doc.get(), m, seed, points_json ? points_json->c_str() : nullptr, report.out(), &passed);
      st != LIEFAM_OK)
    return report_error(st);
  if (!emit(report.str(), out)) return kExitInput;
  if (!out.empty()) {
    const auto summary = nlohmann::json::parse(report.str())["summary"];
    std::cout << (passed ? "pass" : "fail") << ": " << summary["checks"].get<std::size_t>() << " checks, "
              << summary["failed"].size() << " failed\n";
  }
  return passed ? kExitPass : kExitViolation;
}
