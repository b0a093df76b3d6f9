// horofan <classify|cox|local|decolour|split> <file> [--format text|machine]

#include "horofan/horofan.h"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Options {
  std::string file;
  std::string format = "text";
  std::size_t cone = 0;
  // comma separated; empty keeps no colour
  std::string keep;
};

void add_common(CLI::App* sub, Options& opt) {
  sub->add_option("file", opt.file, "fan document (JSON)")->required();
  sub->add_option("--format", opt.format, "report format")->check(CLI::IsMember({"text", "machine"}));
}

int report(horofan_status status, char* out) {
  if (status == HOROFAN_OK) {
    std::cout << out;
    horofan_string_free(out);
    return 0;
  }
  std::cerr << "error [" << horofan_last_error_code() << "]: " << horofan_last_error();
  const std::string message = horofan_last_error();
  if (message.empty() || message.back() != '\n') std::cerr << "\n";
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloured fans of horospherical varieties: smoothness, factoriality and the Cox construction"};
  app.set_version_flag("--version", std::string(horofan_version()));
  app.require_subcommand(1);

  Options opt;
  auto* classify = app.add_subcommand("classify", "per-cone flags and the global verdict");
  auto* cox = app.add_subcommand("cox", "Cox construction of a fan without torus factors");
  auto* local = app.add_subcommand("local", "affine local structure of one cone");
  auto* decolour = app.add_subcommand("decolour", "drop colours and classify the result");
  auto* split = app.add_subcommand("split", "split off torus factors, then the Cox construction");
  for (auto* sub : {classify, cox, local, decolour, split}) add_common(sub, opt);
  local->add_option("--cone", opt.cone, "index into the document's cone list")->required();
  decolour->add_option("--keep", opt.keep, "colours to keep, comma separated")->expected(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  std::ifstream in(opt.file, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << opt.file << "\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  horofan_document* doc = nullptr;
  if (horofan_document_parse(text.data(), text.size(), &doc) != HOROFAN_OK) {
    std::cerr << opt.file << ": " << horofan_last_error();
    return HOROFAN_PARSE_ERROR;
  }

  const horofan_format format = opt.format == "machine" ? HOROFAN_FORMAT_MACHINE : HOROFAN_FORMAT_TEXT;
  char* out = nullptr;
  horofan_status status = HOROFAN_USAGE_ERROR;
  if (classify->parsed()) {
    status = horofan_run_classify(doc, format, &out);
  } else if (cox->parsed()) {
    status = horofan_run_cox(doc, format, &out);
  } else if (split->parsed()) {
    status = horofan_run_split(doc, format, &out);
  } else if (local->parsed()) {
    status = horofan_run_local(doc, opt.cone, format, &out);
  } else if (decolour->parsed()) {
    std::vector<std::string> names;
    std::istringstream list(opt.keep);
    for (std::string name; std::getline(list, name, ',');)
      if (!name.empty()) names.push_back(name);
    std::vector<const char*> keep;
    for (const auto& k : names) keep.push_back(k.c_str());
    status = horofan_run_decolour(doc, keep.data(), keep.size(), format, &out);
  }
  const int code = report(status, out);
  horofan_document_free(doc);
  return code;
}
