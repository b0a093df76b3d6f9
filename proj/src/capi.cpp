#include "horofan/horofan.h"

#include "horofan/document.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct horofan_document {
  horofan::io::FanDocument doc;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_code;

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

horofan_status status_of(horofan::ErrorCode code) {
  using horofan::ErrorCode;
  switch (code) {
    case ErrorCode::HasTorusFactors:
    case ErrorCode::InvalidArgument:
    case ErrorCode::UnknownColour:
      return HOROFAN_PRECONDITION_ERROR;
    default:
      return HOROFAN_VALIDATION_ERROR;
  }
}

template <class F>
horofan_status guarded(F&& body) {
  last_error.clear();
  last_code.clear();
  try {
    body();
    return HOROFAN_OK;
  } catch (const horofan::io::ParseError& e) {
    last_code = horofan::error_code_name(e.code());
    last_error.clear();
    for (const auto& issue : e.issues()) last_error += issue.to_string() + "\n";
    return HOROFAN_PARSE_ERROR;
  } catch (const horofan::Error& e) {
    last_code = horofan::error_code_name(e.code());
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    last_code = "Internal";
    last_error = e.what();
    return HOROFAN_INTERNAL_ERROR;
  }
}

horofan_status fail_usage(const char* message) {
  last_code = "Usage";
  last_error = message;
  return HOROFAN_USAGE_ERROR;
}

horofan_status run(const horofan_document* doc, horofan::io::Command command, const horofan::io::RunOptions& options,
                   horofan_format format, char** out) {
  if (!doc || !out) return fail_usage("null argument");
  *out = nullptr;
  if (format != HOROFAN_FORMAT_TEXT && format != HOROFAN_FORMAT_MACHINE) return fail_usage("unknown format");
  return guarded([&] {
    const auto report = horofan::io::run(doc->doc, command, options);
    *out = duplicate(format == HOROFAN_FORMAT_MACHINE ? report.machine_text() : report.text);
  });
}

}  // namespace

extern "C" {

const char* horofan_version(void) { return "0.1.0"; }

horofan_status horofan_document_parse(const char* text, size_t length, horofan_document** out) {
  if (!text || !out) return fail_usage("null argument");
  *out = nullptr;
  return guarded([&] { *out = new horofan_document{horofan::io::parse(std::string_view(text, length))}; });
}

void horofan_document_free(horofan_document* doc) { delete doc; }

horofan_status horofan_document_print(const horofan_document* doc, char** out) {
  if (!doc || !out) return fail_usage("null argument");
  return guarded([&] { *out = duplicate(horofan::io::print(doc->doc)); });
}

horofan_status horofan_run_classify(const horofan_document* doc, horofan_format format, char** out) {
  return run(doc, horofan::io::Command::classify, {}, format, out);
}

horofan_status horofan_run_cox(const horofan_document* doc, horofan_format format, char** out) {
  return run(doc, horofan::io::Command::cox, {}, format, out);
}

horofan_status horofan_run_split(const horofan_document* doc, horofan_format format, char** out) {
  return run(doc, horofan::io::Command::split, {}, format, out);
}

horofan_status horofan_run_local(const horofan_document* doc, size_t cone, horofan_format format, char** out) {
  horofan::io::RunOptions options;
  options.cone = cone;
  return run(doc, horofan::io::Command::local, options, format, out);
}

horofan_status horofan_run_decolour(const horofan_document* doc, const char* const* keep, size_t keep_count,
                                    horofan_format format, char** out) {
  if (keep_count > 0 && !keep) return fail_usage("null keep list");
  horofan::io::RunOptions options;
  for (size_t i = 0; i < keep_count; ++i) {
    if (!keep[i]) return fail_usage("null colour name");
    options.keep.emplace_back(keep[i]);
  }
  return run(doc, horofan::io::Command::decolour, options, format, out);
}

void horofan_string_free(char* s) { std::free(s); }

const char* horofan_last_error(void) { return last_error.c_str(); }

const char* horofan_last_error_code(void) { return last_code.c_str(); }
}
