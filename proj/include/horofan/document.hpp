#pragma once

// The JSON fan document read by the command line tool, and the reports it
// writes. See docs/format.md for the schema.

#include "horofan/coloured_fan.hpp"
#include "horofan/dynkin.hpp"
#include "horofan/error.hpp"

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace horofan::io {

struct ConeEntry {
  std::vector<IntVector> rays;
  std::vector<std::string> colours;
  bool operator==(const ConeEntry&) const = default;
};

struct FanDocument {
  /// Component names are as written; empty means the default name.
  std::vector<dynkin::ComponentSpec> group;
  int torus_rank = 0;
  std::vector<std::string> parabolic;
  std::size_t lattice_rank = 0;
  std::map<std::string, IntVector> colour_points;
  std::vector<ConeEntry> cones;

  bool operator==(const FanDocument&) const = default;
};

struct ParseIssue {
  ErrorCode code = ErrorCode::SyntaxError;
  std::string message;
  /// JSON pointer to the offending value; empty for syntax errors.
  std::string path;
  /// 1-based, syntax errors only.
  std::size_t line = 0;
  std::size_t column = 0;

  std::string to_string() const;
};

class ParseError : public Error {
 public:
  explicit ParseError(std::vector<ParseIssue> issues);
  const std::vector<ParseIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<ParseIssue> issues_;
};

/// Components with every name filled in: "<family><rank>", then
/// "<family><rank>_2", ... for repeated types.
std::vector<dynkin::ComponentSpec> resolved_group(const FanDocument& doc);

/// Throws ParseError listing every problem found.
FanDocument parse(std::string_view text);
std::string print(const FanDocument& doc);

struct Model {
  dynkin::DynkinData diagram;
  fan::ColouredFan fan;
};

/// Builds and validates the fan. Geometric problems throw Error with the
/// offending cone in the message.
Model build(const FanDocument& doc);

/// A document whose cones are the maximal members of `fan`.
FanDocument to_document(const FanDocument& original, const fan::ColouredFan& fan);

nlohmann::ordered_json integer_json(const Integer& v);
nlohmann::ordered_json vector_json(const IntVector& v);

enum class Command { classify, cox, local, decolour, split };

struct RunOptions {
  /// local: index into the document's cone list.
  std::optional<std::size_t> cone;
  /// decolour: colours to keep.
  std::vector<std::string> keep;
};

struct Report {
  nlohmann::ordered_json machine;
  std::string text;

  /// Two-space indented JSON with a trailing newline.
  std::string machine_text() const;
};

Report run(const FanDocument& doc, Command command, const RunOptions& options = {});

}  // namespace horofan::io
