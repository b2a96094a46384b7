#pragma once

#include <stdexcept>
#include <string>

#include "fincat/category.hpp"

namespace fincat {

// The document could not be interpreted: broken JSON (the message carries the
// parser's line and column), a wrong or missing format tag, or fields that do
// not fit together. Distinct from ValidationError, which means the tables
// parsed fine but the category laws fail.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The document parsed into well-shaped tables, but validate_category rejects
// them. The full report rides along for callers that want every failure.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string message, ValidationReport report)
      : std::runtime_error(std::move(message)), report(std::move(report)) {}

  ValidationReport report;
};

// Canonical interchange form, format tag "fincat/1": object count plus
// optional names, a morphism list with endpoints, the identity per object,
// and one [g, f, composite] triple per filled table slot, sorted by (g, f).
// Serialization is deterministic, so saving a loaded document is the
// identity after one normalization pass.
std::string category_to_json(const FinCategory& c);
FinCategory category_from_json(const std::string& text);

// Same parse, but hands back the tables without judging the category laws,
// for callers that run validation themselves and want the subject either way.
FinCategory parse_category_tables(const std::string& text);

void save_category(const FinCategory& c, const std::string& path);
FinCategory load_category(const std::string& path);

}  // namespace fincat
