#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "scq/dihedral.hpp"
#include "scq/pipeline.hpp"
#include "scq/word.hpp"

namespace scq {

struct Presentation {
  int rank = 0;
  std::vector<Word> relators;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Syntax: one directive per line; `rank <k>` (required, first), then any
/// number of `rel <word>`.  `#` starts a comment.  Throws
/// std::invalid_argument with a line:column diagnostic.
Presentation parse_presentation(std::istream& in);
Presentation parse_presentation_file(const std::string& path);
std::string emit_presentation(const Presentation& p);

/// Syntax: `order N` then N rows of N indices.
FiniteGroupTable parse_group_table(std::istream& in);
FiniteGroupTable parse_group_table_file(const std::string& path);
std::string emit_group_table(const FiniteGroupTable& t);

/// Certificate report with exact integer fields only.
std::string emit_report(const SCCertificate& c);

}  // namespace scq
