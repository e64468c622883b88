#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ialg/fol.hpp"
#include "ialg/structure.hpp"

namespace ialg {

struct IoError : std::runtime_error {
  enum class Kind { File, Parse, Validation };
  Kind kind;
  int line;  // 0 when no single line applies
  IoError(Kind k, int line_, const std::string& msg)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        kind(k),
        line(line_) {}
};

enum class ImpMode { Heyting, DummyRight, DummyTop, Table };

// One structure file: carrier, implication, named separators, optional
// first-order interpretation. Loading validates everything; emitting
// produces the canonical form, and load-then-emit is idempotent.
struct StructureFile {
  std::string name;
  ImpMode imp_mode = ImpMode::Table;
  ImplicativeStructure s;
  std::vector<Separator> separators;
  std::optional<Interpretation> interp;

  const Separator* find_separator(const std::string& sep_name) const;
};

StructureFile parse_structure(const std::string& text);
StructureFile load_structure(const std::string& path);
std::string emit_structure(const StructureFile& f);

// Wraps a programmatically built structure for emission (explicit table).
StructureFile wrap_structure(std::string name, ImplicativeStructure s,
                             std::vector<Separator> separators = {});

}  // namespace ialg
