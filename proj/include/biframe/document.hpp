#ifndef BIFRAME_DOCUMENT_HPP
#define BIFRAME_DOCUMENT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "biframe/biframe.hpp"
#include "biframe/multiplier.hpp"

namespace biframe {

/// In-memory form of a biframe definition file.
struct LoadedDocument {
    BiframePair pair;
    std::optional<SymbolFunction> symbol;
    std::string name;
    std::string description;
};

/// Parses and validates a version-1 document. Unknown fields are rejected;
/// complex scalars are encoded as [re, im] pairs and only allowed in complex
/// spaces. Throws FormatError on parse failure (with line info) and
/// ValidationError naming the offending field otherwise.
LoadedDocument load_document(const std::string& path);

void save_document(const std::string& path, const BiframePair& pair,
                   const std::optional<SymbolFunction>& symbol = std::nullopt,
                   const std::string& name = "", const std::string& description = "");

// JSON-level entry points, used by the loaders above and by tests.
LoadedDocument document_from_json(const nlohmann::json& j);
nlohmann::json document_to_json(const BiframePair& pair,
                                const std::optional<SymbolFunction>& symbol = std::nullopt,
                                const std::string& name = "",
                                const std::string& description = "");

} // namespace biframe

#endif
