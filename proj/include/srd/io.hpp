#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "srd/construct.hpp"
#include "srd/design.hpp"
#include "srd/resolution.hpp"

namespace srd::io {

// Line-oriented text format:
//
//   # comment
//   design v=<v> k=<k> b=<b>
//   label <index> <string>        (optional; all or none)
//   class <i>                     (optional; groups the block lines below)
//   <ascending 0-based indices>   (one block per line)
//
// A file with class lines carries a resolution whose refs follow file order.
struct DesignFile {
  Design design;
  std::optional<Resolution> resolution;
};

// Throws Error(Parse) on malformed input, InvalidDesign / InvalidResolution on
// structurally invalid content.
DesignFile parse_text(std::string_view text);

std::string format_text(const Design& design);
// Blocks are written class by class; the returned file re-parses to a design
// whose block order is the class order.
std::string format_text(const Design& design, const Resolution& res);

// Same content as a key/value tree: {"v", "k", "b", "labels"?, "blocks",
// "classes"?}.
nlohmann::json to_json(const Design& design,
                       const Resolution* res = nullptr);
DesignFile from_json(const nlohmann::json& doc);

// One line per constructed block: "<block> <class> <indexing block>".
std::string format_provenance(const ConstructedDesign& constructed);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Picks the format from content: JSON if the first non-space byte is '{'.
DesignFile load(const std::filesystem::path& path);

}  // namespace srd::io
