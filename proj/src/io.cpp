#include "srd/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "srd/error.hpp"

namespace srd::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    parse_error(line, "expected a non-negative integer, got '" +
                          std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    s = trim(s);
    if (s.empty()) return out;
    auto end = s.find_first_of(" \t");
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) return out;
    s.remove_prefix(end);
  }
}

}  // namespace

DesignFile parse_text(std::string_view text) {
  std::optional<std::size_t> v, k, b;
  std::vector<std::string> labels;
  std::vector<bool> labeled;
  std::vector<Block> blocks;
  std::optional<Resolution> res;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto tokens = split(line);
    if (!v) {
      if (tokens.front() != "design") parse_error(line_no, "expected 'design' header");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto eq = tokens[i].find('=');
        if (eq == std::string_view::npos) parse_error(line_no, "expected key=value");
        auto key = tokens[i].substr(0, eq);
        auto value = parse_index(tokens[i].substr(eq + 1), line_no);
        if (key == "v") v = value;
        else if (key == "k") k = value;
        else if (key == "b") b = value;
        else parse_error(line_no, "unknown header key '" + std::string(key) + "'");
      }
      if (!v || !k || !b) parse_error(line_no, "header needs v, k and b");
      if (*v < 2) parse_error(line_no, "v must be at least 2");
      labels.assign(*v, {});
      labeled.assign(*v, false);
      continue;
    }
    if (tokens.front() == "label") {
      if (tokens.size() < 3) parse_error(line_no, "label needs an index and a name");
      auto index = parse_index(tokens[1], line_no);
      if (index >= *v) parse_error(line_no, "label index out of range");
      if (labeled[index]) parse_error(line_no, "point labeled twice");
      auto rest = line.substr(static_cast<std::size_t>(tokens[1].data() - line.data()) +
                              tokens[1].size());
      labels[index] = std::string(trim(rest));
      labeled[index] = true;
      continue;
    }
    if (tokens.front() == "class") {
      if (tokens.size() != 2) parse_error(line_no, "class line needs one index");
      if (!res) {
        if (!blocks.empty()) parse_error(line_no, "blocks before the first class");
        res.emplace();
      }
      if (parse_index(tokens[1], line_no) != res->classes.size()) {
        parse_error(line_no, "classes must be numbered 0, 1, 2, ...");
      }
      res->classes.emplace_back();
      continue;
    }
    std::vector<Point> members;
    for (auto token : tokens) {
      auto p = parse_index(token, line_no);
      if (p >= *v) parse_error(line_no, "point " + std::to_string(p) + " >= v");
      if (!members.empty() && p <= members.back()) {
        parse_error(line_no, "block points must be strictly ascending");
      }
      members.push_back(static_cast<Point>(p));
    }
    if (members.size() != *k) {
      parse_error(line_no, "block has " + std::to_string(members.size()) +
                               " points, header says k = " + std::to_string(*k));
    }
    if (res) res->classes.back().block_refs.push_back(blocks.size());
    blocks.emplace_back(std::move(members));
  }

  if (!v) throw Error(ErrorKind::Parse, "missing 'design' header");
  if (blocks.size() != *b) {
    throw Error(ErrorKind::Parse, "header says b = " + std::to_string(*b) +
                                      ", found " + std::to_string(blocks.size()) +
                                      " blocks");
  }
  std::size_t label_count = 0;
  for (bool l : labeled) label_count += l;
  if (label_count != 0 && label_count != *v) {
    throw Error(ErrorKind::Parse, "labels must be given for all points or none");
  }
  if (label_count == 0) labels.clear();

  DesignFile out{Design(PointSet(*v, std::move(labels)), std::move(blocks), *k),
                 std::move(res)};
  if (out.resolution) {
    auto check = verify_resolution(out.design, *out.resolution);
    if (!check) throw Error(ErrorKind::InvalidResolution, check.diagnostic);
  }
  return out;
}

namespace {

void write_header(std::ostream& os, const Design& design) {
  os << "design v=" << design.v() << " k=" << design.k() << " b=" << design.b()
     << '\n';
  if (design.points().has_labels()) {
    for (std::size_t i = 0; i < design.v(); ++i) {
      os << "label " << i << ' ' << design.points().labels()[i] << '\n';
    }
  }
}

void write_block(std::ostream& os, const Block& block) {
  bool first = true;
  for (Point p : block) {
    if (!first) os << ' ';
    os << p;
    first = false;
  }
  os << '\n';
}

}  // namespace

std::string format_text(const Design& design) {
  std::ostringstream os;
  write_header(os, design);
  for (const auto& block : design.blocks()) write_block(os, block);
  return os.str();
}

std::string format_text(const Design& design, const Resolution& res) {
  auto check = verify_resolution(design, res);
  if (!check) throw Error(ErrorKind::InvalidResolution, check.diagnostic);
  std::ostringstream os;
  write_header(os, design);
  for (std::size_t c = 0; c < res.classes.size(); ++c) {
    os << "class " << c << '\n';
    for (auto ref : res.classes[c].block_refs) write_block(os, design.block(ref));
  }
  return os.str();
}

nlohmann::json to_json(const Design& design, const Resolution* res) {
  nlohmann::json doc;
  doc["v"] = design.v();
  doc["k"] = design.k();
  doc["b"] = design.b();
  if (design.points().has_labels()) doc["labels"] = design.points().labels();
  auto& blocks = doc["blocks"] = nlohmann::json::array();
  for (const auto& block : design.blocks()) blocks.push_back(block.members());
  if (res) {
    auto& classes = doc["classes"] = nlohmann::json::array();
    for (const auto& cls : res->classes) classes.push_back(cls.block_refs);
  }
  return doc;
}

DesignFile from_json(const nlohmann::json& doc) {
  try {
    const auto v = doc.at("v").get<std::size_t>();
    const auto k = doc.at("k").get<std::size_t>();
    const auto b = doc.at("b").get<std::size_t>();
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
    std::vector<Block> blocks;
    for (const auto& block : doc.at("blocks")) {
      blocks.emplace_back(block.get<std::vector<Point>>());
    }
    if (blocks.size() != b) {
      throw Error(ErrorKind::Parse, "declared b does not match block list");
    }
    DesignFile out{Design(PointSet(v, std::move(labels)), std::move(blocks), k),
                   std::nullopt};
    if (doc.contains("classes")) {
      Resolution res;
      for (const auto& cls : doc["classes"]) {
        res.classes.push_back(ParallelClass{cls.get<std::vector<std::size_t>>()});
      }
      auto check = verify_resolution(out.design, res);
      if (!check) throw Error(ErrorKind::InvalidResolution, check.diagnostic);
      out.resolution = std::move(res);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string format_provenance(const ConstructedDesign& constructed) {
  std::ostringstream os;
  os << "# block class indexing_block\n";
  for (std::size_t i = 0; i < constructed.provenance.size(); ++i) {
    const auto& p = constructed.provenance[i];
    os << i << ' ' << p.master_class << ' ' << p.indexing_block << '\n';
  }
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << contents;
}

DesignFile load(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
    return from_json(doc);
  }
  return parse_text(text);
}

}  // namespace srd::io
