#include "config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ringlcp::config {

namespace {

[[noreturn]] void err_at(const std::string& filename, size_t line,
                         const std::string& msg) {
  fail(ErrorKind::Invalid,
       filename + ":" + std::to_string(line) + ": " + msg);
}

bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.';
}

/// Cuts a trailing comment, respecting double-quoted strings.
std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_str) {
      if (c == '\\') ++i;
      else if (c == '"') in_str = false;
    } else if (c == '"') {
      in_str = true;
    } else if (c == '#') {
      return line.substr(0, i);
    }
  }
  return line;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Recursive-descent parser for the TOML-lite value grammar.
struct ValueParser {
  const std::string& filename;
  size_t line;
  const std::string& s;
  size_t pos = 0;

  [[noreturn]] void err(const std::string& msg) { err_at(filename, line, msg); }

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' ||
                              s[pos] == '\n' || s[pos] == '\r')) {
      if (s[pos] == '\n') ++line;
      ++pos;
    }
  }

  nlohmann::json parse_value() {
    skip_ws();
    if (pos >= s.size()) err("expected a value");
    char c = s[pos];
    if (c == '"') return parse_string();
    if (c == '[') return parse_array();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c)))
      return parse_int();
    if (s.compare(pos, 4, "true") == 0) {
      pos += 4;
      return true;
    }
    if (s.compare(pos, 5, "false") == 0) {
      pos += 5;
      return false;
    }
    err("unparsable value starting at '" + s.substr(pos, 8) + "'");
  }

  nlohmann::json parse_string() {
    ++pos;  // opening quote
    std::string out;
    while (pos < s.size() && s[pos] != '"') {
      if (s[pos] == '\n') err("unterminated string");
      if (s[pos] == '\\') {
        ++pos;
        if (pos >= s.size() || (s[pos] != '"' && s[pos] != '\\'))
          err("unsupported escape in string");
      }
      out += s[pos++];
    }
    if (pos >= s.size()) err("unterminated string");
    ++pos;  // closing quote
    return out;
  }

  nlohmann::json parse_int() {
    size_t start = pos;
    if (s[pos] == '-') ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && s[start] == '-'))
      err("expected an integer");
    return static_cast<int64_t>(std::stoll(s.substr(start, pos - start)));
  }

  nlohmann::json parse_array() {
    ++pos;  // '['
    auto arr = nlohmann::json::array();
    skip_ws();
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      return arr;
    }
    while (true) {
      arr.push_back(parse_value());
      skip_ws();
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        skip_ws();
        if (pos < s.size() && s[pos] == ']') {  // trailing comma
          ++pos;
          return arr;
        }
        continue;
      }
      if (pos < s.size() && s[pos] == ']') {
        ++pos;
        return arr;
      }
      err("expected ',' or ']' in array");
    }
  }
};

/// Returns how much deeper `line` leaves the bracket nesting (strings
/// respected); negative values close brackets opened earlier.
int bracket_delta(const std::string& line) {
  int depth = 0;
  bool in_str = false;
  for (size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (in_str) {
      if (c == '\\') ++i;
      else if (c == '"') in_str = false;
    } else if (c == '"') {
      in_str = true;
    } else if (c == '[') {
      ++depth;
    } else if (c == ']') {
      --depth;
    }
  }
  return depth;
}

nlohmann::json parse_toml(const std::string& text,
                          const std::string& filename) {
  nlohmann::json root = nlohmann::json::object();
  nlohmann::json* target = &root;
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) lines.push_back(l);
  }
  for (size_t i = 0; i < lines.size(); ++i) {
    size_t line_no = i + 1;
    std::string line = trim(strip_comment(lines[i]));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        err_at(filename, line_no, "malformed section header");
      std::string section = trim(line.substr(1, line.size() - 2));
      if (section.empty() ||
          section.find('.') != std::string::npos)
        err_at(filename, line_no, "section must be a plain name");
      for (char c : section)
        if (!is_ident_char(c))
          err_at(filename, line_no, "bad character in section name");
      if (root.contains(section))
        err_at(filename, line_no, "duplicate section [" + section + "]");
      root[section] = nlohmann::json::object();
      target = &root[section];
      continue;
    }
    size_t eq = std::string::npos;
    {
      bool in_str = false;
      for (size_t k = 0; k < line.size(); ++k) {
        char c = line[k];
        if (in_str) {
          if (c == '\\') ++k;
          else if (c == '"') in_str = false;
        } else if (c == '"') {
          in_str = true;
        } else if (c == '=') {
          eq = k;
          break;
        }
      }
    }
    if (eq == std::string::npos)
      err_at(filename, line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    if (key.empty()) err_at(filename, line_no, "empty key");
    for (char c : key)
      if (!is_ident_char(c))
        err_at(filename, line_no, "bad character in key '" + key + "'");
    if (key.find('.') != std::string::npos)
      err_at(filename, line_no, "dotted keys are not supported");
    std::string value = line.substr(eq + 1);
    // Arrays may span lines: keep appending until brackets balance.
    int depth = bracket_delta(value);
    while (depth > 0) {
      if (++i >= lines.size())
        err_at(filename, line_no, "unterminated array for key '" + key + "'");
      std::string more = strip_comment(lines[i]);
      value += "\n" + more;
      depth += bracket_delta(more);
    }
    if (target->contains(key))
      err_at(filename, line_no, "duplicate key '" + key + "'");
    ValueParser vp{filename, line_no, value};
    nlohmann::json v = vp.parse_value();
    vp.skip_ws();
    if (vp.pos != value.size())
      err_at(filename, vp.line, "trailing characters after value");
    (*target)[key] = std::move(v);
  }
  return root;
}

nlohmann::json parse_json(const std::string& text,
                          const std::string& filename) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    size_t line = 1;
    for (size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    err_at(filename, line, std::string("JSON parse error: ") + e.what());
  }
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

[[noreturn]] void err_ctx(const std::string& ctx, const std::string& msg) {
  fail(ErrorKind::Invalid, ctx.empty() ? msg : ctx + ": " + msg);
}

void require_keys(const nlohmann::json& obj,
                  const std::vector<std::string>& allowed,
                  const std::string& ctx) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const auto& k : allowed) ok |= it.key() == k;
    if (!ok) err_ctx(ctx, "unknown key '" + it.key() + "'");
  }
}

int64_t get_int(const nlohmann::json& v, const std::string& what,
                const std::string& ctx) {
  if (!v.is_number_integer()) err_ctx(ctx, what + " must be an integer");
  return v.get<int64_t>();
}

/// Looks like "name(args)" — a preset literal rather than a file path.
bool preset_shaped(const std::string& ref) {
  size_t open = ref.find('(');
  if (open == 0 || open == std::string::npos || ref.back() != ')')
    return false;
  for (size_t i = 0; i < open; ++i)
    if (!std::isalnum(static_cast<unsigned char>(ref[i])) && ref[i] != '_')
      return false;
  return true;
}

fq::Field field_from_json(const nlohmann::json& spec, const std::string& ctx) {
  if (!spec.is_object()) err_ctx(ctx, "'field' must be an object");
  require_keys(spec, {"p", "m", "modulus"}, ctx);
  if (!spec.contains("p")) err_ctx(ctx, "'field.p' is required");
  int64_t p = get_int(spec["p"], "'field.p'", ctx);
  int64_t m = spec.contains("m") ? get_int(spec["m"], "'field.m'", ctx) : 1;
  if (p < 2 || p > (1 << 20)) err_ctx(ctx, "'field.p' out of range");
  if (m < 1 || m > 20) err_ctx(ctx, "'field.m' out of range");
  std::vector<uint32_t> modulus;
  if (spec.contains("modulus")) {
    if (!spec["modulus"].is_array())
      err_ctx(ctx, "'field.modulus' must be an integer array");
    for (const auto& c : spec["modulus"]) {
      int64_t v = get_int(c, "'field.modulus' entry", ctx);
      if (v < 0 || v >= p) err_ctx(ctx, "'field.modulus' entry out of range");
      modulus.push_back(static_cast<uint32_t>(v));
    }
  }
  try {
    return fq::Field::make(static_cast<uint32_t>(p), static_cast<uint32_t>(m),
                           std::move(modulus));
  } catch (const Error& e) {
    err_ctx(ctx, e.message);
  }
}

}  // namespace

nlohmann::json parse_config_text(const std::string& text,
                                 const std::string& filename) {
  bool toml = ends_with(filename, ".toml");
  bool json = ends_with(filename, ".json");
  if (!toml && !json) {
    size_t b = text.find_first_not_of(" \t\r\n");
    json = b != std::string::npos && text[b] == '{';
    toml = !json;
  }
  nlohmann::json doc =
      toml ? parse_toml(text, filename) : parse_json(text, filename);
  if (!doc.is_object())
    err_ctx(filename, "top-level configuration must be an object");
  return doc;
}

AlgebraPtr ring_from_json(const nlohmann::json& spec,
                          const std::string& context) {
  if (!spec.is_object()) err_ctx(context, "ring spec must be an object");
  require_keys(spec, {"preset", "field", "custom", "name"}, context);
  bool has_preset = spec.contains("preset");
  bool has_field = spec.contains("field");
  bool has_custom = spec.contains("custom");
  if (has_preset && (has_field || has_custom))
    err_ctx(context, "'preset' excludes 'field' and 'custom'");
  if (has_preset) {
    if (!spec["preset"].is_string())
      err_ctx(context, "'preset' must be a string");
    if (spec.contains("name"))
      err_ctx(context, "'name' cannot override a preset's canonical name");
    try {
      return Algebra::preset(spec["preset"].get<std::string>());
    } catch (const Error& e) {
      err_ctx(context, e.message);
    }
  }
  if (has_custom && !has_field)
    err_ctx(context, "'custom' needs a base 'field'");
  if (!has_field)
    err_ctx(context, "one of 'preset', 'field' (optionally with 'custom') "
                     "is required");
  fq::Field F = field_from_json(spec["field"], context);
  std::string name;
  if (spec.contains("name")) {
    if (!spec["name"].is_string()) err_ctx(context, "'name' must be a string");
    name = spec["name"].get<std::string>();
  }
  if (!has_custom) {
    if (name.empty()) name = "field(" + std::to_string(F.q()) + ")";
    try {
      return Algebra::make(F, 1, {1}, {1}, name);
    } catch (const Error& e) {
      err_ctx(context, e.message);
    }
  }
  const nlohmann::json& cust = spec["custom"];
  if (!cust.is_object()) err_ctx(context, "'custom' must be an object");
  require_keys(cust, {"dim", "structure_constants", "unity"}, context);
  if (!cust.contains("dim") || !cust.contains("structure_constants") ||
      !cust.contains("unity"))
    err_ctx(context,
            "'custom' needs 'dim', 'structure_constants' and 'unity'");
  int64_t dim = get_int(cust["dim"], "'custom.dim'", context);
  if (dim < 1 || dim > 64) err_ctx(context, "'custom.dim' out of range");
  int d = static_cast<int>(dim);
  const nlohmann::json& sc_in = cust["structure_constants"];
  if (!sc_in.is_array() || static_cast<int>(sc_in.size()) != d)
    err_ctx(context, "'custom.structure_constants' must be a " +
                         std::to_string(d) + "-deep cubic array");
  std::vector<uint32_t> sc(static_cast<size_t>(d) * d * d);
  for (int i = 0; i < d; ++i) {
    const auto& plane = sc_in[i];
    if (!plane.is_array() || static_cast<int>(plane.size()) != d)
      err_ctx(context, "'custom.structure_constants[" + std::to_string(i) +
                           "]' must have " + std::to_string(d) + " rows");
    for (int j = 0; j < d; ++j) {
      const auto& row = plane[j];
      if (!row.is_array() || static_cast<int>(row.size()) != d)
        err_ctx(context, "'custom.structure_constants[" + std::to_string(i) +
                             "][" + std::to_string(j) + "]' must have " +
                             std::to_string(d) + " entries");
      for (int k = 0; k < d; ++k)
        sc[(static_cast<size_t>(i) * d + j) * d + k] = F.from_int(
            get_int(row[k], "'custom.structure_constants' entry", context));
    }
  }
  const nlohmann::json& unity_in = cust["unity"];
  if (!unity_in.is_array() || static_cast<int>(unity_in.size()) != d)
    err_ctx(context, "'custom.unity' must have " + std::to_string(d) +
                         " entries");
  alg::RingElem unity;
  for (const auto& v : unity_in)
    unity.push_back(F.from_int(get_int(v, "'custom.unity' entry", context)));
  if (name.empty())
    name = "custom(d=" + std::to_string(d) + ",q=" + std::to_string(F.q()) +
           ")";
  try {
    return Algebra::make(F, d, std::move(sc), std::move(unity), name);
  } catch (const Error& e) {
    err_ctx(context, e.message);
  }
}

AlgebraPtr ring_from_text(const std::string& text,
                          const std::string& filename) {
  return ring_from_json(parse_config_text(text, filename), filename);
}

LinearCode code_from_json(const AlgebraPtr& ring, const nlohmann::json& spec,
                          const std::string& context) {
  if (!spec.is_object()) err_ctx(context, "code spec must be an object");
  require_keys(spec, {"ring", "n", "generators"}, context);
  if (spec.contains("ring")) {
    AlgebraPtr declared;
    if (spec["ring"].is_string()) {
      declared = resolve_ring(spec["ring"].get<std::string>());
    } else {
      declared = ring_from_json(spec["ring"], context);
    }
    if (!same_presentation(*declared, *ring))
      err_ctx(context, "the code declares ring '" + declared->name() +
                           "' but '" + ring->name() + "' was supplied");
  }
  if (!spec.contains("n")) err_ctx(context, "'n' is required");
  int64_t n64 = get_int(spec["n"], "'n'", context);
  if (n64 < 1 || n64 > 1024) err_ctx(context, "'n' out of range");
  int n = static_cast<int>(n64);
  if (!spec.contains("generators")) err_ctx(context, "'generators' is required");
  const nlohmann::json& gens = spec["generators"];
  if (!gens.is_array()) err_ctx(context, "'generators' must be an array");
  std::vector<rmod::RingVector> rows;
  const Algebra& a = *ring;
  for (size_t i = 0; i < gens.size(); ++i) {
    const auto& row_in = gens[i];
    std::string where = "'generators[" + std::to_string(i) + "]'";
    if (!row_in.is_array() || static_cast<int>(row_in.size()) != n)
      err_ctx(context, where + " must be an array of " + std::to_string(n) +
                           " entries");
    rmod::RingVector row;
    for (size_t j = 0; j < row_in.size(); ++j) {
      const auto& cell = row_in[j];
      std::string cell_where =
          "'generators[" + std::to_string(i) + "][" + std::to_string(j) + "]'";
      if (cell.is_string()) {
        try {
          row.push_back(a.parse_elem(cell.get<std::string>()));
        } catch (const Error& e) {
          err_ctx(context, cell_where + ": " + e.message);
        }
      } else if (cell.is_number_integer()) {
        row.push_back(a.scalar(a.field().from_int(cell.get<int64_t>())));
      } else if (cell.is_array()) {
        if (static_cast<int>(cell.size()) != a.dim())
          err_ctx(context, cell_where + " coordinate vector must have " +
                               std::to_string(a.dim()) + " entries");
        alg::RingElem e;
        for (const auto& c : cell)
          e.push_back(a.field().from_int(get_int(c, cell_where, context)));
        row.push_back(std::move(e));
      } else {
        err_ctx(context, cell_where +
                             " must be a literal string, an integer, or a "
                             "coordinate array");
      }
    }
    rows.push_back(std::move(row));
  }
  try {
    return LinearCode::from_generators(ring, n, rows);
  } catch (const Error& e) {
    err_ctx(context, e.message);
  }
}

LinearCode code_from_text(const AlgebraPtr& ring, const std::string& text,
                          const std::string& filename) {
  return code_from_json(ring, parse_config_text(text, filename), filename);
}

AlgebraPtr resolve_ring(const std::string& ref) {
  if (preset_shaped(ref)) return Algebra::preset(ref);
  return ring_from_text(read_file(ref), ref);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Invalid, "cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool same_presentation(const Algebra& a, const Algebra& b) {
  if (!(a.field() == b.field()) || a.dim() != b.dim() ||
      a.unity() != b.unity())
    return false;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < a.dim(); ++k)
        if (a.sc(i, j)[k] != b.sc(i, j)[k]) return false;
  return true;
}

}  // namespace ringlcp::config
