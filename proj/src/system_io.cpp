#include "oddcox/system_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "oddcox/error.hpp"

namespace oddcox {

namespace {

using nlohmann::json;

int line_at(std::string_view text, std::size_t offset) {
  int line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

// Line of the k-th element of the top-level array under `key`. The vendored
// parser keeps no positions, so this rescans the text, skipping strings.
int element_line(std::string_view text, std::string_view key, std::size_t k) {
  const std::string quoted = "\"" + std::string(key) + "\"";
  std::size_t pos = text.find(quoted);
  if (pos == std::string_view::npos) return 1;
  pos = text.find('[', pos);
  if (pos == std::string_view::npos) return line_at(text, text.size());
  int depth = 0;
  std::size_t seen = 0;
  bool in_string = false;
  for (std::size_t i = pos; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '[' || c == '{') {
      if (++depth == 2 && seen++ == k) return line_at(text, i);
    } else if (c == ']' || c == '}') {
      if (--depth == 0) break;
    }
  }
  return line_at(text, pos);
}

[[noreturn]] void fail_at(ErrorKind kind, int line, const std::string& field, const std::string& msg) {
  fail(kind, "line " + std::to_string(line) + ": " + field + ": " + msg);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, "line " + std::to_string(line_at(text, e.byte == 0 ? 0 : e.byte - 1)) +
                               ": malformed JSON: " + e.what());
  }
}

long integer_field(const json& obj, const char* name, int line, const std::string& field) {
  if (!obj.contains(name)) fail_at(ErrorKind::Parse, line, field, "missing");
  const json& v = obj.at(name);
  if (!v.is_number_integer()) fail_at(ErrorKind::Parse, line, field, "expected an integer, got " + v.dump());
  return v.get<long>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CoxeterSystem parse_system_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) fail(ErrorKind::Parse, "line 1: expected a JSON object");
  const long rank = integer_field(doc, "rank", line_at(text, text.find("\"rank\"")), "rank");
  if (rank < 1) fail_at(ErrorKind::Parse, line_at(text, text.find("\"rank\"")), "rank", "must be >= 1");
  std::vector<Edge> edges;
  if (doc.contains("edges")) {
    const json& list = doc.at("edges");
    if (!list.is_array()) fail_at(ErrorKind::Parse, line_at(text, text.find("\"edges\"")), "edges", "expected an array");
    std::set<std::pair<long, long>> seen;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const int line = element_line(text, "edges", k);
      const std::string where = "edges[" + std::to_string(k) + "]";
      const json& e = list[k];
      if (!e.is_object()) fail_at(ErrorKind::Parse, line, where, "expected an object");
      const long u = integer_field(e, "u", line, where + ".u");
      const long v = integer_field(e, "v", line, where + ".v");
      const long m = integer_field(e, "m", line, where + ".m");
      if (u < 1 || u > rank) fail_at(ErrorKind::Parse, line, where + ".u", "vertex " + std::to_string(u) + " out of range");
      if (v < 1 || v > rank) fail_at(ErrorKind::Parse, line, where + ".v", "vertex " + std::to_string(v) + " out of range");
      if (u == v) fail_at(ErrorKind::Parse, line, where, "self-loop at vertex " + std::to_string(u));
      if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
        fail_at(ErrorKind::Parse, line, where, "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
      }
      if (m < 3 || m % 2 == 0) {
        fail_at(ErrorKind::EvenOrSmallExponent, line, where + ".m", "exponent " + std::to_string(m) + " is not odd >= 3");
      }
      edges.push_back({static_cast<Gen>(std::min(u, v)), static_cast<Gen>(std::max(u, v)), m});
    }
  }
  return system_from_edges(static_cast<int>(rank), edges);
}

CoxeterSystem load_system(const std::string& path) { return parse_system_json(read_file(path)); }

std::string system_to_json(const CoxeterSystem& sys) {
  json edges = json::array();
  for (const Edge& e : sys.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"m", e.m}});
  json doc = {{"rank", sys.rank()}, {"edges", edges}};
  return doc.dump();
}

Endomorphism parse_endomorphism_json(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("images")) fail(ErrorKind::Parse, "line 1: images: missing");
  const json& list = doc.at("images");
  if (!list.is_array()) fail_at(ErrorKind::Parse, line_at(text, text.find("\"images\"")), "images", "expected an array");
  Endomorphism e;
  for (std::size_t k = 0; k < list.size(); ++k) {
    const std::string where = "images[" + std::to_string(k) + "]";
    const json& img = list[k];
    if (!img.is_array()) fail_at(ErrorKind::Parse, element_line(text, "images", k), where, "expected an array of letters");
    Word w;
    for (const json& letter : img) {
      if (!letter.is_number_integer() || letter.get<long>() < 1) {
        fail_at(ErrorKind::Parse, element_line(text, "images", k), where, "letters must be positive integers");
      }
      w.push_back(static_cast<Gen>(letter.get<long>()));
    }
    e.images.push_back(std::move(w));
  }
  return e;
}

Endomorphism load_endomorphism(const std::string& path) { return parse_endomorphism_json(read_file(path)); }

std::string endomorphism_to_json(const Endomorphism& e) {
  json images = json::array();
  for (const Word& w : e.images) images.push_back(w.letters());
  return json{{"images", images}}.dump();
}

}  // namespace oddcox
