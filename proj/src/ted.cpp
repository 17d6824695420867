#include "ssd/ted.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ssd/error.hpp"

namespace ssd {

namespace {

using nlohmann::ordered_json;

std::vector<int> int_list(const ordered_json& j, const char* key) {
  const ordered_json& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorCode::kFormatError, std::string(key) + " must be a list");
  std::vector<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw Error(ErrorCode::kFormatError, std::string(key) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

TedFile parse_ted(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorCode::kFormatError, std::string("not JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::kFormatError, "a .ted file holds one JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "n" && key != "order_e" && key != "signs" && key != "points" && key != "outer") {
      throw Error(ErrorCode::kFormatError, "unknown field '" + key + "'");
    }
  }
  TedFile f;
  try {
    const int n = j.at("n").get<int>();
    f.encoding.order_e = int_list(j, "order_e");
    f.encoding.signs = int_list(j, "signs");
    if (f.encoding.crossings() != n || static_cast<int>(f.encoding.signs.size()) != n) {
      throw Error(ErrorCode::kFormatError, "order_e and signs must have n entries");
    }
    for (int s : f.encoding.signs) {
      if (s != 1 && s != -1) throw Error(ErrorCode::kFormatError, "signs must be +1 or -1");
    }
    if (j.contains("points")) {
      const ordered_json& p = j.at("points");
      if (p.is_string()) {
        if (p.get<std::string>() != "auto-lens") {
          throw Error(ErrorCode::kFormatError, "points must be a list or \"auto-lens\"");
        }
        f.auto_lens = true;
      } else {
        for (int key : int_list(j, "points")) f.points.push_back(FaceId{key});
      }
    }
    if (j.contains("outer")) f.outer = FaceId{j.at("outer").get<int>()};
  } catch (const ordered_json::exception& e) {
    throw Error(ErrorCode::kFormatError, e.what());
  }
  return f;
}

std::string serialize_ted(const TedFile& f) {
  // One line per field keeps files diffable and the byte layout fixed.
  auto list = [](const std::vector<int>& v) { return ordered_json(v).dump(); };
  std::ostringstream out;
  out << "{\n  \"n\": " << f.encoding.crossings() << ",\n  \"order_e\": " << list(f.encoding.order_e)
      << ",\n  \"signs\": " << list(f.encoding.signs) << ",\n  \"points\": ";
  if (f.auto_lens) {
    out << "\"auto-lens\"";
  } else {
    std::vector<int> keys;
    for (FaceId p : f.points) keys.push_back(p.key);
    out << list(keys);
  }
  if (f.outer) out << ",\n  \"outer\": " << f.outer->key;
  out << "\n}\n";
  return out.str();
}

TedFile read_ted(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kFormatError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_ted(buf.str());
}

void write_ted(const std::string& path, const TedFile& file) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kFormatError, "cannot write " + path);
  out << serialize_ted(file);
}

TwoEdgeDrawing to_drawing(const TedFile& f) {
  if (f.auto_lens) return validate(f.encoding, AutoLens{}, f.outer);
  return validate(f.encoding, f.points, f.outer);
}

TedFile to_ted(const TwoEdgeDrawing& d) {
  TedFile f;
  f.encoding = d.encoding;
  f.points = d.points;
  if (d.outer_explicit) f.outer = d.outer;
  return f;
}

}  // namespace ssd
