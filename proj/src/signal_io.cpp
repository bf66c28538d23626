#include "apuniform/signal_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace apu {
namespace {

using nlohmann::json;

template <typename Scalar>
std::string to_json_text(const ZnSignal<Scalar>& s) {
  json doc;
  doc["n"] = s.size();
  json values = json::array();
  for (std::int64_t x = 0; x < s.size(); ++x) values.push_back(s[x]);
  doc["values"] = std::move(values);
  return doc.dump() + "\n";
}

}  // namespace

std::string signal_to_json(const IntSignal& s) { return to_json_text(s); }
std::string signal_to_json(const RealSignal& s) { return to_json_text(s); }

LoadedSignal signal_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("values")) {
    throw Error(Errc::ParseError, "signal JSON needs \"n\" and \"values\"");
  }
  for (const auto& item : doc.items()) {
    if (item.key() != "n" && item.key() != "values") {
      throw Error(Errc::ParseError, "unknown field \"" + item.key() + "\"");
    }
  }
  if (!doc["n"].is_number_integer()) throw Error(Errc::ParseError, "\"n\" must be an integer");
  const Modulus m = make_modulus(doc["n"].get<std::int64_t>());
  const json& values = doc["values"];
  if (!values.is_array()) throw Error(Errc::ParseError, "\"values\" must be an array");
  if (static_cast<std::int64_t>(values.size()) != m.n()) {
    throw Error(Errc::LengthMismatch, "expected " + std::to_string(m.n()) + " values, got " +
                                          std::to_string(values.size()));
  }
  bool all_integer = true;
  for (const auto& v : values) {
    if (!v.is_number()) throw Error(Errc::ParseError, "signal values must be numbers");
    all_integer = all_integer && v.is_number_integer();
  }
  if (all_integer) {
    IntSignal::Vector out(m.n());
    for (std::int64_t x = 0; x < m.n(); ++x) out[x] = values[x].get<std::int32_t>();
    return IntSignal(m, std::move(out));
  }
  RealSignal::Vector out(m.n());
  for (std::int64_t x = 0; x < m.n(); ++x) out[x] = values[x].get<double>();
  return RealSignal(m, std::move(out));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoFailure, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoFailure, "cannot write " + path.string());
  out << text;
  if (!out.flush()) throw Error(Errc::IoFailure, "write failed for " + path.string());
}

void save_signal(const IntSignal& s, const std::filesystem::path& path) {
  write_text_file(path, signal_to_json(s));
}
void save_signal(const RealSignal& s, const std::filesystem::path& path) {
  write_text_file(path, signal_to_json(s));
}
LoadedSignal load_signal(const std::filesystem::path& path) {
  return signal_from_json(read_text_file(path));
}

}  // namespace apu
