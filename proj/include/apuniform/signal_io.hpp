#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include "apuniform/signal.hpp"

namespace apu {

/// A signal read from disk: integer when every value is an integer literal.
using LoadedSignal = std::variant<IntSignal, RealSignal>;

// File format: {"n": N, "values": [v0, ..., v_{N-1}]}

std::string signal_to_json(const IntSignal& s);
std::string signal_to_json(const RealSignal& s);
LoadedSignal signal_from_json(const std::string& text);

void save_signal(const IntSignal& s, const std::filesystem::path& path);
void save_signal(const RealSignal& s, const std::filesystem::path& path);
LoadedSignal load_signal(const std::filesystem::path& path);

/// Whole-file helpers shared by every exporter; throw Error{IoFailure}.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace apu
