#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ptn/error.hpp"

namespace ptn::detail {

inline void write_text(const std::filesystem::path& file, const std::string& text) {
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, file.string() + ": cannot write");
  out << text;
  if (!out) throw Error(ErrorCode::Io, file.string() + ": write failed");
}

inline std::string read_text(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::MissingFile, file.string() + ": cannot open");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace ptn::detail
