#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared across modules. ASCII-only case mapping: the
// lexical resources this project handles are English.
namespace ontoforge::text {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

std::vector<std::string> split(std::string_view s, char sep);
std::vector<std::string> split_whitespace(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
std::string replace_all(std::string s, std::string_view from, std::string_view to);

/// Re-encodes `bytes` as UTF-8, replacing every invalid sequence with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);
/// Number of Unicode scalar values in valid UTF-8.
std::size_t utf8_length(std::string_view s);
void append_utf8(std::string& out, char32_t cp);

std::string read_file(const std::filesystem::path& path);
/// Writes via a sibling temporary file and rename, so readers never see a
/// partially written file.
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Fixed-point rendering with `decimals` digits after the point.
std::string format_fixed(double value, int decimals);

}  // namespace ontoforge::text
