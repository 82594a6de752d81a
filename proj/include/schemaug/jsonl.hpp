#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "schemaug/json.hpp"

namespace schemaug {

// Calls fn(line_number, parsed) for every non-blank line; line numbers are
// 1-based. Throws Error with "path:line:" context on unparseable lines.
void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(std::size_t, const Json&)>& fn);

std::vector<Json> read_jsonl(const std::filesystem::path& path);

// One compact record per line, trailing newline after the last.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<Json>& records);

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& value);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& text);

}  // namespace schemaug
