#include "schemaug/jsonl.hpp"

#include <fstream>
#include <sstream>

#include "schemaug/errors.hpp"

namespace schemaug {

namespace {

bool is_blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

void for_each_jsonl(const std::filesystem::path& path,
                    const std::function<void(std::size_t, const Json&)>& fn) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) continue;
        Json parsed = Json::parse(line, nullptr, false);
        if (parsed.is_discarded()) {
            throw Error(path.string() + ":" + std::to_string(line_no) +
                        ": malformed JSON record");
        }
        fn(line_no, parsed);
    }
}

std::vector<Json> read_jsonl(const std::filesystem::path& path) {
    std::vector<Json> records;
    for_each_jsonl(path, [&](std::size_t, const Json& j) { records.push_back(j); });
    return records;
}

void write_jsonl(const std::filesystem::path& path,
                 const std::vector<Json>& records) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    for (const Json& record : records) {
        out << record.dump() << '\n';
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    Json parsed = Json::parse(in, nullptr, false);
    if (parsed.is_discarded()) {
        throw Error(path.string() + ": malformed JSON");
    }
    return parsed;
}

void write_json_file(const std::filesystem::path& path, const Json& value) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << value.dump(2) << '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path.string());
    }
    out << text;
}

}  // namespace schemaug
