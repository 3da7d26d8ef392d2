#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "xrv/errors.hpp"

namespace xrv {

struct CsvRow {
    int line = 0; // 1-based line in the source file
    std::vector<std::string> fields;
};

struct CsvFile {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    int column(const std::string& name) const {
        for (size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return static_cast<int>(i);
        throw DataError("csv: missing column '" + name + "'");
    }
};

inline std::vector<std::string> split_csv_line(const std::string& line, int line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw DataError("csv: unterminated quote at line " + std::to_string(line_no));
    fields.push_back(cur);
    return fields;
}

inline CsvFile read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("csv: cannot open '" + path + "'");
    CsvFile out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (out.header.empty()) {
            out.header = split_csv_line(line, line_no);
        } else {
            CsvRow row;
            row.line = line_no;
            row.fields = split_csv_line(line, line_no);
            if (row.fields.size() != out.header.size())
                throw DataError("csv: line " + std::to_string(line_no) + " of '" + path + "' has " +
                                std::to_string(row.fields.size()) + " fields, expected " +
                                std::to_string(out.header.size()));
            out.rows.push_back(std::move(row));
        }
    }
    if (out.header.empty()) throw DataError("csv: '" + path + "' is empty");
    return out;
}

inline std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (const char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

} // namespace xrv
