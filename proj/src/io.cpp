#include "hyperspec/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace hyperspec::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
    throw Error(ErrorKind::Parse, what);
}

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<long long> parse_ints(std::string_view line, int line_no) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
        if (pos >= line.size()) break;
        std::size_t end = pos;
        while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
        long long v = 0;
        const auto tok = line.substr(pos, end - pos);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            parse_error("line " + std::to_string(line_no) + ": not an integer: '" +
                        std::string(tok) + "'");
        out.push_back(v);
        pos = end;
    }
    return out;
}

int to_int(long long v, const std::string& what) {
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        parse_error(what + " out of integer range");
    return static_cast<int>(v);
}

}  // namespace

Hypergraph parse_hg(std::string_view text) {
    std::vector<std::vector<long long>> rows;
    int line_no = 0;
    std::size_t pos = 0;
    std::vector<int> row_lines;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        ++line_no;
        const auto line = trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        if (line.empty() || line.front() == '#') continue;
        rows.push_back(parse_ints(line, line_no));
        row_lines.push_back(line_no);
    }
    if (rows.empty()) parse_error("missing header line \"n m\"");
    if (rows[0].size() != 2) parse_error("header must contain exactly \"n m\"");
    const int n = to_int(rows[0][0], "vertex count");
    const long long m = rows[0][1];
    if (m < 0) parse_error("negative edge count");
    if (static_cast<long long>(rows.size()) - 1 != m)
        parse_error("header declares " + std::to_string(m) + " edges but " +
                    std::to_string(rows.size() - 1) + " edge lines follow");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t r = 1; r < rows.size(); ++r) {
        Edge e;
        for (long long v : rows[r]) e.push_back(to_int(v, "vertex id"));
        edges.push_back(std::move(e));
    }
    return validate(n, std::move(edges));
}

std::string to_hg(const Hypergraph& h) {
    std::string out = std::to_string(h.n()) + ' ' + std::to_string(h.m()) + '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

Hypergraph parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) parse_error("JSON hypergraph must be an object");
    if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
        parse_error("field \"vertices\" must be an integer");
    if (!doc.contains("edges") || !doc["edges"].is_array())
        parse_error("field \"edges\" must be an array");
    const int n = to_int(doc["vertices"].get<long long>(), "vertex count");
    std::vector<Edge> edges;
    for (const auto& row : doc["edges"]) {
        if (!row.is_array()) parse_error("each edge must be an array of integers");
        Edge e;
        for (const auto& v : row) {
            if (!v.is_number_integer()) parse_error("vertex ids must be integers");
            e.push_back(to_int(v.get<long long>(), "vertex id"));
        }
        edges.push_back(std::move(e));
    }
    return validate(n, std::move(edges));
}

std::string to_json(const Hypergraph& h) {
    nlohmann::ordered_json doc;
    doc["vertices"] = h.n();
    doc["edges"] = nlohmann::ordered_json::array();
    for (const auto& e : h.edges()) doc["edges"].push_back(e);
    return doc.dump() + '\n';
}

Format detect_format(std::string_view text) {
    const auto b = text.find_first_not_of(" \t\r\n");
    return (b != std::string_view::npos && text[b] == '{') ? Format::Json : Format::Text;
}

Hypergraph parse(std::string_view text) {
    return detect_format(text) == Format::Json ? parse_json(text) : parse_hg(text);
}

std::string serialize(const Hypergraph& h, Format format) {
    return format == Format::Json ? to_json(h) : to_hg(h);
}

Hypergraph read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) parse_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void write_file_atomic(const std::string& path, std::string_view contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write to '" + tmp.string() + "' failed");
        }
    }
    fs::rename(tmp, target);
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, ptr);
}

}  // namespace hyperspec::io
