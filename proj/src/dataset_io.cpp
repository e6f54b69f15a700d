#include "domgeo/dataset_io.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

namespace domgeo {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class T>
T parse_number(std::string_view tok, std::size_t line, const char* what) {
    T v{};
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
    }
    return v;
}

} // namespace

Dataset parse_dataset(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::vector<std::string_view> tokens;

    // Next non-blank, non-comment line; false at end of text.
    auto next_line = [&]() {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            pos = end + 1;
            ++line_no;
            tokens = split_ws(line);
            if (!tokens.empty() && tokens[0].front() != '#') return true;
        }
        return false;
    };

    if (!next_line()) throw ParseError(std::max<std::size_t>(line_no, 1), "missing header");
    if (tokens.size() != 3) throw ParseError(line_no, "header must be 'n d_real d_feat'");
    const auto n = parse_number<std::size_t>(tokens[0], line_no, "point count");
    const auto d_real = parse_number<std::size_t>(tokens[1], line_no, "d_real");
    const auto d_feat = parse_number<std::size_t>(tokens[2], line_no, "d_feat");
    if (d_real < 1 || d_feat < 1) throw ParseError(line_no, "dimensions must be at least 1");

    Dataset ds(d_real, d_feat);
    std::vector<double> row(d_real + d_feat);
    for (std::size_t i = 0; i < n; ++i) {
        if (!next_line()) {
            throw ParseError(std::max<std::size_t>(line_no, 1),
                             "expected " + std::to_string(n) + " rows, found " + std::to_string(i));
        }
        if (tokens.size() != row.size()) {
            throw ParseError(line_no, "expected " + std::to_string(row.size()) + " values, found " +
                                          std::to_string(tokens.size()));
        }
        for (std::size_t k = 0; k < row.size(); ++k) {
            row[k] = parse_number<double>(tokens[k], line_no, "coordinate");
            if (!std::isfinite(row[k])) {
                throw ParseError(line_no, "non-finite coordinate '" + std::string(tokens[k]) + "'");
            }
        }
        ds.add(std::span<const double>(row.data(), d_real),
               std::span<const double>(row.data() + d_real, d_feat));
    }
    if (next_line()) throw ParseError(line_no, "more rows than the header declares");
    return ds;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_dataset(const Dataset& ds) {
    std::string out = std::to_string(ds.size()) + " " + std::to_string(ds.d_real()) + " " +
                      std::to_string(ds.d_feat()) + "\n";
    for (std::size_t i = 0; i < ds.size(); ++i) {
        bool first = true;
        for (auto part : {ds.real(i), ds.feature(i)}) {
            for (double v : part) {
                if (!first) out += ' ';
                out += format_double(v);
                first = false;
            }
        }
        out += '\n';
    }
    return out;
}

std::string format_result(const DominatorResult& result) {
    std::string out;
    for (std::size_t i = 0; i < result.size(); ++i) {
        out += std::to_string(i);
        if (result[i]) {
            out += ' ' + std::to_string(result[i]->id) + ' ' + format_double(result[i]->sqdist) + '\n';
        } else {
            out += " - -\n";
        }
    }
    return out;
}

Dataset read_dataset_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "': " + std::strerror(errno));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read '" + path.string() + "'");
    return parse_dataset(buf.str());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing: " + std::strerror(errno));
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.close();
    if (!out) throw IoError("cannot write '" + path.string() + "'");
}

} // namespace domgeo
