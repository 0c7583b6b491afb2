#include "covera/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "covera/errors.hpp"

namespace covera {

namespace {

bool content_line(const std::string& line, std::string* out) {
    std::string trimmed;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return false;
    auto last = line.find_last_not_of(" \t\r");
    trimmed = line.substr(first, last - first + 1);
    if (trimmed.empty() || trimmed[0] == '#') return false;
    *out = trimmed;
    return true;
}

std::vector<long long> parse_ints(const std::string& line, int line_no) {
    std::istringstream in(line);
    std::vector<long long> out;
    std::string token;
    while (in >> token) {
        try {
            std::size_t used = 0;
            long long value = std::stoll(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw ParseError(line_no, "expected an integer, got '" + token + "'");
        }
    }
    return out;
}

}  // namespace

Design parse_design(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long v = 0, k = 0, lambda = 0;
    std::vector<std::vector<int>> blocks;

    while (std::getline(in, line)) {
        ++line_no;
        std::string content;
        if (!content_line(line, &content)) continue;
        auto numbers = parse_ints(content, line_no);
        if (!have_header) {
            if (numbers.size() != 3)
                throw ParseError(line_no, "header must be 'v k lambda', got " +
                                              std::to_string(numbers.size()) + " numbers");
            v = numbers[0];
            k = numbers[1];
            lambda = numbers[2];
            if (v < 1 || v > 100000) throw ParseError(line_no, "v out of range");
            if (k < 2 || k > v) throw ParseError(line_no, "k must satisfy 2 <= k <= v");
            if (lambda < 1) throw ParseError(line_no, "lambda must be positive");
            have_header = true;
            continue;
        }
        if ((long long)numbers.size() != k)
            throw ParseError(line_no, "block has " + std::to_string(numbers.size()) +
                                          " points, expected " + std::to_string(k));
        std::vector<int> block;
        block.reserve(numbers.size());
        for (long long p : numbers) {
            if (p < 1 || p > v)
                throw ParseError(line_no, "point " + std::to_string(p) + " outside 1.." +
                                              std::to_string(v));
            block.push_back(int(p));
        }
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                throw ParseError(line_no, "repeated point " + std::to_string(sorted[i]));
        blocks.push_back(std::move(block));
    }
    if (!have_header) throw ParseError(line_no, "missing header line 'v k lambda'");
    return make_design(int(v), int(k), int(lambda), std::move(blocks));
}

std::string serialize_design(const Design& d) {
    std::ostringstream out;
    out << d.v << ' ' << d.k << ' ' << d.lambda << '\n';
    for (const auto& block : d.blocks) {
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out << ' ';
            out << block[i];
        }
        out << '\n';
    }
    return out.str();
}

Design read_design_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_design(buffer.str());
}

void write_design_file(const Design& d, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << serialize_design(d);
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace covera
