#include "seu/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace seu {

namespace {

[[noreturn]] void fail(int line_no, const std::string& message) {
    throw input_error("line " + std::to_string(line_no) + ": " + message);
}

bool significant(const std::string& line) {
    for (char c : line) {
        if (c == '#') return false;
        if (c != ' ' && c != '\t') return true;
    }
    return false;
}

// Parses exactly `count` integers from the line, rejecting trailing garbage.
std::vector<long long> parse_ints(const std::string& line, int line_no, std::size_t count, const char* what) {
    std::istringstream ss(line);
    std::vector<long long> values(count);
    for (std::size_t i = 0; i < count; ++i)
        if (!(ss >> values[i])) fail(line_no, std::string("expected ") + what);
    std::string rest;
    if (ss >> rest) fail(line_no, std::string("unexpected trailing content after ") + what);
    return values;
}

} // namespace

Digraph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    Digraph d;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!significant(line)) continue;
        if (!have_header) {
            std::istringstream ss(line);
            std::string tag;
            long long n = -1;
            if (!(ss >> tag >> n) || tag != "n") fail(line_no, "expected header 'n <count>'");
            std::string rest;
            if (ss >> rest) fail(line_no, "unexpected trailing content after header");
            if (n < 1 || n > kMaxOrder)
                fail(line_no, "vertex count must be between 1 and " + std::to_string(kMaxOrder));
            d = Digraph(static_cast<int>(n));
            have_header = true;
            continue;
        }
        const auto v = parse_ints(line, line_no, 2, "two integers 'a b'");
        if (v[0] < 0 || v[0] >= d.order() || v[1] < 0 || v[1] >= d.order())
            fail(line_no, "vertex out of range for n=" + std::to_string(d.order()));
        try {
            d.add_arc(static_cast<int>(v[0]), static_cast<int>(v[1]));
        } catch (const input_error& e) {
            fail(line_no, e.what());
        }
    }
    if (!have_header) throw input_error("empty input: missing 'n <count>' header");
    return d;
}

Digraph parse_edge_list_string(const std::string& text) {
    std::istringstream ss(text);
    return parse_edge_list(ss);
}

Digraph parse_edge_list_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open file: " + path);
    return parse_edge_list(f);
}

std::string to_edge_list(const Digraph& d) {
    std::string out = "n " + std::to_string(d.order()) + "\n";
    for (const auto& [a, b] : d.arcs()) out += std::to_string(a) + " " + std::to_string(b) + "\n";
    return out;
}

std::string to_dot(const Digraph& d, const std::vector<std::string>* labels) {
    if (labels && static_cast<int>(labels->size()) != d.order())
        throw input_error("label count does not match order");
    std::string out = "digraph D {\n";
    for (int v = 0; v < d.order(); ++v) {
        out += "  " + std::to_string(v);
        if (labels) out += " [label=\"" + (*labels)[static_cast<std::size_t>(v)] + "\"]";
        out += ";\n";
    }
    for (const auto& [a, b] : d.arcs()) out += "  " + std::to_string(a) + " -> " + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw input_error("cannot write file: " + path);
    f << content;
    if (!f) throw input_error("failed writing file: " + path);
}

} // namespace seu
