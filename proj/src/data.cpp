#include "griess/data.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "griess/errors.hpp"

namespace griess {

namespace detail {
/* Defined in the generated embedded_data.cpp. */
extern const char* kAppendixAText;
extern const char* kAppendixBText;
} // namespace detail

namespace {

constexpr std::uint64_t kAppendixAChecksum = 0xf4fb43b1e94b57a3ULL;
constexpr std::uint64_t kAppendixBChecksum = 0xcb51a85d992bd24bULL;

std::uint64_t fnv1a(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char b : data) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string load(const char* filename, const char* embedded, std::uint64_t checksum) {
    if (const char* dir = std::getenv("GRIESS_DATA_DIR")) {
        std::ifstream in(std::string(dir) + "/" + filename);
        if (!in) fail("DataFileMissing", std::string(dir) + "/" + filename);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::string text = embedded;
    if (fnv1a(text) != checksum) fail("DataFileMissing", std::string("embedded ") + filename + " is corrupted (checksum mismatch)");
    return text;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Partition parse_partition(const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail("ParseError", "bad partition '" + s + "'");
    std::string body = s.substr(1, s.size() - 2);
    std::vector<unsigned> parts;
    if (!body.empty())
        for (const std::string& tok : split(body, ',')) parts.push_back(static_cast<unsigned>(std::stoul(tok)));
    return Partition(parts);
}

std::map<unsigned, std::map<Partition, Poly>> parse_appendix_a(const std::string& text) {
    std::map<unsigned, std::map<Partition, Poly>> table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag, part, poly;
        unsigned m;
        if (!(ls >> tag >> m >> part >> poly) || tag != "A") fail("ParseError", "appendix_a line '" + line + "'");
        table[m][parse_partition(part)] = Poly::parse(poly);
    }
    return table;
}

AppendixB parse_appendix_b(const std::string& text) {
    AppendixB b;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "SYM") {
            SymClass sc;
            std::string expansion;
            if (!(ls >> sc.degree >> sc.id >> expansion)) fail("ParseError", "SYM line '" + line + "'");
            sc.members = split(expansion, ';');
            b.sym.push_back(std::move(sc));
        } else if (tag == "F") {
            unsigned deg;
            std::string id, poly;
            if (!(ls >> deg >> id >> poly)) fail("ParseError", "F line '" + line + "'");
            b.f[deg][id] = Poly::parse(poly);
        } else if (tag == "E") {
            unsigned deg, j;
            std::string poly;
            if (!(ls >> deg >> j >> poly)) fail("ParseError", "E line '" + line + "'");
            b.e[deg][j] = Poly::parse(poly);
        } else {
            fail("ParseError", "unknown appendix_b tag in '" + line + "'");
        }
    }
    return b;
}

} // namespace

const std::string& appendix_a_text() {
    static const std::string text = load("appendix_a.txt", detail::kAppendixAText, kAppendixAChecksum);
    return text;
}

const std::string& appendix_b_text() {
    static const std::string text = load("appendix_b.txt", detail::kAppendixBText, kAppendixBChecksum);
    return text;
}

const std::map<unsigned, std::map<Partition, Poly>>& appendix_a_table() {
    static const auto table = parse_appendix_a(appendix_a_text());
    return table;
}

const AppendixB& appendix_b_table() {
    static const AppendixB table = parse_appendix_b(appendix_b_text());
    return table;
}

} // namespace griess
