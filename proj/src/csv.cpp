#include "chebwav/csv.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>

namespace chebwav {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_exact(double x) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

namespace {

// Strips comments/whitespace; returns false for lines with no content.
bool payload(const std::string& raw, std::string& out) {
    const std::size_t hash = raw.find('#');
    std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
    const std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return false;
    const std::size_t e = s.find_last_not_of(" \t\r");
    out = s.substr(b, e - b + 1);
    return true;
}

double parse_number(const std::string& text, int line) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw CsvError("expected a number, got \"" + text + "\"", line);
    return v;
}

}  // namespace

std::vector<double> read_signal_csv(std::istream& in) {
    std::vector<double> samples;
    std::string raw, text;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (!payload(raw, text)) continue;
        samples.push_back(parse_number(text, line));
    }
    return samples;
}

void write_signal_csv(std::ostream& out, const std::vector<double>& samples) {
    for (double s : samples) out << format_number(s) << "\n";
}

void write_tree_csv(std::ostream& out, const TreeDocument& doc) {
    out << "# chebwav decomposition tree\n";
    out << "# kind " << doc.kind << "\n";
    out << "# order " << doc.order << "\n";
    out << "# upsample_k " << doc.upsample_k << "\n";
    out << "# levels " << doc.tree.levels << "\n";
    out << "# mode "
        << (doc.tree.boundary_mode == BoundaryMode::Periodic ? "periodic"
                                                             : "zeropad")
        << "\n";
    out << "# original_length " << doc.tree.original_length << "\n";
    for (double v : doc.tree.approximation)
        out << "a," << format_exact(v) << "\n";
    for (std::size_t k = 0; k < doc.tree.details.size(); ++k)
        for (double v : doc.tree.details[k])
            out << "d" << (k + 1) << "," << format_exact(v) << "\n";
}

TreeDocument read_tree_csv(std::istream& in) {
    TreeDocument doc;
    std::map<std::string, std::string> meta;
    std::string raw;
    int line = 0;
    std::string mode_text = "periodic";
    while (std::getline(in, raw)) {
        ++line;
        // metadata lives in "# key value" comments
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) {
            std::string c = raw.substr(hash + 1);
            const std::size_t b = c.find_first_not_of(" \t");
            if (b != std::string::npos) {
                c = c.substr(b);
                const std::size_t sp = c.find(' ');
                if (sp != std::string::npos)
                    meta[c.substr(0, sp)] = c.substr(sp + 1);
            }
        }
        std::string text;
        if (!payload(raw, text)) continue;
        const std::size_t comma = text.find(',');
        if (comma == std::string::npos)
            throw CsvError("expected \"tag,value\"", line);
        const std::string tag = text.substr(0, comma);
        const double value = parse_number(text.substr(comma + 1), line);
        if (tag == "a") {
            doc.tree.approximation.push_back(value);
        } else if (tag.size() >= 2 && tag[0] == 'd') {
            char* end = nullptr;
            const long lvl = std::strtol(tag.c_str() + 1, &end, 10);
            if (*end != '\0' || lvl < 1)
                throw CsvError("bad level tag \"" + tag + "\"", line);
            if (static_cast<std::size_t>(lvl) > doc.tree.details.size())
                doc.tree.details.resize(static_cast<std::size_t>(lvl));
            doc.tree.details[static_cast<std::size_t>(lvl - 1)].push_back(value);
        } else {
            throw CsvError("unknown row tag \"" + tag + "\"", line);
        }
    }
    const auto meta_int = [&](const std::string& key, int& out_val) {
        auto it = meta.find(key);
        if (it == meta.end())
            throw CsvError("missing \"# " + key + "\" metadata", line);
        out_val = std::atoi(it->second.c_str());
    };
    meta_int("kind", doc.kind);
    meta_int("order", doc.order);
    meta_int("levels", doc.tree.levels);
    meta_int("original_length", doc.tree.original_length);
    if (auto it = meta.find("upsample_k"); it != meta.end())
        doc.upsample_k = std::atoi(it->second.c_str());
    if (auto it = meta.find("mode"); it != meta.end()) mode_text = it->second;
    if (mode_text == "periodic")
        doc.tree.boundary_mode = BoundaryMode::Periodic;
    else if (mode_text == "zeropad")
        doc.tree.boundary_mode = BoundaryMode::ZeroPad;
    else
        throw CsvError("unknown boundary mode \"" + mode_text + "\"", line);
    if (doc.tree.levels != static_cast<int>(doc.tree.details.size()))
        throw CsvError("level count does not match detail rows", line);
    return doc;
}

}  // namespace chebwav
