#include "pacbound/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace pacbound {

std::size_t Dataset::arity() const {
    if (samples.empty()) throw std::logic_error("Dataset: arity of empty dataset");
    return samples.front().x.size();
}

bool Dataset::labeled() const {
    if (samples.empty()) return false;
    return samples.front().y.has_value();
}

void Dataset::check() const {
    if (samples.empty()) throw std::invalid_argument("dataset: must contain at least one row");
    const std::size_t k = samples.front().x.size();
    const bool lab = samples.front().y.has_value();
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].x.size() != k) {
            throw std::invalid_argument("dataset: row " + std::to_string(i + 1) +
                                        " has inconsistent feature arity");
        }
        if (samples[i].y.has_value() != lab) {
            throw std::invalid_argument("dataset: row " + std::to_string(i + 1) +
                                        " has inconsistent label presence");
        }
    }
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    // Fields never contain quoted separators in this format; reject quotes
    // outright rather than guessing.
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

double parse_field(const std::string& s, std::size_t line_no, const std::string& col) {
    std::string t = s;
    // trim ascii whitespace
    const auto b = t.find_first_not_of(" \t");
    const auto e = t.find_last_not_of(" \t");
    if (b == std::string::npos) {
        throw std::invalid_argument("csv line " + std::to_string(line_no) + ": empty field in column " + col);
    }
    t = t.substr(b, e - b + 1);
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("csv line " + std::to_string(line_no) + ": non-numeric field '" + t +
                                    "' in column " + col);
    }
    return v;
}

} // namespace

Dataset load_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("dataset: cannot open '" + path.string() + "'");

    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("csv line 1: missing header row");
    const auto header = split_csv_line(line);
    if (header.empty()) throw std::invalid_argument("csv line 1: empty header row");

    bool has_label = false;
    std::size_t k = header.size();
    if (header.back() == "y") {
        has_label = true;
        k = header.size() - 1;
    }
    if (k == 0) throw std::invalid_argument("csv line 1: need at least one feature column x0");
    for (std::size_t j = 0; j < k; ++j) {
        const std::string want = "x" + std::to_string(j);
        if (header[j] != want) {
            throw std::invalid_argument("csv line 1: expected column '" + want + "', found '" + header[j] + "'");
        }
    }

    Dataset data;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(header.size()) + " fields, found " +
                                        std::to_string(fields.size()));
        }
        Sample s;
        s.x.reserve(k);
        for (std::size_t j = 0; j < k; ++j) s.x.push_back(parse_field(fields[j], line_no, header[j]));
        if (has_label) s.y = parse_field(fields[k], line_no, "y");
        data.samples.push_back(std::move(s));
    }
    data.check();
    return data;
}

Dataset concat(const Dataset& a, const Dataset& b) {
    Dataset out = a;
    out.samples.insert(out.samples.end(), b.samples.begin(), b.samples.end());
    out.check();
    return out;
}

} // namespace pacbound
