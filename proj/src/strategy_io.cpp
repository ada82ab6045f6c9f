#include "trac/strategy_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "trac/errors.hpp"

namespace trac {

namespace {

std::string format_vector(const BlochVector& v) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g", v.x, v.y, v.z);
    return buf;
}

BlochVector parse_vector(const std::string& value, int line_no) {
    std::istringstream in(value);
    BlochVector v;
    std::string extra;
    if (!(in >> v.x >> v.y >> v.z) || (in >> extra)) {
        throw ValidationError("strategy file line " + std::to_string(line_no) +
                              ": expected exactly three numbers, got '" + value + "'");
    }
    return v;
}

} // namespace

std::string strategy_to_text(const TemporalStrategy& strategy) {
    strategy.validate();
    std::string out = "n: " + std::to_string(strategy.n) + "\n";
    out += "input_state: " + format_vector(strategy.input_state) + "\n";
    for (const auto& a : strategy.alice_axes) out += "alice: " + format_vector(a) + "\n";
    for (const auto& b : strategy.bob_axes) out += "bob: " + format_vector(b) + "\n";
    return out;
}

TemporalStrategy strategy_from_text(const std::string& text) {
    TemporalStrategy strategy;
    bool have_n = false, have_state = false;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const size_t colon = line.find(':');
        if (colon == std::string::npos) {
            throw ValidationError("strategy file line " + std::to_string(line_no) +
                                  ": expected 'key: value', got '" + line + "'");
        }
        const std::string key = line.substr(first, colon - first);
        const std::string value = line.substr(colon + 1);
        if (key == "n") {
            char* end = nullptr;
            errno = 0;
            const long parsed = std::strtol(value.c_str(), &end, 10);
            while (end != nullptr && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
            if (errno != 0 || end == value.c_str() || *end != '\0' || parsed < 2 || parsed > 26) {
                throw ValidationError("strategy file line " + std::to_string(line_no) +
                                      ": bad n value '" + value + "'");
            }
            strategy.n = static_cast<int>(parsed);
            have_n = true;
        } else if (key == "input_state") {
            strategy.input_state = parse_vector(value, line_no);
            have_state = true;
        } else if (key == "alice") {
            strategy.alice_axes.push_back(parse_vector(value, line_no));
        } else if (key == "bob") {
            strategy.bob_axes.push_back(parse_vector(value, line_no));
        } else {
            throw ValidationError("strategy file line " + std::to_string(line_no) +
                                  ": unknown key '" + key + "'");
        }
    }
    if (!have_n) throw ValidationError("strategy file: missing 'n' line");
    if (!have_state) throw ValidationError("strategy file: missing 'input_state' line");
    strategy.validate();
    return strategy;
}

void write_strategy_file(const std::string& path, const TemporalStrategy& strategy) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open '" + path + "' for writing");
    out << strategy_to_text(strategy);
    if (!out) throw ValidationError("failed writing '" + path + "'");
}

TemporalStrategy read_strategy_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open strategy file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return strategy_from_text(buf.str());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

} // namespace trac
