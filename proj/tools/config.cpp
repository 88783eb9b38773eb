#include "config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ac4x/errors.hpp"

namespace ac4x::cli {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Config Config::parse_text(const std::string& text) {
    Config cfg;
    cfg.hash_ = fnv1a_hex(text);
    std::istringstream in(text);
    std::string line;
    std::string section = "experiment";
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash_pos = line.find('#');
        if (hash_pos != std::string::npos) line.erase(hash_pos);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw IoFailure("config line " + std::to_string(lineno) + ": unterminated section");
            }
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw IoFailure("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw IoFailure("config line " + std::to_string(lineno) + ": empty key");
        }
        cfg.data_[section][key] = value;
    }
    return cfg;
}

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open config: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

bool Config::has(const std::string& section, const std::string& key) const {
    const auto s = data_.find(section);
    return s != data_.end() && s->second.count(key) > 0;
}

std::string Config::get(const std::string& section, const std::string& key,
                        const std::string& fallback) const {
    const auto s = data_.find(section);
    if (s == data_.end()) return fallback;
    const auto k = s->second.find(key);
    return k == s->second.end() ? fallback : k->second;
}

std::string Config::require(const std::string& section, const std::string& key) const {
    if (!has(section, key)) {
        throw IoFailure("config: missing required key [" + section + "] " + key);
    }
    return get(section, key, "");
}

long Config::get_int(const std::string& section, const std::string& key, long fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get(section, key, "");
    char* end = nullptr;
    const long out = std::strtol(v.c_str(), &end, 10);
    if (end == v.c_str() || *end != '\0') {
        throw IoFailure("config: bad integer for [" + section + "] " + key + ": " + v);
    }
    return out;
}

double Config::get_double(const std::string& section, const std::string& key,
                          double fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get(section, key, "");
    char* end = nullptr;
    const double out = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0') {
        throw IoFailure("config: bad number for [" + section + "] " + key + ": " + v);
    }
    return out;
}

bool Config::get_bool(const std::string& section, const std::string& key, bool fallback) const {
    if (!has(section, key)) return fallback;
    const std::string v = get(section, key, "");
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw IoFailure("config: bad boolean for [" + section + "] " + key + ": " + v);
}

std::vector<TrigTerm> parse_terms(const std::string& text) {
    std::vector<TrigTerm> terms;
    std::istringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        group = trim(group);
        if (group.empty()) continue;
        std::istringstream in(group);
        std::string kind;
        in >> kind;
        TrigTerm t;
        if (kind == "const") {
            double amp = 0.0;
            if (!(in >> amp)) throw IoFailure("term '" + group + "': expected const <amp>");
            t.amp_cos = amp;
        } else if (kind == "cos" || kind == "sin") {
            double amp = 0.0;
            if (!(in >> t.k[0] >> t.k[1] >> t.k[2] >> t.k[3] >> amp)) {
                throw IoFailure("term '" + group + "': expected " + kind +
                                " <k1> <k2> <k3> <k4> <amp>");
            }
            (kind == "cos" ? t.amp_cos : t.amp_sin) = amp;
        } else {
            throw IoFailure("term '" + group + "': unknown kind '" + kind + "'");
        }
        std::string extra;
        if (in >> extra) throw IoFailure("term '" + group + "': trailing tokens");
        terms.push_back(t);
    }
    return terms;
}

std::vector<TrigTerm> Config::get_terms(const std::string& section,
                                        const std::string& key) const {
    return parse_terms(get(section, key, ""));
}

FormField field_from_terms(Model model, int n, const std::vector<TrigTerm>& terms) {
    for (const auto& t : terms) {
        for (int d = 0; d < 4; ++d) {
            if (std::abs(t.k[static_cast<std::size_t>(d)]) > n / 4) {
                throw IoFailure("term frequency exceeds the band limit n/4");
            }
        }
        if (model == Model::kt && t.k[3] != 0) {
            throw IoFailure("kt model: the fourth frequency index must be 0");
        }
    }
    return scalar_from_terms(model, n, terms);
}

}  // namespace ac4x::cli
