#include "ac4x/serialization.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace ac4x {

using nlohmann::json;

std::string double_to_hex(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", x);
    return buf;
}

double hex_to_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw IoFailure("bad hex float: " + s);
    return v;
}

namespace {

json header_of(const FormField& f) {
    json j;
    j["model"] = model_name(f.model());
    j["degree"] = f.degree();
    j["n"] = f.n();
    j["components"] = f.ncomp();
    j["ordering"] = "row-major x1-fastest";
    return j;
}

json values_of(const FormField& f) {
    json vals = json::array();
    for (int c = 0; c < f.ncomp(); ++c) {
        json plane = json::array();
        const double* p = f.comp(c);
        for (std::size_t i = 0; i < f.npoints(); ++i) plane.push_back(double_to_hex(p[i]));
        vals.push_back(std::move(plane));
    }
    return vals;
}

FormField field_of(const json& j) {
    const Model model = model_from_name(j.at("model").get<std::string>());
    const int degree = j.at("degree").get<int>();
    const int n = j.at("n").get<int>();
    FormField f(model, degree, n);
    if (j.at("components").get<int>() != f.ncomp()) {
        throw IoFailure("formfield: component count does not match the degree");
    }
    const json& vals = j.at("values");
    if (vals.size() != static_cast<std::size_t>(f.ncomp())) {
        throw IoFailure("formfield: wrong number of component arrays");
    }
    for (int c = 0; c < f.ncomp(); ++c) {
        const json& plane = vals.at(static_cast<std::size_t>(c));
        if (plane.size() != f.npoints()) throw IoFailure("formfield: wrong plane length");
        double* p = f.comp(c);
        for (std::size_t i = 0; i < f.npoints(); ++i) {
            p[i] = hex_to_double(plane.at(i).get<std::string>());
        }
    }
    if (!f.all_finite()) throw IoFailure("formfield: non-finite values");
    return f;
}

}  // namespace

std::string formfield_to_json(const FormField& f) {
    json j = header_of(f);
    j["values"] = values_of(f);
    return j.dump();
}

FormField formfield_from_json(const std::string& text) {
    return field_of(json::parse(text));
}

void save_formfield(const FormField& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << formfield_to_json(f);
    if (!out) throw IoFailure("write failed: " + path);
}

FormField load_formfield(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return formfield_from_json(ss.str());
}

std::string acsfield_to_json(const AcsField& J) {
    json j = header_of(J.omega());
    j["provenance"] = provenance_name(J.provenance());
    j["values"] = values_of(J.omega());
    return j.dump();
}

AcsField acsfield_from_json(const std::string& text) {
    const json j = json::parse(text);
    FormField f = field_of(j);
    Provenance tag = Provenance::custom;
    if (j.contains("provenance")) {
        const std::string name = j.at("provenance").get<std::string>();
        for (Provenance p : {Provenance::standard, Provenance::fls, Provenance::lee,
                             Provenance::tilde_family, Provenance::anti_preserving,
                             Provenance::custom}) {
            if (provenance_name(p) == name) tag = p;
        }
    }
    return AcsField(std::move(f), tag);
}

void save_acsfield(const AcsField& J, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoFailure("cannot open for writing: " + path);
    out << acsfield_to_json(J);
    if (!out) throw IoFailure("write failed: " + path);
}

AcsField load_acsfield(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return acsfield_from_json(ss.str());
}

}  // namespace ac4x
