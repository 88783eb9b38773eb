#pragma once

//==============================================================================
// config.hpp
// Plain-text experiment configuration: "[section]" headers over key = value
// lines, '#' comments. Scalar function inputs are finite Fourier term lists,
//   l = const 0.2 ; cos 1 0 0 0 0.1 ; sin 0 1 0 0 0.05
// i.e. amplitude terms cos/sin(2 pi k.x) with integer frequency vectors.
//==============================================================================

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ac4x/form_field.hpp"
#include "ac4x/random_fields.hpp"

namespace ac4x::cli {

class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_text(const std::string& text);

    bool has(const std::string& section, const std::string& key) const;
    std::string get(const std::string& section, const std::string& key,
                    const std::string& fallback) const;
    std::string require(const std::string& section, const std::string& key) const;
    long get_int(const std::string& section, const std::string& key, long fallback) const;
    double get_double(const std::string& section, const std::string& key,
                      double fallback) const;
    bool get_bool(const std::string& section, const std::string& key, bool fallback) const;

    /// Parse a Fourier term list; throws IoFailure on malformed syntax.
    std::vector<TrigTerm> get_terms(const std::string& section, const std::string& key) const;

    /// FNV-1a 64 hash of the raw config bytes, hex-encoded.
    const std::string& hash() const { return hash_; }

  private:
    std::map<std::string, std::map<std::string, std::string>> data_;
    std::string hash_;
};

std::vector<TrigTerm> parse_terms(const std::string& text);

/// Build the scalar field of a term list, enforcing the band limit n/4.
FormField field_from_terms(Model model, int n, const std::vector<TrigTerm>& terms);

std::string fnv1a_hex(const std::string& bytes);

}  // namespace ac4x::cli
