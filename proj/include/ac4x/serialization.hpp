#pragma once

//==============================================================================
// serialization.hpp
// FormField (and AcsField) file format: a single JSON document with header
// fields {model, degree, n, components, ordering} and the coefficient array
// inline, one array of hex-float strings per component. Hex floats give a
// bit-exact round trip at double precision. Extension: .formfield.json.
//==============================================================================

#include <string>

#include "ac4x/acs.hpp"
#include "ac4x/form_field.hpp"

namespace ac4x {

std::string formfield_to_json(const FormField& f);
FormField formfield_from_json(const std::string& text);

void save_formfield(const FormField& f, const std::string& path);
FormField load_formfield(const std::string& path);

/// Same format with a "provenance" header entry.
std::string acsfield_to_json(const AcsField& J);
AcsField acsfield_from_json(const std::string& text);

void save_acsfield(const AcsField& J, const std::string& path);
AcsField load_acsfield(const std::string& path);

/// Bit-exact double <-> string helpers (printf %a / strtod).
std::string double_to_hex(double x);
double hex_to_double(const std::string& s);

}  // namespace ac4x
