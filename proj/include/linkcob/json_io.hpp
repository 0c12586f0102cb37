#pragma once

#include "linkcob/exactlink.hpp"
#include "linkcob/forms.hpp"

#include <json.hpp>

#include <string>

namespace linkcob::jsonio {

using nlohmann::json;

// Integers ride as JSON numbers while they fit losslessly in a double-backed
// reader (|x| <= 2^53) and as decimal strings beyond that, so round-trips are
// bit-exact even through sloppy consumers.
json int_to_json(const Int& x);
Int int_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
// `cols` disambiguates matrices with zero rows, whose JSON form is [].
IntMatrix matrix_from_json(const json& j, std::size_t cols_when_empty = 0);

json group_to_json(const abgroup::FgAbelianGroup& g);
abgroup::FgAbelianGroup group_from_json(const json& j);

json form_to_json(const forms::BilinearForm& form, const std::string& name = "");
forms::BilinearForm form_from_json(const json& j, std::string* name_out = nullptr);

json submodule_to_json(const zlattice::Submodule& m);
zlattice::Submodule submodule_from_json(const json& j);

json sequence_to_json(const exactlink::SeifertHomologyData& data);
exactlink::SeifertHomologyData sequence_from_json(const json& j);

// File helpers; throw ParseError on I/O or syntax problems.
json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

forms::BilinearForm read_form_file(const std::string& path, std::string* name_out = nullptr);
zlattice::Submodule read_witness_file(const std::string& path);
exactlink::SeifertHomologyData read_sequence_file(const std::string& path);

}  // namespace linkcob::jsonio
