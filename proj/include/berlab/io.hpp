#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "berlab/berezin.hpp"
#include "berlab/bounds.hpp"
#include "berlab/operator.hpp"
#include "berlab/rkhs.hpp"

namespace berlab {

using Json = nlohmann::ordered_json;

/// Kernel spec: {"kind": "szego"|"bergman"|"fock"|"gram", "points": [[re,im],...],
/// "gram": [[[re,im],...],...]} with row-major Gram entries.
KernelSpace space_from_json(const Json& j);
Json space_to_json(const KernelSpace& space);

/// Operator file: {"dim": n, "entries": [[[re,im],...],...]} row-major.
Operator operator_from_json(const Json& j);
Json operator_to_json(const Operator& a);

Json params_to_json(const BoundParams& p);
Json evaluation_to_json(const BoundEvaluation& ev);

/// CSV with header label_re,label_im,symbol_re,symbol_im,image_norm_sq.
void write_shell_csv(std::ostream& out, const std::vector<ShellPoint>& shell);

Json read_json_file(const std::string& path);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

}  // namespace berlab
