#pragma once

// JSON input loading with validation, deterministic report serialization
// (sorted keys, no timestamps) and atomic file output.

#include "telhom/equivariant.hpp"
#include "telhom/verify.hpp"

#include <stdexcept>
#include <string>

namespace telhom {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputSpec {
    CellComplex complex;
    Group group;
    VertexAction action;
    std::string group_name;
    std::string source;   // file path or "builtin:point"
};

// trivial, z2..z12, z2xz2
Group builtin_group(const std::string& name);

// schema: { "vertices": n, "facets": [[...]], "group": name | {"elements",
// "table"}, "action": { element: [permutation] } }; a non-empty override
// replaces the file's group, the identity row of the action may be omitted,
// and a trivial group needs no action at all
InputSpec load_input(const std::string& path, const std::string& group_override = "");

// one-point space for the given builtin group
InputSpec point_input(const std::string& group_name);

std::string equivariant_report(const InputSpec& in, const EquivariantOptions& opt,
                               const EquivariantResult& r);
std::string module_report(const InputSpec& in, const EquivariantOptions& opt,
                          const ModuleActionResult& r);
std::string kirwan_report(const InputSpec& in, const EquivariantOptions& opt,
                          const KirwanResult& r);
std::string verify_report(const VerifyOptions& opt, const std::vector<SuiteResult>& suites);

// degrees as rows, stages as columns, telescope column last
std::string equivariant_tsv(const EquivariantResult& r, std::size_t max_degree);

// write to a sibling temp file, then rename over the target
void write_text_atomic(const std::string& path, const std::string& content);

} // namespace telhom
