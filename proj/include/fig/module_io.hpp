#pragma once

/**
 * @file module_io.hpp
 * @brief JSON description files for presentations.
 *
 * A file is one object:
 *
 *   {"field": "Q" | "Fp", "p": 3, "group": "Z2" | {"table": [[...]]},
 *    "truncation": 8,
 *    "generators": [{"degree": 1, "dim": 2, "action": {...}}],
 *    "relations": [{"degree": 2, "terms": [{"gen": 0, "inj": [2], "dec": [0],
 *                                           "coeff": ["1/2", 0]}]}]}
 *
 * `inj` lists f(1), ..., f(m) 1-based; `dec` lists group element indices.
 * `coeff` is a row of length dim W or a scalar c standing for c e_1.
 * `action` holds "transpositions" (s_1..s_{n-1}) and "decorations" (d_g for
 * g = 1..|G|-1 acting on the first point), each a matrix given by rows acting
 * on row vectors; omitted, the generator is the regular representation.
 * Rationals are integers or "p/q" strings.
 */

#include "fig/figmodules.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace fig {

class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ModuleFile {
  Presentation presentation;
  std::optional<int> truncation;
};

mpq_class parse_rational(const nlohmann::json &j);
std::string format_rational(const mpq_class &q);

/// "Q", "Fp" with a sibling "p", or "Fp:<p>".
FieldSpec parse_field(const nlohmann::json &field, const nlohmann::json *p = nullptr);
nlohmann::json field_to_json(const FieldSpec &f);
/// Preset name or {"table": [[...]]}.
FiniteGroup parse_group(const nlohmann::json &j);
nlohmann::json group_to_json(const FiniteGroup &g);

/// Throws ParseError on any schema or validation problem.
ModuleFile parse_module_file(const nlohmann::json &j);
ModuleFile read_module_file(const std::string &path);
nlohmann::json to_json(const Presentation &p, std::optional<int> truncation = std::nullopt);

nlohmann::json rep_to_json(const GnRep &rep);
GnRep rep_from_json(const FieldSpec &field, const FiniteGroup &g, int n, std::size_t dim,
                    const nlohmann::json &action);

} // namespace fig
