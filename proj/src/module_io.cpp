#include "fig/module_io.hpp"

#include <fstream>

namespace fig {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &msg) { throw ParseError(msg); }

const json &need(const json &j, const char *key, const std::string &where) {
  if (!j.is_object() || !j.contains(key))
    fail(where + ": missing \"" + key + "\"");
  return j.at(key);
}

int as_int(const json &j, const std::string &where) {
  if (!j.is_number_integer())
    fail(where + ": expected an integer");
  return j.get<int>();
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i)
    f *= i;
  return f;
}

long wreath_order(const FiniteGroup &g, int n) {
  long o = factorial(n);
  for (int i = 0; i < n; ++i)
    o *= g.order();
  return o;
}

Matrix matrix_from_json(const FieldSpec &field, std::size_t dim, const json &j,
                        const std::string &where) {
  if (!j.is_array() || j.size() != dim)
    fail(where + ": expected " + std::to_string(dim) + " rows");
  std::vector<std::vector<mpq_class>> rows;
  for (const auto &r : j) {
    if (!r.is_array() || r.size() != dim)
      fail(where + ": expected rows of length " + std::to_string(dim));
    std::vector<mpq_class> row;
    for (const auto &e : r)
      row.push_back(parse_rational(e));
    rows.push_back(std::move(row));
  }
  if (dim == 0)
    return Matrix(field, 0, 0);
  return Matrix::from_rationals(field, rows);
}

json rational_json(const mpq_class &q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return q.get_num().get_si();
  return format_rational(q);
}

json matrix_json(const Matrix &m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k)
      row.push_back(rational_json(m.get(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace

mpq_class parse_rational(const json &j) {
  if (j.is_number_integer())
    return mpq_class(j.get<long>());
  if (j.is_string()) {
    const auto &s = j.get_ref<const std::string &>();
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
      fail("malformed rational \"" + s + "\"");
    if (q.get_den() == 0)
      fail("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
  }
  fail("expected an integer or a \"p/q\" string");
}

std::string format_rational(const mpq_class &q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str(10);
}

FieldSpec parse_field(const json &field, const json *p) {
  if (!field.is_string())
    fail("field: expected a string");
  auto s = field.get<std::string>();
  try {
    if (s == "Fp") {
      if (!p || !p->is_number_integer() || p->get<long>() < 2)
        fail("field: \"Fp\" needs an integer \"p\"");
      return FieldSpec::prime(static_cast<std::uint32_t>(p->get<long>()));
    }
    return FieldSpec::parse(s);
  } catch (const std::invalid_argument &e) {
    fail(std::string("field: ") + e.what());
  }
}

json field_to_json(const FieldSpec &f) { return f.name(); }

FiniteGroup parse_group(const json &j) {
  try {
    if (j.is_string())
      return FiniteGroup::preset(j.get<std::string>());
    if (j.is_object() && j.contains("table")) {
      std::vector<std::vector<int>> t;
      for (const auto &row : j.at("table")) {
        std::vector<int> r;
        for (const auto &e : row)
          r.push_back(as_int(e, "group table"));
        t.push_back(std::move(r));
      }
      return FiniteGroup::from_table(t);
    }
  } catch (const std::invalid_argument &e) {
    fail(std::string("group: ") + e.what());
  } catch (const json::exception &e) {
    fail(std::string("group: ") + e.what());
  }
  fail("group: expected a preset name or {\"table\": [[...]]}");
}

json group_to_json(const FiniteGroup &g) {
  if (g.name() != "table")
    return g.name();
  return json{{"table", g.table()}};
}

GnRep rep_from_json(const FieldSpec &field, const FiniteGroup &g, int n, std::size_t dim,
                    const json &action) {
  GnRep rep;
  rep.n = n;
  rep.dim = dim;
  std::size_t n_swaps = n >= 2 ? n - 1 : 0;
  std::size_t n_decs = n >= 1 ? g.order() - 1 : 0;
  const json empty = json::array();
  const json &sw = action.contains("transpositions") ? action.at("transpositions") : empty;
  const json &dc = action.contains("decorations") ? action.at("decorations") : empty;
  if (!sw.is_array() || sw.size() != n_swaps)
    fail("action: expected " + std::to_string(n_swaps) + " transposition matrices");
  if (!dc.is_array() || dc.size() != n_decs)
    fail("action: expected " + std::to_string(n_decs) + " decoration matrices");
  for (std::size_t i = 0; i < n_swaps; ++i)
    rep.swaps.push_back(matrix_from_json(field, dim, sw[i], "transposition " + std::to_string(i + 1)));
  for (std::size_t i = 0; i < n_decs; ++i)
    rep.decs.push_back(matrix_from_json(field, dim, dc[i], "decoration " + std::to_string(i + 1)));
  auto bad = validate_rep(g, rep);
  if (!bad.empty())
    fail("action: " + bad.front());
  return rep;
}

json rep_to_json(const GnRep &rep) {
  json sw = json::array(), dc = json::array();
  for (const auto &m : rep.swaps)
    sw.push_back(matrix_json(m));
  for (const auto &m : rep.decs)
    dc.push_back(matrix_json(m));
  return json{{"transpositions", sw}, {"decorations", dc}};
}

ModuleFile parse_module_file(const json &j) {
  if (!j.is_object())
    fail("top level: expected an object");
  ModuleFile out;
  auto &p = out.presentation;
  try {
    p.field = j.contains("field") ? parse_field(j.at("field"), j.contains("p") ? &j.at("p") : nullptr)
                                  : FieldSpec::rationals();
    p.group = j.contains("group") ? parse_group(j.at("group")) : FiniteGroup::trivial();
    if (j.contains("truncation")) {
      int t = as_int(j.at("truncation"), "truncation");
      if (t < 0)
        fail("truncation: must be non-negative");
      out.truncation = t;
    }
    if (j.contains("generators")) {
      const auto &gens = j.at("generators");
      if (!gens.is_array())
        fail("generators: expected a list");
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::string where = "generator " + std::to_string(k);
        const auto &g = gens[k];
        int deg = as_int(need(g, "degree", where), where + " degree");
        if (deg < 0 || deg > 12)
          fail(where + ": degree out of range");
        if (g.contains("action")) {
          int dim = as_int(need(g, "dim", where), where + " dim");
          if (dim < 0)
            fail(where + ": negative dim");
          p.generators.push_back({deg, rep_from_json(p.field, p.group, deg, dim, g.at("action"))});
        } else {
          if (g.contains("dim") && as_int(g.at("dim"), where) != wreath_order(p.group, deg))
            fail(where + ": dim differs from the regular representation");
          p.generators.push_back({deg, regular_rep(p.field, p.group, deg)});
        }
      }
    }
    if (j.contains("relations")) {
      const auto &rels = j.at("relations");
      if (!rels.is_array())
        fail("relations: expected a list");
      for (std::size_t k = 0; k < rels.size(); ++k) {
        std::string where = "relation " + std::to_string(k);
        const auto &r = rels[k];
        Relation rel;
        rel.degree = as_int(need(r, "degree", where), where + " degree");
        if (rel.degree < 0)
          fail(where + ": negative degree");
        for (const auto &t : need(r, "terms", where)) {
          RelationTerm term;
          int gi = as_int(need(t, "gen", where), where + " gen");
          if (gi < 0 || static_cast<std::size_t>(gi) >= p.generators.size())
            fail(where + ": unknown generator " + std::to_string(gi));
          term.gen = gi;
          const auto &gen = p.generators[gi];
          term.map.src = gen.degree;
          term.map.dst = rel.degree;
          for (const auto &x : need(t, "inj", where))
            term.map.inj.push_back(as_int(x, where + " inj") - 1);
          if (t.contains("dec"))
            for (const auto &x : t.at("dec"))
              term.map.dec.push_back(as_int(x, where + " dec"));
          else
            term.map.dec.assign(term.map.inj.size(), 0);
          const auto &c = need(t, "coeff", where);
          if (c.is_array()) {
            for (const auto &x : c)
              term.coeff.push_back(parse_rational(x));
          } else {
            term.coeff.assign(gen.rep.dim, mpq_class(0));
            if (gen.rep.dim == 0)
              fail(where + ": scalar coefficient on a zero generator");
            term.coeff[0] = parse_rational(c);
          }
          rel.terms.push_back(std::move(term));
        }
        p.relations.push_back(std::move(rel));
      }
    }
    validate_presentation(p);
  } catch (const ParseError &) {
    throw;
  } catch (const std::invalid_argument &e) {
    fail(e.what());
  } catch (const json::exception &e) {
    fail(e.what());
  }
  return out;
}

ModuleFile read_module_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error &e) {
    fail(path + ": " + e.what());
  }
  return parse_module_file(j);
}

json to_json(const Presentation &p, std::optional<int> truncation) {
  json out;
  if (p.field.is_rational()) {
    out["field"] = "Q";
  } else {
    out["field"] = "Fp";
    out["p"] = p.field.characteristic();
  }
  out["group"] = group_to_json(p.group);
  if (truncation)
    out["truncation"] = *truncation;
  json gens = json::array();
  for (const auto &g : p.generators) {
    json e{{"degree", g.degree}, {"dim", g.rep.dim}};
    bool regular = static_cast<long>(g.rep.dim) == wreath_order(p.group, g.degree);
    if (regular) {
      auto reg = regular_rep(p.field, p.group, g.degree);
      regular = reg.swaps == g.rep.swaps && reg.decs == g.rep.decs;
    }
    if (!regular)
      e["action"] = rep_to_json(g.rep);
    gens.push_back(std::move(e));
  }
  out["generators"] = gens;
  json rels = json::array();
  for (const auto &r : p.relations) {
    json terms = json::array();
    for (const auto &t : r.terms) {
      json inj = json::array(), coeff = json::array();
      for (int x : t.map.inj)
        inj.push_back(x + 1);
      for (const auto &c : t.coeff)
        coeff.push_back(rational_json(c));
      terms.push_back(json{{"gen", t.gen}, {"inj", inj}, {"dec", t.map.dec}, {"coeff", coeff}});
    }
    rels.push_back(json{{"degree", r.degree}, {"terms", terms}});
  }
  out["relations"] = rels;
  return out;
}

} // namespace fig
