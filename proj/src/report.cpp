#include "fig/report.hpp"

#include <algorithm>
#include <sstream>

namespace fig {

using nlohmann::json;

namespace {

json value(json v, bool certified) { return {{"value", std::move(v)}, {"certified", certified}}; }

json dims_json(const std::vector<std::size_t> &d) { return json(d); }

json rational_json(const mpq_class &q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p())
    return q.get_num().get_si();
  return q.get_str();
}

bool is_certified_value(const json &j) {
  return j.is_object() && j.size() == 2 && j.contains("value") && j.contains("certified");
}

std::string scalar_text(const json &j) {
  if (j.is_string())
    return j.get<std::string>();
  if (j.is_null())
    return "none";
  if (j.is_array()) {
    std::string s;
    for (std::size_t k = 0; k < j.size(); ++k)
      s += (k ? " " : "") + scalar_text(j[k]);
    return s.empty() ? "(empty)" : s;
  }
  if (j.is_object()) {
    std::string s;
    for (auto it = j.begin(); it != j.end(); ++it)
      s += (s.empty() ? "" : " ") + it.key() + "=" + scalar_text(it.value());
    return "{" + s + "}";
  }
  return j.dump();
}

void flatten(const json &j, const std::string &prefix, std::vector<std::pair<std::string, std::string>> &rows) {
  if (is_certified_value(j)) {
    rows.emplace_back(prefix, scalar_text(j["value"]) + (j["certified"].get<bool>() ? "" : "  (truncated)"));
    return;
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    return;
  }
  rows.emplace_back(prefix, scalar_text(j));
}

} // namespace

json ext_json(const ExtInt &v) {
  if (v.finite())
    return v.value;
  return v.str();
}

json certified_json(const ExtInt &v, bool certified) { return value(ext_json(v), certified); }

std::vector<std::pair<Invariant, int>> missing_windows(const Analysis &an, const ReportOptions &opts) {
  std::vector<std::pair<Invariant, int>> out;
  for (auto inv : opts.invariants)
    if (!an.certifies(inv, opts.i_max))
      out.emplace_back(inv, required_truncation(inv, an.generation_degree(), an.relation_degree(), opts.i_max));
  return out;
}

json hilbert_report(const Analysis &an) {
  auto h = an.hilbert();
  json out;
  out["values"] = dims_json(h.values);
  out["required_truncation"] = h.required;
  out["stable_range_start"] = value(h.start, h.certified);
  out["homological_start"] = h.homological_start;
  if (h.polynomial) {
    json coeffs = json::array();
    for (const auto &c : *h.polynomial)
      coeffs.push_back(rational_json(c));
    out["polynomial"] = value(polynomial_string(*h.polynomial), h.certified);
    out["coefficients"] = coeffs;
  } else {
    out["polynomial"] = value(nullptr, false);
    out["coefficients"] = nullptr;
  }
  out["disagreements"] = h.disagreements;
  out["earliest_agreement"] = h.earliest_agreement ? json(*h.earliest_agreement) : json(nullptr);
  return out;
}

json filtration_report(const Analysis &an) {
  auto f = an.sharp_filtration();
  json out;
  out["sharp_filtered"] = value(f.h1_vanishes, f.certified);
  out["constructed"] = f.constructed;
  json cof = json::array();
  for (const auto &c : f.cofactors)
    cof.push_back({{"degree", c.degree}, {"dim", c.dim}});
  out["cofactors"] = cof;
  out["matches_h0"] = f.matches_h0;
  if (!f.h1_vanishes) {
    auto h1 = an.hd(1);
    out["h1_degree"] = certified_json(h1.value, h1.certified);
  }
  out["failed_degree"] = f.failed_degree >= 0 ? json(f.failed_degree) : json(nullptr);
  return out;
}

json analysis_report(const Analysis &an, const ReportOptions &opts) {
  auto wants = [&](Invariant inv) {
    return std::find(opts.invariants.begin(), opts.invariants.end(), inv) != opts.invariants.end();
  };
  json out;
  const auto &v = an.module();
  json mod;
  mod["field"] = v.field().name();
  mod["group"] = v.group().name();
  mod["dims"] = dims_json(an.dims());
  auto deg = an.module_degree();
  if (an.dims().back() != 0)
    mod["degree"] = value(">= " + std::to_string(an.truncation()), false);
  else
    mod["degree"] = certified_json(deg.value, deg.certified);
  mod["generation_degree_used"] = an.generation_degree();
  mod["relation_degree_used"] = an.relation_degree();
  mod["degrees_from"] = an.declared() ? "presentation" : "homology";
  mod["stable_start"] = an.stable_start();
  out["module"] = mod;

  json cert;
  cert["truncation"] = an.truncation();
  cert["i_max"] = opts.i_max;
  json windows;
  for (auto inv : opts.invariants)
    windows[invariant_name(inv)] =
        required_truncation(inv, an.generation_degree(), an.relation_degree(), opts.i_max);
  cert["required"] = windows;
  out["certification"] = cert;

  if (wants(Invariant::degrees)) {
    json d;
    for (int i = 0; i <= opts.i_max; ++i) {
      auto h = an.hd(i);
      d["hd_" + std::to_string(i)] = certified_json(h.value, h.certified);
    }
    auto h0 = an.hd(0);
    d["generation_degree"] = certified_json(h0.value, h0.certified);
    d["relation_degree"] = an.relation_degree() < 0 ? json("-inf") : json(an.relation_degree());
    out["degrees"] = d;
  }
  if (wants(Invariant::torsion)) {
    auto t = an.torsion();
    out["torsion"] = {{"torsion_free", value(t.torsion_free, t.certified)},
                      {"dims", value(dims_json(t.dims), t.certified)}};
  }
  if (wants(Invariant::depth)) {
    auto d = an.depth();
    out["depth"] = certified_json(d.value, d.certified);
  }
  if (wants(Invariant::derived_regularity)) {
    auto dr = an.derived_regularity();
    json degs = json::array();
    for (const auto &x : dr.degrees)
      degs.push_back(ext_json(x));
    out["derived_regularity"] = {{"dreg", certified_json(dr.dreg, dr.certified)},
                                 {"dwidth", certified_json(dr.dwidth, dr.certified)},
                                 {"h1_da_degrees", value(degs, dr.certified)}};
  }
  if (wants(Invariant::regularity)) {
    auto r = an.regularity(opts.i_max);
    bool hom = an.hd(0).certified && an.hd(1).certified;
    out["regularity"] = {{"reg", certified_json(r.value, r.certified)},
                         {"bound_declared", certified_json(an.regularity_bound(), true)},
                         {"bound_homological", certified_json(an.regularity_bound_homological(), hom)}};
  }
  if (wants(Invariant::nagpal)) {
    auto n = an.nagpal();
    out["nagpal"] = {{"number", certified_json(n.direct, n.certified)},
                     {"from_dreg", certified_json(n.from_dreg, n.certified)}};
  }
  if (wants(Invariant::hilbert))
    out["hilbert"] = hilbert_report(an);
  if (wants(Invariant::filtration))
    out["filtration"] = filtration_report(an);
  return out;
}

std::string text_report(const json &report) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto &r : rows)
    width = std::max(width, r.first.size());
  std::ostringstream os;
  for (const auto &[k, v] : rows)
    os << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return os.str();
}

} // namespace fig
