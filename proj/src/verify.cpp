#include "fig/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace fig {

namespace {

std::size_t draw(std::mt19937_64 &rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool all_zero(const std::vector<std::size_t> &v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

std::string dims_string(const std::vector<std::size_t> &v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Check named(std::string name) {
  Check c;
  c.name = std::move(name);
  return c;
}

void fail(Check &c, const std::string &why) {
  if (c.passed)
    c.witness = why;
  c.passed = false;
}

/// Coordinates (A, k) of M_n with {0, ..., a-1} inside A.
std::vector<std::size_t> head_coords(const FreeModule &m, int n, int a) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < m.blocks().size(); ++b) {
    const auto &blk = m.blocks()[b];
    if (blk.degree < a || blk.degree > n)
      continue;
    auto subs = subsets(n, blk.degree);
    for (std::size_t s = 0; s < subs.size(); ++s) {
      bool has = true;
      for (int i = 0; i < a && has; ++i)
        has = std::binary_search(subs[s].begin(), subs[s].end(), i);
      if (!has)
        continue;
      for (std::size_t k = 0; k < blk.rep.dim; ++k)
        out.push_back(m.offset(n, b) + s * blk.rep.dim + k);
    }
  }
  return out;
}

std::vector<std::size_t> complement(std::size_t dim, const std::vector<std::size_t> &keep) {
  std::vector<char> in(dim, 0);
  for (auto c : keep)
    in[c] = 1;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < dim; ++c)
    if (!in[c])
      out.push_back(c);
  return out;
}

} // namespace

Presentation random_presentation(std::mt19937_64 &rng, const FieldSpec &field,
                                 const FiniteGroup &group, const RandomParams &params) {
  Presentation p;
  p.field = field;
  p.group = group;
  int ng = 1 + static_cast<int>(draw(rng, params.max_generators));
  int least = params.d_max;
  for (int j = 0; j < ng; ++j) {
    int m = static_cast<int>(draw(rng, params.d_max + 1));
    least = std::min(least, m);
    p.generators.push_back({m, regular_rep(field, group, m)});
  }
  int nr = 1 + static_cast<int>(draw(rng, params.max_relations));
  for (int k = 0; k < nr; ++k) {
    Relation rel;
    int lo = least, hi = std::max(least, params.r_max);
    rel.degree = lo + static_cast<int>(draw(rng, hi - lo + 1));
    std::vector<std::size_t> eligible;
    for (std::size_t j = 0; j < p.generators.size(); ++j)
      if (p.generators[j].degree <= rel.degree)
        eligible.push_back(j);
    int nt = 1 + static_cast<int>(draw(rng, params.max_terms));
    for (int t = 0; t < nt; ++t) {
      std::size_t j = eligible[draw(rng, eligible.size())];
      const auto &gen = p.generators[j];
      auto hom = enumerate_hom(gen.degree, rel.degree, group);
      RelationTerm term;
      term.gen = j;
      term.map = hom[draw(rng, hom.size())];
      term.coeff.assign(gen.rep.dim, mpq_class(0));
      term.coeff[0] = draw(rng, 2) ? 1 : -1;
      rel.terms.push_back(std::move(term));
    }
    p.relations.push_back(std::move(rel));
  }
  return p;
}

std::vector<CorpusEntry> random_corpus(const RandomParams &params) {
  std::vector<CorpusEntry> out;
  for (int k = 0; k < params.count; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    const auto &field = params.fields[k % params.fields.size()];
    const auto &group = params.groups[(k / params.fields.size()) % params.groups.size()];
    out.push_back({k, random_presentation(rng, field, group, params)});
  }
  return out;
}

bool InstanceReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

bool VerifyReport::passed() const {
  return std::all_of(instances.begin(), instances.end(), [](auto &i) { return i.passed(); }) &&
         std::all_of(suite_checks.begin(), suite_checks.end(), [](auto &c) { return c.passed; });
}

Check check_intersection_identity(const Realization &real, int d, int r) {
  auto c = named("intersection_identity");
  const auto &m = real.cover;
  const auto &k = real.relations;
  int big_n = m.truncation();
  if (r < 0) {
    c.witness = "no relations";
    return c;
  }
  int start = std::max(std::min(r, d) + r + 1, 1);
  if (start > big_n) {
    c.certified = false;
    c.witness = "no degree in range";
    return c;
  }
  for (int n = start; n <= big_n && c.passed; ++n) {
    auto below = k[n - 1].basis();
    for (int a = 1; a <= n; ++a) {
      auto lhs = intersect_coordinates(k[n], complement(m.dim(n), head_coords(m, n, a)));
      Subspace rhs(m.field(), m.dim(n));
      for (int i = 0; i < a; ++i)
        rhs.insert(below * m.skip(n, i));
      if (lhs.dim() != rhs.dim() || !lhs.contains(rhs.basis())) {
        fail(c, "n=" + std::to_string(n) + " a=" + std::to_string(a) + ": " +
                    std::to_string(lhs.dim()) + " vs " + std::to_string(rhs.dim()));
        break;
      }
    }
  }
  return c;
}

Check check_generated_submodule(std::mt19937_64 &rng, const FieldSpec &field,
                                const FiniteGroup &group, int m, int truncation) {
  auto c = named("generated_submodule");
  Presentation p;
  p.field = field;
  p.group = group;
  p.generators.push_back({m, regular_rep(field, group, m)});
  RelationTerm t;
  t.gen = 0;
  t.map = FIGMorphism::identity(m);
  for (std::size_t k = 0; k < p.generators[0].rep.dim; ++k)
    t.coeff.push_back(mpq_class(static_cast<long>(draw(rng, 3)) - 1));
  p.relations.push_back({m, {t}});
  auto real = realize(p, truncation);
  auto u = subquotient(real.cover, real.relations, zero_spaces(real.cover), truncation).module;
  auto hu = Resolution(u).homology_dims(1);
  auto hv = Resolution(real.module).homology_dims(1);
  c.witness = "m=" + std::to_string(m) + " dim U_m=" + std::to_string(real.relations[m].dim());
  if (!all_zero(hu))
    fail(c, c.witness + ": H_1(U) = " + dims_string(hu));
  if (!all_zero(hv))
    fail(c, c.witness + ": H_1(V) = " + dims_string(hv));
  c.certified = truncation >= 2 * m + 1;
  return c;
}

InstanceReport verify_instance(const Presentation &p, const VerifyOptions &opts, int index) {
  InstanceReport out;
  out.index = index;
  out.field = p.field.name();
  out.group = p.group.name();
  out.d = p.generation_degree();
  out.r = p.relation_degree();
  out.truncation = opts.truncation;
  int big_n = opts.truncation;
  Analysis an(p, big_n);
  const auto &v = an.module();
  const auto &res = an.resolution();
  const auto &real = *an.realization();
  auto dims = v.dims();
  auto add = [&](Check c) { out.checks.push_back(std::move(c)); };

  {
    auto c = named("four_term");
    const auto &h1d = an.derived_dims(1, 1);
    const auto &dv = an.derived_dims(0, 1);
    for (int n = 0; n < big_n; ++n) {
      long s = static_cast<long>(h1d[n]) - static_cast<long>(dims[n]) + static_cast<long>(dims[n + 1]) -
               static_cast<long>(dv[n]);
      if (s != 0)
        fail(c, "n=" + std::to_string(n) + " sum " + std::to_string(s));
    }
    add(c);
  }
  {
    auto c = named("dual_algorithm");
    for (int a = 1; a <= std::min(opts.a_max, big_n); ++a) {
      auto x = h1da_intersection(real.cover, real.relations, a).dims();
      const auto &y = an.derived_dims(1, a);
      if (x != y)
        fail(c, "a=" + std::to_string(a) + ": " + dims_string(x) + " vs " + dims_string(y));
    }
    add(c);
  }
  {
    auto c = named("grothendieck");
    for (int i = 1; i <= 2; ++i)
      for (int a = 1; a <= 2 && a + 1 <= big_n; ++a) {
        const auto &mid = an.derived_dims(i, a + 1);
        auto left = derivative(res.derived_derivative(i, a), 1).dims();
        auto right = iota_kernel(res.derived_derivative(i - 1, a)).dims();
        for (int n = 0; n <= big_n - a - 1; ++n)
          if (mid[n] != left[n] + right[n])
            fail(c, "i=" + std::to_string(i) + " a=" + std::to_string(a) + " n=" + std::to_string(n) +
                        ": " + std::to_string(mid[n]) + " != " + std::to_string(left[n]) + "+" +
                        std::to_string(right[n]));
      }
    add(c);
  }
  {
    auto c = named("iterated_derivative");
    for (int a = 2; a <= std::min(opts.a_max, big_n); ++a)
      if (an.derived_dims(0, a) != iterated_derivative(v, a).dims())
        fail(c, "a=" + std::to_string(a));
    add(c);
  }
  {
    auto c = named("shift_derivative");
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2 && a + b <= big_n; ++b)
        if (shift(derivative(v, a), b).dims() != derivative(shift(v, b), a).dims())
          fail(c, "a=" + std::to_string(a) + " b=" + std::to_string(b));
    add(c);
  }

  std::vector<Certified<ExtInt>> hd;
  for (int i = 0; i <= opts.i_max; ++i)
    hd.push_back(an.hd(i));
  auto dr = an.derived_regularity();
  auto tor = an.torsion();
  auto depth = an.depth();
  ExtInt hd0 = hd[0].value, hd1 = hd[1].value;

  {
    auto c = named("torsion_free_iff_h1d");
    if (tor.torsion_free != all_zero(an.derived_dims(1, 1)))
      fail(c, "torsion free " + std::to_string(tor.torsion_free));
    c.certified = tor.certified;
    add(c);
  }
  {
    auto c = named("regularity_bound");
    auto reg = an.regularity(opts.i_max);
    auto b1 = an.regularity_bound(), b2 = an.regularity_bound_homological();
    c.witness = "reg " + reg.value.str() + " bounds " + b1.str() + " " + b2.str();
    if (reg.value > b1 || reg.value > b2)
      fail(c, c.witness);
    c.certified = reg.certified;
    add(c);
  }
  {
    auto deg = an.module_degree();
    if (deg.certified && deg.value.finite()) {
      auto c = named("finite_degree_homology");
      for (int i = 1; i <= opts.i_max; ++i) {
        if (hd[i].value > deg.value.plus(i))
          fail(c, "hd_" + std::to_string(i) + " = " + hd[i].value.str() + " > " + std::to_string(i) +
                      " + " + deg.value.str());
        c.certified = c.certified && hd[i].certified;
      }
      add(c);
    }
  }
  {
    auto c = named("nagpal_number");
    auto np = an.nagpal();
    c.witness = "direct " + np.direct.str() + " dreg+1 " + np.from_dreg.str();
    if (np.direct != np.from_dreg)
      fail(c, c.witness);
    c.certified = np.certified;
    add(c);
  }
  {
    auto c = named("hilbert_polynomial");
    auto h = an.hilbert();
    if (!h.polynomial) {
      c.certified = false;
      c.witness = "needs truncation " + std::to_string(h.required);
    } else {
      c.witness = polynomial_string(*h.polynomial) + " from " + std::to_string(h.start);
      if (!h.disagreements.empty())
        fail(c, "disagrees at n=" + std::to_string(h.disagreements.front()));
      for (int n = h.homological_start; n <= big_n; ++n)
        if (evaluate(*h.polynomial, n) != mpq_class(static_cast<unsigned long>(dims[n]))) {
          fail(c, "disagrees at n=" + std::to_string(n) + " >= hd_1 + min(hd_1, hd_0)");
          break;
        }
      c.certified = h.certified;
    }
    add(c);
  }
  {
    auto c = named("sharp_filtered_equivalence");
    auto f = an.sharp_filtration();
    bool vanish = true;
    for (int i = 1; i <= opts.i_max; ++i) {
      vanish = vanish && !hd[i].value.finite();
      c.certified = c.certified && hd[i].certified;
    }
    c.witness = "H_1=0 " + std::to_string(f.h1_vanishes) + " constructed " + std::to_string(f.constructed) +
                " H_i=0 " + std::to_string(vanish);
    if (f.h1_vanishes != f.constructed || f.h1_vanishes != vanish || (f.constructed && !f.matches_h0))
      fail(c, c.witness);
    add(c);
  }
  {
    auto c = named("width_bounds");
    int s = stable_start(out.d, out.r);
    c.witness = "dreg " + dr.dreg.str() + " dwidth " + dr.dwidth.str();
    if (out.r >= 0 && dr.dwidth > ExtInt::of(s))
      fail(c, c.witness + " > " + std::to_string(s));
    if (hd1.finite() && hd0.finite()) {
      if (dr.dwidth > hd1.plus(std::min(hd1.value, hd0.value)))
        fail(c, c.witness + " exceeds hd_1 + min(hd_1, hd_0)");
      if (dr.dreg.finite()) {
        if (dr.dreg.plus(1) > dr.dwidth)
          fail(c, c.witness + ": dreg + 1 > dwidth");
        if (dr.dwidth > dr.dreg.plus(std::max(hd1.value, hd0.value)))
          fail(c, c.witness + ": dwidth > dreg + max(hd_1, hd_0)");
      }
    } else if (dr.dwidth.finite()) {
      fail(c, c.witness + " with H_1 = 0");
    }
    if (dr.a_max + 1 <= big_n && !all_zero(an.derived_dims(1, dr.a_max + 1)))
      fail(c, "H_1^{D^a} nonzero for a = " + std::to_string(dr.a_max + 1));
    c.certified = dr.certified;
    add(c);
  }
  {
    auto c = named("derived_degree_bound");
    for (int i = 1; i <= 2; ++i)
      for (int a = 1; a <= std::min(opts.a_max, big_n); ++a) {
        auto deg = degree_of(an.derived_dims(i, a));
        auto bound = dr.dwidth.plus(i - 1 - a);
        if (deg > bound)
          fail(c, "i=" + std::to_string(i) + " a=" + std::to_string(a) + " deg " + deg.str() + " > " +
                      bound.str());
      }
    c.certified = dr.certified;
    add(c);
  }
  {
    auto c = named("homological_degree_bound");
    ExtInt base = dr.dwidth.plus(-1);
    if (hd0.finite())
      base = max(base, ExtInt::of(std::max(hd1.finite() ? hd1.value : hd0.value, hd0.value) - 1));
    for (int i = 1; i <= opts.i_max; ++i) {
      if (hd[i].value > base.plus(i))
        fail(c, "hd_" + std::to_string(i) + " = " + hd[i].value.str() + " > " + base.plus(i).str());
      if (hd0.finite()) {
        auto reg_bound = dr.dreg.plus(std::max(hd1.finite() ? hd1.value : hd0.value, hd0.value) - 1);
        if (hd[i].value.plus(-i) > reg_bound)
          fail(c, "hd_" + std::to_string(i) + " - " + std::to_string(i) + " > " + reg_bound.str());
      }
      c.certified = c.certified && hd[i].certified;
    }
    c.certified = c.certified && dr.certified;
    add(c);
  }
  {
    auto c = named("depth_classification");
    c.witness = "depth " + depth.value.str();
    if ((depth.value == ExtInt::of(0)) != !tor.torsion_free)
      fail(c, c.witness + " vs torsion free " + std::to_string(tor.torsion_free));
    if ((depth.value == ExtInt::pos_inf()) != !hd1.finite())
      fail(c, c.witness + " vs hd_1 " + hd1.str());
    if (depth.value.finite() && depth.value > hd0)
      fail(c, c.witness + " > hd_0");
    c.certified = depth.certified && tor.certified;
    add(c);
  }
  if (depth.value.finite()) {
    auto c = named("first_nonacyclic_pattern");
    long delta = depth.value.value;
    for (int l = 1; l <= 2 && delta + l <= big_n; ++l) {
      int a = static_cast<int>(delta) + l;
      if (all_zero(an.derived_dims(l, a)))
        fail(c, "H_" + std::to_string(l) + "^{D^" + std::to_string(a) + "} = 0");
      for (int i = l + 1; i <= 2; ++i)
        if (!all_zero(an.derived_dims(i, a)))
          fail(c, "H_" + std::to_string(i) + "^{D^" + std::to_string(a) + "} != 0");
    }
    c.certified = depth.certified && dr.certified && dr.dwidth.finite() && big_n >= dr.dwidth.value + 1;
    add(c);
  }
  {
    auto c = named("two_of_three");
    Analysis syz(res.syzygy(1));
    bool v_sharp = !hd1.finite();
    bool x_sharp = !syz.hd(1).value.finite();
    c.witness = "V " + std::to_string(v_sharp) + " syzygy " + std::to_string(x_sharp);
    if (v_sharp != x_sharp)
      fail(c, c.witness);
    c.certified = hd[1].certified && (opts.i_max < 2 || hd[2].certified);
    add(c);
  }
  add(check_intersection_identity(real, out.d, out.r));
  return out;
}

VerifyReport verify_theorems(const RandomParams &params, const VerifyOptions &opts) {
  VerifyReport out;
  out.params = params;
  out.options = opts;
  auto corpus = random_corpus(params);
  out.instances.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < corpus.size(); k = next++) {
      try {
        out.instances[k] = verify_instance(corpus[k].presentation, opts, corpus[k].index);
      } catch (const std::exception &e) {
        InstanceReport r;
        r.index = corpus[k].index;
        r.field = corpus[k].presentation.field.name();
        r.group = corpus[k].presentation.group.name();
        r.d = corpus[k].presentation.generation_degree();
        r.r = corpus[k].presentation.relation_degree();
        r.truncation = opts.truncation;
        r.checks.push_back({"exception", false, true, e.what()});
        out.instances[k] = std::move(r);
      }
    }
  };
  int threads = std::max(1, opts.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  std::seed_seq seq{static_cast<std::uint32_t>(params.seed), 0x5eedu};
  std::mt19937_64 rng(seq);
  for (const auto &field : params.fields)
    for (const auto &group : params.groups)
      for (int m = 0; m <= std::min(params.d_max, 2); ++m) {
        auto c = check_generated_submodule(rng, field, group, m, opts.truncation);
        c.witness = field.name() + " " + group.name() + " " + c.witness;
        out.suite_checks.push_back(std::move(c));
      }
  return out;
}

nlohmann::json to_json(const Check &c) {
  return {{"name", c.name}, {"passed", c.passed}, {"certified", c.certified}, {"witness", c.witness}};
}

nlohmann::json to_json(const InstanceReport &r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto &c : r.checks)
    checks.push_back(to_json(c));
  return {{"index", r.index}, {"field", r.field},           {"group", r.group},
          {"d", r.d},         {"r", r.r},                   {"truncation", r.truncation},
          {"checks", checks}, {"passed", r.passed()}};
}

nlohmann::json to_json(const VerifyReport &r) {
  nlohmann::json inst = nlohmann::json::array(), suite = nlohmann::json::array();
  for (const auto &i : r.instances)
    inst.push_back(to_json(i));
  for (const auto &c : r.suite_checks)
    suite.push_back(to_json(c));
  nlohmann::json fields = nlohmann::json::array(), groups = nlohmann::json::array();
  for (const auto &f : r.params.fields)
    fields.push_back(f.name());
  for (const auto &g : r.params.groups)
    groups.push_back(g.name());
  std::size_t failed = 0;
  for (const auto &i : r.instances)
    failed += !i.passed();
  return {{"seed", r.params.seed},
          {"count", r.params.count},
          {"d_max", r.params.d_max},
          {"r_max", r.params.r_max},
          {"fields", fields},
          {"groups", groups},
          {"truncation", r.options.truncation},
          {"i_max", r.options.i_max},
          {"instances", inst},
          {"suite_checks", suite},
          {"failed_instances", failed},
          {"passed", r.passed()}};
}

} // namespace fig
