// Acceptance suite: one PASS/FAIL line per criterion.

#include "fig/figcat.hpp"
#include "fig/functors.hpp"
#include "fig/invariants.hpp"
#include "fig/report.hpp"
#include "fig/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <thread>

using namespace fig;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

long choose(long n, long k) {
  if (k < 0 || k > n)
    return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i)
    r = r * (n - k + i) / i;
  return r;
}

long factorial(long n) { return n <= 1 ? 1 : n * factorial(n - 1); }

long ipow(long b, long e) {
  long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

FBGModule single(const FieldSpec &f, const FiniteGroup &g, int m, GnRep rep) {
  FBGModule w;
  w.field = f;
  w.group = g;
  w.support[m] = std::move(rep);
  return w;
}

std::vector<FiniteGroup> both_groups() { return {FiniteGroup::trivial(), FiniteGroup::preset("Z2")}; }

RandomParams corpus_params() {
  RandomParams p;
  p.seed = 20240601;
  p.count = 100;
  p.d_max = 2;
  p.r_max = 3;
  p.fields = {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};
  p.groups = both_groups();
  return p;
}

int worker_count() { return static_cast<int>(std::max(1u, std::thread::hardware_concurrency())); }

/// Pass iff every check with this name passed; counts certified ones.
Outcome from_checks(const VerifyReport &r, const std::string &name) {
  Outcome o;
  int seen = 0, certified = 0;
  for (const auto &inst : r.instances)
    for (const auto &c : inst.checks)
      if (c.name == name || c.name == "exception") {
        ++seen;
        certified += c.certified;
        if (!c.passed) {
          o.passed = false;
          if (o.detail.empty())
            o.detail = "instance " + std::to_string(inst.index) + ": " + c.witness + "; ";
        }
      }
  o.detail += std::to_string(seen) + " instances, " + std::to_string(certified) + " certified";
  if (seen == 0)
    o.passed = false;
  return o;
}

Outcome merge(Outcome a, const Outcome &b) {
  a.passed = a.passed && b.passed;
  a.detail += "; " + b.detail;
  return a;
}

Outcome free_dimensions() {
  Outcome o;
  int cases = 0;
  auto f = FieldSpec::rationals();
  for (const auto &g : both_groups())
    for (int m = 0; m <= 3; ++m)
      for (std::size_t dw = 1; dw <= 4; ++dw) {
        auto v = build_free(single(f, g, m, trivial_rep(f, g, m, dw)), 8);
        for (int n = 0; n <= 8; ++n) {
          ++cases;
          if (v.dim(n) != static_cast<std::size_t>(choose(n, m)) * dw) {
            o.passed = false;
            o.detail = g.name() + " m=" + std::to_string(m) + " n=" + std::to_string(n) + "; ";
          }
        }
      }
  o.detail += std::to_string(cases) + " dimensions checked";
  return o;
}

Outcome shift_decomposition() {
  Outcome o;
  int cases = 0;
  auto f = FieldSpec::rationals();
  for (const auto &g : both_groups())
    for (int m = 0; m <= 3; ++m) {
      auto v = build_free(single(f, g, m, regular_rep(f, g, m)), 8);
      auto s = shift(v, 1);
      for (int n = 0; n <= 7; ++n) {
        ++cases;
        long wm = factorial(m) * ipow(g.order(), m);
        long wl = m == 0 ? 0 : factorial(m - 1) * ipow(g.order(), m - 1);
        long expect = m * g.order() * choose(n, m - 1) * wl + choose(n, m) * wm;
        if (static_cast<long>(s.dim(n)) != expect) {
          o.passed = false;
          o.detail = g.name() + " m=" + std::to_string(m) + " n=" + std::to_string(n) + "; ";
        }
      }
    }
  o.detail += std::to_string(cases) + " dimensions checked";
  return o;
}

/// Kill every generator at degree t = (largest generator degree) + 1.
Presentation with_torsion(Presentation p) {
  int t = p.generation_degree() + 1;
  for (std::size_t j = 0; j < p.generators.size(); ++j) {
    const auto &gen = p.generators[j];
    for (std::size_t k = 0; k < gen.rep.dim; ++k) {
      RelationTerm term;
      term.gen = j;
      term.map = FIGMorphism::standard(gen.degree, t);
      term.coeff.assign(gen.rep.dim, mpq_class(0));
      term.coeff[k] = 1;
      p.relations.push_back({t, {term}});
    }
  }
  return p;
}

Outcome torsion_instances(const std::vector<CorpusEntry> &corpus) {
  Outcome o;
  VerifyOptions opts;
  opts.truncation = 8;
  int finite = 0, certified = 0;
  int used = 0;
  for (std::size_t k = 0; k < corpus.size() && used < 20; ++k) {
    auto p = with_torsion(corpus[k].presentation);
    if (realize(p, opts.truncation).module.dims() == std::vector<std::size_t>(opts.truncation + 1, 0))
      continue;
    ++used;
    auto rep = verify_instance(p, opts, static_cast<int>(k));
    for (const auto &c : rep.checks) {
      if (c.name == "finite_degree_homology") {
        ++finite;
        certified += c.certified;
      }
      if ((c.name == "finite_degree_homology" || c.name == "regularity_bound") && !c.passed) {
        o.passed = false;
        o.detail = "torsion instance " + std::to_string(k) + ": " + c.witness + "; ";
      }
    }
  }
  if (finite != 20 || certified != 20)
    o.passed = false;
  o.detail += "hd_i <= i + deg V on " + std::to_string(finite) + " torsion instances, " + std::to_string(certified) +
              " certified";
  return o;
}

Outcome combinatorics(const VerifyReport &corpus) {
  Outcome o;
  for (int b = 0; b <= 5; ++b)
    if (static_cast<long>(sigma(b).subsets.size()) != choose(2 * b, b) / (b + 1)) {
      o.passed = false;
      o.detail += "Catalan mismatch at b=" + std::to_string(b) + "; ";
    }

  long lex_cases = 0;
  for (int b = 1; b <= 2; ++b)
    for (int n = b; n <= 6; ++n)
      for (const auto &s : subsets(2 * b, b)) {
        std::vector<int> s1;
        for (int x : s)
          s1.push_back(x + 1);
        if (s1.back() > n)
          continue;
        for (int usize = b; usize <= n - b; ++usize)
          for (const auto &u : subsets(n, usize)) {
            std::vector<int> u1;
            for (int x : u)
              u1.push_back(x + 1);
            if (!std::includes(u1.begin(), u1.end(), s1.begin(), s1.end()))
              continue;
            std::vector<int> rest;
            for (int x = 1; x <= n; ++x)
              if (!std::binary_search(u1.begin(), u1.end(), x))
                rest.push_back(x);
            for (const auto &pick : subsets(static_cast<int>(rest.size()), b)) {
              std::vector<int> idx;
              for (int x : pick)
                idx.push_back(rest[x]);
              ++lex_cases;
              if (!verify_lex_first(s1, u1, idx, n)) {
                o.passed = false;
                o.detail += "lexicographic property fails at n=" + std::to_string(n) + "; ";
              }
            }
          }
      }

  int span_cases = 0;
  for (const auto &g : both_groups())
    for (int r = 0; r <= 2; ++r)
      for (int b = 1; b <= 2; ++b)
        for (int n = b + r; n <= 5; ++n) {
          ++span_cases;
          if (!verify_span_identity(r, n, b, g).all()) {
            o.passed = false;
            o.detail += "span identity fails at r=" + std::to_string(r) + " b=" + std::to_string(b) +
                        " n=" + std::to_string(n) + " " + g.name() + "; ";
          }
        }

  int pairs = 0, bw_certified = 0;
  for (const auto &inst : corpus.instances)
    for (const auto &c : inst.checks)
      if (c.name == "intersection_identity" && pairs < 20) {
        ++pairs;
        bw_certified += c.certified;
        if (!c.passed) {
          o.passed = false;
          o.detail += "intersection identity, instance " + std::to_string(inst.index) + ": " + c.witness + "; ";
        }
      }
  if (pairs < 20)
    o.passed = false;
  o.detail += "Catalan b<=5; " + std::to_string(lex_cases) + " lexicographic cases; " + std::to_string(span_cases) +
              " lattice identities; " + std::to_string(pairs) + " pairs K <= M (" + std::to_string(bw_certified) +
              " certified)";
  return o;
}

Presentation t0_presentation(const FieldSpec &f, const FiniteGroup &g) {
  Presentation p;
  p.field = f;
  p.group = g;
  p.generators.push_back({0, trivial_rep(f, g, 0)});
  p.relations.push_back({1, {{0, FIGMorphism::standard(0, 1), {mpq_class(1)}}}});
  return p;
}

Outcome depth_chains() {
  Outcome o;
  std::string seen;
  auto consistent = [&](const Analysis &an) {
    auto d = an.depth();
    auto t = an.torsion();
    bool h1 = an.hd(1).value.finite();
    bool ok = d.certified && t.certified;
    ok = ok && ((d.value == ExtInt::of(0)) == !t.torsion_free);
    ok = ok && ((d.value == ExtInt::pos_inf()) == !h1);
    return ok;
  };
  for (const auto &g : both_groups()) {
    auto f = FieldSpec::rationals();
    Analysis base(t0_presentation(f, g), 8);
    std::vector<ExtInt> depths{base.depth().value};
    bool ok = consistent(base);
    for (int i = 1; i <= 3 && ok; ++i) {
      Analysis syz(base.resolution().syzygy(i));
      ok = consistent(syz) && syz.depth().certified;
      depths.push_back(syz.depth().value);
    }
    for (int i = 0; i < static_cast<int>(depths.size()); ++i)
      if (depths[i] != ExtInt::of(i))
        ok = false;
    for (int m = 0; m <= 2; ++m) {
      Presentation p;
      p.field = f;
      p.group = g;
      p.generators.push_back({m, regular_rep(f, g, m)});
      Analysis fr(p, 6);
      ok = ok && consistent(fr) && fr.depth().value == ExtInt::pos_inf();
    }
    seen += g.name() + ":";
    for (auto &d : depths)
      seen += " " + d.str();
    seen += " inf; ";
    if (!ok)
      o.passed = false;
  }
  o.detail = seen + "each syzygy raises depth by one";
  return o;
}

Outcome determinism() {
  RandomParams p = corpus_params();
  p.count = 12;
  VerifyOptions a, b;
  a.truncation = b.truncation = 6;
  a.threads = 1;
  b.threads = 3;
  auto j1 = to_json(verify_theorems(p, a)).dump();
  auto j2 = to_json(verify_theorems(p, a)).dump();
  auto j3 = to_json(verify_theorems(p, b)).dump();
  Analysis an(t0_presentation(FieldSpec::prime(3), FiniteGroup::preset("Z2")), 5);
  Analysis an2(t0_presentation(FieldSpec::prime(3), FiniteGroup::preset("Z2")), 5);
  auto r1 = analysis_report(an, ReportOptions{}).dump(), r2 = analysis_report(an2, ReportOptions{}).dump();
  Outcome o;
  o.passed = j1 == j2 && j1 == j3 && r1 == r2;
  o.detail = "verify report " + std::to_string(j1.size()) + " bytes, identical across 3 runs (1 and 3 threads); "
             "analysis report identical";
  return o;
}

} // namespace

int main() {
  using clock = std::chrono::steady_clock;
  int failed = 0;
  auto report = [&](int k, const std::string &title, const std::function<Outcome()> &run) {
    auto t0 = clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(clock::now() - t0).count();
    failed += !o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << k << ": " << title << " (" << o.detail << "; "
              << static_cast<int>(secs * 10) / 10.0 << " s)" << std::endl;
  };

  report(1, "free module dimensions binom(n,m) dim W", free_dimensions);
  report(2, "shift decomposition of M(m)", shift_decomposition);

  auto params = corpus_params();
  VerifyOptions opts;
  opts.truncation = 8;
  opts.threads = worker_count();
  auto t0 = clock::now();
  auto corpus = verify_theorems(params, opts);
  auto corpus_secs = std::chrono::duration<double>(clock::now() - t0).count();
  std::cout << "corpus: " << corpus.instances.size() << " instances at truncation 8 in "
            << static_cast<int>(corpus_secs) << " s" << std::endl;

  report(3, "four-term exactness", [&] { return from_checks(corpus, "four_term"); });
  report(4, "intersection formula agrees with the resolution for a <= 3",
         [&] { return from_checks(corpus, "dual_algorithm"); });
  report(5, "Grothendieck additivity for i, a <= 2", [&] { return from_checks(corpus, "grothendieck"); });
  report(6, "reg(V) <= r + min(r,d) - 1, and hd_i <= i + deg V on torsion modules", [&] {
    return merge(from_checks(corpus, "regularity_bound"), torsion_instances(random_corpus(params)));
  });
  report(7, "Nagpal number equals dreg + 1", [&] { return from_checks(corpus, "nagpal_number"); });
  report(8, "Hilbert polynomial agrees from r + min(r,d)", [&] { return from_checks(corpus, "hilbert_polynomial"); });
  report(9, "sharp filtered <=> filtration constructed <=> H_1 = H_2 = H_3 = 0",
         [&] { return from_checks(corpus, "sharp_filtered_equivalence"); });
  report(10, "Catalan counts, lexicographic orbit property, lattice identity, intersection identity",
         [&] { return combinatorics(corpus); });
  report(11, "depth trichotomy and depth increment along syzygies", depth_chains);
  report(12, "byte-identical JSON reports", determinism);

  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << std::endl;
  return failed ? 1 : 0;
}
