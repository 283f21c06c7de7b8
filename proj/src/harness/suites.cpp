#include "bca/harness/suites.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "bca/algebra/algebra.hpp"
#include "bca/blocks/blocks.hpp"
#include "bca/cocycle/cocycle.hpp"
#include "bca/ff/field.hpp"
#include "bca/gcoh/gcoh.hpp"
#include "bca/harness/analyze.hpp"
#include "bca/regprops/regprops.hpp"

namespace bca::harness {

namespace {

using cocycle::Cocycle2;
using ff::FqField;
using grp::Elem;
using grp::Group;
using json = nlohmann::json;

template <class T>
std::vector<T> parallel_map(std::size_t count, unsigned threads, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          out[i] = fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

json names(const Group& G, const std::vector<Elem>& xs) {
  json a = json::array();
  for (Elem x : xs) a.push_back(G.element_name(x));
  return a;
}

bool subset(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Elem> all_elements(const Group& G) {
  std::vector<Elem> v(G.order());
  for (Elem x = 0; x < G.order(); ++x) v[x] = x;
  return v;
}

std::vector<Elem> intersection(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  std::vector<Elem> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// One (group, prime) pair with everything the per-class checks share.
struct Pair {
  const CatalogEntry* entry = nullptr;
  std::uint64_t p = 0;
  std::uint64_t m = 1;
  cocycle::CocycleClassGroup h2;
  std::vector<Elem> cp;
};

struct Runner {
  const SuiteOptions& opt;
  std::vector<const CatalogEntry*> groups;

  CaseRecord record(const Pair& P, std::string check, std::optional<std::size_t> cls = std::nullopt) const {
    CaseRecord r;
    r.check = std::move(check);
    r.group = P.entry->name;
    r.p = P.p;
    r.m = P.m;
    r.class_index = cls;
    return r;
  }

  FqField prime_field(std::uint64_t p) const {
    if (opt.field_override && *opt.field_override % p == 0) return field_of_order(*opt.field_override, p);
    return FqField::make(static_cast<std::uint32_t>(p), 1);
  }

  FqField twisted_field(std::uint64_t p, std::uint64_t m) const {
    if (opt.field_override && *opt.field_override % p == 0) {
      FqField F = field_of_order(*opt.field_override, p);
      if ((F.q() - 1) % m == 0) return F;
    }
    return gcoh::twisted_field(static_cast<std::uint32_t>(p), m);
  }

  FqField block_field(const Group& G, std::uint64_t p) const {
    if (opt.field_override && *opt.field_override % p == 0) return field_of_order(*opt.field_override, p);
    return blocks::splitting_field(G, static_cast<std::uint32_t>(p));
  }

  std::vector<Pair> pairs(bool with_classes) const {
    std::vector<std::pair<const CatalogEntry*, std::uint64_t>> todo;
    for (const CatalogEntry* e : groups)
      for (auto p : e->tags.primes)
        if (opt.primes.empty() || std::find(opt.primes.begin(), opt.primes.end(), p) != opt.primes.end())
          todo.emplace_back(e, p);
    return parallel_map<Pair>(todo.size(), opt.threads, [&](std::size_t i) {
      Pair P;
      P.entry = todo[i].first;
      P.p = todo[i].second;
      const Group& G = *P.entry->group;
      std::uint64_t m = opt.m ? *opt.m : cocycle::default_m(G, P.p);
      m /= grp::p_part(m, P.p);
      P.m = m;
      P.cp = regprops::commutator_index_set(G, P.p);
      if (with_classes) P.h2 = cocycle::h2_classes(P.entry->group, m, P.p, opt.class_cap);
      return P;
    });
  }

  CaseRecord h2_record(const Pair& P) const {
    CaseRecord r = record(P, "h2_classes");
    r.status = Status::info;
    r.values = {{"invariant_factors", P.h2.invariant_factors},
                {"class_count", P.h2.class_count},
                {"representatives", P.h2.representatives.size()},
                {"truncated", P.h2.truncated}};
    return r;
  }

  // Runs fn on every pair (and every class when per_class), keeping the
  // records in a fixed order.
  std::vector<CaseRecord> each(const std::vector<Pair>& ps, bool per_class,
                               const std::function<std::vector<CaseRecord>(const Pair&, std::size_t)>& fn) const {
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const std::size_t k = per_class ? ps[i].h2.representatives.size() : 1;
      for (std::size_t c = 0; c < k; ++c) todo.emplace_back(i, c);
    }
    auto parts = parallel_map<std::vector<CaseRecord>>(todo.size(), opt.threads, [&](std::size_t t) {
      const Pair& P = ps[todo[t].first];
      try {
        return fn(P, todo[t].second);
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception& e) {
        CaseRecord r = record(P, "error", per_class ? std::optional<std::size_t>(todo[t].second) : std::nullopt);
        r.status = Status::fail;
        r.witness = e.what();
        return std::vector<CaseRecord>{r};
      }
    });
    std::vector<CaseRecord> out;
    for (std::size_t t = 0; t < todo.size(); ++t) {
      if (per_class && todo[t].second == 0) out.push_back(h2_record(ps[todo[t].first]));
      for (auto& r : parts[t]) out.push_back(std::move(r));
    }
    return out;
  }

  static Status verdict(bool ok) { return ok ? Status::pass : Status::fail; }

  // --- suites -----------------------------------------------------------------

  std::vector<CaseRecord> lemma24() const {
    return each(pairs(true), true, [&](const Pair& P, std::size_t ci) {
      const Group& G = *P.entry->group;
      const Cocycle2& c = P.h2.representatives[ci];
      const auto areg = cocycle::alpha_regular_set(c);
      const auto all = all_elements(G);
      std::vector<CaseRecord> out;

      CaseRecord r1 = record(P, "lemma24.i", ci);
      r1.status = verdict(std::binary_search(areg.begin(), areg.end(), Elem{0}));
      r1.values = {{"alpha_regular", names(G, areg)}};
      out.push_back(r1);

      if (ci == 0) {
        if (P.entry->tags.abelian) {
          CaseRecord r = record(P, "lemma24.ii");
          r.status = verdict(P.cp == all);
          r.values = {{"c_p", names(G, P.cp)}};
          out.push_back(r);
        }
        CaseRecord r5 = record(P, "lemma24.v");
        const bool npp = !grp::is_p_perfect(G, P.p);
        const bool one_in = !P.cp.empty() && P.cp.front() == 0;
        r5.status = verdict(npp == one_in);
        r5.values = {{"non_p_perfect", npp}, {"identity_in_c_p", one_in}};
        out.push_back(r5);
      }
      auto whole = [&](const char* check) {
        CaseRecord r = record(P, check, ci);
        r.status = verdict(P.cp == all && areg == all);
        r.values = {{"c_p_size", P.cp.size()}, {"alpha_regular_size", areg.size()}, {"order", G.order()}};
        if (r.status == Status::fail) {
          for (Elem x : all)
            if (!std::binary_search(P.cp.begin(), P.cp.end(), x) || !std::binary_search(areg.begin(), areg.end(), x)) {
              r.witness = G.element_name(x);
              break;
            }
        }
        out.push_back(r);
      };
      if (P.entry->tags.cyclic) whole("lemma24.iii");
      if (P.entry->tags.p_group == P.p) whole("lemma24.iv");

      const auto good = intersection(P.cp, areg);
      for (auto v : {regprops::SpVariant::sylow, regprops::SpVariant::centralizer}) {
        const auto sp = regprops::strong_nonschur_set(G, P.p, v);
        CaseRecord r = record(P, "lemma24.vi." + regprops::to_string(v), ci);
        r.status = verdict(subset(sp, good));
        r.values = {{"s_p", names(G, sp)}, {"c_p_and_alpha_regular", names(G, good)}};
        for (Elem x : sp)
          if (!std::binary_search(good.begin(), good.end(), x)) {
            r.witness = G.element_name(x);
            break;
          }
        out.push_back(r);
      }

      if (ci == 0) {
        const grp::Subgroup S = grp::sylow_subgroup(G, P.p);
        if (grp::is_normal(G, S)) {
          const grp::Subgroup D = grp::derived_subgroup(G, S);
          std::vector<Elem> diff;
          std::set_difference(S.members.begin(), S.members.end(), D.members.begin(), D.members.end(),
                              std::back_inserter(diff));
          const auto sp = regprops::strong_nonschur_set(G, P.p, regprops::SpVariant::sylow);
          CaseRecord r = record(P, "lemma24.vii");
          r.status = verdict(!diff.empty() && subset(diff, sp));
          r.values = {{"sylow_minus_derived", names(G, diff)}, {"s_p_sylow", names(G, sp)}};
          out.push_back(r);
        }
      }
      return out;
    });
  }

  std::vector<CaseRecord> prop25() const {
    return each(pairs(true), true, [&](const Pair& P, std::size_t ci) {
      const Group& G = *P.entry->group;
      const auto f = regprops::prop25_conditions(G, P.p);
      const json flags = {{"i_non_p_perfect", f.non_p_perfect},
                          {"ii_sylow_normal", f.sylow_normal},
                          {"iii_center_not_in_derived", f.center_not_in_derived},
                          {"iv_derived_exponent_smaller", f.derived_exponent_smaller},
                          {"v_metacyclic", f.metacyclic}};
      const auto w = regprops::first_common(P.cp, cocycle::alpha_regular_set(P.h2.representatives[ci]));
      CaseRecord r = record(P, "prop25", ci);
      r.values = {{"flags", flags}, {"witness_found", w.has_value()}};
      if (w) r.witness = G.element_name(*w);
      r.status = f.any() ? verdict(w.has_value()) : Status::info;
      return std::vector<CaseRecord>{r};
    });
  }

  std::vector<CaseRecord> thm12(bool question15) const {
    std::vector<Pair> ps = pairs(true);
    std::vector<CaseRecord> out = each(ps, true, [&](const Pair& P, std::size_t ci) {
      const Group& G = *P.entry->group;
      const Cocycle2& c = P.h2.representatives[ci];
      const FqField F = twisted_field(P.p, P.m);
      const auto A = algebra::twisted_group_algebra(G, c, F);
      const std::size_t hh1 = algebra::hh1_dim(A);
      std::vector<CaseRecord> recs;
      if (question15) {
        CaseRecord r = record(P, "question15", ci);
        r.values = {{"field", F.name()}, {"hh1", hh1}};
        r.status = hh1 == 0 ? Status::candidate : Status::pass;
        recs.push_back(r);
        return recs;
      }
      const auto w = regprops::first_common(P.cp, cocycle::alpha_regular_set(c));
      CaseRecord r = record(P, "thm12", ci);
      r.values = {{"field", F.name()}, {"hh1", hh1}, {"hypothesis", w.has_value()}};
      if (w) r.witness = G.element_name(*w);
      r.status = verdict(!w || hh1 >= 1);
      recs.push_back(r);

      std::vector<gcoh::ClassContribution> br;
      const std::size_t via = gcoh::hh1_twisted_via_centralizers(G, c, F, &br);
      CaseRecord rc = record(P, "centralizer_formula", ci);
      rc.status = verdict(via == hh1);
      rc.values = {{"derivations", hh1}, {"centralizers", via}};
      recs.push_back(rc);
      return recs;
    });
    if (question15) return out;
    auto untwisted = each(ps, false, [&](const Pair& P, std::size_t) {
      const Group& G = *P.entry->group;
      const FqField F = prime_field(P.p);
      const std::size_t d = algebra::hh1_dim(algebra::group_algebra(G, F));
      const std::size_t via = gcoh::hh1_group_algebra_via_centralizers(G, F);
      CaseRecord r = record(P, "centralizer_formula_untwisted");
      r.status = verdict(d == via);
      r.values = {{"field", F.name()}, {"derivations", d}, {"centralizers", via}};
      return std::vector<CaseRecord>{r};
    });
    out.insert(out.end(), untwisted.begin(), untwisted.end());
    return out;
  }

  std::vector<CaseRecord> prop21() const {
    return each(pairs(false), false, [&](const Pair& P, std::size_t) {
      const Group& G = *P.entry->group;
      const auto p = static_cast<std::uint32_t>(P.p);
      const FqField Fp = FqField::make(p, 1);
      const std::size_t h1p = gcoh::h1_trivial_dim(G, Fp);
      const std::size_t hh1p = algebra::hh1_dim(algebra::group_algebra(G, Fp));
      std::vector<CaseRecord> out;
      for (std::uint32_t e : {2u, 3u}) {
        const FqField Fe = FqField::make(p, e);
        const std::size_t h1e = gcoh::h1_trivial_dim(G, Fe);
        const std::size_t hh1e = algebra::hh1_dim(algebra::group_algebra(G, Fe));
        CaseRecord a = record(P, "prop21.h1.e" + std::to_string(e));
        a.status = verdict(h1p == h1e);
        a.values = {{"prime_field", h1p}, {"extension", h1e}};
        out.push_back(a);
        CaseRecord b = record(P, "prop21.hh1.e" + std::to_string(e));
        b.status = verdict(hh1p == hh1e);
        b.values = {{"prime_field", hh1p}, {"extension", hh1e}};
        out.push_back(b);
      }
      return out;
    });
  }

  std::vector<CaseRecord> prop43c() const {
    return each(pairs(false), false, [&](const Pair& P, std::size_t) {
      const Group& G = *P.entry->group;
      const auto sy = regprops::strong_nonschur_set(G, P.p, regprops::SpVariant::sylow);
      const auto pa = regprops::strong_nonschur_set(G, P.p, regprops::SpVariant::centralizer);
      const bool solvable = P.entry->tags.p_solvable.at(P.p);
      CaseRecord r = record(P, "prop43c");
      r.values = {{"p_solvable", solvable}, {"s_p_sylow", names(G, sy)}, {"s_p_centralizer", names(G, pa)}};
      r.status = solvable ? verdict(!sy.empty()) : Status::info;
      if (!sy.empty()) r.witness = G.element_name(sy.front());
      CaseRecord v = record(P, "s_p_variants");
      v.status = Status::info;
      v.values = {{"differ", sy != pa}};
      return std::vector<CaseRecord>{r, v};
    });
  }

  std::vector<CaseRecord> thm14() const {
    return each(pairs(false), false, [&](const Pair& P, std::size_t) {
      const auto& Gp = P.entry->group;
      const Group& G = *Gp;
      CaseRecord r = record(P, "thm14");
      if (grp::is_p_perfect(G, P.p)) {
        r.status = Status::info;
        r.values = {{"non_p_perfect", false}};
        return std::vector<CaseRecord>{r};
      }
      const FqField F = block_field(G, P.p);
      const auto bl = blocks::block_decomposition(G, F, opt.seed);
      const auto& B = blocks::principal_block(bl, F);
      const auto rep = blocks::thm14_pipeline(Gp, B, P.p, F);
      const std::size_t sylow = grp::p_part(G.order(), P.p);
      r.values = {{"field", F.name()},
                  {"defect_order", rep.defect_order},
                  {"sylow_order", sylow},
                  {"scott_trivial", rep.scott_trivial},
                  {"conjugation_has_trivial_summand", rep.conjugation_has_trivial_summand},
                  {"hh1_derivations", rep.hh1_derivations},
                  {"hh1_group_cohomology", rep.hh1_group_cohomology}};
      const bool ok = rep.defect_order == sylow && rep.scott_trivial && rep.conjugation_has_trivial_summand &&
                      rep.hh1_derivations >= 1 && rep.hh1_derivations == rep.hh1_group_cohomology;
      r.status = verdict(ok);
      return std::vector<CaseRecord>{r};
    });
  }

  std::vector<CaseRecord> decomp() const {
    return each(pairs(false), false, [&](const Pair& P, std::size_t) {
      const Group& G = *P.entry->group;
      const FqField F = block_field(G, P.p);
      const std::size_t expected = blocks::frobenius_block_count(G, F);
      std::vector<CaseRecord> out;
      std::vector<std::vector<ff::Vec>> runs;
      for (std::uint64_t s = 0; s < 3; ++s) {
        const auto bl = blocks::block_decomposition(G, F, opt.seed + s);
        std::vector<ff::Vec> ids;
        for (const auto& b : bl) ids.push_back(b.idempotent);
        runs.push_back(ids);

        ff::Vec total(G.order(), F.zero());
        bool orthogonal = true;
        for (std::size_t i = 0; i < ids.size(); ++i) {
          for (Elem g = 0; g < G.order(); ++g) total[g] = F.add(total[g], ids[i][g]);
          for (std::size_t j = 0; j < ids.size(); ++j) {
            const ff::Vec prod = group_product(G, F, ids[i], ids[j]);
            if (prod != (i == j ? ids[i] : ff::Vec(G.order(), F.zero()))) orthogonal = false;
          }
        }
        ff::Vec one(G.order(), F.zero());
        one[0] = F.one();
        CaseRecord r = record(P, "decomp.idempotents");
        r.values = {{"field", F.name()}, {"seed", opt.seed + s}, {"blocks", ids.size()}, {"expected", expected}};
        r.status = verdict(total == one && orthogonal && ids.size() == expected);
        out.push_back(r);
        if (s > 0) continue;

        const auto& B = blocks::principal_block(bl, F);
        CaseRecord rp = record(P, "decomp.principal_defect");
        rp.values = {{"defect_order", B.defect_group.order()}};
        rp.status = verdict(B.defect_group.order() == grp::p_part(G.order(), P.p));
        out.push_back(rp);

        for (std::size_t i = 0; i < bl.size(); ++i) {
          const auto& b = bl[i];
          CaseRecord rb = record(P, "decomp.block");
          rb.status = Status::info;
          rb.witness = "block " + std::to_string(i);
          rb.values = {{"dim", b.basis.size()},
                       {"principal", b.is_principal},
                       {"defect_order", b.defect_group.order()},
                       {"hh1", algebra::hh1_dim(*b.algebra)}};
          if (b.defect_group.order() > 1) {
            const auto pair = blocks::max_brauer_pair(G, b.idempotent, b.defect_group, F, opt.seed);
            rb.values["inertial_quotient_order"] = blocks::inertial_quotient(G, pair, P.p).order;
          }
          out.push_back(rb);
        }
      }
      CaseRecord rs = record(P, "decomp.seed_independence");
      rs.status = verdict(runs[0] == runs[1] && runs[0] == runs[2]);
      rs.values = {{"seeds", {opt.seed, opt.seed + 1, opt.seed + 2}}};
      out.push_back(rs);
      return out;
    });
  }

  static ff::Vec group_product(const Group& G, const FqField& F, const ff::Vec& a, const ff::Vec& b) {
    ff::Vec out(G.order(), F.zero());
    for (Elem g = 0; g < G.order(); ++g) {
      if (a[g].is_zero()) continue;
      for (Elem h = 0; h < G.order(); ++h)
        if (!b[h].is_zero()) out[G.mul(g, h)] = F.add(out[G.mul(g, h)], F.mul(a[g], b[h]));
    }
    return out;
  }
};

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma24", "prop25", "thm12",   "thm14",
                                                 "prop21",  "prop43c", "decomp", "question15"};
  return names;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt,
                             const std::vector<CatalogEntry>& catalog) {
  const auto& known = suite_names();
  if (std::find(known.begin(), known.end(), suite) == known.end()) throw UsageError("unknown suite: " + suite);
  for (auto p : opt.primes)
    if (!ff::is_prime(p)) throw UsageError("--primes: " + std::to_string(p) + " is not prime");
  if (opt.m && *opt.m == 0) throw UsageError("--m must be positive");
  if (opt.field_override) {
    const auto ps = ff::prime_divisors(*opt.field_override);
    if (*opt.field_override < 2 || ps.size() != 1)
      throw UsageError("--field-override: " + std::to_string(*opt.field_override) + " is not a prime power");
    (void)field_of_order(*opt.field_override, ps.front());
  }

  Runner R{opt, {}};
  for (const auto& e : catalog)
    if (e.group->order() <= opt.max_order) R.groups.push_back(&e);

  VerificationReport rep;
  rep.suite = suite;
  rep.version = kVersion;
  rep.seed = opt.seed;
  rep.options = {{"max_order", opt.max_order}, {"primes", opt.primes}, {"class_cap", opt.class_cap}};
  rep.options["m"] = opt.m ? json(*opt.m) : json(nullptr);
  rep.options["field_override"] = opt.field_override ? json(*opt.field_override) : json(nullptr);
  if (suite == "lemma24") rep.cases = R.lemma24();
  else if (suite == "prop25") rep.cases = R.prop25();
  else if (suite == "thm12") rep.cases = R.thm12(false);
  else if (suite == "question15") rep.cases = R.thm12(true);
  else if (suite == "thm14") rep.cases = R.thm14();
  else if (suite == "prop21") rep.cases = R.prop21();
  else if (suite == "prop43c") rep.cases = R.prop43c();
  else rep.cases = R.decomp();
  return rep;
}

VerificationReport run_suite(const std::string& suite, const SuiteOptions& opt) {
  return run_suite(suite, opt, catalog_full());
}

}  // namespace bca::harness
