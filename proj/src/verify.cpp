//  Copyright 2026 The lgroup Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "lgroup/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "json.hpp"

#include "lgroup/conjugacy.hpp"
#include "lgroup/error.hpp"
#include "lgroup/normality.hpp"

namespace lgroup::verify {

namespace {

// Collects the outcome of one suite on one instance. The first failure wins;
// later calls to fail() are ignored so the witness stays replayable.
class Outcome {
 public:
  explicit Outcome(const Instance& in) : in_(in) {}

  bool failed() const { return verdict_ == Verdict::kFail; }
  bool done() const { return verdict_ != Verdict::kPass; }

  void fail(std::string detail, std::map<std::string, std::string> witness = {}) {
    if (done()) return;
    verdict_ = Verdict::kFail;
    detail_ = std::move(detail);
    witness_ = std::move(witness);
  }
  void skip(std::string reason) {
    if (done()) return;
    verdict_ = Verdict::kSkip;
    detail_ = std::move(reason);
  }

  std::string point(const LPoint& p) const {
    return in_.lattice->label(p.value) + "@" + in_.group->label(p.at);
  }
  std::string elem(GElt g) const { return in_.group->label(g); }
  std::string value(LatticeElt a) const { return in_.lattice->label(a); }
  std::string values(const LSubset& s) const {
    std::string out = "[";
    for (GElt g : s.domain().elements()) {
      if (g.index) out += ", ";
      out += s.domain().label(g) + ":" + s.codomain().label(s(g));
    }
    return out + "]";
  }
  std::string set(const ElementSet& h) const {
    std::string out = "{";
    for (GElt g : h.elements()) out += (out.size() > 1 ? ", " : "") + elem(g);
    return out + "}";
  }

  void fill(Report& r) const {
    r.verdict = verdict_;
    r.detail = detail_;
    r.witness = witness_;
  }

 private:
  const Instance& in_;
  Verdict verdict_ = Verdict::kPass;
  std::string detail_;
  std::map<std::string, std::string> witness_;
};

using SuiteFn = std::function<void(const Instance&, const RunOptions&, Outcome&)>;

struct Suite {
  std::string id;
  std::string description;
  SuiteFn run;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

class SuiteRng {
 public:
  SuiteRng(const Instance& in, std::string_view suite) : engine_(in.seed ^ fnv1a(suite)) {}
  std::uint64_t below(std::uint64_t n) { return n <= 1 ? 0 : engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

bool needs_distributive(const Instance& in, const RunOptions& opt, Outcome& out) {
  if (opt.enforce_hypotheses && !in.lattice->is_distributive()) {
    out.skip("requires distributive lattice");
    return false;
  }
  return true;
}

// L-subgroups of mu worth testing against: eta, nu when present, the trivial
// L-subgroup of eta, and mu itself.
std::vector<std::pair<std::string, LSubset>> subjects(const Instance& in) {
  std::vector<std::pair<std::string, LSubset>> out{{"eta", in.eta}};
  if (in.nu) out.emplace_back("nu", *in.nu);
  out.emplace_back("trivial(eta)", trivial_of(in.eta));
  out.emplace_back("mu", in.mu);
  return out;
}

// Random L-subsets below mu, mostly not L-subgroups, used to exercise the
// negative side of the level characterizations.
std::vector<LSubset> perturbations(const Instance& in, std::string_view suite, int count) {
  SuiteRng rng(in, suite);
  const auto values = in.lattice->elements();
  const auto elems = in.group->elements();
  std::vector<LSubset> out;
  for (int i = 0; i < count; ++i) {
    std::vector<LatticeElt> v(in.eta.values().begin(), in.eta.values().end());
    const std::size_t changes = 1 + rng.below(2);
    for (std::size_t c = 0; c < changes; ++c) {
      const GElt x = elems[rng.below(elems.size())];
      const auto below = in.lattice->down_set(in.mu(x));
      v[x.index] = below[rng.below(below.size())];
    }
    out.emplace_back(in.group, in.lattice, std::move(v));
  }
  for (int i = 0; i < count; ++i)
    out.push_back(LSubset::from_function(in.group, in.lattice, [&](GElt) {
      return values[rng.below(values.size())];
    }));
  return out;
}

void suite_levels_subgroup(const Instance& in, const RunOptions&, Outcome& out) {
  auto cases = perturbations(in, "T2.2", 6);
  for (const auto& [name, s] : subjects(in)) cases.insert(cases.begin(), s);
  for (const LSubset& s : cases) {
    const bool direct = is_l_subgroup(s);
    if (direct != is_l_subgroup_via_levels(s))
      return out.fail("subgroup predicate and level characterization disagree",
                      {{"subject", out.values(s)}, {"direct", direct ? "true" : "false"}});
  }
}

void suite_hom_images(const Instance& in, const RunOptions& opt, Outcome& out) {
  if (!in.hom) return out.skip("instance has no homomorphism");
  if (!needs_distributive(in, opt, out)) return;
  const GroupHom& f = *in.hom;
  for (const auto& [name, s] : subjects(in)) {
    const LSubset img = image(f, s);
    if (!is_l_subgroup(img))
      return out.fail("image is not an L-subgroup",
                      {{"subject", name}, {"image", out.values(img)}});
    const LSubset back = preimage(f, img);
    if (!is_l_subgroup(back))
      return out.fail("preimage is not an L-subgroup",
                      {{"subject", name}, {"preimage", out.values(back)}});
  }
}

void suite_levels_subgroup_of(const Instance& in, const RunOptions&, Outcome& out) {
  auto cases = perturbations(in, "T2.7", 6);
  for (const auto& [name, s] : subjects(in)) cases.insert(cases.begin(), s);
  for (const LSubset& s : cases) {
    const bool direct = is_l_subgroup_of(s, in.mu);
    if (direct != is_l_subgroup_of_via_levels(s, in.mu))
      return out.fail("L-subgroup-of predicate and level characterization disagree",
                      {{"subject", out.values(s)}, {"direct", direct ? "true" : "false"}});
  }
}

void suite_levels_normal(const Instance& in, const RunOptions&, Outcome& out) {
  for (const auto& [name, s] : subjects(in)) {
    const bool direct = is_normal_in(s, in.mu);
    if (direct != is_normal_in_via_levels(s, in.mu))
      return out.fail("normality predicate and level characterization disagree",
                      {{"subject", name}, {"direct", direct ? "true" : "false"}});
  }
}

void suite_generated(const Instance& in, const RunOptions& opt, Outcome& out) {
  if (!needs_distributive(in, opt, out)) return;
  auto cases = perturbations(in, "Tgen", 4);
  for (const auto& [name, s] : subjects(in)) cases.insert(cases.begin(), s);
  for (const LSubset& s : cases) {
    if (!contains(in.mu, s)) continue;
    const LSubset g = generated(s, in.mu);
    std::map<std::string, std::string> w{{"subject", out.values(s)}, {"generated", out.values(g)}};
    if (!is_l_subgroup_of(g, in.mu)) return out.fail("generated is not an L-subgroup of mu", w);
    if (!contains(g, s)) return out.fail("generated does not contain its generator", w);
    if (tip(g) != tip(s)) return out.fail("generated changes the tip", w);
    if (is_l_subgroup(s) && g != s) return out.fail("generated moves an L-subgroup", w);
  }
}

void suite_conjugate_subgroup(const Instance& in, const RunOptions&, Outcome& out) {
  for (const LPoint& p : in.points)
    for (const auto& [name, s] : subjects(in)) {
      const LSubset c = conjugate_by_point(s, p, in.mu);
      if (!is_l_subgroup_of(c, in.mu))
        return out.fail("conjugate is not an L-subgroup of mu",
                        {{"subject", name}, {"point", out.point(p)}, {"conjugate", out.values(c)}});
    }
}

void suite_conjugate_tip(const Instance& in, const RunOptions&, Outcome& out) {
  const Lattice& lat = *in.lattice;
  for (const LPoint& p : in.points)
    for (const auto& [name, s] : subjects(in)) {
      const LatticeElt got = tip(conjugate_by_point(s, p));
      const LatticeElt want = lat.meet(p.value, tip(s));
      if (got != want)
        return out.fail("conjugate tip differs from a ∧ tip",
                        {{"subject", name}, {"point", out.point(p)},
                         {"tip", out.value(got)}, {"expected", out.value(want)}});
    }
}

void suite_setproduct_conjugation(const Instance& in, const RunOptions& opt, Outcome& out) {
  if (!in.nu) return out.skip("instance has no second L-subgroup");
  if (!needs_distributive(in, opt, out)) return;
  for (const LPoint& p : in.points) {
    const PointwiseCheck c = conjugate_setproduct_identity_check(in.eta, *in.nu, p, in.mu);
    if (!c.holds)
      return out.fail("conjugate of product differs from product of conjugates",
                      {{"point", out.point(p)}, {"element", out.elem(*c.witness)},
                       {"lhs", out.value(c.lhs(*c.witness))},
                       {"rhs", out.value(c.rhs(*c.witness))}});
  }
}

void suite_hom_image_conjugate(const Instance& in, const RunOptions& opt, Outcome& out) {
  if (!in.hom) return out.skip("instance has no homomorphism");
  if (!needs_distributive(in, opt, out)) return;
  const GroupHom& f = *in.hom;
  for (const LPoint& p : in.points) {
    const LSubset lhs = image(f, conjugate_by_point(in.eta, p));
    const LSubset rhs = conjugate_by_point(image(f, in.eta), LPoint{p.value, f(p.at)});
    if (lhs != rhs) {
      const PointwiseCheck c = compare_pointwise(lhs, rhs);
      return out.fail("image of conjugate differs from conjugate of image",
                      {{"point", out.point(p)},
                       {"element", c.lhs.domain().label(*c.witness)},
                       {"lhs", out.value(lhs(*c.witness))},
                       {"rhs", out.value(rhs(*c.witness))}});
    }
  }
}

// The codomain side: mu and eta are pushed forward along the surjection and
// the identity is checked for every point of f(mu) obtained from the
// instance points, and every preimage s of the point's element.
void suite_hom_preimage_conjugate(const Instance& in, const RunOptions& opt, Outcome& out) {
  if (!in.hom) return out.skip("instance has no homomorphism");
  if (!needs_distributive(in, opt, out)) return;
  const GroupHom& f = *in.hom;
  const LSubset mu_h = image(f, in.mu);
  const LSubset eta_h = image(f, in.eta);
  const FiniteGroup& target = *f.codomain();
  for (const LPoint& p : in.points) {
    const LPoint q{p.value, f(p.at)};
    const LSubset lhs = preimage(f, conjugate_by_point(eta_h, q, mu_h));
    for (GElt s : f.fiber(q.at)) {
      const LSubset rhs = conjugate_by_point(preimage(f, eta_h), LPoint{p.value, s});
      if (lhs != rhs) {
        const PointwiseCheck c = compare_pointwise(lhs, rhs);
        return out.fail("preimage of conjugate differs from conjugate of preimage",
                        {{"point", in.lattice->label(q.value) + "@" + target.label(q.at)},
                         {"lift", out.elem(s)},
                         {"element", out.elem(*c.witness)},
                         {"lhs", out.value(lhs(*c.witness))},
                         {"rhs", out.value(rhs(*c.witness))}});
      }
    }
  }
}

void suite_level_conjugate(const Instance& in, const RunOptions&, Outcome& out) {
  const Lattice& lat = *in.lattice;
  for (const LPoint& p : in.points) {
    std::vector<std::pair<std::string, LSubset>> candidates{
        {"conjugate", conjugate_by_point(in.eta, p)}};
    for (const LPoint& q : in.points)
      if (q != p) candidates.emplace_back("conjugate by " + out.point(q),
                                          meet_with(conjugate_by_point(in.eta, q), p.value));
    if (in.nu) candidates.emplace_back("nu", *in.nu);
    candidates.emplace_back("trivial", meet_with(trivial_of(in.eta), p.value));
    for (const auto& [name, nu] : candidates) {
      if (tip(nu) != lat.meet(p.value, tip(in.eta))) continue;
      const LevelConjugateResult r = level_conjugate_equiv(in.eta, nu, p);
      if (!r.agree())
        return out.fail("pointwise and level-wise conjugacy disagree",
                        {{"point", out.point(p)}, {"candidate", out.values(nu)},
                         {"pointwise", r.pointwise ? "true" : "false"}});
      if (name == "conjugate" && !r.pointwise)
        return out.fail("conjugate is not recognized as a conjugate", {{"point", out.point(p)}});
    }
  }
}

void suite_crisp_bridge(const Instance& in, const RunOptions&, Outcome& out) {
  const FiniteGroup& grp = *in.group;
  const auto subgroups = grp.subgroups();
  SuiteRng rng(in, "T3.8");
  const std::size_t pairs = std::min<std::size_t>(12, subgroups.size() * subgroups.size());
  for (std::size_t i = 0; i < pairs; ++i) {
    const ElementSet& h = subgroups[rng.below(subgroups.size())];
    // Half the pairs are conjugate by construction.
    const ElementSet k = (i % 2 == 0)
                             ? grp.conjugate_set(GElt{static_cast<std::uint32_t>(rng.below(grp.order()))}, h)
                             : subgroups[rng.below(subgroups.size())];
    bool classical = false;
    for (GElt z : grp.elements())
      if (grp.conjugate_set(z, h) == k) classical = true;
    const CrispBridgeResult r = crisp_bridge(in.group, h, k);
    if (r.conjugate != classical || !r.agree())
      return out.fail("crisp conjugacy and L-point conjugacy disagree",
                      {{"h", out.set(h)}, {"k", out.set(k)},
                       {"classical", classical ? "true" : "false"},
                       {"lattice", r.lattice_conjugate ? "true" : "false"}});
  }
}

void suite_maximal_conjugate(const Instance& in, const RunOptions& opt, Outcome& out) {
  if (opt.enforce_hypotheses && !in.lattice->is_chain()) return out.skip("requires chain");
  try {
    if (!is_proper_in(in.eta, in.mu)) return out.skip("eta is not proper in mu");
    if (!is_maximal(in.eta, in.mu, opt.maximal_search_cap))
      return out.skip("eta is not maximal in mu");
    for (const LPoint& p : in.points) {
      const MaximalConjugateReport r =
          maximal_conjugate_check(in.eta, in.mu, p, opt.maximal_search_cap);
      if (!r.holds())
        return out.fail("conjugate is neither equal to nor maximal in the conjugate of mu",
                        {{"point", out.point(p)}, {"eta_conj", out.values(r.eta_conj)},
                         {"mu_conj", out.values(r.mu_conj)}});
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSearchSpaceTooLarge) return out.skip("search space too large");
    if (e.code() == ErrorCode::kNotAChain) return out.skip("requires chain");
    throw;
  }
}

void suite_normal_via_conjugates(const Instance& in, const RunOptions&, Outcome& out) {
  for (const auto& [name, s] : subjects(in)) {
    const NormalityReport r = normality_via_conjugates(s, in.mu);
    const bool direct = is_normal_in(s, in.mu);
    if (r.normal != direct)
      return out.fail("normality and conjugate containment disagree",
                      {{"subject", name}, {"direct", direct ? "true" : "false"}});
    if (!r.rider_holds)
      return out.fail("normal conjugate with equal tip differs",
                      {{"subject", name}, {"point", out.point(*r.rider_witness)}});
  }
}

void suite_normalizer_largest(const Instance& in, const RunOptions& opt, Outcome& out) {
  const FiniteGroup& grp = *in.group;
  const Lattice& lat = *in.lattice;
  for (const auto& [name, s] : subjects(in)) {
    const LSubset n = normalizer_setproduct(s, in.mu);
    std::map<std::string, std::string> w{{"subject", name}, {"normalizer", out.values(n)}};
    if (!contains(n, s)) return out.fail("normalizer does not contain eta", w);
    if (!contains(in.mu, n)) return out.fail("normalizer escapes mu", w);
    if (!is_l_subgroup(n)) {
      if (opt.enforce_hypotheses && !lat.is_distributive())
        return out.skip("normalizer is not an L-subgroup over a non-distributive lattice");
      return out.fail("normalizer is not an L-subgroup", w);
    }
    if (!is_normal_in(s, n)) return out.fail("eta is not normal in its normalizer", w);
    if (is_normal_in(s, in.mu) != (n == in.mu))
      return out.fail("normal in mu but normalizer differs from mu", w);
    // Any L-point of mu that normalizes eta lies in the normalizer.
    for (GElt y : grp.elements())
      for (LatticeElt a : lat.down_set(in.mu(y))) {
        bool normalizes = true;
        for (GElt x : grp.elements())
          if (!lat.leq(lat.meet(s(x), a), s(grp.conj(y, x)))) {
            normalizes = false;
            break;
          }
        if (normalizes && !lat.leq(a, n(y))) {
          w["point"] = out.point(LPoint{a, y});
          return out.fail("normalizing L-point lies outside the normalizer", w);
        }
      }
  }
}

void suite_normalizer_conjugation(const Instance& in, const RunOptions& opt, Outcome& out) {
  if (!needs_distributive(in, opt, out)) return;
  const bool guarded = in.lattice->is_distributive();
  for (const LPoint& p : in.points) {
    // The library call refuses non-distributive lattices, so with hypotheses
    // off both sides are assembled here to obtain a witness.
    const PointwiseCheck c =
        guarded ? normalizer_conjugation_identity(in.eta, in.mu, p)
                : compare_pointwise(
                      conjugate_by_point(normalizer_setproduct(in.eta, in.mu), p),
                      meet_with(normalizer_setproduct(conjugate_by_point(in.eta, p), in.mu),
                                p.value));
    if (!c.holds)
      return out.fail("conjugated normalizer differs from normalizer of conjugate",
                      {{"point", out.point(p)}, {"element", out.elem(*c.witness)},
                       {"lhs", out.value(c.lhs(*c.witness))},
                       {"rhs", out.value(c.rhs(*c.witness))}});
  }
}

void suite_crisp_normalizer(const Instance& in, const RunOptions&, Outcome& out) {
  const FiniteGroup& grp = *in.group;
  const auto subgroups = grp.subgroups();
  SuiteRng rng(in, "C4.5");
  const LSubset one_g = characteristic(in.group, in.lattice, ElementSet::all(grp.order()));
  for (int i = 0; i < 6; ++i) {
    const ElementSet& h = subgroups[rng.below(subgroups.size())];
    const GElt x{static_cast<std::uint32_t>(rng.below(grp.order()))};
    const LPoint one_x{in.lattice->top(), x};
    const LSubset one_h = characteristic(in.group, in.lattice, h);
    const LSubset lhs = normalizer_setproduct(conjugate_by_point(one_h, one_x), one_g);
    const LSubset rhs = conjugate_by_point(normalizer_setproduct(one_h, one_g), one_x);
    const LSubset crisp = characteristic(in.group, in.lattice,
                                         grp.normalizer(grp.conjugate_set(grp.inv(x), h)));
    if (lhs != rhs || lhs != crisp)
      return out.fail("normalizer of crisp conjugate differs",
                      {{"h", out.set(h)}, {"x", out.elem(x)},
                       {"lhs", out.values(lhs)}, {"rhs", out.values(rhs)}});
  }
}

void suite_inclusion_levels(const Instance& in, const RunOptions&, Outcome& out) {
  auto all = subjects(in);
  for (const LPoint& p : in.points)
    all.emplace_back("eta^" + out.point(p), conjugate_by_point(in.eta, p));
  for (const auto& [a_name, a] : all)
    for (const auto& [b_name, b] : all) {
      const bool direct = contains(b, a);
      if (direct != contains_via_levels(b, a))
        return out.fail("containment and level containment disagree",
                        {{"inner", a_name}, {"outer", b_name},
                         {"direct", direct ? "true" : "false"}});
    }
}

void suite_inverse_containment(const Instance& in, const RunOptions&, Outcome& out) {
  for (const auto& [name, s] : subjects(in))
    for (const LPoint& p : in.points) {
      const InverseContainment r = inverse_point_containment_check(s, in.mu, p);
      if (!r.holds())
        return out.fail("conjugate containment differs for z and its inverse",
                        {{"subject", name}, {"point", out.point(p)},
                         {"forward", r.forward ? "true" : "false"}});
    }
}

void suite_commuting_point(const Instance& in, const RunOptions&, Outcome& out) {
  for (const auto& [name, s] : subjects(in))
    for (const LPoint& p : in.points) {
      const LSubset pt = as_lsubset(p, in.group, in.lattice);
      const bool commutes = set_product(s, pt) == set_product(pt, s);
      const bool inside = contains(s, conjugate_by_point(s, p));
      if (commutes != inside)
        return out.fail("commuting with an L-point differs from conjugate containment",
                        {{"subject", name}, {"point", out.point(p)},
                         {"commutes", commutes ? "true" : "false"}});
    }
}

void suite_normalizer_equivalence(const Instance& in, const RunOptions&, Outcome& out) {
  for (const auto& [name, s] : subjects(in)) {
    const LSubset a = normalizer_setproduct(s, in.mu);
    const LSubset b = normalizer_conjugacy(s, in.mu);
    if (a != b) {
      const PointwiseCheck c = compare_pointwise(a, b);
      return out.fail("set-product and conjugacy normalizers differ",
                      {{"subject", name}, {"element", out.elem(*c.witness)},
                       {"setproduct", out.value(a(*c.witness))},
                       {"conjugacy", out.value(b(*c.witness))}});
    }
  }
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites{
      {"T2.2", "L-subgroup iff every non-empty level subset is a subgroup", suite_levels_subgroup},
      {"T2.3", "images and preimages of L-subgroups are L-subgroups", suite_hom_images},
      {"T2.7", "L-subgroup of mu iff each level subset is a subgroup of mu's level",
       suite_levels_subgroup_of},
      {"T2.12", "normal in mu iff each level subset is normal in mu's level", suite_levels_normal},
      {"Tgen", "generated L-subgroup is the smallest L-subgroup of mu above eta", suite_generated},
      {"T3.2", "conjugate by an L-point of mu is an L-subgroup of mu", suite_conjugate_subgroup},
      {"R3.tip", "tip of a conjugate is a ∧ tip", suite_conjugate_tip},
      {"T3.4", "conjugation distributes over set product", suite_setproduct_conjugation},
      {"T3.5", "image of a conjugate is the conjugate of the image", suite_hom_image_conjugate},
      {"T3.6", "preimage of a conjugate is a conjugate of the preimage",
       suite_hom_preimage_conjugate},
      {"T3.7", "conjugacy is detected level by level", suite_level_conjugate},
      {"T3.8", "crisp subgroups are conjugate iff their characteristic functions are",
       suite_crisp_bridge},
      {"T3.10", "conjugates of a maximal L-subgroup stay maximal or collapse",
       suite_maximal_conjugate},
      {"P4.1", "normal iff every conjugate by an L-point of mu lies inside",
       suite_normal_via_conjugates},
      {"D4.3-largest", "set-product normalizer is the largest L-subgroup normalizing eta",
       suite_normalizer_largest},
      {"T4.4", "normalizer commutes with conjugation", suite_normalizer_conjugation},
      {"C4.5", "normalizer of a crisp conjugate", suite_crisp_normalizer},
      {"P4.7", "containment is decided on level subsets up to the tip", suite_inclusion_levels},
      {"L4.8", "conjugate containment is symmetric in z and its inverse",
       suite_inverse_containment},
      {"L4.9", "eta commutes with a_z iff the conjugate lies inside eta", suite_commuting_point},
      {"D4.10-equivalence", "set-product and conjugacy normalizers agree",
       suite_normalizer_equivalence},
  };
  return suites;
}

const Suite* lookup(std::string_view id) {
  for (const Suite& s : registry())
    if (s.id == id) return &s;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const Suite& s : registry()) out.push_back(s.id);
    return out;
  }();
  return ids;
}

bool is_registered(std::string_view suite) { return lookup(suite) != nullptr; }

std::string_view suite_description(std::string_view suite) {
  const Suite* s = lookup(suite);
  if (!s) throw Error(ErrorCode::kUnknownSuite, "unknown suite: " + std::string(suite));
  return s->description;
}

Report run_check(std::string_view suite, const Instance& instance, const RunOptions& options) {
  const Suite* s = lookup(suite);
  if (!s) throw Error(ErrorCode::kUnknownSuite, "unknown suite: " + std::string(suite));
  Report report;
  report.suite = s->id;
  report.instance = instance.descriptor;
  const auto start = std::chrono::steady_clock::now();
  Outcome outcome(instance);
  try {
    s->run(instance, options, outcome);
  } catch (const Error& e) {
    outcome.fail("operation raised " + std::string(code_name(e.code())) + ": " + e.what(),
                 {{"error", std::string(code_name(e.code()))}});
  }
  outcome.fill(report);
  report.elapsed_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

std::vector<Report> run_suite(std::string_view suite, std::span<const Instance> instances,
                              const RunOptions& options) {
  if (!is_registered(suite))
    throw Error(ErrorCode::kUnknownSuite, "unknown suite: " + std::string(suite));
  std::vector<Report> reports(instances.size());
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, instances.size()));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      reports[i] = run_check(suite, instances[i], options);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  for (unsigned j = 0; j < jobs; ++j)
    workers.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < instances.size();)
        reports[i] = run_check(suite, instances[i], options);
    });
  for (auto& w : workers) w.join();
  return reports;
}

bool any_failed(std::span<const Report> reports) {
  return std::any_of(reports.begin(), reports.end(),
                     [](const Report& r) { return r.verdict == Verdict::kFail; });
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkip: return "skip";
  }
  return "unknown";
}

std::string reports_to_json(std::span<const Report> reports, bool include_timing) {
  nlohmann::json out = nlohmann::json::array();
  for (const Report& r : reports) {
    nlohmann::json j{{"suite", r.suite},
                     {"instance", r.instance},
                     {"verdict", verdict_name(r.verdict)}};
    if (r.verdict != Verdict::kPass) j["detail"] = r.detail;
    if (r.verdict == Verdict::kFail) j["witness"] = r.witness;
    if (include_timing) j["elapsed_ms"] = r.elapsed_ms;
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

}  // namespace lgroup::verify
