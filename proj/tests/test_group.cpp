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

#include <functional>
#include <memory>

#include "doctest.h"
#include "lgroup/error.hpp"
#include "lgroup/group.hpp"
#include "oracle.hpp"

using namespace lgroup;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kOk;
}

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

oracle::Perm images_of(const FiniteGroup& grp, GElt g) {
  const auto perm = grp.permutation(g);
  oracle::Perm p;
  for (auto i : perm->images()) p.push_back(static_cast<int>(i));
  return p;
}

}  // namespace

TEST_CASE("permutation parsing and printing") {
  CHECK(Permutation::parse("(1 2 3)(4 5)", 5).to_string() == "(1 2 3)(4 5)");
  CHECK(Permutation::parse("(123)", 4).to_string() == "(1 2 3)");
  CHECK(Permutation::parse("e", 4).is_identity());
  CHECK(Permutation::parse("()", 4).to_string() == "e");
  CHECK(Permutation::parse("(1 2)", 3).sign() == -1);
  CHECK(code_of([] { Permutation::parse("(1 9)", 4); }) == ErrorCode::kParseError);
  const Permutation p = Permutation::parse("(1 2 3)", 3), q = Permutation::parse("(1 2)", 3);
  // (pq)(i) = p(q(i)): q sends 1 to 2, then p sends 2 to 3.
  CHECK((p * q)(0) == 2);
  CHECK((p * p.inverse()).is_identity());
}

TEST_CASE("symmetric groups") {
  const FiniteGroup s4 = FiniteGroup::symmetric(4);
  CHECK(s4.order() == 24);
  CHECK(s4.label(s4.identity()) == "e");
  CHECK(s4.identity().index == 0);
  CHECK_FALSE(s4.is_abelian());
  CHECK(FiniteGroup::symmetric(3).order() == 6);
  CHECK(code_of([] { FiniteGroup::build({GroupSpec::Kind::kSymmetric, 7}); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("S4 table matches direct permutation composition") {
  const FiniteGroup grp = FiniteGroup::symmetric(4);
  for (GElt x : grp.elements())
    for (GElt y : grp.elements())
      CHECK(images_of(grp, grp.mul(x, y)) == oracle::compose(images_of(grp, x), images_of(grp, y)));
}

TEST_CASE("conjugation in S4 follows z x z^-1") {
  const FiniteGroup grp = FiniteGroup::symmetric(4);
  const GElt z = grp.at("(1 2 3)"), x = grp.at("(2 4)");
  const oracle::Perm pz = oracle::cycles("(1 2 3)", 4), px = oracle::cycles("(2 4)", 4);
  const oracle::Perm want = oracle::compose(oracle::compose(pz, px), oracle::inverse(pz));
  CHECK(images_of(grp, grp.conj(z, x)) == want);
  CHECK(grp.label(grp.conj(z, x)) == "(3 4)");
  CHECK(grp.conj(grp.identity(), x) == x);
  CHECK(grp.conj_inverse(z, grp.conj(z, x)) == x);
}

TEST_CASE("dihedral presentation and labels") {
  const FiniteGroup D = FiniteGroup::dihedral(16);
  CHECK(D.order() == 16);
  const GElt r = D.at("r"), s = D.at("s");
  CHECK(D.element_order(r) == 8);
  CHECK(D.element_order(s) == 2);
  CHECK(D.mul(r, s) == D.mul(s, D.inv(r)));
  CHECK(D.label(D.mul(s, D.mul(r, r))) == "sr^2");
  // Word forms are rewritten into the normal form.
  CHECK(D.at("s r^3") == D.at("sr^3"));
  CHECK(D.at("r^2 s") == D.at("sr^6"));
  CHECK(D.at("r^8") == D.identity());
  CHECK(D.label(D.conj(r, s)) == "sr^6");
  CHECK(code_of([&] { D.at("t"); }) == ErrorCode::kUnknownName);
}

TEST_CASE("cyclic and quaternion groups") {
  const FiniteGroup C1 = FiniteGroup::cyclic(1);
  CHECK(C1.order() == 1);
  const FiniteGroup C6 = FiniteGroup::cyclic(6);
  CHECK(C6.is_abelian());
  CHECK(C6.at("g^9") == C6.at("g^3"));
  const FiniteGroup Q = FiniteGroup::quaternion();
  CHECK(Q.order() == 8);
  CHECK(Q.mul(Q.at("i"), Q.at("j")) == Q.at("k"));
  CHECK(Q.mul(Q.at("j"), Q.at("i")) == Q.at("-k"));
  CHECK(Q.element_order(Q.at("i")) == 4);
}

TEST_CASE("generated subgroups") {
  const FiniteGroup S4 = FiniteGroup::symmetric(4);
  const GElt d41[] = {S4.at("(2 4)"), S4.at("(1 2 3 4)")};
  const ElementSet h = S4.generated(d41);
  CHECK(h.count() == 8);
  CHECK(S4.is_subgroup(h));
  CHECK(S4.generated(std::span<const GElt>{}).count() == 1);
  // Idempotent.
  CHECK(S4.generated(h) == h);
  // The oracle closure of the same generators has the same size.
  CHECK(oracle::closure({oracle::cycles("(2 4)", 4), oracle::cycles("(1 2 3 4)", 4)}, 4).size() ==
        8);

  const FiniteGroup D = FiniteGroup::dihedral(16);
  const GElt d8[] = {D.at("r^2"), D.at("s")};
  CHECK(D.generated(d8).count() == 8);
}

TEST_CASE("classical normalizers") {
  const FiniteGroup D = FiniteGroup::dihedral(16);
  const GElt s[] = {D.identity(), D.at("s")};
  const ElementSet h = ElementSet::of(D.order(), s);
  const GElt want[] = {D.identity(), D.at("s"), D.at("r^4"), D.at("sr^4")};
  CHECK(D.normalizer(h) == ElementSet::of(D.order(), want));
  CHECK(D.normalizer(ElementSet::all(16)) == ElementSet::all(16));
  CHECK(D.normalizer(ElementSet::of(16, std::span(&want[0], 1))) == ElementSet::all(16));
  const GElt bad[] = {D.at("r")};
  CHECK(code_of([&] { D.normalizer(ElementSet::of(16, bad)); }) == ErrorCode::kNotASubgroup);
}

TEST_CASE("subgroup enumeration") {
  // S4 has 30 subgroups, S3 has 6, D16 has 19.
  CHECK(FiniteGroup::symmetric(4).subgroups().size() == 30);
  CHECK(FiniteGroup::symmetric(3).subgroups().size() == 6);
  CHECK(FiniteGroup::dihedral(16).subgroups().size() == 19);
}

TEST_CASE("group identities hold for every built group") {
  for (const FiniteGroup& grp : {FiniteGroup::symmetric(4), FiniteGroup::dihedral(12),
                               FiniteGroup::cyclic(5), FiniteGroup::quaternion()})
    for (GElt x : grp.elements()) {
      CHECK(grp.inv(grp.inv(x)) == x);
      for (GElt y : grp.elements()) CHECK(grp.inv(grp.mul(x, y)) == grp.mul(grp.inv(y), grp.inv(x)));
    }
}

TEST_CASE("permutation groups from generators") {
  GroupSpec spec{GroupSpec::Kind::kPermutation, 4, {"(2 4)", "(1 2 3 4)"}};
  const FiniteGroup grp = FiniteGroup::build(spec);
  CHECK(grp.order() == 8);
  CHECK(24 % grp.order() == 0);
  for (GElt x : grp.elements())
    for (GElt y : grp.elements())
      CHECK(images_of(grp, grp.mul(x, y)) == oracle::compose(images_of(grp, x), images_of(grp, y)));
  spec.generators = {"(1 2)", "(1 2 3 4)"};
  spec.closure_cap = 10;
  CHECK(code_of([&] { FiniteGroup::build(spec); }) == ErrorCode::kClosureTooLarge);
}

TEST_CASE("Cayley tables are validated") {
  CHECK(FiniteGroup::from_table({"e", "x"}, {{0, 1}, {1, 0}}).order() == 2);
  CHECK(code_of([] { FiniteGroup::from_table({"e", "x"}, {{0, 1}, {1, 1}}); }) ==
        ErrorCode::kInvalidTable);
  // Latin square that is not associative.
  CHECK(code_of([] {
          FiniteGroup::from_table({"e", "a", "b", "c", "d"},
                                  {{0, 1, 2, 3, 4},
                                   {1, 0, 3, 4, 2},
                                   {2, 4, 0, 1, 3},
                                   {3, 2, 4, 0, 1},
                                   {4, 3, 1, 2, 0}});
        }) == ErrorCode::kInvalidTable);
}

TEST_CASE("homomorphisms") {
  const GroupPtr S4 = share(FiniteGroup::symmetric(4));
  const GroupPtr C2 = share(FiniteGroup::cyclic(2));
  std::vector<GElt> sign;
  for (GElt x : S4->elements())
    sign.push_back(S4->permutation(x)->sign() > 0 ? C2->identity() : C2->at("g"));
  const GroupHom f = GroupHom::from_map(S4, C2, sign);
  CHECK(f.is_surjective());
  CHECK(f.fiber(C2->identity()).size() == 12);

  const GroupHom id = GroupHom::from_map(S4, S4, S4->elements());
  CHECK(id.is_surjective());

  const GroupPtr D16 = share(FiniteGroup::dihedral(16));
  HomSpec bad{{{"r", "r"}, {"s", "e"}}, true};
  CHECK(code_of([&] { GroupHom::build(D16, D16, bad); }) == ErrorCode::kNotAHomomorphism);
  HomSpec quotient{{{"r", "r"}, {"s", "s"}}, true};
  const GroupPtr D8 = share(FiniteGroup::dihedral(8));
  const GroupHom q = GroupHom::build(D16, D8, quotient);
  CHECK(q.is_surjective());
  CHECK(q(D16->at("r^5")) == D8->at("r"));
  HomSpec not_generating{{{"r", "r"}}, true};
  CHECK(code_of([&] { GroupHom::build(D16, D16, not_generating); }) ==
        ErrorCode::kIllDefinedOnGenerators);
  HomSpec partial{{{"e", "e"}}, false};
  CHECK(code_of([&] { GroupHom::build(D16, D16, partial); }) == ErrorCode::kNotAHomomorphism);
}
