// test_ktheory.cpp — projections, circle weights, Chern characters, pairing.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "qsph/ktheory.hpp"
#include "tests/test_support.hpp"

using namespace qsph;
using namespace qsph::testsupport;

namespace {

const ExactRing R;

ExactPWTable& tab() {
  static ExactPWTable table(R, HalfInt(6));
  return table;
}

}  // namespace

TEST_CASE("projection construction and constructor checks") {
  SUBCASE("P_0 is the unit") {
    const AlgebraMatrix p = projection_pn(tab(), HalfInt(0));
    CHECK(p.dim == 1);
    CHECK(p.at(0, 0) == ExactElem::unit(R));
  }

  SUBCASE("P_{1/2} entrywise") {
    const AlgebraMatrix p = projection_pn(tab(), HalfInt::from_twice(1));
    REQUIRE(p.dim == 2);
    CHECK(p.at(0, 0) == elem_from_word(R, "da"));
    CHECK(p.at(0, 1) == scal(-R.q_pow(HalfInt(1)), elem_from_word(R, "dc")));
    CHECK(p.at(1, 0) == elem_from_word(R, "ba"));
    CHECK(p.at(1, 1) == scal(-R.q_pow(HalfInt(1)), elem_from_word(R, "bc")));
  }

  SUBCASE("idempotent self-adjoint for |n| <= 2, both orientations") {
    for (long two_n : {1, -1, 2, -2, 3, -3, 4, -4}) {
      const HalfInt n = HalfInt::from_twice(two_n);
      INFO("n = " << n.str());
      AlgebraMatrix p = projection_pn(tab(), n);  // throws on any violated identity
      CHECK(p.dim == n.abs().twice() + 1);
      CHECK(mat_mul(p, p) == p);
      CHECK(mat_star(p) == p);
      for (const ExactElem& entry : p.entries) CHECK(in_sphere_subalgebra(entry));
    }
  }

  SUBCASE("cutoff is reported") {
    ExactPWTable small(R, HalfInt(1));
    CHECK_THROWS_AS((void)projection_pn(small, HalfInt(2)), std::runtime_error);
  }
}

TEST_CASE("circle representation weights") {
  CHECK(rep_vn(HalfInt(0)).weights == std::vector<QRat>{QRat(1)});
  const CircleRep vhalf = rep_vn(HalfInt::from_twice(1));
  REQUIRE(vhalf.weights.size() == 2);
  CHECK(vhalf.weights[0] == QRat(1));
  CHECK(vhalf.weights[1] == QRat::q_pow(-2));

  // geometric resum: sum_k q^{-2k} = q^{-2|n|} [2|n|+1]_q
  for (long two_n : {1, 2, 3, 4, -3}) {
    const HalfInt n = HalfInt::from_twice(two_n);
    QRat acc;
    for (const QRat& w : rep_vn(n).weights) acc += w;
    CHECK(acc == QRat::s_pow(-2 * n.abs().twice()) *
                     QRat::qnum(HalfInt::from_twice(2 * n.abs().twice() + 2)));
  }
}

TEST_CASE("zeroth Chern character collapses to a scalar") {
  CHECK(chern0(projection_pn(tab(), HalfInt(0)), rep_vn(HalfInt(0))) == ExactElem::unit(R));
  for (long two_n : {1, -1, 2, -2, 3, -3}) {
    const HalfInt n = HalfInt::from_twice(two_n);
    const ExactElem ch0 = chern0(projection_pn(tab(), n), rep_vn(n));
    // q^{2(n - |n|)} * 1: trivial for n > 0, a positive q-power for n < 0
    const QRat weight = QRat::s_pow(2 * (n.twice() - n.abs().twice()));
    INFO("n = " << n.str());
    CHECK(ch0 == scal(R.from_qrat(weight), ExactElem::unit(R)));
    CHECK(phi0(ch0).is_zero());
  }
}

TEST_CASE("second Chern character chain") {
  const HalfInt half = HalfInt::from_twice(1);
  const Chain3 chain = chern2(projection_pn(tab(), half), rep_vn(half));
  CHECK(chain.size() == 8);
  for (const ChainTerm3& term : chain) {
    CHECK(in_sphere_subalgebra(term.x0));
    CHECK(in_sphere_subalgebra(term.x1));
    CHECK(in_sphere_subalgebra(term.x2));
  }
  // the k0 = k1 terms carry the -1/2 unit correction
  const AlgebraMatrix p = projection_pn(tab(), half);
  const ExactElem corrected =
      p.at(0, 0) - scal(RadScalar(QRat(1) / QRat(2)), ExactElem::unit(R));
  CHECK(chain.front().x0 == corrected);
  CHECK(chain.front().coeff == RadScalar(QRat(-2)));
}

TEST_CASE("gradewise equivariance") {
  for (long two_n : {0, 1, -1, 2, -2, 4}) {
    INFO("n doubled = " << two_n);
    CHECK(equivariance_check(projection_pn(tab(), HalfInt::from_twice(two_n))));
  }
  AlgebraMatrix broken = projection_pn(tab(), HalfInt::from_twice(1));
  broken.at(0, 1) = ExactElem::generator(R, Gen::kA);
  CHECK_FALSE(equivariance_check(broken));
}

TEST_CASE("index pairing reproduces q^{-2|n|} [2n]_q") {
  const auto frozen = load_frozen();

  SUBCASE("frozen table, exact equality") {
    for (const auto& item : frozen.at("index_pairing")) {
      const HalfInt n = HalfInt::from_twice(item.at("two_n").get<long>());
      const QRat want = QRat::parse(item.at("value").get<std::string>());
      INFO("n = " << n.str());
      const QRat got = index_pairing(tab(), n);
      CHECK(got == want);
      CHECK(got == expected_index(n));
      for (const auto& [q_text, val_text] : item.at("value_at").items()) {
        const double q_val = QRat::parse(q_text).eval_s(1.0);  // plain rational
        CHECK(close(got.eval_s(std::sqrt(q_val)), std::stod(val_text.get<std::string>()), 1e-12));
      }
    }
  }

  SUBCASE("beyond the frozen table") {
    const HalfInt n = HalfInt::from_twice(-4);
    CHECK(index_pairing(tab(), n) == expected_index(n));
    CHECK(index_pairing(tab(), HalfInt(0)) == QRat());
    CHECK(expected_index(HalfInt(0)).is_zero());
  }

  SUBCASE("phi2 against Ch_2 alone, the frozen witness") {
    const HalfInt half = HalfInt::from_twice(1);
    const QRat witness = index_pair(make_phi0(), make_phi2(), ExactElem::zero(),
                                    chern2(projection_pn(tab(), half), rep_vn(half)));
    CHECK(witness == QRat::q_pow(-1));
    CHECK(frozen.at("phi2_chern2_P12_witness").get<std::string>() == "q^{-1}");
  }
}
