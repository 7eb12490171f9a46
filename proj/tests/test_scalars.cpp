// test_scalars.cpp — exact scalar tower: HalfInt, Poly, QRat, RadScalar, ConstExt.
// SPDX-License-Identifier: MIT
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qsph/const_ext.hpp"
#include "qsph/half_int.hpp"
#include "qsph/poly.hpp"
#include "qsph/qrat.hpp"
#include "qsph/rad_scalar.hpp"
#include "tests/test_support.hpp"

using namespace qsph;
using namespace qsph::testsupport;

TEST_CASE("half integers") {
  HalfInt l = HalfInt::from_twice(3);  // 3/2
  CHECK(l.str() == "3/2");
  CHECK((l + l).str() == "3");
  CHECK((l - HalfInt(2)).str() == "-1/2");
  CHECK((2 * l).as_integer() == 3);
  CHECK(l.to_double() == doctest::Approx(1.5));
  CHECK(HalfInt::parse("-5/2").twice() == -5);
  CHECK(HalfInt::parse("4").twice() == 8);
  CHECK(HalfInt(2) > l);
  CHECK(l.abs() == l);
  CHECK((-l).abs() == l);
  CHECK_FALSE(l.is_integer());
  CHECK_THROWS_AS((void)l.as_integer(), std::domain_error);
}

TEST_CASE("laurent polynomial arithmetic") {
  const Poly one = Poly::one();
  const Poly s = Poly::monomial(1, 1);
  const Poly x = one + Poly::monomial(1, 2);        // 1 + s^2
  const Poly y = one - Poly::monomial(1, 2);        // 1 - s^2
  CHECK((x * y).str("s", 1) == "1 - s^4");
  CHECK((x + y).str("s", 1) == "2");
  CHECK((x - x).is_zero());

  // division is exact or throws
  const Poly num = one - Poly::monomial(1, 8);
  CHECK(Poly::div_exact(num, x * y).str("s", 1) == "1 + s^4");
  CHECK_THROWS_AS((void)Poly::div_exact(one, x), std::domain_error);

  // Laurent support
  const Poly lau = Poly::monomial(1, -2) + Poly::monomial(2, 1);
  CHECK(lau.low() == -2);
  CHECK(lau.eval_double(2.0) == doctest::Approx(0.25 + 4.0));
  CHECK((lau * s).low() == -1);

  SUBCASE("gcd and content") {
    const Poly g = Poly::gcd(x * x * y, x * (one + Poly::monomial(1, 4)));
    CHECK(g == x);  // gcd is monic by convention here: 1 + s^2 has constant 1
    const Poly c = Poly::monomial(mpq_class(6), 0) + Poly::monomial(mpq_class(9), 2);
    CHECK(c.content() == mpq_class(3));
    CHECK(c.primitive().str("s", 1) == "2 + 3*s^2");
  }

  SUBCASE("q rendering uses stride 2") {
    CHECK(x.str("q", 2) == "1 + q");
    CHECK((one + Poly::monomial(1, 4)).str("q", 2) == "1 + q^2");
  }
}

TEST_CASE("rational functions in q") {
  const QRat q = QRat::q_pow(1);
  const QRat one(1);

  SUBCASE("canonical form") {
    // (1 - q^2)/(1 - q^4) reduces to 1/(1 + q^2)
    const QRat r = (one - q * q) / (one - q * q * q * q);
    CHECK(r.den().str("s", 1) == "1 + s^4");
    CHECK(r.num().is_one());
    CHECK(r.str() == "(1)/(1 + q^2)");
    const QRat z = r - r;
    CHECK(z.is_zero());
    CHECK(z == QRat());
  }

  SUBCASE("field operations at sample points") {
    const QRat x = (one + q) / (one - q);
    const QRat y = QRat::s_pow(-3) + QRat(mpq_class(2, 3));
    for (double s : sample_points()) {
      const double qd = s * s;
      CHECK(close(x.eval_s(s), (1 + qd) / (1 - qd)));
      CHECK(close(y.eval_s(s), std::pow(s, -3) + 2.0 / 3.0));
      CHECK(close((x * y).eval_s(s), x.eval_s(s) * y.eval_s(s)));
      CHECK(close((x / y).eval_s(s), x.eval_s(s) / y.eval_s(s)));
      CHECK(close((x + y).eval_s(s), x.eval_s(s) + y.eval_s(s)));
    }
    CHECK((x * x.inv()).is_one());
  }

  SUBCASE("quantum integers") {
    CHECK(QRat::qnum(0).is_zero());
    CHECK(QRat::qnum(1).is_one());
    CHECK(QRat::qnum(2).str() == "q^-1 + q");
    CHECK(QRat::qnum(3).str() == "q^-2 + 1 + q^2");
    // [1/2] = 1/(q^{-1/2} + q^{1/2})... check numerically instead of by form
    const QRat half = QRat::qnum(HalfInt::from_twice(1));
    for (double s : sample_points()) {
      const double qd = s * s;
      CHECK(close(half.eval_s(s), (1.0 / s - s) / (1.0 / qd - qd)));
    }
    // negation symmetry [-n] = -[n]
    CHECK(QRat::qnum(HalfInt::from_twice(-5)) == -QRat::qnum(HalfInt::from_twice(5)));
  }

  SUBCASE("exact rational substitution") {
    const QRat x = (one - q * q) / (one - q * q * q * q);
    CHECK(x.all_exponents_even());
    CHECK(x.eval_q_mpq(mpq_class(1, 2)) == mpq_class(4, 5));
    CHECK_FALSE(QRat::s_pow(1).all_exponents_even());
    CHECK_THROWS_AS((void)QRat::s_pow(1).eval_q_mpq(mpq_class(1, 2)), std::domain_error);
    // long double path agrees with double path
    CHECK(close(static_cast<double>(x.eval_s_ld(0.5L)), x.eval_s(0.5)));
    CHECK(x.eval_s_mpq(mpq_class(1, 2)) == mpq_class(16, 17));
  }

  SUBCASE("string round trip") {
    for (const QRat& v : {(one + q) / (one - q), QRat::s_pow(-5), QRat(mpq_class(-7, 3)),
                          QRat::qnum(4), (QRat::s_pow(1) + one) / (q - QRat(2))}) {
      CHECK(QRat::parse(v.str()) == v);
    }
    CHECK(QRat::parse("q^-1 + q") == QRat::qnum(2));
    CHECK(QRat::parse("(1 - q^2)/(1 - q^4)") == (one - q * q) / (one - q * q * q * q));
  }
}

TEST_CASE("square root extension") {
  const QRat q = QRat::q_pow(1);
  const QRat one(1);

  SUBCASE("squares collapse") {
    const QRat f = one + q;  // radicand 1 + q^2 in s
    const RadScalar r = RadScalar::sqrt_of(f);
    CHECK((r * r) == RadScalar(f));
    CHECK_FALSE(r.is_rational());
    // perfect squares come out rational
    CHECK(RadScalar::sqrt_of(q * q).to_qrat() == q);
    CHECK(RadScalar::sqrt_of(QRat(4)).to_qrat() == QRat(2));
    CHECK(RadScalar::sqrt_of((one + q) * (one + q)).to_qrat() == one + q);
  }

  SUBCASE("integer square extraction") {
    CHECK(RadScalar::sqrt_of(QRat(18)) == RadScalar(QRat(3)) * RadScalar::sqrt_of(QRat(2)));
    CHECK(RadScalar::sqrt_of(QRat(mpq_class(9, 2))) ==
          RadScalar(QRat(mpq_class(3, 2))) * RadScalar::sqrt_of(QRat(2)));
  }

  SUBCASE("conjugate product is rational") {
    const RadScalar r = RadScalar::sqrt_of(one + q);
    const RadScalar x = RadScalar(QRat(2)) + r;
    const RadScalar y = RadScalar(QRat(2)) - r;
    CHECK((x * y).to_qrat() == QRat(4) - (one + q));
    CHECK((x + y).to_qrat() == QRat(4));
  }

  SUBCASE("division by a single radical term") {
    const RadScalar r = RadScalar::sqrt_of(one + q);
    const RadScalar x = RadScalar(QRat(3)) + r;
    const RadScalar ratio = x / r;
    CHECK((ratio * r) == x);
    CHECK((x / RadScalar(QRat(2))) * RadScalar(QRat(2)) == x);
  }

  SUBCASE("numeric evaluation and text round trip") {
    const RadScalar x = RadScalar(QRat(mpq_class(1, 2))) * RadScalar::sqrt_of(one + q) +
                        RadScalar(QRat::s_pow(-1));
    for (double s : sample_points()) {
      CHECK(close(x.eval_s(s), 0.5 * std::sqrt(1 + s * s) + 1.0 / s));
    }
    CHECK(RadScalar::parse(x.str()) == x);
    CHECK(RadScalar::parse("sqrt(18)") == RadScalar::sqrt_of(QRat(18)));
  }

  SUBCASE("kappa-style radicals multiply exactly") {
    // sqrt([2][1]) * sqrt([2][1]) = [2][1]
    const QRat f = QRat::qnum(2) * QRat::qnum(1);
    const RadScalar k = RadScalar::sqrt_of(f);
    CHECK((k * k).to_qrat() == f);
    // sqrt([2]) * sqrt([3]) combines under one radical: square equals [2][3]
    const RadScalar m = RadScalar::sqrt_of(QRat::qnum(2)) * RadScalar::sqrt_of(QRat::qnum(3));
    CHECK((m * m).to_qrat() == QRat::qnum(2) * QRat::qnum(3));
  }
}

TEST_CASE("transcendental constant extension") {
  const ConstExt L = ConstExt::L();
  const ConstExt EG = ConstExt::EG();
  const ConstExt two(2);

  SUBCASE("ring operations") {
    const ConstExt x = two * L + ConstExt(1);
    const ConstExt y = L * L - EG;
    CHECK((x * y - y * x).is_zero());
    CHECK((x - x).is_zero());
    CHECK(x.depends_on_L());
    CHECK_FALSE(x.depends_on_EG());
    CHECK(y.depends_on_EG());
    CHECK_THROWS_AS((void)x.to_coeff(), std::domain_error);
    CHECK((x - two * L).to_coeff() == QRat(1));
  }

  SUBCASE("division by c L^k") {
    const ConstExt x = two * L * L + ConstExt(3) * L;
    const ConstExt ratio = x / (two * L);
    CHECK((ratio * (two * L)) == x);
    // 1/L keeps track of the pole order
    const ConstExt pole = ConstExt(1) / L;
    CHECK((pole * L).to_coeff() == QRat(1));
    CHECK_FALSE((pole + L).is_zero());
  }

  SUBCASE("numeric evaluation") {
    const ConstExt x = (L * L - EG) / L;
    for (double s : sample_points()) {
      const double l = -2.0 * std::log(s);
      CHECK(close(x.eval_s(s), (l * l - 0.57721566490153286) / l));
    }
  }

  SUBCASE("exact cancellation of log terms") {
    // (q^{-2} - 1 - 2L) + (q^2 - 1 + 2L) has no L left
    const ConstExt qm2(QRat::q_pow(-2));
    const ConstExt qp2(QRat::q_pow(2));
    const ConstExt sum = (qm2 - ConstExt(1) - two * L) + (qp2 - ConstExt(1) + two * L);
    CHECK_FALSE(sum.depends_on_L());
    CHECK(sum.to_coeff() == QRat::q_pow(-2) + QRat::q_pow(2) - QRat(2));
  }
}

TEST_CASE("haar weights match the reference table") {
  const auto frozen = load_frozen();
  const auto& rows = frozen.at("haar_bc_powers");
  for (size_t k = 0; k < rows.size(); ++k) {
    const QRat mine = haar_bc_power(static_cast<long>(k));
    for (double s : sample_points()) {
      CHECK(close(mine.eval_s(s), sym_eval(rows[k].get<std::string>(), s)));
    }
  }
  CHECK(haar_bc_power(0).is_one());
  CHECK(haar_bc_power(1).str() == "(-q)/(1 + q^2)");
}
