#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ewgeom/exact.hpp"

using namespace ewgeom;

namespace {

// deterministic small random scalars for property checks
ExactComplex random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  const auto q = [&] { return Rational(num(rng), den(rng)); };
  return ExactComplex(GaussianRational(q(), q()), GaussianRational(q(), q()));
}

}  // namespace

TEST_CASE("rational literals round-trip") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("+4/6") == Rational(2, 3));
  CHECK(format_rational(Rational(-3, 4)) == "-3/4");
  CHECK(format_rational(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("2.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("gaussian rationals form a field") {
  const GaussianRational i(Rational(0), Rational(1));
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational x(Rational(3, 2), Rational(-2));
  CHECK(x * x.inverse() == GaussianRational(1));
  CHECK(x.conj().conj() == x);
  CHECK((x * i).conj() == x.conj() * i.conj());
  CHECK_THROWS_AS(GaussianRational(0).inverse(), NonInvertible);
}

TEST_CASE("sqrt2 adjunction behaves like a field") {
  CHECK(ExactComplex::sqrt2() * ExactComplex::sqrt2() == ExactComplex(2));
  CHECK(ExactComplex::i() * ExactComplex::i() == ExactComplex(-1));
  CHECK(ExactComplex::inv_sqrt2() * ExactComplex::sqrt2() == ExactComplex(1));

  std::mt19937_64 rng(20240901);
  int inverted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const ExactComplex x = random_scalar(rng);
    const ExactComplex y = random_scalar(rng);
    const ExactComplex z = random_scalar(rng);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK((x * y).conj() == x.conj() * y.conj());
    if (!x.is_zero()) {
      CHECK(x * x.inverse() == ExactComplex(1));
      ++inverted;
    }
  }
  CHECK(inverted > 150);  // the sample should be mostly invertible
}

TEST_CASE("exact sign of real sqrt2 combinations") {
  // 1 - sqrt2/2 > 0 while 1 - sqrt2 < 0; both differences are tiny enough to
  // punish any float shortcut taken with less than full precision
  const ExactComplex a = ExactComplex(1) - ExactComplex::inv_sqrt2();
  const ExactComplex b = ExactComplex(1) - ExactComplex::sqrt2();
  CHECK(sign_real(a) == 1);
  CHECK(sign_real(b) == -1);
  CHECK(sign_real(ExactComplex(0)) == 0);

  // 99/70 is a convergent of sqrt2: 99^2 = 9801 vs 2*70^2 = 9800
  const ExactComplex close = ExactComplex(Rational(99, 70)) - ExactComplex::sqrt2();
  CHECK(sign_real(close) == 1);
  const ExactComplex closer = ExactComplex(Rational(140, 99)) - ExactComplex::sqrt2();
  CHECK(sign_real(closer) == -1);

  CHECK_THROWS_AS(sign_real(ExactComplex::i()), NotRepresentable);
}

TEST_CASE("square roots of rationals inside the sqrt2 extension") {
  CHECK(sqrt_rational_q2(Rational(9, 4)) == ExactComplex(Rational(3, 2)));
  CHECK(sqrt_rational_q2(Rational(2)) == ExactComplex::sqrt2());
  CHECK(sqrt_rational_q2(Rational(1, 2)) == ExactComplex::inv_sqrt2());
  CHECK(sqrt_rational_q2(Rational(8)) == ExactComplex(2) * ExactComplex::sqrt2());
  CHECK(sqrt_rational_q2(Rational(0)) == ExactComplex(0));
  CHECK_THROWS_AS(sqrt_rational_q2(Rational(3)), NotRepresentable);
  CHECK_THROWS_AS(sqrt_rational_q2(Rational(-1)), NotRepresentable);

  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> num(1, 40);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational q(num(rng), num(rng));
    try {
      const ExactComplex r = sqrt_rational_q2(q);
      CHECK(r * r == ExactComplex(q));
      CHECK(sign_real(r) >= 0);
    } catch (const NotRepresentable&) {
      // fine: most rationals have no root in Q(sqrt2)
    }
  }
}

TEST_CASE("scalar literals round-trip through format and parse") {
  const ExactComplex samples[] = {
      ExactComplex(0),
      ExactComplex(Rational(3, 2)),
      ExactComplex(-1) + ExactComplex(Rational(1, 2)) * ExactComplex::sqrt2(),
      ExactComplex::i(),
      ExactComplex(Rational(1, 2)) * ExactComplex::i() * ExactComplex::sqrt2(),
      ExactComplex(GaussianRational(Rational(-2, 3), Rational(5))) -
          ExactComplex(GaussianRational(Rational(1), Rational(-7, 4))) * ExactComplex::sqrt2(),
  };
  for (const ExactComplex& x : samples) {
    CAPTURE(format_exact(x));
    CHECK(parse_exact(format_exact(x)) == x);
  }
  CHECK(format_exact(ExactComplex(0)) == "0");
  CHECK(format_exact(ExactComplex(Rational(3, 2))) == "3/2");
  CHECK(format_exact(ExactComplex::i()) == "i");
  CHECK(parse_exact("1/2*i*sqrt2") ==
        ExactComplex(Rational(1, 2)) * ExactComplex::i() * ExactComplex::sqrt2());

  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 200; ++trial) {
    const ExactComplex x = random_scalar(rng);
    CHECK(parse_exact(format_exact(x)) == x);
  }
  CHECK_THROWS_AS(parse_exact("sqrt3"), ParseError);
  CHECK_THROWS_AS(parse_exact(""), ParseError);
}
