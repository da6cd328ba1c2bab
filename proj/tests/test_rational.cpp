#include <doctest.h>

#include "sonc/rational.hpp"

using namespace sonc;

TEST_CASE("parse and canonical form") {
  CHECK(Rat::parse("3/4").str() == "3/4");
  CHECK(Rat::parse("-6/8").str() == "-3/4");
  CHECK(Rat::parse("10/2").str() == "5");
  CHECK(Rat::parse("0/7").str() == "0");
  CHECK(Rat::parse("-12").str() == "-12");
  CHECK_THROWS(Rat::parse("1/0"));
  CHECK_THROWS(Rat::parse("abc"));
}

TEST_CASE("arithmetic") {
  Rat a(3, 4), b(-2, 3);
  CHECK((a + b).str() == "1/12");
  CHECK((a * b).str() == "-1/2");
  CHECK((a / b).str() == "-9/8");
  CHECK((a - b).str() == "17/12");
  CHECK(a > b);
  CHECK((-a).sign() == -1);
  CHECK_THROWS(a / Rat(0));
}

TEST_CASE("powers and roots") {
  CHECK(Rat(2, 3).pow(3).str() == "8/27");
  CHECK(Rat(2, 3).pow(-2).str() == "9/4");
  CHECK(Rat(5).pow(0).str() == "1");
  Rat r;
  CHECK(Rat(8, 27).nth_root(3, r));
  CHECK(r.str() == "2/3");
  CHECK(Rat(4).nth_root(2, r));
  CHECK(r.str() == "2");
  CHECK_FALSE(Rat(2).nth_root(2, r));
  CHECK_FALSE(Rat(-4).nth_root(2, r));
  CHECK(Rat(-8).nth_root(3, r));
  CHECK(r.str() == "-2");
}

TEST_CASE("primitive integer form") {
  RatVec v{Rat(1, 3), Rat(-1), Rat(2, 3)};
  RatVec p = primitive_integer_form(v);
  CHECK(p[0].str() == "1");
  CHECK(p[1].str() == "-3");
  CHECK(p[2].str() == "2");

  RatVec w{Rat(4), Rat(-6)};
  RatVec q = primitive_integer_form(w);
  CHECK(q[0].str() == "2");
  CHECK(q[1].str() == "-3");
}
