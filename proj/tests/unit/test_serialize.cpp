#include <doctest.h>

#include "iris/error.hpp"
#include "iris//random.hpp"
#include "iris/serialize.hpp"

using iris::GaussianBigInt;
using iris::Json;

TEST_CASE("Gaussian values are decimal strings") {
  const auto x = GaussianBigInt::from_decimal("-340282366920938463463374607431768211456", "7");
  const Json j = iris::to_json(x);
  CHECK(j.dump() == R"({"re":"-340282366920938463463374607431768211456","im":"7"})");
  CHECK(iris::gaussian_from_json(j) == x);
  CHECK_THROWS_AS(iris::gaussian_from_json(Json{{"re", "1.5"}, {"im", "0"}}), iris::IrisError);
  CHECK_THROWS_AS(iris::gaussian_from_json(Json{{"re", "1"}}), iris::IrisError);
}

TEST_CASE("exponents switch to strings past 2^63") {
  CHECK(iris::exponent_json(12345).is_number());
  const iris::Exponent big = static_cast<iris::Exponent>(1) << 70;
  CHECK(iris::exponent_json(big) == Json("1180591620717411303424"));
  CHECK(iris::exponent_to_string(big) == "1180591620717411303424");
  CHECK(iris::exponent_to_string(0) == "0");
}

TEST_CASE("matrix JSON round trip") {
  const auto a = iris::random_matrix(4, iris::parse_entry_kind("gaussian:3"), 8);
  CHECK(iris::matrix_from_json(iris::to_json(a)) == a);
  const auto r = iris::ComplexIntMatrix::from_rows({{1, -2}, {0, 4}});
  CHECK(iris::to_json(r).dump() == R"({"rows":[[1,-2],[0,4]]})");
  const auto c = iris::matrix_from_json(Json::parse(R"({"rows":[[[0,1],[1,0]],[[1,0],[0,1]]]})"));
  CHECK(c.at(0, 0) == GaussianBigInt(0, 1));
  CHECK(c.at(0, 1) == GaussianBigInt(1));
  CHECK(c.bound() == 1);
  const auto huge = iris::matrix_from_json(Json::parse(R"({"rows":[["123456789012345678901234567890"]]})"));
  CHECK(huge.at(0, 0).re_string() == "123456789012345678901234567890");
  CHECK(iris::matrix_from_json(iris::to_json(huge)) == huge);
}

TEST_CASE("matrix JSON rejects malformed input") {
  for (const char* text : {R"({"rows":[]})", R"({"rows":[[1,2],[3]]})", R"({"rows":[[1.5]]})", R"({"rows":[[[1]]]})",
                           R"({"rows":[["x"]]})", R"([[1]])", R"({"rows":[[true]]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(iris::matrix_from_json(Json::parse(text)), iris::IrisError);
  }
}

TEST_CASE("validation report JSON") {
  const auto r = iris::validate_alpha(iris::AlphaMatrix::from_rows({{1, 1, 1}}));
  const Json j = iris::to_json(r, false);
  CHECK(j.dump() == R"({"valid":false,"checked":10,"witness":[3,0,0],"witness_count":9})");
  CHECK(iris::to_json(r, true).contains("elapsed_ms"));
}
