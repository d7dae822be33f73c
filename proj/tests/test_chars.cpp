#include <doctest.h>

#include <algorithm>

#include "qbarnes/chars.hpp"
#include "qbarnes/error.hpp"

using namespace qbarnes;

TEST_CASE("characters mod 5 have orders 1, 2, 4, 4") {
  const auto chars = characters_mod(5);
  REQUIRE(chars.size() == 4);
  std::vector<int> orders;
  for (const auto& c : chars) orders.push_back(c.order());
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{1, 2, 4, 4});
}

TEST_CASE("nontrivial character mod 3") {
  const DirichletChar chi = character(3, 1);
  CHECK(chi(0) == Complex(0.0));
  CHECK(chi(1) == Complex(1.0));
  CHECK(chi(2) == Complex(-1.0));
  CHECK(chi.real_value(5) == -1);
  CHECK(chi.is_primitive());
}

TEST_CASE("orthogonality over mod 15") {
  const auto chars = characters_mod(15);
  CHECK(chars.size() == 8);
  for (std::size_t i = 0; i < chars.size(); ++i)
    for (std::size_t j = 0; j < chars.size(); ++j) {
      Complex s = 0;
      for (int m = 0; m < 15; ++m) s += chars[i](m) * std::conj(chars[j](m));
      CHECK(std::abs(s - (i == j ? 8.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("even moduli are rejected") {
  CHECK_THROWS_AS(characters_mod(4), Error);
}
