#include "doctest.h"
#include "partforge/oracle.hpp"
#include "partforge/series.hpp"

using namespace partforge;

TEST_CASE("cycle type sums") {
  const AdmissibleTriple t(0, 1, 0);
  CHECK(oracle::cycle_type_sum(t, Form::P, 3) == 11);
  CHECK(oracle::cycle_type_sum(t, Form::P, 4) == 59);
  CHECK(oracle::cycle_type_sum(AdmissibleTriple(2, 2, 2), Form::Q, 0) == 1);
  CHECK_THROWS_AS(oracle::cycle_type_sum(t, Form::P, 41), std::out_of_range);
  CHECK_NOTHROW(oracle::cycle_type_sum(t, Form::P, 41, 41));
}

TEST_CASE("truncated products") {
  using V = std::vector<mpz_class>;
  CHECK(oracle::product_expand(AdmissibleTriple(0, 0, 1), Form::P, 5) == V{1, 1, 2, 3, 5, 7});
  CHECK(oracle::product_expand(AdmissibleTriple(1, 0, 0), Form::P, 4) == V{1, 1, 3, 6, 13});
  CHECK(oracle::product_expand(AdmissibleTriple(0, 0, 1), Form::Q, 5) == V{1, 1, 1, 2, 2, 3});
  CHECK_THROWS_AS(oracle::product_expand(AdmissibleTriple(0, 1, 0), Form::P, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(oracle::product_expand(AdmissibleTriple(0, 0, 1), Form::P, 201),
                  std::out_of_range);
}

TEST_CASE("cycle type sums match the recurrence") {
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = 0; j <= 2; ++j)
      for (unsigned k = 0; k <= 2; ++k) {
        if (i + j + k == 0) continue;
        const AdmissibleTriple t(i, j, k);
        for (Form form : {Form::P, Form::Q}) {
          const auto fast = egf_coeffs(t, form, 30).values;
          for (std::size_t n = 0; n <= 30; ++n) CHECK(oracle::cycle_type_sum(t, form, n) == fast[n]);
        }
      }
}

TEST_CASE("truncated products match the Euler transform") {
  for (const auto& t : {AdmissibleTriple(1, 0, 0), AdmissibleTriple(2, 0, 0),
                        AdmissibleTriple(0, 0, 1), AdmissibleTriple(0, 0, 2),
                        AdmissibleTriple(1, 0, 1), AdmissibleTriple(2, 0, 2)}) {
    for (Form form : {Form::P, Form::Q})
      CHECK(oracle::product_expand(t, form, 100) == ogf_coeffs_euler(t, form, 100).values);
  }
}
