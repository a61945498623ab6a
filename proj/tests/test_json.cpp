#include <doctest.h>

#include "psicong/json_io.hpp"
#include "psicong/sequences.hpp"

using namespace psicong;

TEST_CASE("laurent round trip") {
    LaurentCtx ctx{-1, 2, 3};
    LaurentCoeff c = LaurentCoeff::from_terms(ctx, {{-3, 5}, {0, 1}, {4, 26}}, 2);
    nlohmann::json j = laurent_to_json(c);
    CHECK(j.at("den_pow") == 2);
    CHECK(j.at("num").size() == 3);
    CHECK(j.at("num")[0][0] == -3);  // exponents ascending
    LaurentCoeff back = laurent_from_json(j, ctx);
    CHECK(back == c);
}

TEST_CASE("representation round trip preserves the series") {
    PsiPoly rep = derive_sequence({Seq::catalan}, 1, 3);
    nlohmann::json j = psipoly_to_json(rep);
    CHECK(j.at("epsilon") == -1);
    CHECK(j.at("gamma") == 1);
    CHECK(j.at("mod_exp") == 3);
    PsiPoly back = psipoly_from_json(j);
    CHECK(back.coeff_equal(rep));
    CHECK(back.to_series(200).agrees_with(oracle_terms({Seq::catalan}, 201, 3), 200));
}
