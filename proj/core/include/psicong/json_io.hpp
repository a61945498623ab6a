#pragma once

#include <string>

#include <json.hpp>

#include "psicong/psi.hpp"

namespace psicong {

// {"den_pow": L, "num": [[exp, val], ...]} with ascending exponents
nlohmann::json laurent_to_json(const LaurentCoeff& c);
LaurentCoeff laurent_from_json(const nlohmann::json& j, LaurentCtx ctx);

// {"epsilon": +-1, "gamma": g, "alpha": a, "mod_exp": e, "coeffs": [...]}
nlohmann::json psipoly_to_json(const PsiPoly& p);
PsiPoly psipoly_from_json(const nlohmann::json& j);

}  // namespace psicong
