#include "psicong/json_io.hpp"

namespace psicong {

nlohmann::json laurent_to_json(const LaurentCoeff& c) {
    nlohmann::json num = nlohmann::json::array();
    for (auto& [d, v] : c.num()) num.push_back({d, v});
    return {{"den_pow", c.den_pow()}, {"num", num}};
}

LaurentCoeff laurent_from_json(const nlohmann::json& j, LaurentCtx ctx) {
    std::vector<std::pair<int, long long>> terms;
    for (auto& t : j.at("num"))
        terms.emplace_back(t.at(0).get<int>(), t.at(1).get<long long>());
    return LaurentCoeff::from_terms(ctx, terms, j.at("den_pow").get<int>());
}

nlohmann::json psipoly_to_json(const PsiPoly& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (auto& c : p.coeffs()) coeffs.push_back(laurent_to_json(c));
    return {{"epsilon", p.ctx().eps},
            {"gamma", p.ctx().gamma},
            {"alpha", p.ctx().alpha},
            {"mod_exp", p.ctx().e},
            {"coeffs", coeffs}};
}

PsiPoly psipoly_from_json(const nlohmann::json& j) {
    PsiContext ctx{j.at("epsilon").get<int>(), j.at("gamma").get<int>(), j.at("alpha").get<int>(),
                   j.at("mod_exp").get<int>()};
    PsiPoly p(ctx);
    const auto& coeffs = j.at("coeffs");
    for (std::size_t i = 0; i < coeffs.size() && i < static_cast<std::size_t>(ctx.psi_dim()); ++i)
        p.set_coeff(static_cast<int>(i), laurent_from_json(coeffs[i], ctx.lctx()));
    return p;
}

}  // namespace psicong
