#include <cstdlib>
#include <fstream>

#include <json.hpp>

#include "psicong/sequences.hpp"

#ifndef PSICONG_SOURCE_DATA_DIR
#define PSICONG_SOURCE_DATA_DIR "data/fixtures/v1"
#endif

namespace psicong {

std::string fixture_dir() {
    if (const char* env = std::getenv("PSICONG_DATA_DIR")) return env;
    return PSICONG_SOURCE_DATA_DIR;
}

namespace {

std::string fixture_file(const SequenceId& id, int e) {
    std::string base;
    switch (id.kind) {
        case Seq::free_subgroups:
            base = id.m % 3 == 1 ? "free_subgroups_m1mod3" : "free_subgroups_m2mod3";
            break;
        default: {
            base = id.to_string();
            break;
        }
    }
    return fixture_dir() + "/" + base + "_" + std::to_string(pow3(e)) + ".json";
}

}  // namespace

bool has_fixture(const SequenceId& id, int e) {
    std::ifstream f(fixture_file(id, e));
    return f.good();
}

PsiPoly fixture_rep(const SequenceId& id, int e) {
    std::string path = fixture_file(id, e);
    std::ifstream f(path);
    if (!f.good()) throw NoFixture(id.to_string() + " mod 3^" + std::to_string(e) + ": " + path);
    nlohmann::json j = nlohmann::json::parse(f);

    PsiContext ctx{j.at("epsilon").get<int>(), j.at("gamma").get<int>(), j.at("alpha").get<int>(), e};
    if (j.at("mod_exp").get<int>() != e)
        throw NoFixture(path + ": modulus mismatch");
    bool cubed = j.value("psi_arg_cubed", false);
    long long m = id.m;

    PsiPoly p(ctx);
    for (auto& cj : j.at("coeffs")) {
        int power = cj.at("power").get<int>();
        int den = cj.at("den_pow").get<int>();
        std::vector<std::pair<int, long long>> terms;
        for (auto& t : cj.at("num")) {
            int exp = t.at(0).get<int>();
            long long val = 0, mp = 1;
            for (auto& c : t.at(1)) {
                val += c.get<long long>() * mp;
                mp *= m;
            }
            terms.emplace_back(exp, val);
        }
        LaurentCoeff c = LaurentCoeff::from_terms(ctx.lctx(), terms, den);
        // printed in Psi(u^3): Psi(u^3) = Psi(u)/(1+u), u the ring variable
        if (cubed) c = c.mul_den_base_pow(-power);
        p.set_coeff(power, p.coeff(power) + c);
    }
    return p;
}

}  // namespace psicong
