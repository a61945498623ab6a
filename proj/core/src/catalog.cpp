#include <map>

#include "psicong/sequences.hpp"

namespace psicong {

std::string SequenceId::to_string() const {
    switch (kind) {
        case Seq::almost_central_binomial: return "almost_central_binomial";
        case Seq::motzkin: return "motzkin";
        case Seq::motzkin_prefix: return "motzkin_prefix";
        case Seq::riordan: return "riordan";
        case Seq::central_trinomial: return "central_trinomial";
        case Seq::central_binomial: return "central_binomial";
        case Seq::central_binomial_sums: return "central_binomial_sums";
        case Seq::catalan: return "catalan";
        case Seq::delannoy: return "delannoy";
        case Seq::schroeder: return "schroeder";
        case Seq::hex_tree: return "hex_tree";
        case Seq::free_subgroups: return "free_subgroups(m=" + std::to_string(m) + ")";
        case Seq::eulerian_even: return "eulerian_even";
        case Seq::eulerian_odd: return "eulerian_odd";
        case Seq::apery_zeta2: return "apery_zeta2";
        case Seq::apery_zeta3: return "apery_zeta3";
    }
    return "?";
}

std::optional<SequenceId> SequenceId::parse(const std::string& s) {
    std::string base = s;
    int m = 1;
    if (auto pos = s.find(','); pos != std::string::npos) {
        base = s.substr(0, pos);
        std::string rest = s.substr(pos + 1);
        if (rest.rfind("m=", 0) == 0) rest = rest.substr(2);
        try {
            m = std::stoi(rest);
        } catch (...) {
            return std::nullopt;
        }
    }
    static const std::map<std::string, Seq> names = {
        {"almost_central_binomial", Seq::almost_central_binomial},
        {"motzkin", Seq::motzkin},
        {"motzkin_prefix", Seq::motzkin_prefix},
        {"riordan", Seq::riordan},
        {"central_trinomial", Seq::central_trinomial},
        {"central_binomial", Seq::central_binomial},
        {"central_binomial_sums", Seq::central_binomial_sums},
        {"catalan", Seq::catalan},
        {"delannoy", Seq::delannoy},
        {"schroeder", Seq::schroeder},
        {"hex_tree", Seq::hex_tree},
        {"free_subgroups", Seq::free_subgroups},
        {"eulerian_even", Seq::eulerian_even},
        {"eulerian_odd", Seq::eulerian_odd},
        {"apery_zeta2", Seq::apery_zeta2},
        {"apery_zeta3", Seq::apery_zeta3},
    };
    auto it = names.find(base);
    if (it == names.end()) return std::nullopt;
    if (it->second == Seq::free_subgroups && (m < 1 || m % 3 == 0)) return std::nullopt;
    return SequenceId{it->second, m};
}

const std::vector<SequenceId>& sequence_catalog() {
    static const std::vector<SequenceId> ids = {
        {Seq::almost_central_binomial}, {Seq::motzkin},        {Seq::motzkin_prefix},
        {Seq::riordan},                 {Seq::central_trinomial}, {Seq::central_binomial},
        {Seq::central_binomial_sums},   {Seq::catalan},        {Seq::delannoy},
        {Seq::schroeder},               {Seq::hex_tree},       {Seq::free_subgroups, 1},
        {Seq::eulerian_even},           {Seq::eulerian_odd},   {Seq::apery_zeta2},
        {Seq::apery_zeta3},
    };
    return ids;
}

FunctionalEq catalog(const SequenceId& id) {
    using P = FunctionalEq;
    FunctionalEq q;
    q.name = id.to_string();
    switch (id.kind) {
        case Seq::almost_central_binomial:
            // z^2 A^2 + A - 1/(1-4z) = 0, cleared of the denominator
            q.A = {P::poly({-1}), P::poly({1, -4}), P::poly({0, 0, 1, -4})};
            q.eps = -1;
            q.gamma = 1;
            return q;
        case Seq::motzkin:
            q.A = {P::poly({1}), P::poly({-1, 1}), P::poly({0, 0, 1})};
            q.eps = 1;
            q.gamma = 1;
            return q;
        case Seq::motzkin_prefix:
            q.A = {P::poly({-1}), P::poly({1, -3}), P::poly({0, 1, -3})};
            q.eps = 1;
            q.gamma = 1;
            return q;
        case Seq::riordan:
            q.A = {P::poly({1}), P::poly({-1, -1}), P::poly({0, 1, 1})};
            q.eps = 1;
            q.gamma = 1;
            return q;
        case Seq::central_trinomial:
            q.A = {P::poly({-1}), {}, P::poly({1, -2, -3})};
            q.eps = 1;
            q.gamma = 1;
            return q;
        case Seq::central_binomial:
            q.A = {P::poly({-1}), {}, P::poly({1, -4})};
            q.eps = -1;
            q.gamma = 1;
            return q;
        case Seq::central_binomial_sums:
            q.A = {P::poly({-1}), {}, P::poly({1, -6, 9, -4})};
            q.eps = -1;
            q.gamma = 1;
            return q;
        case Seq::catalan:
            q.A = {P::poly({1}), P::poly({-1}), P::poly({0, 1})};
            q.eps = -1;
            q.gamma = 1;
            return q;
        case Seq::delannoy:
            q.A = {P::poly({-1}), {}, P::poly({1, -6, 1})};
            q.eps = 1;
            q.gamma = 2;
            return q;
        case Seq::schroeder:
            q.A = {P::poly({1}), P::poly({-1, 1}), P::poly({0, 1})};
            q.eps = 1;
            q.gamma = 2;
            return q;
        case Seq::hex_tree:
            q.A = {P::poly({1}), P::poly({-1, 3}), P::poly({0, 0, 1})};
            q.eps = -1;
            q.gamma = 2;
            return q;
        case Seq::free_subgroups: {
            long long m = id.m;
            q.A = {P::poly({1, 1 - 6 * m + 5 * m * m}), P::poly({-1, 6 * m - 2}), P::poly({0, 1})};
            q.D = {{}, P::poly({0, 0, 6 * m})};
            q.eps = 1;
            q.gamma = 2;
            return q;
        }
        default:
            throw UnsupportedId(id.to_string() + ": no single catalog equation (dedicated pipeline)");
    }
}

FunctionalEq apery_shifted_ode() {
    using P = FunctionalEq;
    FunctionalEq q;
    q.name = "apery2_shifted_ode";
    // (4z^2+25z-1) F + (5z^3+44z^2-3z) F' + (z^4+11z^3-z^2) F'' + z + 3 = 0
    q.A = {P::poly({3, 1}), P::poly({-1, 25, 4})};
    q.D = {{}, P::poly({0, -3, 44, 5}), P::poly({0, 0, -1, 11, 1})};
    return q;
}

FunctionalEq catalan_squared_eq() {
    using P = FunctionalEq;
    FunctionalEq q;
    q.name = "catalan_squared";
    // (z F^2 - F + 1)^2 = z^2 F^4 - 2z F^3 + (2z+1) F^2 - 2F + 1
    q.A = {P::poly({1}), P::poly({-2}), P::poly({1, 2}), P::poly({0, -2}), P::poly({0, 0, 1})};
    return q;
}

PsiContext sequence_context(const SequenceId& id, int alpha, int e) {
    switch (id.kind) {
        case Seq::eulerian_even:
        case Seq::eulerian_odd:
            return PsiContext{1, 1, alpha, e};
        case Seq::apery_zeta2:
        case Seq::apery_zeta3:
            throw UnsupportedId(id.to_string() + ": no representation context");
        default: {
            FunctionalEq q = catalog(id);
            return PsiContext{q.eps, q.gamma, alpha, e};
        }
    }
}

PsiPoly derive_sequence(const SequenceId& id, int alpha, int e) {
    if (id.kind == Seq::eulerian_even) return derive_eulerian(1, e, alpha);
    if (id.kind == Seq::eulerian_odd) return derive_eulerian(2, e, alpha);
    if (id.kind == Seq::apery_zeta2 || id.kind == Seq::apery_zeta3)
        throw UnsupportedId(id.to_string() + ": outside the quadratic-type catalog");
    FunctionalEq q = catalog(id);
    return solve_mod3k(q, alpha, e, oracle_anchor(id, e)).representation;
}

}  // namespace psicong
