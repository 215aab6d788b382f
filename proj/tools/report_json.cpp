#include "report_json.hpp"

#include <stdexcept>

namespace catalan::cli {

json bigint_to_json(const BigInt& n) {
    if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
    return n.get_str();
}

BigInt bigint_from_json(const json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_unsigned()) return BigInt(static_cast<unsigned long>(j.get<std::uint64_t>()));
    return BigInt(static_cast<long>(j.get<std::int64_t>()));
}

json to_json(const Interval& x) {
    return {{"lo", x.lo().get_str()}, {"hi", x.hi().get_str()}, {"precision_bits", x.precision_bits()}};
}

Interval interval_from_json(const json& j) {
    return Interval(Rational(j.at("lo").get<std::string>()), Rational(j.at("hi").get<std::string>()),
                    j.at("precision_bits").get<unsigned>());
}

json to_json(const WieferichReport& r) {
    return {{"p", r.p},
            {"q", r.q},
            {"pq_residue", r.pq_residue},
            {"qp_residue", r.qp_residue},
            {"first_holds", r.first_holds},
            {"second_holds", r.second_holds},
            {"is_double", r.is_double},
            {"first_fermat_form", r.first_fermat_form},
            {"second_fermat_form", r.second_fermat_form}};
}

WieferichReport wieferich_from_json(const json& j) {
    WieferichReport r;
    r.p = j.at("p").get<std::uint64_t>();
    r.q = j.at("q").get<std::uint64_t>();
    r.pq_residue = j.at("pq_residue").get<std::uint64_t>();
    r.qp_residue = j.at("qp_residue").get<std::uint64_t>();
    r.first_holds = j.at("first_holds").get<bool>();
    r.second_holds = j.at("second_holds").get<bool>();
    r.is_double = j.at("is_double").get<bool>();
    r.first_fermat_form = j.at("first_fermat_form").get<bool>();
    r.second_fermat_form = j.at("second_fermat_form").get<bool>();
    return r;
}

json to_json(const SearchReport& r) {
    json pairs = json::array();
    for (const auto& w : r.pairs) pairs.push_back(to_json(w));
    return {{"p_range", {r.p_range.lo, r.p_range.hi}}, {"q_range", {r.q_range.lo, r.q_range.hi}}, {"pairs", pairs}};
}

SearchReport search_from_json(const json& j) {
    SearchReport r;
    r.p_range = {j.at("p_range").at(0).get<std::uint64_t>(), j.at("p_range").at(1).get<std::uint64_t>()};
    r.q_range = {j.at("q_range").at(0).get<std::uint64_t>(), j.at("q_range").at(1).get<std::uint64_t>()};
    for (const auto& w : j.at("pairs")) r.pairs.push_back(wieferich_from_json(w));
    return r;
}

json to_json(const ClassNumberResult& r) {
    json methods = json::array();
    for (auto m : r.methods_used) methods.push_back(to_string(m));
    return {{"p", r.p},
            {"h_minus", bigint_to_json(r.h_minus)},
            {"methods_agreed", r.methods_agreed},
            {"methods_used", methods}};
}

ClassNumberResult class_number_from_json(const json& j) {
    ClassNumberResult r;
    r.p = j.at("p").get<std::uint64_t>();
    r.h_minus = bigint_from_json(j.at("h_minus"));
    r.methods_agreed = j.at("methods_agreed").get<bool>();
    for (const auto& m : j.at("methods_used")) {
        const auto name = m.get<std::string>();
        if (name == "maillet") {
            r.methods_used.push_back(ClassNumberMethod::Maillet);
        } else if (name == "analytic") {
            r.methods_used.push_back(ClassNumberMethod::Analytic);
        } else {
            throw std::invalid_argument("unknown class-number method: " + name);
        }
    }
    return r;
}

json to_json(const BoundsReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps) {
        steps.push_back({{"description", s.description},
                         {"lhs", to_json(s.lhs)},
                         {"relation", s.relation},
                         {"rhs", to_json(s.rhs)},
                         {"holds", s.holds},
                         {"precision_bits", s.precision_bits}});
    }
    return {{"steps", steps},
            {"p_star", r.p_star},
            {"q_upper", r.q_upper},
            {"q_lower", r.q_lower},
            {"contradiction", r.contradiction},
            {"notes", r.notes}};
}

BoundsReport bounds_from_json(const json& j) {
    BoundsReport r;
    for (const auto& s : j.at("steps")) {
        r.steps.push_back({s.at("description").get<std::string>(), interval_from_json(s.at("lhs")),
                           s.at("relation").get<std::string>(), interval_from_json(s.at("rhs")),
                           s.at("holds").get<bool>(), s.at("precision_bits").get<unsigned>()});
    }
    r.p_star = j.at("p_star").get<std::uint64_t>();
    r.q_upper = j.at("q_upper").get<std::uint64_t>();
    r.q_lower = j.at("q_lower").get<std::uint64_t>();
    r.contradiction = j.at("contradiction").get<bool>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

json to_json(const LemmaReport& r) {
    return {{"p", r.p},
            {"q", r.q},
            {"g", r.g},
            {"r", r.r},
            {"seed", r.seed},
            {"exponents_distinct", r.exponents_distinct},
            {"kernel_instances", r.kernel_instances},
            {"kernel_failures", r.kernel_failures},
            {"identity_failures", r.identity_failures},
            {"frobenius_trials", r.frobenius_trials},
            {"frobenius_lift", r.frobenius_lift},
            {"passed", r.passed}};
}

LemmaReport lemma_from_json(const json& j) {
    LemmaReport r;
    r.p = j.at("p").get<std::uint64_t>();
    r.q = j.at("q").get<std::uint64_t>();
    r.g = j.at("g").get<std::uint64_t>();
    r.r = j.at("r").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.exponents_distinct = j.at("exponents_distinct").get<bool>();
    r.kernel_instances = j.at("kernel_instances").get<std::uint64_t>();
    r.kernel_failures = j.at("kernel_failures").get<std::uint64_t>();
    r.identity_failures = j.at("identity_failures").get<std::uint64_t>();
    r.frobenius_trials = j.at("frobenius_trials").get<std::uint64_t>();
    r.frobenius_lift = j.at("frobenius_lift").get<bool>();
    r.passed = j.at("passed").get<bool>();
    return r;
}

json to_json(const CriterionVerdict& v) {
    json out = {{"p", v.p},
                {"q", v.q},
                {"wieferich", to_json(v.wieferich)},
                {"rank_threshold", v.rank_threshold},
                {"rank_upper_bound", nullptr},
                {"h_minus", nullptr},
                {"verdict", to_string(v.verdict)},
                {"reason", v.reason}};
    if (v.rank_upper_bound) out["rank_upper_bound"] = *v.rank_upper_bound;
    if (v.h_minus) out["h_minus"] = bigint_to_json(*v.h_minus);
    return out;
}

CriterionVerdict verdict_from_json(const json& j) {
    CriterionVerdict v;
    v.p = j.at("p").get<std::uint64_t>();
    v.q = j.at("q").get<std::uint64_t>();
    v.wieferich = wieferich_from_json(j.at("wieferich"));
    v.rank_threshold = j.at("rank_threshold").get<std::int64_t>();
    if (!j.at("rank_upper_bound").is_null()) v.rank_upper_bound = j.at("rank_upper_bound").get<unsigned>();
    if (!j.at("h_minus").is_null()) v.h_minus = bigint_from_json(j.at("h_minus"));
    const auto name = j.at("verdict").get<std::string>();
    if (name == "NoNontrivialSolution") {
        v.verdict = Verdict::NoNontrivialSolution;
    } else if (name == "WieferichCase") {
        v.verdict = Verdict::WieferichCase;
    } else if (name == "Inconclusive") {
        v.verdict = Verdict::Inconclusive;
    } else {
        throw std::invalid_argument("unknown verdict: " + name);
    }
    v.reason = j.at("reason").get<std::string>();
    return v;
}

json to_json(const BruteSearchReport& r) {
    json solutions = json::array();
    for (const auto& s : r.solutions) {
        solutions.push_back({{"p", s.p},
                             {"q", s.q},
                             {"x", bigint_to_json(s.x)},
                             {"y", bigint_to_json(s.y)},
                             {"trivial", s.trivial}});
    }
    return {{"p_set", r.p_set}, {"q_set", r.q_set}, {"x_max", r.x_max},
            {"y_max", r.y_max}, {"solutions", solutions}};
}

BruteSearchReport brute_search_from_json(const json& j) {
    BruteSearchReport r;
    r.p_set = j.at("p_set").get<std::vector<std::uint64_t>>();
    r.q_set = j.at("q_set").get<std::vector<std::uint64_t>>();
    r.x_max = j.at("x_max").get<std::uint64_t>();
    r.y_max = j.at("y_max").get<std::uint64_t>();
    for (const auto& s : j.at("solutions")) {
        r.solutions.push_back({s.at("p").get<std::uint64_t>(), s.at("q").get<std::uint64_t>(),
                               bigint_from_json(s.at("x")), bigint_from_json(s.at("y")),
                               s.at("trivial").get<bool>()});
    }
    return r;
}

}  // namespace catalan::cli
