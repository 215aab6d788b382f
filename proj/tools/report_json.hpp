#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalan/bounds.hpp"
#include "catalan/classnumber.hpp"
#include "catalan/criterion.hpp"
#include "catalan/interval.hpp"
#include "catalan/wieferich.hpp"

namespace catalan::cli {

using json = nlohmann::ordered_json;

/// Result of `verify-lemma`.
struct LemmaReport {
    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t g = 0;
    std::uint64_t r = 0;
    std::uint64_t seed = 0;
    bool exponents_distinct = false;
    std::uint64_t kernel_instances = 0;
    std::uint64_t kernel_failures = 0;
    std::uint64_t identity_failures = 0;
    std::uint64_t frobenius_trials = 0;
    bool frobenius_lift = false;
    bool passed = false;

    friend bool operator==(const LemmaReport&, const LemmaReport&) = default;
};

struct SearchReport {
    PrimeRange p_range{};
    PrimeRange q_range{};
    std::vector<WieferichReport> pairs;
};

struct BruteSearchReport {
    std::vector<std::uint64_t> p_set;
    std::vector<std::uint64_t> q_set;
    std::uint64_t x_max = 0;
    std::uint64_t y_max = 0;
    std::vector<Solution> solutions;
};

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
json bigint_to_json(const BigInt& n);
BigInt bigint_from_json(const json& j);

json to_json(const Interval& x);
Interval interval_from_json(const json& j);

json to_json(const WieferichReport& r);
WieferichReport wieferich_from_json(const json& j);

json to_json(const SearchReport& r);
SearchReport search_from_json(const json& j);

json to_json(const ClassNumberResult& r);
ClassNumberResult class_number_from_json(const json& j);

json to_json(const BoundsReport& r);
BoundsReport bounds_from_json(const json& j);

json to_json(const LemmaReport& r);
LemmaReport lemma_from_json(const json& j);

json to_json(const CriterionVerdict& v);
CriterionVerdict verdict_from_json(const json& j);

json to_json(const BruteSearchReport& r);
BruteSearchReport brute_search_from_json(const json& j);

}  // namespace catalan::cli
