#include "cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "catalan/cyclotomic.hpp"
#include "catalan/errors.hpp"

namespace catalan::cli {

namespace {

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

OddPrime odd_prime_arg(std::uint64_t value, const char* name) {
    if (value < 3 || !is_prime(value)) {
        throw UsageError(std::string(name) + " = " + std::to_string(value) + " is not an odd prime");
    }
    return OddPrime(value);
}

}  // namespace

LemmaReport verify_lemma(OddPrime p, OddPrime q, std::uint64_t r, std::uint64_t trials, std::uint64_t seed) {
    LemmaReport report;
    report.p = p;
    report.q = q;
    report.r = r;
    report.seed = seed;
    report.g = primitive_root(p);
    report.exponents_distinct = exponents_distinct(p, report.g, r);

    std::mt19937_64 rng(seed);
    const auto bound = static_cast<long>(10 * q.value());
    std::uniform_int_distribution<long> coefficient(-bound, bound);
    std::uniform_int_distribution<long> multiplier(-1'000'000, 1'000'000);

    auto check = [&](std::vector<BigInt> a) {
        LemmaInstance inst{p, report.g, std::move(a)};
        ++report.kernel_instances;
        if (!kernel_check(inst, q)) ++report.kernel_failures;
        if (!subtraction_identity(p, BigInt(multiplier(rng)), inst)) ++report.identity_failures;
    };
    check(std::vector<BigInt>(r + 1, 0));
    check(std::vector<BigInt>(r + 1, BigInt(static_cast<unsigned long>(q.value()))));
    for (std::uint64_t t = 0; t < trials; ++t) {
        std::vector<BigInt> a(r + 1);
        for (auto& ai : a) ai = coefficient(rng);
        check(std::move(a));
    }

    report.frobenius_trials = trials;
    report.frobenius_lift = frobenius_lift_check(p, q, trials, seed);
    report.passed = report.exponents_distinct && report.kernel_failures == 0 && report.identity_failures == 0 &&
                    report.frobenius_lift;
    return report;
}

std::string render(const WieferichReport& r, OutputMode mode) {
    if (mode == OutputMode::Structured) return dump(to_json(r));
    std::ostringstream os;
    os << "p: " << r.p << "\n"
       << "q: " << r.q << "\n"
       << "p^q mod q^2: " << r.pq_residue << "\n"
       << "q^p mod p^2: " << r.qp_residue << "\n"
       << "first_holds: " << yes_no(r.first_holds) << "\n"
       << "second_holds: " << yes_no(r.second_holds) << "\n"
       << "is_double: " << yes_no(r.is_double) << "\n";
    return os.str();
}

std::string render(const SearchReport& r, OutputMode mode) {
    if (mode == OutputMode::Structured) return dump(to_json(r));
    std::ostringstream os;
    os << "p range: [" << r.p_range.lo << ", " << r.p_range.hi << "]\n"
       << "q range: [" << r.q_range.lo << ", " << r.q_range.hi << "]\n";
    for (const auto& w : r.pairs) os << "pair: " << w.p << " " << w.q << "\n";
    os << "pairs found: " << r.pairs.size() << "\n";
    return os.str();
}

std::string render(const ClassNumberResult& r, OutputMode mode) {
    if (mode == OutputMode::Structured) return dump(to_json(r));
    std::ostringstream os;
    os << "p: " << r.p << "\n"
       << "h_minus: " << r.h_minus.get_str() << "\n"
       << "methods_used:";
    for (auto m : r.methods_used) os << " " << to_string(m);
    os << "\nmethods_agreed: " << yes_no(r.methods_agreed) << "\n";
    return os.str();
}

std::string render(const BoundsReport& r, OutputMode mode) {
    if (mode == OutputMode::Structured) return dump(to_json(r));
    std::ostringstream os;
    for (const auto& note : r.notes) os << "note: " << note << "\n";
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
        const auto& s = r.steps[i];
        os << "step " << i + 1 << ": " << s.description << "\n"
           << "  " << to_string(s.lhs) << " " << s.relation << " " << to_string(s.rhs) << "\n"
           << "  holds: " << yes_no(s.holds) << " (" << s.precision_bits << " bits)\n";
    }
    os << "p_star: " << r.p_star << "\n"
       << "q_upper: " << r.q_upper << "\n"
       << "q_lower: " << r.q_lower << "\n"
       << "contradiction: " << yes_no(r.contradiction) << "\n";
    return os.str();
}

std::string render(const LemmaReport& r, OutputMode mode) {
    if (mode == OutputMode::Structured) return dump(to_json(r));
    std::ostringstream os;
    os << "p: " << r.p << "\n"
       << "q: " << r.q << "\n"
       << "g: " << r.g << "\n"
       << "r: " << r.r << "\n"
       << "seed: " << r.seed << "\n"
       << "exponents_distinct: " << yes_no(r.exponents_distinct) << "\n"
       << "kernel instances: " << r.kernel_instances << "\n"
       << "kernel failures: " << r.kernel_failures << "\n"
       << "identity failures: " << r.identity_failures << "\n"
       << "frobenius lift (" << r.frobenius_trials << " trials): " << yes_no(r.frobenius_lift) << "\n"
       << "passed: " << yes_no(r.passed) << "\n";
    return os.str();
}

std::string render(const CriterionVerdict& v, OutputMode mode) {
    if (mode == OutputMode::Structured) return dump(to_json(v));
    std::ostringstream os;
    os << render(v.wieferich, OutputMode::Text) << "rank_threshold: " << v.rank_threshold << "\n";
    if (v.h_minus) os << "h_minus: " << v.h_minus->get_str() << "\n";
    if (v.rank_upper_bound) os << "rank_upper_bound: " << *v.rank_upper_bound << "\n";
    os << "reason: " << v.reason << "\n"
       << "verdict: " << to_string(v.verdict) << "\n";
    return os.str();
}

std::string render(const BruteSearchReport& r, OutputMode mode) {
    if (mode == OutputMode::Structured) return dump(to_json(r));
    std::ostringstream os;
    os << "x_max: " << r.x_max << "\n"
       << "y_max: " << r.y_max << "\n";
    std::size_t nontrivial = 0;
    for (const auto& s : r.solutions) {
        os << "solution: p=" << s.p << " q=" << s.q << " x=" << s.x.get_str() << " y=" << s.y.get_str()
           << (s.trivial ? " (trivial)" : "") << "\n";
        if (!s.trivial) ++nontrivial;
    }
    os << "solutions: " << r.solutions.size() << "\n"
       << "nontrivial: " << nontrivial << "\n";
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification toolkit for the Catalan equation criterion", "catalan"};
    app.require_subcommand(1);
    app.fallthrough();

    bool structured = false;
    unsigned precision = kDefaultPrecisionBits;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::uint64_t seed = 0;
    app.add_flag("--json", structured, "Emit structured (JSON) output");
    app.add_option("--precision", precision, "Starting interval precision in bits")
        ->check(CLI::Range(2u, kMaxPrecisionBits));
    app.add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for randomized checks");

    std::uint64_t p = 0;
    std::uint64_t q = 0;
    std::uint64_t r = 0;

    auto* check_pair_cmd = app.add_subcommand("check-pair", "Test both Wieferich congruences for (p, q)");
    check_pair_cmd->add_option("p", p)->required();
    check_pair_cmd->add_option("q", q)->required();

    PrimeRange p_range{3, 0};
    PrimeRange q_range{3, 0};
    auto* search_cmd = app.add_subcommand("search-wieferich", "Search for double Wieferich prime pairs");
    search_cmd->add_option("--p-min", p_range.lo);
    search_cmd->add_option("--p-max", p_range.hi)->required();
    search_cmd->add_option("--q-min", q_range.lo);
    search_cmd->add_option("--q-max", q_range.hi)->required();

    std::string method = "both";
    auto* class_cmd = app.add_subcommand("class-number", "Exact relative class number h^-(p)");
    class_cmd->add_option("p", p)->required();
    class_cmd->add_option("--method", method)->check(CLI::IsMember({"maillet", "analytic", "both"}));

    auto* bounds_cmd = app.add_subcommand("bounds-chain", "Certified deduction q < sqrt(p) < 8200 < 10^5");

    std::uint64_t trials = 200;
    auto* lemma_cmd = app.add_subcommand("verify-lemma", "Check the cyclotomic kernel argument on samples");
    lemma_cmd->add_option("p", p)->required();
    lemma_cmd->add_option("q", q)->required();
    lemma_cmd->add_option("r", r)->required();
    lemma_cmd->add_option("--trials", trials)->check(CLI::PositiveNumber);

    auto* criterion_cmd = app.add_subcommand("criterion", "Verdict of the criterion for (p, q)");
    criterion_cmd->add_option("p", p)->required();
    criterion_cmd->add_option("q", q)->required();

    std::uint64_t p_max = 0;
    std::uint64_t q_max = 0;
    std::uint64_t x_max = 0;
    std::uint64_t y_max = 0;
    auto* brute_cmd = app.add_subcommand("brute-search", "Exhaustive search for x^p - y^q = 1");
    brute_cmd->add_option("--p-max", p_max)->required();
    brute_cmd->add_option("--q-max", q_max)->required();
    brute_cmd->add_option("--x-max", x_max)->required()->check(CLI::Range(std::uint64_t{0}, std::uint64_t{1} << 40));
    brute_cmd->add_option("--y-max", y_max)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    const OutputMode mode = structured ? OutputMode::Structured : OutputMode::Text;
    try {
        if (*check_pair_cmd) {
            const OddPrime pp = odd_prime_arg(p, "p");
            const OddPrime qq = odd_prime_arg(q, "q");
            out << render(check_pair(pp, qq), mode);
        } else if (*search_cmd) {
            if (p_range.lo > p_range.hi || q_range.lo > q_range.hi) throw UsageError("empty search range");
            SearchReport report{p_range, q_range, search_pairs(p_range, q_range, threads)};
            out << render(report, mode);
        } else if (*class_cmd) {
            const OddPrime pp = odd_prime_arg(p, "p");
            const auto m = method == "maillet"    ? ClassNumberMethod::Maillet
                           : method == "analytic" ? ClassNumberMethod::Analytic
                                                  : ClassNumberMethod::Both;
            out << render(relative_class_number(pp, m, precision), mode);
        } else if (*bounds_cmd) {
            out << render(contradiction_chain(precision), mode);
        } else if (*lemma_cmd) {
            const OddPrime pp = odd_prime_arg(p, "p");
            const OddPrime qq = odd_prime_arg(q, "q");
            out << render(verify_lemma(pp, qq, r, trials, seed), mode);
        } else if (*criterion_cmd) {
            const OddPrime pp = odd_prime_arg(p, "p");
            const OddPrime qq = odd_prime_arg(q, "q");
            out << render(evaluate_pair(pp, qq), mode);
        } else if (*brute_cmd) {
            BruteSearchReport report;
            report.p_set = odd_primes_in_range(3, p_max);
            report.q_set = odd_primes_in_range(3, q_max);
            report.x_max = x_max;
            report.y_max = y_max;
            report.solutions = brute_search(report.p_set, report.q_set, x_max, y_max, threads);
            out << render(report, mode);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kComputational;
    } catch (const InconclusivePrecision& e) {
        err << "inconclusive precision: " << e.what() << "\n";
        return kComputational;
    } catch (const InternalError& e) {
        err << "internal consistency error: " << e.what() << "\n";
        return kComputational;
    }
    return kSuccess;
}

}  // namespace catalan::cli
