#include "catalan/criterion.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "catalan/classnumber.hpp"
#include "catalan/errors.hpp"

namespace catalan {

const char* to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::NoNontrivialSolution: return "NoNontrivialSolution";
        case Verdict::WieferichCase: return "WieferichCase";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "unknown";
}

unsigned q_rank_upper(OddPrime p, OddPrime q) {
    if (p == q) throw DomainError("q_rank_upper: p and q must differ");
    return padic_val(relative_class_number(p).h_minus, q);
}

std::uint64_t cassels_residue(OddPrime p, OddPrime q) {
    if (p == q) throw DomainError("cassels_residue: p and q must differ");
    const std::uint64_t q2 = q * q;
    const std::uint64_t fermat = modpow(p, q - 1, q2);
    const std::uint64_t residue = (q2 + 1 - fermat) % q2;  // -(fermat - 1) mod q^2
    if (residue % q != 0) throw InternalError("cassels_residue: q does not divide the residue");
    return residue;
}

CriterionVerdict evaluate_pair(OddPrime p, OddPrime q) {
    CriterionVerdict v;
    v.p = p;
    v.q = q;
    v.wieferich = check_pair(p, q);
    v.rank_threshold = (static_cast<std::int64_t>(p.value()) - 5) / 2;

    if (v.wieferich.is_double) {
        v.verdict = Verdict::WieferichCase;
        v.reason = "double Wieferich pair: p^q = p (mod q^2) and q^p = q (mod p^2)";
        return v;
    }
    if (v.wieferich.first_holds) {
        v.verdict = Verdict::Inconclusive;
        v.reason = "q^2 divides p^q - p, so the first alternative holds for this orientation";
        return v;
    }
    if (v.rank_threshold <= 0) {
        v.verdict = Verdict::Inconclusive;
        v.reason = "degenerate threshold (p-5)/2 = " + std::to_string(v.rank_threshold) +
                   ": a q-rank of at least this is always satisfied";
        return v;
    }
    if (p > kClassNumberMaxPrime) {
        throw DomainError("p = " + std::to_string(p.value()) +
                          " is beyond the class-number limit; use the bounds-chain argument instead");
    }

    v.h_minus = relative_class_number(p).h_minus;
    v.rank_upper_bound = padic_val(*v.h_minus, q);
    if (static_cast<std::int64_t>(*v.rank_upper_bound) < v.rank_threshold) {
        v.verdict = Verdict::NoNontrivialSolution;
        v.reason = "q^2 does not divide p^q - p and v_q(h^-(p)) = " + std::to_string(*v.rank_upper_bound) +
                   " < (p-5)/2 = " + std::to_string(v.rank_threshold);
    } else {
        v.verdict = Verdict::Inconclusive;
        v.reason = "v_q(h^-(p)) = " + std::to_string(*v.rank_upper_bound) + " does not rule out q-rank >= " +
                   std::to_string(v.rank_threshold);
    }
    return v;
}

namespace {

void search_one_pair(std::uint64_t p, std::uint64_t q, long x_lo, long x_hi, const BigInt& y_max,
                     std::vector<Solution>& out) {
    BigInt value;
    BigInt root;
    for (long x = x_lo; x <= x_hi; ++x) {
        const BigInt bx(x);
        mpz_pow_ui(value.get_mpz_t(), bx.get_mpz_t(), p);
        value -= 1;  // y^q = x^p - 1
        if (value == 0) {
            out.push_back({p, q, bx, 0, true});
            continue;
        }
        const bool negative = value < 0;
        if (negative && q % 2 == 0) continue;
        BigInt magnitude = abs(value);
        if (mpz_root(root.get_mpz_t(), magnitude.get_mpz_t(), q) == 0) continue;
        if (root > y_max) continue;
        BigInt y = negative ? BigInt(-root) : root;
        const bool trivial = x == 0 || y == 0;
        out.push_back({p, q, bx, y, trivial});
        if (q % 2 == 0 && root != 0) out.push_back({p, q, bx, BigInt(-y), trivial});
    }
}

}  // namespace

std::vector<Solution> brute_search(std::span<const std::uint64_t> p_set, std::span<const std::uint64_t> q_set,
                                   std::uint64_t x_max, std::uint64_t y_max, unsigned threads) {
    struct Task {
        std::uint64_t p;
        std::uint64_t q;
        long x_lo;
        long x_hi;
    };
    for (std::uint64_t e : p_set) {
        if (e == 0) throw DomainError("brute_search: exponent p must be positive");
    }
    for (std::uint64_t e : q_set) {
        if (e == 0) throw DomainError("brute_search: exponent q must be positive");
    }
    constexpr long kBlock = 2048;
    const long limit = static_cast<long>(x_max);

    std::vector<Task> tasks;
    for (std::uint64_t p : p_set) {
        for (std::uint64_t q : q_set) {
            for (long lo = -limit; lo <= limit; lo += kBlock) {
                tasks.push_back({p, q, lo, std::min(limit, lo + kBlock - 1)});
            }
        }
    }

    const BigInt y_bound(static_cast<unsigned long>(y_max));
    std::vector<std::vector<Solution>> found(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            const Task& t = tasks[i];
            search_one_pair(t.p, t.q, t.x_lo, t.x_hi, y_bound, found[i]);
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(worker);
        worker();
    }

    // tasks were generated in (p, q, x) order
    std::vector<Solution> out;
    for (auto& block : found) out.insert(out.end(), block.begin(), block.end());
    return out;
}

}  // namespace catalan
