#include "catalan/wieferich.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "catalan/errors.hpp"

namespace catalan {

namespace {

constexpr std::uint64_t kMaxPrime = 1ULL << 32;
constexpr std::size_t kBlockSize = 64;

}  // namespace

WieferichReport check_pair(OddPrime p, OddPrime q) {
    if (p == q) throw DomainError("check_pair: p and q must differ");
    if (p >= kMaxPrime || q >= kMaxPrime) throw DomainError("check_pair: primes must be below 2^32");

    const std::uint64_t q2 = q * q;
    const std::uint64_t p2 = p * p;

    WieferichReport r;
    r.p = p;
    r.q = q;
    r.pq_residue = modpow(p, q, q2);
    r.qp_residue = modpow(q, p, p2);
    r.first_holds = r.pq_residue == p % q2;
    r.second_holds = r.qp_residue == q % p2;
    r.is_double = r.first_holds && r.second_holds;
    r.first_fermat_form = modpow(p, q - 1, q2) == 1;
    r.second_fermat_form = modpow(q, p - 1, p2) == 1;

    if (r.first_holds != r.first_fermat_form || r.second_holds != r.second_fermat_form) {
        throw InternalError("check_pair: Fermat-quotient form disagrees for (" + std::to_string(r.p) + ", " +
                            std::to_string(r.q) + ")");
    }
    return r;
}

std::vector<WieferichReport> search_pairs(PrimeRange p_range, PrimeRange q_range, unsigned threads) {
    if (p_range.lo > p_range.hi || q_range.lo > q_range.hi) {
        throw DomainError("search_pairs: empty range");
    }
    if (p_range.hi >= kMaxPrime || q_range.hi >= kMaxPrime) {
        throw DomainError("search_pairs: ranges must stay below 2^32");
    }
    const auto ps = odd_primes_in_range(p_range.lo, p_range.hi);
    const auto qs = odd_primes_in_range(q_range.lo, q_range.hi);

    const std::size_t blocks = (qs.size() + kBlockSize - 1) / kBlockSize;
    std::vector<std::vector<WieferichReport>> found(blocks);
    std::atomic<std::size_t> next_block{0};

    auto worker = [&] {
        for (std::size_t b = next_block++; b < blocks; b = next_block++) {
            const std::size_t end = std::min(qs.size(), (b + 1) * kBlockSize);
            for (std::size_t i = b * kBlockSize; i < end; ++i) {
                const std::uint64_t q = qs[i];
                const std::uint64_t q2 = q * q;
                for (std::uint64_t p : ps) {
                    if (p == q || modpow(p, q - 1, q2) != 1) continue;
                    if (modpow(q, p - 1, p * p) != 1) continue;
                    found[b].push_back(check_pair(OddPrime(p), OddPrime(q)));
                }
            }
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(blocks, 1))));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
        worker();
    }

    std::vector<WieferichReport> out;
    for (auto& block : found) out.insert(out.end(), block.begin(), block.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.p != b.p ? a.p < b.p : a.q < b.q;
    });
    return out;
}

}  // namespace catalan
