#include "penney/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "penney/philox.hpp"

namespace penney {

namespace {

// floor(p · 2^64); a uniform 64-bit word below it is heads.
std::uint64_t heads_threshold(const Rational& p) {
    mpz_class scaled = p.num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 64);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), p.den().get_mpz_t());
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, scaled.get_mpz_t());
    return out;
}

struct Tally {
    std::uint64_t wins_s1 = 0;
    std::uint64_t wins_s2 = 0;
    std::uint64_t truncated = 0;
    std::uint64_t flips_sum = 0;
    std::uint64_t flips_sq_sum = 0;
};

void play_range(const SimConfig& cfg, std::uint64_t threshold, std::uint64_t begin, std::uint64_t end, Tally& out) {
    const std::size_t length = cfg.spec.length();
    const std::uint64_t mask = (std::uint64_t{1} << length) - 1;
    const std::uint64_t s1 = cfg.spec.s1().index();
    const std::uint64_t s2 = cfg.spec.s2().index();

    for (std::uint64_t trial = begin; trial < end; ++trial) {
        PhiloxStream rng(cfg.seed, trial);
        std::uint64_t window = 0;
        std::uint64_t flips = 0;
        bool resolved = false;
        while (flips < cfg.max_flips_per_trick) {
            const std::uint64_t tail = rng.next() < threshold ? 0U : 1U;
            window = ((window << 1U) | tail) & mask;
            ++flips;
            if (flips < length) continue;
            if (window == s1) {
                ++out.wins_s1;
                resolved = true;
                break;
            }
            if (window == s2) {
                ++out.wins_s2;
                resolved = true;
                break;
            }
        }
        if (!resolved) {
            ++out.truncated;
            continue;
        }
        out.flips_sum += flips;
        out.flips_sq_sum += flips * flips;
    }
}

}  // namespace

SimResult simulate(const SimConfig& config) {
    if (config.trials == 0) throw Error("simulate: trials must be at least 1");
    if (config.max_flips_per_trick < config.spec.length())
        throw Error("simulate: max_flips_per_trick must be at least the pattern length");

    const std::uint64_t threshold = heads_threshold(config.spec.coin().p_heads());
    unsigned workers = config.threads != 0 ? config.threads : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, config.trials));

    // Contiguous trial ranges; integer tallies make the merge order-independent.
    std::vector<Tally> tallies(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = config.trials / workers;
    const std::uint64_t extra = config.trials % workers;
    std::uint64_t begin = 0;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
        pool.emplace_back(play_range, std::cref(config), threshold, begin, end, std::ref(tallies[w]));
        begin = end;
    }
    for (auto& t : pool) t.join();

    SimResult r;
    r.trials = config.trials;
    for (const auto& t : tallies) {
        r.wins_s1 += t.wins_s1;
        r.wins_s2 += t.wins_s2;
        r.truncated += t.truncated;
        r.flips_sum += t.flips_sum;
        r.flips_sq_sum += t.flips_sq_sum;
    }

    const auto n = static_cast<double>(r.trials);
    r.win_rate_s1 = static_cast<double>(r.wins_s1) / n;
    r.stderr_win_s1 = std::sqrt(r.win_rate_s1 * (1.0 - r.win_rate_s1) / n);

    const std::uint64_t resolved = r.wins_s1 + r.wins_s2;
    if (resolved > 0) {
        const auto m = static_cast<double>(resolved);
        r.mean_flips = static_cast<double>(r.flips_sum) / m;
        if (resolved > 1) {
            const double centered =
                static_cast<double>(r.flips_sq_sum) - static_cast<double>(r.flips_sum) * r.mean_flips;
            const double variance = std::max(0.0, centered / (m - 1.0));
            r.stderr_mean_flips = std::sqrt(variance / m);
        }
    }
    return r;
}

EnumResult enumerate_exact(const GameSpec& spec, std::size_t horizon) {
    const std::size_t length = spec.length();
    if (horizon < length) throw Error("enumerate_exact: horizon must be at least the pattern length");

    const std::size_t n = std::size_t{1} << length;
    const std::size_t mask = n - 1;
    const std::size_t s1 = spec.s1().index();
    const std::size_t s2 = spec.s2().index();
    const Rational heads = spec.coin().p_heads();
    const Rational tails = spec.coin().p_tails();

    Rational win1, flips_resolved;

    // Law of the first L flips.
    std::vector<Rational> mass(n);
    for (std::size_t w = 0; w < n; ++w) {
        Rational m(1);
        for (std::size_t bit = 0; bit < length; ++bit) m *= ((w >> bit) & 1U) ? tails : heads;
        if (w == s1 || w == s2) {
            if (w == s1) win1 += m;
            flips_resolved += m * Rational(static_cast<long>(length));
        } else {
            mass[w] = std::move(m);
        }
    }

    std::vector<Rational> next(n);
    for (std::size_t t = length + 1; t <= horizon; ++t) {
        std::fill(next.begin(), next.end(), Rational());
        const Rational flips(static_cast<long>(t));
        for (std::size_t w = 0; w < n; ++w) {
            if (mass[w].is_zero()) continue;
            for (std::size_t d = 0; d < 2; ++d) {
                const std::size_t to = ((w << 1U) | d) & mask;
                Rational m = mass[w] * (d == 0 ? heads : tails);
                if (to == s1 || to == s2) {
                    if (to == s1) win1 += m;
                    flips_resolved += m * flips;
                } else {
                    next[to] += m;
                }
            }
        }
        std::swap(mass, next);
    }

    Rational unresolved;
    for (const auto& m : mass) unresolved += m;

    const Rational p_min = std::min(heads, tails);
    Rational escape(1);
    for (std::size_t i = 0; i < length; ++i) escape *= p_min;
    const Rational residual_bound = Rational(static_cast<long>(length)) / escape;

    EnumResult r;
    r.horizon = horizon;
    r.win_s1_lower = win1;
    r.win_s1_upper = win1 + unresolved;
    r.expected_flips_lower = flips_resolved + unresolved * Rational(static_cast<long>(horizon + 1));
    r.expected_flips_upper = flips_resolved + unresolved * (Rational(static_cast<long>(horizon)) + residual_bound);
    r.unresolved_mass = std::move(unresolved);
    return r;
}

}  // namespace penney
