#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "evencycle/enumerators.hpp"
#include "evencycle/field.hpp"
#include "evencycle/oracle.hpp"
#include "evencycle/perdet.hpp"
#include "evencycle/random_instances.hpp"
#include "evencycle/ring4.hpp"
#include "evencycle/shortest_even_cycle.hpp"

namespace evencycle {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t total = 0;

    bool ok() const { return passed == total; }
};

namespace detail {

class SuiteCounter {
public:
    explicit SuiteCounter(std::string name) { result_.name = std::move(name); }

    void check(const std::function<bool()>& body)
    {
        ++result_.total;
        try {
            if (body())
                ++result_.passed;
        } catch (const std::exception&) {
            // counted as a failure
        }
    }

    SuiteResult result() const { return result_; }

private:
    SuiteResult result_;
};

}  // namespace detail

/// Oracle-equivalence checks at reduced case counts, for `evencycle selftest`.
inline std::vector<SuiteResult> run_selftest(std::uint64_t seed)
{
    using namespace instances;
    Rng rng(seed);
    std::vector<SuiteResult> results;

    {
        detail::SuiteCounter c("field-axioms");
        for (unsigned d : {1u, 2u, 8u}) {
            const Field f = make_field(d, rng);
            for (int t = 0; t < 300; ++t) {
                const FieldElem a = f.random(rng), b = f.random(rng), e = f.random(rng);
                c.check([&] {
                    bool ok = f.mul(f.mul(a, b), e) == f.mul(a, f.mul(b, e));
                    ok = ok && f.mul(a, b) == f.mul(b, a);
                    ok = ok && f.mul(a, f.add(b, e)) == f.add(f.mul(a, b), f.mul(a, e));
                    ok = ok && f.add(a, a).is_zero();
                    return ok && (a.is_zero() || f.mul(a, f.inv(a)) == f.one());
                });
            }
        }
        results.push_back(c.result());
    }

    {
        detail::SuiteCounter c("ring-projection");
        for (unsigned d : {1u, 2u, 8u}) {
            const Ring ring(make_field(d, rng));
            const Field& f = ring.field();
            for (int t = 0; t < 300; ++t) {
                const RingElem s = random_ring_elem(ring, rng), u = random_ring_elem(ring, rng);
                const RingElem e1 = random_even_ring_elem(ring, rng), e2 = random_even_ring_elem(ring, rng);
                c.check([&] {
                    bool ok = ring.project(ring.add(s, u)) == f.add(ring.project(s), ring.project(u));
                    ok = ok && ring.project(ring.mul(s, u)) == f.mul(ring.project(s), ring.project(u));
                    ok = ok && ring.mul(e1, e2).is_zero();
                    return ok && ring.twice(s) == ring.twice(ring.lift(ring.project(s)));
                });
            }
        }
        results.push_back(c.result());
    }

    {
        detail::SuiteCounter c("per-det-vs-leibniz");
        for (unsigned d : {1u, 2u}) {
            const Ring ring(make_field(d, rng));
            for (std::size_t n = 1; n <= 5; ++n) {
                for (int t = 0; t < 40; ++t) {
                    const MatrixE m = t % 2 ? random_matrix_e(ring, n, rng) : random_structured_matrix_e(ring, n, rng);
                    c.check([&] {
                        const auto [per, det] = oracle::brute_per_det_e(ring, m);
                        return per_e(ring, m) == per && det_e(ring, m) == det;
                    });
                }
            }
        }
        results.push_back(c.result());
    }

    {
        detail::SuiteCounter c("per-similar-vs-leibniz");
        for (unsigned d : {1u, 2u, 8u}) {
            const Ring ring(make_field(d, rng));
            for (int t = 0; t < 40; ++t) {
                const std::size_t n = 2 + static_cast<std::size_t>(rng() % 4);
                MatrixE m = random_matrix_e(ring, n, rng);
                const std::size_t i1 = rng() % n;
                const std::size_t i2 = (i1 + 1 + rng() % (n - 1)) % n;
                const RingElem tau = random_ring_elem(ring, rng);
                for (std::size_t j = 0; j < n; ++j)
                    m(i2, j) = ring.mul(tau, m(i1, j));
                c.check([&] { return per_similar(ring, m, i1, i2) == oracle::brute_per_det_e(ring, m).first; });
            }
        }
        results.push_back(c.result());
    }

    {
        detail::SuiteCounter c("pcc-vs-brute-force");
        const Ring ring(make_field(8, rng));
        const Field& f = ring.field();
        for (int t = 0; t < 100; ++t) {
            const std::size_t n = 1 + static_cast<std::size_t>(rng() % 6);
            const Digraph g = random_digraph(n, 0.4, rng);
            const MatrixF a = random_weighted_adjacency(f, g, rng);
            c.check([&] {
                const FieldElem expected = oracle::brute_pcc(f, a, static_cast<long>(n) - 1);
                const auto [per, det] = oracle::brute_per_det_e(ring, lift(ring, a));
                return pcc_f(ring, a) == expected && ring.sub(per, det) == ring.twice(ring.lift(expected));
            });
        }
        results.push_back(c.result());
    }

    {
        detail::SuiteCounter c("shortest-vs-oracle");
        for (int t = 0; t < 40; ++t) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng() % 7);
            const Digraph g = random_digraph(n, 0.3, rng);
            const std::uint64_t run_seed = rng();
            c.check([&] { return shortest_even_cycle(g, run_seed, 16).length == oracle::brute_shortest_even_cycle(g); });
        }
        results.push_back(c.result());
    }

    {
        detail::SuiteCounter c("odd-cycle-soundness");
        for (std::size_t len : {3u, 5u, 7u}) {
            Digraph g(len);
            add_directed_cycle(g, 0, len);
            for (int t = 0; t < 5; ++t) {
                const std::uint64_t run_seed = rng();
                c.check([&] { return !shortest_even_cycle(g, run_seed).length && !has_even_cycle(g, run_seed).found; });
            }
        }
        results.push_back(c.result());
    }

    return results;
}

}  // namespace evencycle
