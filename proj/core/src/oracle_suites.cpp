#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

#include "zred/maps.hpp"
#include "zred/oracle.hpp"
#include "zred/reduction.hpp"

namespace zred {
namespace {

using Rational = boost::multiprecision::cpp_rational;

struct Partial {
    std::uint64_t cases = 0;
    std::vector<Counterexample> failures;
    // (sigma string, form) pairs, only filled by the primitivity suite
    std::vector<std::pair<std::string, Form>> tagged;

    void fail(const Integer& delta, std::optional<Form> form, std::string detail) {
        failures.push_back(Counterexample{delta, std::move(form), std::move(detail)});
    }
};

template <class... Parts>
std::string cat(const Parts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

std::string str(const NatString& s) {
    return "(" + to_string(s) + ")";
}

// Runs task(i, partial) for i in [0, n) on up to `jobs` threads. Exceptions
// inside a task become failures of that task.
void parallel_for(std::size_t n, unsigned jobs, std::vector<Partial>& parts,
                  const std::function<void(std::size_t, Partial&)>& task,
                  const std::function<Integer(std::size_t)>& delta_of) {
    parts.assign(n, Partial{});
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) return;
            try {
                task(i, parts[i]);
            } catch (const std::exception& e) {
                parts[i].fail(delta_of(i), std::nullopt, std::string("exception: ") + e.what());
            }
        }
    };
    const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(n)));
    if (threads <= 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

void merge(VerificationReport& report, std::vector<Partial>& parts) {
    for (auto& p : parts) {
        report.cases_checked += p.cases;
        for (auto& f : p.failures) report.failures.push_back(std::move(f));
    }
}

bool is_square_ll(long long n) {
    if (n < 0) return false;
    long long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

std::vector<long long> nonsquare_deltas(long long lo, long long hi) {
    std::vector<long long> out;
    for (long long d = std::max(2LL, lo); d <= hi; ++d) {
        // a fast integer square test is plenty here
        long long r = static_cast<long long>(std::sqrt(static_cast<double>(d)));
        while (r * r > d) --r;
        while ((r + 1) * (r + 1) <= d) ++r;
        if (r * r != d) out.push_back(d);
    }
    return out;
}

using DeltaCheck = std::function<void(long long delta, Partial&)>;

void sweep_deltas(VerificationReport& report, const std::vector<long long>& deltas, unsigned jobs,
                  const DeltaCheck& check) {
    std::vector<Partial> parts;
    parallel_for(
        deltas.size(), jobs, parts, [&](std::size_t i, Partial& p) { check(deltas[i], p); },
        [&](std::size_t i) { return Integer(deltas[i]); });
    merge(report, parts);
}

// Every string of the given length with entries in [1, max_entry], in
// lexicographic order, grouped by first entry so the groups can run apart.
void for_each_string(std::size_t length, long long max_entry, long long first,
                     const std::function<void(const NatString&)>& visit) {
    std::vector<long long> digits(length, 1);
    if (length == 0) return;
    digits[0] = first;
    NatString s(length);
    for (;;) {
        for (std::size_t i = 0; i < length; ++i) s[i] = digits[i];
        visit(s);
        std::size_t k = length;
        while (k > 1) {
            --k;
            if (digits[k] < max_entry) {
                ++digits[k];
                break;
            }
            digits[k] = 1;
            if (k == 1) return;
        }
        if (length == 1) return;
    }
}

struct StringTask {
    std::size_t length;
    long long first;
};

std::vector<StringTask> string_tasks(std::size_t min_len, std::size_t max_len, long long max_entry) {
    std::vector<StringTask> out;
    for (std::size_t l = min_len; l <= max_len; ++l) {
        for (long long q = 1; q <= max_entry; ++q) out.push_back({l, q});
    }
    return out;
}

void sweep_strings(VerificationReport& report, std::size_t min_len, const SweepBounds& bounds,
                   const std::function<void(const NatString&, Partial&)>& check) {
    if (bounds.delta_max == 0) return;
    const auto tasks = string_tasks(min_len, bounds.string_max_length, bounds.string_max_entry);
    std::vector<Partial> parts;
    parallel_for(
        tasks.size(), bounds.jobs, parts,
        [&](std::size_t i, Partial& p) {
            for_each_string(tasks[i].length, bounds.string_max_entry, tasks[i].first,
                            [&](const NatString& s) {
                                ++p.cases;
                                try {
                                    check(s, p);
                                } catch (const std::exception& e) {
                                    p.fail(0, std::nullopt, cat("string ", str(s), ": exception: ", e.what()));
                                }
                            });
        },
        [](std::size_t) { return Integer(0); });
    merge(report, parts);
}

// Shared per-discriminant data.
struct DeltaData {
    long long delta;
    PellSolution pell;
    std::vector<Form> z;  // brute-force Z-reduced forms
};

DeltaData z_data(long long delta, Partial& p) {
    DeltaData d{delta, fundamental_solution(delta), oracle::brute_z_reduced(delta)};
    if (enumerate_z_reduced(delta) != d.z) {
        p.fail(delta, std::nullopt, "enumerate_z_reduced disagrees with the brute-force scan");
    }
    return d;
}

std::vector<Form> g_data(long long delta, Partial& p) {
    std::vector<Form> g = oracle::brute_g_reduced(delta);
    if (enumerate_g_reduced(delta) != g) {
        p.fail(delta, std::nullopt, "enumerate_g_reduced disagrees with the brute-force scan");
    }
    return g;
}

// Preimages of a Z-reduced form under the two branches of mu.
Form mu_plus_preimage(const Form& g) {
    return Form{g.a, g.b - 2 * g.a, g.a - g.b + g.c};
}
Form mu_minus_preimage(const Form& g) {
    return Form{g.a - g.b + g.c, g.b - 2 * g.c, g.c};
}

// Smallest p dividing |s| such that s is invariant under rotation by p.
std::size_t naive_cyclic_period(const std::string& s) {
    const std::size_t n = s.size();
    for (std::size_t p = 1; p <= n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = s[i] == s[(i + p) % n];
        if (ok) return p;
    }
    return n;
}

std::string naive_canonical(const std::string& s) {
    std::string best = s;
    for (std::size_t r = 1; r < s.size(); ++r) {
        std::string rot = s.substr(r) + s.substr(0, r);
        best = std::min(best, rot);
    }
    return best;
}

// ---------------------------------------------------------------------------
// Suites

void suite_rotation(VerificationReport& rep, const SweepBounds& b) {
    sweep_deltas(rep, nonsquare_deltas(2, b.delta_max), b.jobs, [](long long delta, Partial& p) {
        const DeltaData d = z_data(delta, p);
        for (const Form& f : d.z) {
            ++p.cases;
            const Form next = r_z(f);
            if (next != oracle::slow_r_z(f)) {
                p.fail(delta, f, cat("r_z gives ", next, ", slow step gives ", oracle::slow_r_z(f)));
                continue;
            }
            const BinString lhs = sigma(next, d.pell);
            const BinString rhs = rotate_bin(sigma(f, d.pell));
            if (lhs != rhs) p.fail(delta, f, cat("sigma(r_z f) = ", lhs, " but rotate_bin(sigma f) = ", rhs));
        }
    });
}

void check_membership(const DeltaData& d, Partial& p, bool plus) {
    for (const Form& g : d.z) {
        ++p.cases;
        const NatString beads = beta(g, d.pell);
        const Form pre = plus ? mu_plus_preimage(g) : mu_minus_preimage(g);
        const bool in_image = is_g_reduced(pre) && (plus ? pre.a > 0 : pre.a < 0);
        const bool by_beads = plus ? beads.front() == 1 : beads.back() == 1;
        if (in_image != by_beads) {
            p.fail(d.delta, g,
                   cat(plus ? "mu(G+)" : "mu(G-)", " membership is ", in_image, " but beta = ", str(beads)));
        } else if (in_image && mu(pre) != g) {
            p.fail(d.delta, g, cat("mu of the preimage ", pre, " is ", mu(pre)));
        }
    }
}

void suite_xi_diagram(VerificationReport& rep, const SweepBounds& b, bool plus) {
    sweep_deltas(rep, nonsquare_deltas(2, b.delta_max), b.jobs, [plus](long long delta, Partial& p) {
        const DeltaData d = z_data(delta, p);
        for (const Form& f : g_data(delta, p)) {
            if ((f.a > 0) != plus) continue;
            ++p.cases;
            const Form m = mu(f);
            const Form via_action = act(f, plus ? UnimodularMatrix(1, 1, 0, 1) : UnimodularMatrix(1, 0, 1, 1));
            if (m != via_action || !is_z_reduced(m)) {
                p.fail(delta, f, cat("mu(f) = ", m, " but f acted on gives ", via_action));
                continue;
            }
            const NatString lhs = beta(m, d.pell);
            const NatString rhs = plus ? eta_plus(gamma(f, d.pell)) : eta_minus(gamma(rho(f), d.pell));
            if (lhs != rhs) {
                p.fail(delta, f, cat("beta(mu f) = ", str(lhs), " but expected ", str(rhs)));
            } else if (sigma(m, d.pell) != sb(rhs)) {
                p.fail(delta, f, cat("sigma(mu f) differs from sb of ", str(rhs)));
            }
        }
        check_membership(d, p, plus);
    });
}

void suite_xi_plus(VerificationReport& rep, const SweepBounds& b) {
    suite_xi_diagram(rep, b, true);
}

void suite_xi_minus(VerificationReport& rep, const SweepBounds& b) {
    suite_xi_diagram(rep, b, false);
}

void suite_formfrombeads(VerificationReport& rep, const SweepBounds& b) {
    // tau o beta and xi o gamma on forms whose discriminant is k^2 -+ 4
    std::set<long long> special;
    for (long long k = 1; k * k - 4 <= b.delta_max; ++k) {
        for (long long d : {k * k - 4, k * k + 4}) {
            if (d >= 2 && d <= b.delta_max && !is_square_ll(d)) special.insert(d);
        }
    }
    sweep_deltas(rep, std::vector<long long>(special.begin(), special.end()), b.jobs,
                 [](long long delta, Partial& p) {
                     const DeltaData d = z_data(delta, p);
                     for (const Form& f : d.z) {
                         ++p.cases;
                         const NatString beads = beta(f, d.pell);
                         const Form back = tau(beads);
                         if (back != f) p.fail(delta, f, cat("tau(beta f) = ", back, " via ", str(beads)));
                     }
                     for (const Form& f : g_data(delta, p)) {
                         if (f.a < 1) continue;
                         ++p.cases;
                         const NatString q = gamma(f, d.pell);
                         const Form back = xi(q);
                         if (back != f) p.fail(delta, f, cat("xi(gamma f) = ", back, " via ", str(q)));
                     }
                 });
    // beta o tau on strings, with the discriminant formula
    sweep_strings(rep, 2, b, [](const NatString& s, Partial& p) {
        const Form f = tau(s);
        const Integer delta = discriminant(f);
        NatString both = s;
        both.front() -= 1;
        both.back() -= 1;
        const Integer k = continuant(s) - continuant(both);
        const Integer expected = k * k + (s.size() % 2 == 0 ? 4 : -4);
        if (delta != expected) {
            p.fail(delta, f, cat("tau", str(s), " has discriminant ", delta, ", formula gives ", expected));
            return;
        }
        if (!is_z_reduced(f)) {
            p.fail(delta, f, cat("tau", str(s), " is not Z-reduced"));
            return;
        }
        const NatString back = beta(f);
        if (back != s) p.fail(delta, f, cat("beta(tau", str(s), ") = ", str(back)));
    });
    // xi is a section of gamma onto forms of discriminant k^2 -+ 4
    sweep_strings(rep, 1, b, [](const NatString& s, Partial& p) {
        const Form f = xi(s);
        const Integer delta = discriminant(f);
        const std::span<const Integer> v(s);
        const auto l = static_cast<std::ptrdiff_t>(s.size());
        const Integer k = continuant(v) + continuant(v, 2, l - 1);
        const Integer expected = k * k + (l % 2 == 0 ? -4 : 4);
        if (delta != expected) {
            p.fail(delta, f, cat("xi", str(s), " has discriminant ", delta, ", formula gives ", expected));
            return;
        }
        if (!is_g_reduced(f) || f.a < 1) {
            p.fail(delta, f, cat("xi", str(s), " is not in G+"));
            return;
        }
        const NatString back = gamma(f);
        if (back != s) p.fail(delta, f, cat("gamma(xi", str(s), ") = ", str(back)));
    });
    // tau o sb^-1 is a section of sigma
    if (b.delta_max == 0) return;
    for (std::size_t len = 1; len <= b.binary_max_length; ++len) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask) {
            std::string bits(len, '0');
            for (std::size_t i = 0; i < len; ++i) {
                if (mask >> (len - 1 - i) & 1) bits[i] = '1';
            }
            ++rep.cases_checked;
            const BinString s(bits);
            try {
                const Form f = tau(sb_inv(s));
                const BinString back = sigma(f);
                if (back != s) rep.failures.push_back({discriminant(f), f, cat("sigma(tau(sb_inv ", s, ")) = ", back)});
            } catch (const std::exception& e) {
                rep.failures.push_back({0, std::nullopt, cat("string ", s, ": exception: ", e.what())});
            }
        }
    }
}

void suite_reductionrelation(VerificationReport& rep, const SweepBounds& b) {
    sweep_deltas(rep, nonsquare_deltas(2, b.delta_max), b.jobs, [](long long delta, Partial& p) {
        const DeltaData d = z_data(delta, p);
        for (const Form& f : g_data(delta, p)) {
            if (f.a < 0) continue;
            ++p.cases;
            const NatString gf = gamma(f, d.pell);
            const Form once = r_g(f);
            const Form twice = r_g(once);
            const NatString lhs1 = gamma(rho(once), d.pell);
            if (lhs1 != t_g(gf)) p.fail(delta, f, cat("gamma(rho(R_G f)) = ", str(lhs1), ", T_G(gamma f) = ", str(t_g(gf))));
            const NatString lhs2 = gamma(twice, d.pell);
            if (lhs2 != t_g(t_g(gf))) p.fail(delta, f, cat("gamma(R_G^2 f) = ", str(lhs2), ", T_G^2(gamma f) = ", str(t_g(t_g(gf)))));
            const Form mf = mu(f);
            if (mu(once) != r_z(mf)) p.fail(delta, f, cat("mu(R_G f) = ", mu(once), ", R_Z(mu f) = ", r_z(mf)));
            const Integer q2 = gf.size() >= 2 ? gf[1] : gf[0];
            Form walk = mf;
            for (Integer i = 0; i < q2; ++i) walk = r_z(walk);
            if (mu(twice) != walk) p.fail(delta, f, cat("mu(R_G^2 f) = ", mu(twice), ", R_Z^", q2, "(mu f) = ", walk));
        }
        for (const Form& g : d.z) {
            ++p.cases;
            const NatString lhs = beta(r_z(g), d.pell);
            const NatString rhs = t_z(beta(g, d.pell));
            if (lhs != rhs) p.fail(delta, g, cat("beta(R_Z g) = ", str(lhs), ", T_Z(beta g) = ", str(rhs)));
        }
    });
}

void suite_firstcoefficient(VerificationReport& rep, const SweepBounds& b) {
    sweep_deltas(rep, nonsquare_deltas(2, b.delta_max), b.jobs, [](long long delta, Partial& p) {
        const PellSolution pell = fundamental_solution(delta);
        for (const Form& f : g_data(delta, p)) {
            if (f.a < 0) continue;
            ++p.cases;
            const Integer q1 = gamma(f, pell).front();
            const Form expected = act(f, UnimodularMatrix(q1, 1, -1, 0));
            if (r_g(f) != expected) p.fail(delta, f, cat("R_G f = ", r_g(f), ", f(q1 x + y, -x) = ", expected));
        }
    });
}

void suite_reversal(VerificationReport& rep, const SweepBounds& b) {
    sweep_deltas(rep, nonsquare_deltas(2, b.delta_max), b.jobs, [](long long delta, Partial& p) {
        const DeltaData d = z_data(delta, p);
        for (const Form& f : g_data(delta, p)) {
            if (f.a > 0) continue;
            ++p.cases;
            const NatString lhs = gamma(reverse(f), d.pell);
            const NatString rhs = reversed(gamma(rho(f), d.pell));
            if (lhs != rhs) p.fail(delta, f, cat("gamma(f^R) = ", str(lhs), ", reversed gamma(rho f) = ", str(rhs)));
        }
        for (const Form& g : d.z) {
            ++p.cases;
            const NatString lhs = beta(reverse(g), d.pell);
            const NatString rhs = reversed(beta(g, d.pell));
            if (lhs != rhs) p.fail(delta, g, cat("beta(g^R) = ", str(lhs), ", reversed beta(g) = ", str(rhs)));
        }
    });
}

void suite_mu_fiber(VerificationReport& rep, const SweepBounds& b) {
    sweep_deltas(rep, nonsquare_deltas(2, b.delta_max), b.jobs, [](long long delta, Partial& p) {
        const std::vector<Form> g = g_data(delta, p);
        std::map<Form, std::vector<Form>> plus_by_image;
        std::set<Form> minus_images;
        for (const Form& f : g) {
            const Form m = mu(f);
            if (f.a > 0) {
                if (!plus_by_image[m].empty()) p.fail(delta, f, "mu is not injective on G+");
                plus_by_image[m].push_back(f);
            } else if (!minus_images.insert(m).second) {
                p.fail(delta, f, "mu is not injective on G-");
            }
        }
        for (const Form& h : g) {
            if (h.a > 0) continue;
            ++p.cases;
            const Form candidate = act(h, UnimodularMatrix(-1, 1, -1, 0));
            const bool candidate_ok = is_g_reduced(candidate) && candidate.a > 0;
            const auto it = plus_by_image.find(mu(h));
            const std::vector<Form> partners = it == plus_by_image.end() ? std::vector<Form>{} : it->second;
            const std::vector<Form> expected = candidate_ok ? std::vector<Form>{candidate} : std::vector<Form>{};
            if (partners != expected) {
                p.fail(delta, h, cat("G+ forms sharing mu(g): ", partners.size(), ", expected ", expected.size()));
            } else if (candidate_ok && r_g(h) != candidate) {
                p.fail(delta, h, cat("R_G g = ", r_g(h), " but g(-x+y,-x) = ", candidate));
            }
        }
    });
}

void suite_primitivity(VerificationReport& rep, const SweepBounds& b) {
    const auto deltas = nonsquare_deltas(2, b.delta_max);
    std::vector<Partial> parts;
    parallel_for(
        deltas.size(), b.jobs, parts,
        [&](std::size_t i, Partial& p) {
            const DeltaData d = z_data(deltas[i], p);
            for (const Form& f : d.z) {
                if (!is_primitive(f)) continue;
                ++p.cases;
                const BinString s = sigma(f, d.pell);
                if (naive_cyclic_period(s.bits()) != s.size()) {
                    p.fail(d.delta, f, cat("sigma(f) = ", s, " is not primitive"));
                }
                p.tagged.emplace_back(s.bits(), f);
            }
        },
        [&](std::size_t i) { return Integer(deltas[i]); });
    std::map<std::string, Form> owner;
    for (auto& p : parts) {
        for (auto& [s, f] : p.tagged) {
            auto [it, fresh] = owner.emplace(s, f);
            if (!fresh) p.fail(discriminant(f), f, cat("sigma collides with ", it->second, " on ", s));
        }
    }
    merge(rep, parts);
    // every primitive string is hit by a primitive form
    if (b.delta_max == 0) return;
    for (std::size_t len = 1; len <= b.binary_max_length; ++len) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask) {
            std::string bits(len, '0');
            for (std::size_t i = 0; i < len; ++i) {
                if (mask >> (len - 1 - i) & 1) bits[i] = '1';
            }
            if (naive_cyclic_period(bits) != len) continue;
            ++rep.cases_checked;
            const BinString s(bits);
            const Form f = tau(sb_inv(s));
            const Integer k = content(f);
            const Form f0{f.a / k, f.b / k, f.c / k};
            if (!is_z_reduced(f0) || sigma(f0) != s) {
                rep.failures.push_back({discriminant(f0), f0, cat("primitive part of tau(sb_inv ", s, ") misses it")});
            }
        }
    }
}

// Trace of the automorph obtained by composing one Zagier cycle.
Integer cycle_trace(const Form& f) {
    Integer m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    Form cur = f;
    do {
        const Form next = oracle::slow_r_z(cur);
        const Integer n = next.b + cur.b;  // 2an = b + b'
        const Integer two_a = 2 * cur.a;
        const Integer step = n / two_a;
        // right-multiply by [[n,1],[-1,0]]
        Integer a0 = m00 * step - m01, a1 = m00;
        Integer b0 = m10 * step - m11, b1 = m10;
        m00 = std::move(a0);
        m01 = std::move(a1);
        m10 = std::move(b0);
        m11 = std::move(b1);
        cur = next;
    } while (cur != f);
    return m00 + m11;
}

void suite_weightparity(VerificationReport& rep, const SweepBounds& b) {
    sweep_deltas(rep, nonsquare_deltas(2, b.delta_max), b.jobs, [](long long delta, Partial& p) {
        const DeltaData d = z_data(delta, p);
        // the sign of the fundamental solution, checked without the production solver
        int eps = 0;
        const long long cap = d.pell.u <= 2000 ? d.pell.u.convert_to<long long>() : 2000;
        const auto small = oracle::slow_pell(delta, cap, &eps);
        const bool agrees = small ? small->first == d.pell.t && small->second == d.pell.u && eps == d.pell.epsilon
                                  : d.pell.u > 2000;
        if (!agrees) p.fail(delta, std::nullopt, "fundamental Pell solution differs from the linear scan");
        std::set<Form> pending(d.z.begin(), d.z.end());
        bool automorph_checked = false;
        for (const Form& start : d.z) {
            if (!pending.contains(start)) continue;
            ++p.cases;
            std::vector<Form> members;
            Form cur = start;
            do {
                members.push_back(cur);
                pending.erase(cur);
                cur = oracle::slow_r_z(cur);
            } while (cur != start);
            const BinString s0 = sigma(start, d.pell);
            for (const Form& g : members) {
                const BinString s = sigma(g, d.pell);
                if (s.weight() != s0.weight() || s.size() != s0.size()) {
                    p.fail(delta, g, cat("weight/length ", s.weight(), "/", s.size(), " differ across the cycle of ", start));
                }
            }
            const bool odd = s0.weight() % 2 == 1;
            if (odd != (d.pell.epsilon == -4)) {
                p.fail(delta, start, cat("weight ", s0.weight(), " but epsilon = ", d.pell.epsilon));
            }
            if (!automorph_checked && is_primitive(start)) {
                automorph_checked = true;
                const Integer trace = cycle_trace(start);
                const Integer expected = d.pell.epsilon == -4 ? d.pell.t * d.pell.t + 2 : d.pell.t;
                if (trace != expected) {
                    p.fail(delta, start, cat("cycle automorph trace ", trace, " but Pell gives ", expected));
                }
            }
        }
    });
}

void suite_zcaliber(VerificationReport& rep, const SweepBounds& b) {
    if (b.delta_max == 0) return;
    for (std::size_t len = 1; len <= b.necklace_max_length; ++len) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << len); ++mask) {
            std::string bits(len, '0');
            for (std::size_t i = 0; i < len; ++i) {
                if (mask >> (len - 1 - i) & 1) bits[i] = '1';
            }
            if (naive_canonical(bits) != bits || naive_cyclic_period(bits) != len) continue;
            ++rep.cases_checked;
            try {
                const BinString s(bits);
                const Form f1 = tau(sb_inv(s));
                const std::size_t k1 = oracle::slow_z_caliber(f1);
                if (s.weight() % 2 == 1) {
                    if (k1 != len) rep.failures.push_back({discriminant(f1), f1, cat("caliber ", k1, " for necklace ", s)});
                    continue;
                }
                const std::size_t second = bits.find('1', bits.find('1') + 1);
                const Form f2 = tau(sb_inv(rotate_left(s, second)));
                std::unordered_set<Form, FormHash> cycle1;
                Form cur = f1;
                do {
                    cycle1.insert(cur);
                    cur = oracle::slow_r_z(cur);
                } while (cur != f1);
                const std::size_t k2 = oracle::slow_z_caliber(f2);
                if (cycle1.contains(f2)) {
                    rep.failures.push_back({discriminant(f1), f1, cat("both colorings of ", s, " land in one class")});
                } else if (k1 + k2 != len) {
                    rep.failures.push_back({discriminant(f1), f1, cat("calibers ", k1, " + ", k2, " for necklace ", s)});
                }
            } catch (const std::exception& e) {
                rep.failures.push_back({0, std::nullopt, cat("necklace ", bits, ": exception: ", e.what())});
            }
        }
    }
}

void suite_denjoy(VerificationReport& rep, const SweepBounds& b) {
    sweep_deltas(rep, nonsquare_deltas(2, b.delta_max), b.jobs, [](long long delta, Partial& p) {
        const DeltaData d = z_data(delta, p);
        for (const Form& f : d.z) {
            ++p.cases;
            const std::string period = denjoy_period(f, d.pell).bits();
            const BinString got = denjoy_surd(denjoy_surd_of(f), 3 * period.size());
            if (got.bits() != period + period + period) {
                p.fail(delta, f, cat("Denjoy expansion starts ", got, ", period ", period));
            } else if (naive_cyclic_period(period) != period.size()) {
                p.fail(delta, f, cat("period ", period, " is not minimal (", naive_cyclic_period(period), ")"));
            }
        }
    });
}

// Exact floor of (p + sqrt(d)) / q by stepping, independent of the surd class.
long long slow_floor(long long p, long long q, long long d) {
    // value >= k  <=>  p + sqrt(d) >= k q  (q > 0)  or  <= k q  (q < 0)
    auto at_least = [&](long long k) {
        const long long m = k * q - p;  // compare sqrt(d) with m (q > 0) or -m (q < 0)
        if (q > 0) return m <= 0 || m * m < d;
        return m >= 0 && m * m > d;
    };
    long long k = 0;
    while (at_least(k + 1)) ++k;
    while (!at_least(k)) --k;
    return k;
}

// Purely periodic test by walking (p, q) states with slow floors.
bool slow_purely_periodic(long long p, long long q, long long d, bool negative) {
    std::map<std::pair<long long, long long>, int> seen;
    int step = 0;
    while (!seen.contains({p, q})) {
        seen[{p, q}] = step++;
        const long long fl = slow_floor(p, q, d);
        const long long a = negative ? fl + 1 : fl;
        const long long np = a * q - p;
        const long long nq = negative ? (np * np - d) / q : (d - np * np) / q;
        p = np;
        q = nq;
    }
    return seen[{p, q}] == 0;
}

void lgz_case(long long p, long long q, long long d, Partial& part) {
    ++part.cases;
    const long long x_floor = slow_floor(p, q, d);
    const long long conj_floor = slow_floor(-p, -q, d);  // (p - sqrt d) / q
    const bool reg_expected = x_floor >= 1 && conj_floor == -1;
    const bool neg_expected = x_floor >= 1 && conj_floor == 0;
    const QuadraticSurd x(p, q, d);
    const bool reg_engine = expansion_shape(x, ExpansionKind::regular).purely_periodic();
    const bool neg_engine = expansion_shape(x, ExpansionKind::negative).purely_periodic();
    const bool reg_walk = slow_purely_periodic(p, q, d, false);
    const bool neg_walk = slow_purely_periodic(p, q, d, true);
    if (reg_engine != reg_walk || neg_engine != neg_walk) {
        part.fail(d, std::nullopt, cat("engine and walk disagree on (", p, "+sqrt ", d, ")/", q));
    }
    if (reg_walk != reg_expected) {
        part.fail(d, std::nullopt, cat("regular periodicity of (", p, "+sqrt ", d, ")/", q, " is ", reg_walk));
    }
    if (neg_walk != neg_expected) {
        part.fail(d, std::nullopt, cat("negative periodicity of (", p, "+sqrt ", d, ")/", q, " is ", neg_walk));
    }
}

void suite_lgz(VerificationReport& rep, const SweepBounds& b) {
    if (b.delta_max < 2) return;
    // exhaustive small grid
    const auto small = nonsquare_deltas(2, std::min<long long>(b.delta_max, 60));
    sweep_deltas(rep, small, b.jobs, [](long long d, Partial& part) {
        long long r = 0;
        while ((r + 1) * (r + 1) <= d) ++r;
        for (long long p = -2 * r - 2; p <= 2 * r + 2; ++p) {
            const long long n = d - p * p;
            const long long an = n < 0 ? -n : n;
            for (long long q = 1; q <= an; ++q) {
                if (an % q != 0) continue;
                lgz_case(p, q, d, part);
                lgz_case(p, -q, d, part);
            }
        }
    });
    // random surds
    std::mt19937_64 rng(b.seed);
    const long long dmax = std::min<long long>(b.delta_max, 100000);
    Partial part;
    for (std::size_t i = 0; i < b.random_samples; ++i) {
        long long d = 0;
        do {
            d = std::uniform_int_distribution<long long>(2, std::max(2LL, dmax))(rng);
        } while (is_square_ll(d));
        long long r = 0;
        while ((r + 1) * (r + 1) <= d) ++r;
        const long long p = std::uniform_int_distribution<long long>(-3 * r - 3, 3 * r + 3)(rng);
        const long long n = d - p * p;
        const long long an = n < 0 ? -n : n;
        std::vector<long long> divisors;
        for (long long x = 1; x * x <= an; ++x) {
            if (an % x == 0) {
                divisors.push_back(x);
                divisors.push_back(an / x);
            }
        }
        long long q = divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
        if (rng() & 1) q = -q;
        try {
            lgz_case(p, q, d, part);
        } catch (const std::exception& e) {
            part.fail(d, std::nullopt, cat("exception: ", e.what()));
        }
    }
    std::vector<Partial> parts{std::move(part)};
    merge(rep, parts);
}

// Numerator of the continued fraction q1 + 1/(q2 + ...) in lowest terms.
Integer rational_continuant(const NatString& s) {
    if (s.empty()) return 1;
    Rational v = s.back();
    for (std::size_t i = s.size() - 1; i-- > 0;) v = Rational(s[i]) + 1 / v;
    return boost::multiprecision::numerator(v);
}

void suite_continuant_identities(VerificationReport& rep, const SweepBounds& b) {
    if (b.delta_max == 0) return;
    std::mt19937_64 rng(b.seed ^ 0x5bd1e995);
    Partial p;
    auto K = [](const NatString& s, std::ptrdiff_t i, std::ptrdiff_t j) {
        return continuant(std::span<const Integer>(s), i, j);
    };
    for (std::size_t n = 0; n < b.random_samples; ++n) {
        const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 12)(rng);
        NatString s(len);
        for (auto& q : s) q = std::uniform_int_distribution<int>(1, 9)(rng);
        const auto l = static_cast<std::ptrdiff_t>(len);
        ++p.cases;
        auto bad = [&](const std::string& what) { p.fail(0, std::nullopt, cat(what, " fails on ", str(s))); };
        try {
            if (continuant(s) != rational_continuant(s)) bad("definition");
            if (continuant(reversed(s)) != continuant(s)) bad("symmetry");
            if (l >= 1) {
                const Matrix2 m = continuant_matrix(s);
                if (m != Matrix2{K(s, 1, l), K(s, 1, l - 1), K(s, 2, l), K(s, 2, l - 1)}) bad("matrix identity");
                const Integer det = K(s, 1, l) * K(s, 2, l - 1) - K(s, 1, l - 1) * K(s, 2, l);
                if (det != (l % 2 == 0 ? 1 : -1)) bad("determinant");
                const Integer q = std::uniform_int_distribution<int>(1, 9)(rng);
                NatString left = s, right = s;
                left.front() += q;
                right.back() += q;
                if (continuant(left) != K(s, 1, l) + q * K(s, 2, l)) bad("left end shift");
                if (continuant(right) != K(s, 1, l) + q * K(s, 1, l - 1)) bad("right end shift");
                // zero ends
                NatString zl = s, zr = s;
                zl.front() = 0;
                zr.back() = 0;
                if (continuant(zl) != (l >= 2 ? K(s, 3, l) : Integer(0))) bad("left zero end");
                if (continuant(zr) != (l >= 2 ? K(s, 1, l - 2) : Integer(0))) bad("right zero end");
                if (continuant(reversed(zl)) != continuant(zl)) bad("symmetry with a zero end");
                if (l >= 2) {
                    const Integer dz = K(zl, 1, l) * K(zl, 2, l - 1) - K(zl, 1, l - 1) * K(zl, 2, l);
                    if (dz != (l % 2 == 0 ? 1 : -1)) bad("determinant with a zero end");
                }
            }
            if (l >= 2) {
                NatString one_left = s, one_right = s;
                one_left.front() = 1;
                one_right.back() = 1;
                NatString merged_left(one_left.begin() + 1, one_left.end());
                merged_left.front() += 1;
                NatString merged_right(one_right.begin(), one_right.end() - 1);
                merged_right.back() += 1;
                if (continuant(one_left) != continuant(merged_left)) bad("left ones absorption");
                if (continuant(one_right) != continuant(merged_right)) bad("right ones absorption");
                NatString head = s, tail = s, both = s;
                head.front() -= 1;
                tail.back() -= 1;
                both.front() -= 1;
                both.back() -= 1;
                const Integer alt = continuant(s) * continuant(both) - continuant(tail) * continuant(head);
                if (alt != (l % 2 == 0 ? 1 : -1)) bad("modified determinant");
            }
        } catch (const std::exception& e) {
            bad(std::string("exception ") + e.what());
        }
    }
    {
        ++p.cases;
        if (continuant(nat({})) != 1 || continuant(NatString{Integer(0)}) != 0) {
            p.fail(0, std::nullopt, "empty or [0] convention");
        }
        const NatString s = nat({4, 7});
        if (K(s, 2, 1) != 1 || K(s, 2, 0) != 0) p.fail(0, std::nullopt, "length 0 / -1 slice convention");
    }
    std::vector<Partial> parts{std::move(p)};
    merge(rep, parts);
}

void tz_case(const NatString& s, Partial& p) {
    ++p.cases;
    const NatString direct = t_z(s);
    const NatString via = pinch_both(knead(pinch_both(s)));
    if (direct != via) p.fail(0, std::nullopt, cat("T_Z", str(s), " = ", str(direct), " but conjugated knead gives ", str(via)));
    const BinString rb = rotate_bin(sb(s));
    if (rb != sb(direct)) p.fail(0, std::nullopt, cat("rotate_bin(sb", str(s), ") = ", rb, " but sb(T_Z) = ", sb(direct)));
    if (necklace_of(rb) != necklace_of(sb(s))) p.fail(0, std::nullopt, cat("rotation leaves the necklace of ", sb(s)));
}

void suite_tz_knead(VerificationReport& rep, const SweepBounds& b) {
    if (b.delta_max == 0) return;
    Partial p;
    std::mt19937_64 rng(b.seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t n = 0; n < b.random_samples; ++n) {
        NatString s(std::uniform_int_distribution<std::size_t>(2, 12)(rng));
        for (auto& q : s) q = std::uniform_int_distribution<int>(1, 9)(rng);
        try {
            tz_case(s, p);
        } catch (const std::exception& e) {
            p.fail(0, std::nullopt, cat(str(s), ": exception: ", e.what()));
        }
    }
    for (std::size_t len = 2; len <= 6; ++len) {
        for (long long first = 1; first <= 4; ++first) {
            for_each_string(len, 4, first, [&](const NatString& s) { tz_case(s, p); });
        }
    }
    std::vector<Partial> parts{std::move(p)};
    merge(rep, parts);
}

using Suite = void (*)(VerificationReport&, const SweepBounds&);

const std::vector<std::pair<std::string, Suite>>& registry() {
    static const std::vector<std::pair<std::string, Suite>> table = {
        {"rotation", suite_rotation},
        {"xi_diagram_plus", suite_xi_plus},
        {"xi_diagram_minus", suite_xi_minus},
        {"formfrombeads", suite_formfrombeads},
        {"reductionrelation", suite_reductionrelation},
        {"firstcoefficient", suite_firstcoefficient},
        {"reversal", suite_reversal},
        {"mu_fiber", suite_mu_fiber},
        {"primitivity", suite_primitivity},
        {"weightparity", suite_weightparity},
        {"zcaliber", suite_zcaliber},
        {"denjoy", suite_denjoy},
        {"lgz", suite_lgz},
        {"continuant_identities", suite_continuant_identities},
        {"tz_knead", suite_tz_knead},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out;
        for (const auto& [id, fn] : registry()) out.push_back(id);
        return out;
    }();
    return ids;
}

VerificationReport verify(std::string_view theorem_id, long long delta_max, unsigned jobs) {
    SweepBounds bounds;
    bounds.delta_max = delta_max;
    bounds.jobs = jobs;
    return verify(theorem_id, bounds);
}

VerificationReport verify(std::string_view theorem_id, const SweepBounds& bounds) {
    if (bounds.delta_max < 0) throw DomainError("delta_max must be nonnegative");
    for (const auto& [id, fn] : registry()) {
        if (id != theorem_id) continue;
        VerificationReport rep;
        rep.theorem_id = id;
        rep.delta_min = 2;
        rep.delta_max = bounds.delta_max;
        fn(rep, bounds);
        std::stable_sort(rep.failures.begin(), rep.failures.end(),
                         [](const Counterexample& l, const Counterexample& r) {
                             if (l.delta != r.delta) return l.delta < r.delta;
                             return l.form < r.form;
                         });
        return rep;
    }
    throw DomainError("unknown suite '" + std::string(theorem_id) + "'");
}

}  // namespace zred
