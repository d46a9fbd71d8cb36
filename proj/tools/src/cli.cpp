#include "zred_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "zred/json.hpp"
#include "zred/maps.hpp"
#include "zred/oracle.hpp"
#include "zred/reduction.hpp"

namespace zred::cli {
namespace {

// Malformed command-line input; reported as a usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Integer arg_integer(const std::string& text, const char* what) {
    try {
        return parse_integer(text);
    } catch (const DomainError&) {
        throw UsageError(std::string("malformed ") + what + ": '" + text + "'");
    }
}

Form arg_form(const std::vector<std::string>& coeffs) {
    if (coeffs.size() != 3) throw UsageError("expected three coefficients A B C");
    return Form{arg_integer(coeffs[0], "coefficient"), arg_integer(coeffs[1], "coefficient"),
                arg_integer(coeffs[2], "coefficient")};
}

NatString arg_nat_string(const std::string& text) {
    try {
        return parse_nat_string(text);
    } catch (const DomainError&) {
        throw UsageError("malformed natural string: '" + text + "' (expected q1,q2,...)");
    }
}

unsigned default_jobs() {
    if (const char* env = std::getenv("ZRED_JOBS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::string form_text(const Form& f) {
    return to_string(f);
}

std::string forms_text(const std::vector<Form>& forms) {
    std::string out;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (i) out += ' ';
        out += form_text(forms[i]);
    }
    return out;
}

// State shared by the subcommand callbacks.
struct Session {
    std::ostream& out;
    bool json = false;
    int status = ok;

    void emit(const Json& j, const std::string& text) {
        if (json) {
            out << j.dump() << '\n';
        } else {
            out << text << '\n';
        }
    }
};

void add_form_command(CLI::App& app, const std::string& name, const std::string& help,
                      std::function<void(const Form&)> action) {
    auto* cmd = app.add_subcommand(name, help);
    auto coeffs = std::make_shared<std::vector<std::string>>();
    cmd->add_option("coefficients", *coeffs, "A B C")->expected(3)->required();
    cmd->callback([coeffs, action] { action(arg_form(*coeffs)); });
}

void setup(CLI::App& app, Session& s) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", s.json, "Print JSON instead of text");

    // pell
    {
        auto* cmd = app.add_subcommand("pell", "Fundamental solution of |t^2 - D u^2| = 4");
        auto delta = std::make_shared<std::string>();
        cmd->add_option("delta", *delta, "Discriminant D")->required();
        cmd->callback([&s, delta] {
            const PellSolution p = fundamental_solution(arg_integer(*delta, "discriminant"));
            s.out << pell_json(p).dump() << '\n';
        });
    }

    // cf
    {
        auto* cmd = app.add_subcommand("cf", "Continued fraction of num/den with a chosen length parity");
        auto fraction = std::make_shared<std::string>();
        auto parity = std::make_shared<std::string>();
        cmd->add_option("fraction", *fraction, "num/den")->required();
        cmd->add_option("--parity", *parity, "odd|even")->required()->check(CLI::IsMember({"odd", "even"}));
        cmd->callback([&s, fraction, parity] {
            const auto slash = fraction->find('/');
            if (slash == std::string::npos) throw UsageError("expected num/den, got '" + *fraction + "'");
            const Integer num = arg_integer(fraction->substr(0, slash), "numerator");
            const Integer den = arg_integer(fraction->substr(slash + 1), "denominator");
            const NatString q = cf_expand(num, den, *parity == "odd" ? Parity::odd : Parity::even);
            s.emit(nat_string_json(q), to_string(q));
        });
    }

    // surd-cf
    {
        auto* cmd = app.add_subcommand("surd-cf", "Expansion of (P + sqrt(D)) / Q");
        auto p = std::make_shared<std::string>();
        auto q = std::make_shared<std::string>();
        auto delta = std::make_shared<std::string>();
        auto kind = std::make_shared<std::string>("reg");
        auto terms = std::make_shared<std::size_t>(20);
        cmd->add_option("--p", *p, "P")->required();
        cmd->add_option("--q", *q, "Q")->required();
        cmd->add_option("--delta", *delta, "D")->required();
        cmd->add_option("--kind", *kind, "reg|neg|denjoy")->check(CLI::IsMember({"reg", "neg", "denjoy"}));
        cmd->add_option("--terms", *terms, "Number of quotients");
        cmd->callback([&s, p, q, delta, kind, terms] {
            const QuadraticSurd x(arg_integer(*p, "P"), arg_integer(*q, "Q"), arg_integer(*delta, "D"));
            switch (parse_expansion_kind(*kind)) {
                case ExpansionKind::regular: {
                    const NatString r = reg_cf_surd(x, *terms);
                    s.emit(nat_string_json(r), to_string(r));
                    break;
                }
                case ExpansionKind::negative: {
                    const NatString r = neg_cf_surd(x, *terms);
                    s.emit(nat_string_json(r), to_string(r));
                    break;
                }
                case ExpansionKind::denjoy: {
                    const BinString r = denjoy_surd(x, *terms);
                    s.emit(bin_string_json(r), r.bits());
                    break;
                }
            }
        });
    }

    // reduce
    {
        auto* cmd = app.add_subcommand("reduce", "Orbit of a form under R_Z or R_G, split into pre-period and cycle");
        auto op = std::make_shared<std::string>("z");
        auto coeffs = std::make_shared<std::vector<std::string>>();
        cmd->add_option("--op", *op, "z|g")->check(CLI::IsMember({"z", "g"}));
        cmd->add_option("coefficients", *coeffs, "A B C")->expected(3)->required();
        cmd->callback([&s, op, coeffs] {
            const ReductionCycle c = orbit_to_cycle(arg_form(*coeffs), parse_reduction_operator(*op));
            s.emit(cycle_json(c), "pre-period: " + forms_text(c.pre_period) + "\ncycle: " + forms_text(c.cycle));
        });
    }

    // cycles
    {
        auto* cmd = app.add_subcommand("cycles", "All reduced cycles of a discriminant");
        auto delta = std::make_shared<std::string>();
        auto op = std::make_shared<std::string>("z");
        cmd->add_option("--delta", *delta, "Discriminant")->required();
        cmd->add_option("--op", *op, "z|g")->check(CLI::IsMember({"z", "g"}));
        cmd->callback([&s, delta, op] {
            const auto all = cycles(arg_integer(*delta, "discriminant"), parse_reduction_operator(*op));
            Json j = Json::array();
            std::string text;
            for (const ReductionCycle& c : all) {
                j.push_back(cycle_json(c)["cycle"]);
                if (!text.empty()) text += '\n';
                text += forms_text(c.cycle);
            }
            s.emit(j, text);
        });
    }

    add_form_command(app, "caliber", "Length of the Zagier cycle of the form's class", [&s](const Form& f) {
        const std::size_t k = z_caliber(f);
        s.emit(Json(k), std::to_string(k));
    });
    add_form_command(app, "gamma", "Dirichlet string of a form in G+", [&s](const Form& f) {
        const NatString q = gamma(f);
        s.emit(nat_string_json(q), to_string(q));
    });
    add_form_command(app, "beta", "Bead sequence of a Z-reduced form", [&s](const Form& f) {
        const NatString q = beta(f);
        s.emit(nat_string_json(q), to_string(q));
    });
    add_form_command(app, "sigma", "Binary string of a Z-reduced form", [&s](const Form& f) {
        const BinString b = sigma(f);
        s.emit(bin_string_json(b), b.bits());
    });
    add_form_command(app, "mu", "Z-reduced image of a G-reduced form", [&s](const Form& f) {
        const Form g = mu(f);
        s.emit(form_json(g), form_text(g));
    });
    add_form_command(app, "denjoy-period", "Minimal Denjoy period attached to a Z-reduced form",
                     [&s](const Form& f) {
                         const BinString b = denjoy_period(f);
                         s.emit(bin_string_json(b), b.bits());
                     });

    for (const char* name : {"tau", "xi"}) {
        const bool is_tau = std::string(name) == "tau";
        auto* cmd = app.add_subcommand(name, is_tau ? "Z-reduced form with the given bead sequence"
                                                    : "G+ form with the given Dirichlet string");
        auto text = std::make_shared<std::string>();
        cmd->add_option("string", *text, "q1,q2,...")->required();
        cmd->callback([&s, text, is_tau] {
            const NatString q = arg_nat_string(*text);
            const Form f = is_tau ? tau(q) : xi(q);
            s.emit(form_json(f), form_text(f));
        });
    }

    // verify
    {
        auto* cmd = app.add_subcommand("verify", "Run oracle suites");
        auto suite = std::make_shared<std::string>("all");
        auto delta_max = std::make_shared<long long>(300);
        auto jobs = std::make_shared<unsigned>(default_jobs());
        cmd->add_option("--suite", *suite, "Suite id or 'all'");
        cmd->add_option("--delta-max", *delta_max, "Largest discriminant")->check(CLI::NonNegativeNumber);
        cmd->add_option("--jobs", *jobs, "Worker threads (default: ZRED_JOBS or 1)")->check(CLI::PositiveNumber);
        cmd->callback([&s, suite, delta_max, jobs] {
            std::vector<std::string> ids;
            if (*suite == "all") {
                ids = suite_ids();
            } else {
                ids.push_back(*suite);
            }
            Json reports = Json::array();
            bool all_passed = true;
            for (const std::string& id : ids) {
                const VerificationReport r = verify(id, *delta_max, *jobs);
                all_passed = all_passed && r.passed();
                if (s.json) {
                    reports.push_back(report_json(r));
                    continue;
                }
                s.out << r.theorem_id << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.cases_checked
                      << " cases, delta <= " << r.delta_max << ")\n";
                const std::size_t shown = std::min<std::size_t>(r.failures.size(), 5);
                for (std::size_t i = 0; i < shown; ++i) {
                    const Counterexample& c = r.failures[i];
                    s.out << "  delta " << c.delta;
                    if (c.form) s.out << ' ' << *c.form;
                    s.out << ": " << c.detail << '\n';
                }
                if (r.failures.size() > shown) s.out << "  ... " << r.failures.size() - shown << " more\n";
            }
            if (s.json) s.out << reports.dump() << '\n';
            if (!all_passed) s.status = check_failed;
        });
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reduction theory of indefinite binary quadratic forms", "zred"};
    Session session{out};
    setup(app, session);

    // CLI11 consumes the vector from the back
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return precondition;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return internal;
    }
    return session.status;
}

}  // namespace zred::cli
