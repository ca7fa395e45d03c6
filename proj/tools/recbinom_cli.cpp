// Command-line front end for the recbinom library.
//
// Subcommands:
//   eval            evaluate one family at a single point
//   verify          sweep a grid, check closed forms against direct summation
//   table           sweep a grid, print exact and floating-point values
//   scan-stability  sweep a grid, print rounding-error and conditioning data
//
// Exit codes: 0 success / all checks pass, 1 verification failure or
// runtime error, 2 invalid parameters or malformed input.

#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <recbinom/recbinom.hpp>

namespace {

using recbinom::Rational;
using recbinom::SumParams;

// ---------------------------------------------------------------------------
// Formatting helpers.  All output must be byte-deterministic, so doubles are
// rendered with std::to_chars (shortest round-trip form) and rationals with
// Rational::str().
// ---------------------------------------------------------------------------

std::string format_double(double value) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, result.ptr);
}

enum class Format { text, json, csv };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::text;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw std::invalid_argument("unknown output format: " + name);
}

// One output cell: a key (for JSON), a rendered value, and whether the value
// is quoted in JSON.  `raw` values are numbers, `null`, or booleans.
struct Field {
    std::string key;
    std::string value;
    bool quoted = false;
};

Field int_field(std::string key, long long value) {
    return {std::move(key), std::to_string(value), false};
}

Field str_field(std::string key, std::string value) {
    return {std::move(key), std::move(value), true};
}

Field double_field(std::string key, double value) {
    // Non-finite values are not valid JSON numbers; render them as strings.
    std::string text = format_double(value);
    return {std::move(key), std::move(text), !std::isfinite(value)};
}

using Row = std::vector<Field>;

void emit_json_object(std::ostream& out, const Row& row, int indent) {
    std::string pad(static_cast<size_t>(indent), ' ');
    out << pad << "{";
    for (size_t i = 0; i < row.size(); ++i) {
        if (i != 0) out << ", ";
        out << "\"" << row[i].key << "\": ";
        if (row[i].quoted) {
            out << "\"" << row[i].value << "\"";
        } else {
            out << row[i].value;
        }
    }
    out << "}";
}

void emit_rows(std::ostream& out, Format format, const std::string& command,
               const std::vector<Row>& rows, const std::vector<Field>& summary) {
    switch (format) {
    case Format::csv: {
        if (!rows.empty()) {
            for (size_t i = 0; i < rows.front().size(); ++i) {
                if (i != 0) out << ",";
                out << rows.front()[i].key;
            }
            out << "\n";
        }
        for (const Row& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i != 0) out << ",";
                out << row[i].value;
            }
            out << "\n";
        }
        // The summary goes to stderr so stdout stays pure CSV.
        if (!summary.empty()) {
            for (size_t i = 0; i < summary.size(); ++i) {
                if (i != 0) std::cerr << " ";
                std::cerr << summary[i].key << "=" << summary[i].value;
            }
            std::cerr << "\n";
        }
        break;
    }
    case Format::json: {
        out << "{\"command\": \"" << command << "\", \"rows\": [";
        for (size_t i = 0; i < rows.size(); ++i) {
            out << (i == 0 ? "\n" : ",\n");
            emit_json_object(out, rows[i], 2);
        }
        if (!rows.empty()) out << "\n";
        out << "]";
        if (!summary.empty()) {
            out << ", \"summary\": ";
            emit_json_object(out, summary, 0);
        }
        out << "}\n";
        break;
    }
    case Format::text: {
        if (!rows.empty()) {
            for (size_t i = 0; i < rows.front().size(); ++i) {
                if (i != 0) out << " ";
                out << rows.front()[i].key;
            }
            out << "\n";
        }
        for (const Row& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i != 0) out << " ";
                out << row[i].value;
            }
            out << "\n";
        }
        break;
    }
    }
}

// ---------------------------------------------------------------------------
// Family dispatch.
// ---------------------------------------------------------------------------

enum class Family { frisch, parametric, weighted, lifted };

Family parse_family(const std::string& name) {
    if (name == "frisch") return Family::frisch;
    if (name == "parametric") return Family::parametric;
    if (name == "weighted") return Family::weighted;
    if (name == "lifted") return Family::lifted;
    throw std::invalid_argument("unknown family: " + name +
                                " (expected frisch, parametric, weighted, or lifted)");
}

const char* family_name(Family family) {
    switch (family) {
    case Family::frisch: return "frisch";
    case Family::parametric: return "parametric";
    case Family::weighted: return "weighted";
    case Family::lifted: return "lifted";
    }
    return "?";
}

// m is meaningful only for the operator-weighted and harmonic-lift families.
bool family_uses_m(Family family) {
    return family == Family::weighted || family == Family::lifted;
}

// Closed-form value of the requested family at one point.
Rational closed_value(Family family, const SumParams& p, const Rational& x, unsigned m) {
    switch (family) {
    case Family::frisch: return recbinom::frisch(p);
    case Family::parametric: return recbinom::eval_decomposition(p, x);
    case Family::weighted: return recbinom::weighted_closed(p, x, m);
    case Family::lifted: return recbinom::lifted_closed(p, x, m);
    }
    throw std::logic_error("unreachable");
}

// Direct-summation oracle for the same point.
Rational direct_value(Family family, const SumParams& p, const Rational& x, unsigned m) {
    switch (family) {
    case Family::frisch: return recbinom::direct_sum(p);
    case Family::parametric: return recbinom::direct_parametric(p, x);
    case Family::weighted: return recbinom::direct_weighted(p, x, m);
    case Family::lifted: return recbinom::direct_lifted(p, x, m);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Grid iteration.
// ---------------------------------------------------------------------------

struct Range {
    long long lo = 0;
    long long hi = 0;
};

Range parse_range(const std::string& text) {
    auto parse_int = [&](std::string_view part) {
        long long value = 0;
        auto result = std::from_chars(part.data(), part.data() + part.size(), value);
        if (result.ec != std::errc() || result.ptr != part.data() + part.size()) {
            throw std::invalid_argument("malformed range: " + text +
                                        " (expected LO..HI with integer bounds)");
        }
        return value;
    };
    Range range;
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        range.lo = range.hi = parse_int(text);
    } else {
        range.lo = parse_int(std::string_view(text).substr(0, dots));
        range.hi = parse_int(std::string_view(text).substr(dots + 2));
    }
    if (range.lo > range.hi) {
        throw std::invalid_argument("empty range: " + text);
    }
    return range;
}

// Deterministic rational draw shared by seeded sweeps: numerator in [-50, 50],
// denominator in [1, 50].  std::mt19937_64 with plain modulo keeps the stream
// identical across platforms (uniform_int_distribution is not portable).
Rational draw_rational(std::mt19937_64& rng) {
    long long num = static_cast<long long>(rng() % 101) - 50;
    long long den = static_cast<long long>(rng() % 50) + 1;
    return Rational(num, den);
}

// Per-point x policy for sweep modes: an explicit -x wins, then a seeded
// random draw, then the default x = 1.
struct XSource {
    std::optional<Rational> fixed;
    std::optional<std::mt19937_64> rng;

    Rational next() {
        if (fixed) return *fixed;
        if (rng) return draw_rational(*rng);
        return Rational(1);
    }
};

// Calls fn(p) for each valid (n, b, c) in lexicographic order; combinations
// with c > b are skipped rather than rejected.
template <typename Fn>
void for_each_point(const Range& nr, const Range& br, const Range& cr, Fn&& fn) {
    if (nr.lo < 0) throw std::invalid_argument("invalid n range: requires n >= 0");
    if (cr.lo < 1) throw std::invalid_argument("invalid c range: requires c > 0");
    if (br.lo < 1) throw std::invalid_argument("invalid b range: requires b >= c >= 1");
    for (long long n = nr.lo; n <= nr.hi; ++n) {
        for (long long b = br.lo; b <= br.hi; ++b) {
            for (long long c = cr.lo; c <= cr.hi; ++c) {
                if (c > b) continue;
                fn(SumParams::make(n, b, c));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Subcommand options and implementations.
// ---------------------------------------------------------------------------

struct Options {
    std::string output = "text";
    std::string family;
    long long n = 0;
    long long b = 0;
    long long c = 0;
    std::string x_text = "1";
    unsigned m = 0;
    std::string n_range;
    std::string b_range;
    std::string c_range;
    std::uint64_t seed = 0;
    bool have_x = false;
    bool have_seed = false;
};

int run_eval(const Options& opt) {
    Format format = parse_format(opt.output);
    Family family = parse_family(opt.family);
    SumParams p = SumParams::make(opt.n, opt.b, opt.c);
    Rational x = family == Family::frisch ? Rational(1) : Rational::parse(opt.x_text);
    unsigned m = family_uses_m(family) ? opt.m : 0;

    Rational exact = closed_value(family, p, x, m);
    double approx = exact.to_double();

    switch (format) {
    case Format::text:
        std::cout << exact.str() << "\n" << format_double(approx) << "\n";
        break;
    case Format::csv: {
        Row row{int_field("n", p.n), int_field("b", p.b), int_field("c", p.c),
                str_field("x", x.str()), int_field("m", m),
                str_field("family", family_name(family)),
                str_field("exact", exact.str()), double_field("float", approx)};
        emit_rows(std::cout, format, "eval", {row}, {});
        break;
    }
    case Format::json: {
        std::ostringstream out;
        out << "{\"command\": \"eval\", \"family\": \"" << family_name(family)
            << "\", \"n\": " << p.n << ", \"b\": " << p.b << ", \"c\": " << p.c
            << ", \"x\": \"" << x.str() << "\", \"m\": " << m
            << ", \"exact\": \"" << exact.str() << "\"";
        out << ", \"float\": ";
        if (std::isfinite(approx)) {
            out << format_double(approx);
        } else {
            out << "\"" << format_double(approx) << "\"";
        }
        if (family == Family::parametric) {
            recbinom::Decomposition dec = recbinom::beta_decomposition(p);
            out << ", \"decomposition\": {\"prefactor1\": \"" << dec.prefactor1.str()
                << "\", \"series1\": " << dec.series1.with_argument(x).to_json()
                << ", \"prefactor2\": \"" << dec.prefactor2.str() << "\", \"series2\": ";
            if (dec.series2) {
                out << dec.series2->with_argument(x).to_json();
            } else {
                out << "null";
            }
            out << "}";
        }
        out << "}\n";
        std::cout << out.str();
        break;
    }
    }
    return 0;
}

int run_verify(const Options& opt) {
    Format format = parse_format(opt.output);
    Family family = parse_family(opt.family);
    unsigned m = family_uses_m(family) ? opt.m : 0;

    XSource xs;
    if (opt.have_x) xs.fixed = Rational::parse(opt.x_text);
    else if (opt.have_seed) xs.rng.emplace(opt.seed);

    std::vector<Row> rows;
    long long failures = 0;
    for_each_point(parse_range(opt.n_range), parse_range(opt.b_range),
                   parse_range(opt.c_range), [&](const SumParams& p) {
        Rational x = family == Family::frisch ? Rational(1) : xs.next();
        Rational closed = closed_value(family, p, x, m);
        Rational oracle = direct_value(family, p, x, m);
        bool pass = closed == oracle;
        if (family == Family::weighted) {
            // Third path: expand the base sum as a polynomial in x and apply
            // the Euler operator coefficientwise.
            recbinom::SumPolynomial poly = recbinom::polynomial_coeffs(p);
            pass = pass && recbinom::apply_x_ddx(poly, m).eval(x) == closed;
        }
        if (!pass) ++failures;
        rows.push_back(Row{int_field("n", p.n), int_field("b", p.b), int_field("c", p.c),
                           str_field("x", x.str()), int_field("m", m),
                           str_field("family", family_name(family)),
                           str_field("closed", closed.str()),
                           str_field("oracle", oracle.str()),
                           str_field("status", pass ? "PASS" : "FAIL")});
    });

    long long total = static_cast<long long>(rows.size());
    switch (format) {
    case Format::text:
        for (const Row& row : rows) {
            std::cout << row.back().value;  // PASS / FAIL
            for (size_t i = 0; i + 1 < row.size(); ++i) {
                if (row[i].key == "closed" || row[i].key == "oracle") continue;
                std::cout << " " << row[i].key << "=" << row[i].value;
            }
            std::cout << "\n";
        }
        if (failures == 0) {
            std::cout << "all " << total << " points PASS\n";
        } else {
            std::cout << failures << " of " << total << " points FAIL\n";
        }
        break;
    case Format::csv:
    case Format::json: {
        std::vector<Field> summary{int_field("points", total), int_field("failures", failures)};
        emit_rows(std::cout, format, "verify", rows, summary);
        break;
    }
    }
    return failures == 0 ? 0 : 1;
}

int run_table(const Options& opt) {
    Format format = parse_format(opt.output);
    Family family = parse_family(opt.family);
    unsigned m = family_uses_m(family) ? opt.m : 0;

    XSource xs;
    if (opt.have_x) xs.fixed = Rational::parse(opt.x_text);
    else if (opt.have_seed) xs.rng.emplace(opt.seed);

    std::vector<Row> rows;
    for_each_point(parse_range(opt.n_range), parse_range(opt.b_range),
                   parse_range(opt.c_range), [&](const SumParams& p) {
        Rational x = family == Family::frisch ? Rational(1) : xs.next();
        Rational exact = closed_value(family, p, x, m);
        rows.push_back(Row{int_field("n", p.n), int_field("b", p.b), int_field("c", p.c),
                           str_field("x", x.str()), int_field("m", m),
                           str_field("family", family_name(family)),
                           str_field("exact", exact.str()),
                           double_field("float", exact.to_double())});
    });
    emit_rows(std::cout, format, "table", rows, {});
    return 0;
}

int run_scan(const Options& opt) {
    Format format = parse_format(opt.output);

    XSource xs;
    if (opt.have_x) xs.fixed = Rational::parse(opt.x_text);
    else if (opt.have_seed) xs.rng.emplace(opt.seed);

    std::vector<Row> rows;
    for_each_point(parse_range(opt.n_range), parse_range(opt.b_range),
                   parse_range(opt.c_range), [&](const SumParams& p) {
        Rational x = xs.next();
        recbinom::StabilityReport report = recbinom::stability_report(p, x);
        Row row{int_field("n", p.n), int_field("b", p.b), int_field("c", p.c),
                str_field("x", x.str()), int_field("m", 0),
                str_field("family", x == Rational(1) ? "frisch" : "parametric"),
                str_field("exact", report.exact.str()),
                double_field("float", report.float_direct),
                double_field("relerr_direct", report.relerr_direct),
                double_field("relerr_closed", report.relerr_closed)};
        if (report.condition) {
            row.push_back(str_field("condition", report.condition->str()));
        } else {
            // An exactly-zero sum has unbounded relative conditioning.
            row.push_back(format == Format::json ? Field{"condition", "null", false}
                                                 : str_field("condition", "inf"));
        }
        rows.push_back(std::move(row));
    });
    emit_rows(std::cout, format, "scan-stability", rows, {});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact evaluation and verification of reciprocal binomial sums"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read defaults from an INI/TOML file");

    Options opt;
    app.add_option("--output", opt.output, "Output format: text, json, or csv")
        ->envname("RECBINOM_OUTPUT")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", opt.family,
                        "Sum family: frisch, parametric, weighted, or lifted")
            ->required();
    };
    auto add_point = [&](CLI::App* sub) {
        sub->add_option("-n,--n", opt.n, "Number of terms parameter n (n >= 0)")->required();
        sub->add_option("-b,--b", opt.b, "Binomial parameter b (b >= c)")->required();
        sub->add_option("-c,--c", opt.c, "Binomial parameter c (c >= 1)")->required();
    };
    auto add_xm = [&](CLI::App* sub, CLI::Option** x_opt, CLI::Option** seed_opt) {
        *x_opt = sub->add_option("-x,--x", opt.x_text,
                                 "Argument x as an integer or fraction p/q (default 1)");
        sub->add_option("-m,--m", opt.m, "Operator or lift order m (default 0)");
        if (seed_opt != nullptr) {
            *seed_opt = sub->add_option("--seed", opt.seed,
                                        "Seed for per-point random x draws");
        }
    };
    auto add_ranges = [&](CLI::App* sub) {
        sub->add_option("--n-range", opt.n_range, "Inclusive n range LO..HI")->required();
        sub->add_option("--b-range", opt.b_range, "Inclusive b range LO..HI")->required();
        sub->add_option("--c-range", opt.c_range, "Inclusive c range LO..HI")->required();
    };

    CLI::Option* x_used = nullptr;
    CLI::Option* seed_used = nullptr;

    CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one family at a single point");
    add_family(eval_cmd);
    add_point(eval_cmd);
    {
        CLI::Option* x_opt = nullptr;
        add_xm(eval_cmd, &x_opt, nullptr);
    }

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Check closed forms against direct summation on a grid");
    add_family(verify_cmd);
    add_ranges(verify_cmd);
    {
        CLI::Option* x_opt = nullptr;
        CLI::Option* seed_opt = nullptr;
        add_xm(verify_cmd, &x_opt, &seed_opt);
        verify_cmd->callback([&app, x_opt, seed_opt, &x_used, &seed_used]() {
            (void)app;
            x_used = x_opt;
            seed_used = seed_opt;
        });
    }

    CLI::App* table_cmd = app.add_subcommand("table", "Print exact and float values on a grid");
    add_family(table_cmd);
    add_ranges(table_cmd);
    {
        CLI::Option* x_opt = nullptr;
        CLI::Option* seed_opt = nullptr;
        add_xm(table_cmd, &x_opt, &seed_opt);
        table_cmd->callback([x_opt, seed_opt, &x_used, &seed_used]() {
            x_used = x_opt;
            seed_used = seed_opt;
        });
    }

    CLI::App* scan_cmd =
        app.add_subcommand("scan-stability", "Report rounding error and conditioning on a grid");
    add_ranges(scan_cmd);
    {
        CLI::Option* x_opt = nullptr;
        CLI::Option* seed_opt = nullptr;
        add_xm(scan_cmd, &x_opt, &seed_opt);
        scan_cmd->callback([x_opt, seed_opt, &x_used, &seed_used]() {
            x_used = x_opt;
            seed_used = seed_opt;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    opt.have_x = x_used != nullptr && x_used->count() > 0;
    opt.have_seed = seed_used != nullptr && seed_used->count() > 0;

    try {
        if (*eval_cmd) return run_eval(opt);
        if (*verify_cmd) return run_verify(opt);
        if (*table_cmd) return run_table(opt);
        if (*scan_cmd) return run_scan(opt);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
