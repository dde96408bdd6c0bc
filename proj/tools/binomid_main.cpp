#include "binomid/catalog.hpp"
#include "binomid/engine.hpp"
#include "binomid/exact.hpp"
#include "binomid/parser.hpp"
#include "binomid/printer.hpp"
#include "binomid/special.hpp"

#include "CLI11.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace binomid;

bool is_ident_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

// "lo..hi", either side optionally negative.
Interval parse_interval(const std::string& text) {
    const std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
        throw std::invalid_argument("expected 'lo..hi', got '" + text + "'");
    }
    Interval iv;
    iv.lo = parse_bigint(text.substr(0, dots));
    iv.hi = parse_bigint(text.substr(dots + 2));
    return iv;
}

// "key=lo..hi"
std::pair<std::string, Interval> parse_range_arg(const std::string& text) {
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("expected 'name=lo..hi', got '" + text + "'");
    }
    return {text.substr(0, eq), parse_interval(text.substr(eq + 1))};
}

// "name=value"
std::pair<std::string, BigInt> parse_bind_arg(const std::string& text) {
    const std::size_t eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw std::invalid_argument("expected 'name=value', got '" + text + "'");
    }
    return {text.substr(0, eq), parse_bigint(text.substr(eq + 1))};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Default sweep for identities loaded from a file: a small window above each
// parameter's domain minimum.
RangeSpec file_default_ranges(const Identity& id) {
    RangeSpec spec;
    for (const ParamDecl& p : id.params) {
        spec.params[p.name] = Interval{p.min_value, p.min_value + 10};
    }
    return spec;
}

struct VerifyConfig {
    std::vector<std::string> names;
    bool all = false;
    std::string file;
    std::string strategy = "both";
    std::vector<std::string> ranges;
    std::string format = "text";
    unsigned jobs = 1;
};

int run_verify(const VerifyConfig& cfg) {
    Strategy strategy = Strategy::Both;
    if (cfg.strategy == "symbolic") strategy = Strategy::Symbolic;
    if (cfg.strategy == "points") strategy = Strategy::Points;

    // Resolve the identity list fully before doing any work so that a bad
    // name fails without partial output.
    std::vector<Identity> from_file;
    std::vector<const Identity*> selected;
    if (!cfg.file.empty()) {
        from_file = parse_identity_file(read_file(cfg.file));
        if (cfg.names.empty()) {
            for (const Identity& id : from_file) selected.push_back(&id);
        } else {
            for (const std::string& name : cfg.names) {
                const Identity* found = nullptr;
                for (const Identity& id : from_file) {
                    if (id.name == name) found = &id;
                }
                if (!found) {
                    throw std::invalid_argument("no identity '" + name + "' in " + cfg.file);
                }
                selected.push_back(found);
            }
        }
        if (selected.empty()) throw std::invalid_argument(cfg.file + " declares no identities");
    } else if (cfg.all) {
        for (const Identity& id : builtin_catalog()) selected.push_back(&id);
    } else {
        if (cfg.names.empty()) {
            throw std::invalid_argument("nothing to verify: pass identity names, --all, or --file");
        }
        for (const std::string& name : cfg.names) {
            const Identity* found = find_identity(name);
            if (!found) throw std::invalid_argument("unknown identity '" + name + "'");
            selected.push_back(found);
        }
    }

    std::map<std::string, Interval> overrides;
    for (const std::string& arg : cfg.ranges) {
        auto [key, iv] = parse_range_arg(arg);
        overrides[key] = iv;
    }

    std::vector<VerificationReport> reports;
    for (const Identity* id : selected) {
        RangeSpec spec =
            cfg.file.empty() ? catalog_default_ranges(id->name) : file_default_ranges(*id);
        for (const auto& [key, iv] : overrides) {
            if (key == "x") {
                spec.grid_extension[Var::X] = iv;
            } else if (key == "y") {
                spec.grid_extension[Var::Y] = iv;
            } else {
                spec.params[key] = iv;
            }
        }
        VerificationReport report = verify_range(*id, spec, strategy, cfg.jobs);
        std::cout << (cfg.format == "machine" ? render_machine(report) : render_text(report));
        reports.push_back(std::move(report));
    }
    std::cout.flush();
    return exit_code_for(reports);
}

struct ExpandConfig {
    std::string expr;
    std::vector<std::string> binds;
};

int run_expand(const ExpandConfig& cfg) {
    // Accept an optional "label:" prefix naming the expression.
    std::string text = cfg.expr;
    const std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        std::string label = text.substr(0, colon);
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) {
            label.pop_back();
        }
        std::size_t start = 0;
        while (start < label.size() && std::isspace(static_cast<unsigned char>(label[start]))) {
            ++start;
        }
        label = label.substr(start);
        if (is_ident_name(label)) text = text.substr(colon + 1);
    }

    Env env;
    for (const std::string& arg : cfg.binds) {
        auto [name, value] = parse_bind_arg(arg);
        env[name] = value;
    }
    const ExprPtr e = parse_expr(text);
    const Polynomial p = elaborate(*e, env);
    std::cout << p.str() << "\n";
    return 0;
}

struct TableConfig {
    std::string family = "S";
    std::string n_range = "0..10";
    std::string x_range = "-10..10";
    std::string format = "text";
};

int run_table(const TableConfig& cfg) {
    const Interval n_iv = parse_interval(cfg.n_range);
    const Interval x_iv = parse_interval(cfg.x_range);
    if (n_iv.lo < 0) throw std::invalid_argument("table rows need n >= 0");
    if (n_iv.hi < n_iv.lo || x_iv.hi < x_iv.lo) {
        throw std::invalid_argument("empty table range");
    }
    const long n_lo = to_long_checked(n_iv.lo, "table n bound");
    const long n_hi = to_long_checked(n_iv.hi, "table n bound");
    const long x_lo = to_long_checked(x_iv.lo, "table x bound");
    const long x_hi = to_long_checked(x_iv.hi, "table x bound");
    if (n_hi - n_lo > 1000 || x_hi - x_lo > 10000) {
        throw std::invalid_argument("table range too large");
    }

    std::vector<std::vector<std::string>> cells;
    for (long n = n_lo; n <= n_hi; ++n) {
        const Polynomial s = s_poly(n);
        std::vector<std::string> row;
        for (long x = x_lo; x <= x_hi; ++x) {
            const Rational value = s.eval(Rational(x), Rational(0));
            row.push_back(to_string(to_integer(value)));
        }
        cells.push_back(std::move(row));
    }

    if (cfg.format == "machine") {
        for (long n = n_lo; n <= n_hi; ++n) {
            for (long x = x_lo; x <= x_hi; ++x) {
                std::cout << "table family=S n=" << n << " x=" << x
                          << " value=" << cells[n - n_lo][x - x_lo] << "\n";
            }
        }
        return 0;
    }

    // Header row of x values, one row per n, columns padded to fit.
    std::vector<std::string> headers;
    std::vector<std::size_t> widths;
    headers.push_back("S_n(x)");
    widths.push_back(headers[0].size());
    for (long x = x_lo; x <= x_hi; ++x) {
        headers.push_back("x=" + std::to_string(x));
        widths.push_back(headers.back().size());
    }
    std::vector<std::string> row_labels;
    for (long n = n_lo; n <= n_hi; ++n) {
        row_labels.push_back("n=" + std::to_string(n));
        widths[0] = std::max(widths[0], row_labels.back().size());
        for (std::size_t j = 0; j < cells[n - n_lo].size(); ++j) {
            widths[j + 1] = std::max(widths[j + 1], cells[n - n_lo][j].size());
        }
    }
    const auto pad = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    for (std::size_t j = 0; j < headers.size(); ++j) {
        std::cout << (j ? "  " : "") << pad(headers[j], widths[j]);
    }
    std::cout << "\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        std::cout << pad(row_labels[i], widths[0]);
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            std::cout << "  " << pad(cells[i][j], widths[j + 1]);
        }
        std::cout << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact two-method verifier for binomial coefficient identities"};
    app.require_subcommand(1);

    VerifyConfig verify_cfg;
    CLI::App* verify = app.add_subcommand("verify", "verify identities over parameter ranges");
    verify->add_option("names", verify_cfg.names, "built-in identity names (or names in --file)");
    verify->add_flag("--all", verify_cfg.all, "verify every built-in identity");
    verify->add_option("--file", verify_cfg.file, "verify identities from a declaration file");
    verify->add_option("--strategy", verify_cfg.strategy, "symbolic, points, or both")
        ->check(CLI::IsMember({"symbolic", "points", "both"}))
        ->capture_default_str();
    verify->add_option("--range", verify_cfg.ranges,
                       "override a parameter range (n=0..9) or grid axis (x=-5..5); repeatable");
    verify->add_option("--format", verify_cfg.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
    verify->add_option("--jobs", verify_cfg.jobs, "worker threads")
        ->check(CLI::Range(1u, 1024u))
        ->capture_default_str();
    verify->callback([&] {
        if (verify_cfg.all && !verify_cfg.names.empty()) {
            throw CLI::ValidationError("verify", "--all conflicts with explicit names");
        }
        if (verify_cfg.all && !verify_cfg.file.empty()) {
            throw CLI::ValidationError("verify", "--all conflicts with --file");
        }
    });

    ExpandConfig expand_cfg;
    CLI::App* expand = app.add_subcommand("expand", "expand an expression to a polynomial in x, y");
    expand->add_option("expr", expand_cfg.expr, "expression, optionally prefixed 'label:'")
        ->required();
    expand->add_option("--bind", expand_cfg.binds, "parameter value (n=3); repeatable");

    TableConfig table_cfg;
    CLI::App* table = app.add_subcommand("table", "print an exact value table of a family");
    table->add_option("family", table_cfg.family, "family name (S)")
        ->check(CLI::IsMember({"S"}))
        ->capture_default_str();
    table->add_option("--n", table_cfg.n_range, "row range lo..hi")->capture_default_str();
    table->add_option("--x", table_cfg.x_range, "column range lo..hi")->capture_default_str();
    table->add_option("--format", table_cfg.format, "text or machine")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(verify_cfg);
        if (expand->parsed()) return run_expand(expand_cfg);
        if (table->parsed()) return run_table(table_cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
