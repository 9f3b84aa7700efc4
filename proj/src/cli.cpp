#include "gbinom/cli.hpp"

#include <optional>

#include "CLI11.hpp"

#include "gbinom/coefficients.hpp"
#include "gbinom/errors.hpp"
#include "gbinom/identities.hpp"

namespace gbinom::cli {

namespace {

struct Config {
    std::string r;
    std::optional<int> k;
    std::optional<int> n;
    std::optional<int> p;
    int n_max = 6;
    int m_max = 2;
    int r_max = 3;
    std::string id;
    std::string method = "genfun";
    std::string basis = "falling";
    std::string format = "json";
};

void emit_table(const CoeffTable& table, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << to_json(table).dump() << '\n';
    } else if (format == "csv") {
        out << "k,value\n";
        for (const auto& [k, v] : table.values)
            out << k << ',' << to_compact_string(v) << '\n';
    } else {
        for (const auto& [k, v] : table.values)
            out << family_name(table.family) << '_' << k << " = " << to_compact_string(v) << '\n';
    }
}

int cmd_coeff(const Config& cfg, std::ostream& out, std::ostream& err)
{
    Composition r = parse_composition(cfg.r);
    auto method = parse_method(cfg.method);
    if (!method) {
        err << "unknown method '" << cfg.method << "'\n";
        return exit_usage;
    }
    if (*method == Method::hyp3f2 && r.m() != 2) {
        err << "method hyp3f2 needs exactly two species, got " << r.m() << '\n';
        return exit_unsupported;
    }

    CoeffTable table{Family::c, r, {}};
    if (cfg.k) {
        if (*cfg.k < 1 || *cfg.k > r.total()) {
            err << "--k must lie in 1.." << r.total() << '\n';
            return exit_usage;
        }
        table.values.emplace(*cfg.k, c_coeff(r, *cfg.k, *method));
    } else {
        table = c_table(r, *method);
    }

    for (const auto& [k, v] : table.values) {
        if (!is_integer(v) || v <= 0) {
            err << "c_" << k << " = " << to_compact_string(v) << " is not a positive integer\n";
            return exit_falsified;
        }
    }

    if (cfg.k) {
        const std::string value = to_compact_string(table.at(*cfg.k));
        if (cfg.format == "json")
            out << nlohmann::json(value).dump() << '\n';
        else if (cfg.format == "csv")
            out << "k,value\n" << *cfg.k << ',' << value << '\n';
        else
            out << value << '\n';
        return exit_ok;
    }
    emit_table(table, cfg.format, out);
    return exit_ok;
}

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err)
{
    auto id = parse_identity(cfg.id);
    if (!id) {
        err << "unknown identity '" << cfg.id << "'; known:";
        for (IdentityId known : all_identities)
            err << ' ' << identity_name(known);
        err << '\n';
        return exit_usage;
    }
    SweepRanges ranges{cfg.n_max, cfg.m_max, cfg.r_max, cfg.n, cfg.p};
    bool all_verified = true;
    for (const auto& params : sweep_instances(*id, ranges)) {
        IdentityReport report = verify(*id, params);
        all_verified = all_verified && report.verified;
        if (cfg.format == "text")
            out << identity_name(report.id) << ' ' << params_json(report.id, params).dump() << ": "
                << (report.verified ? "verified" : "FAILED") << '\n';
        else
            out << to_json(report).dump() << '\n';
    }
    return all_verified ? exit_ok : exit_falsified;
}

int cmd_linearize(const Config& cfg, std::ostream& out, std::ostream& err)
{
    Composition r = parse_composition(cfg.r);
    LinearizationVariant variant;
    if (cfg.basis == "falling")
        variant = LinearizationVariant::d;
    else if (cfg.basis == "binom")
        variant = LinearizationVariant::d_tilde;
    else if (cfg.basis == "rising_over_binom")
        variant = LinearizationVariant::c_tilde;
    else {
        err << "unknown basis '" << cfg.basis << "'\n";
        return exit_usage;
    }
    emit_table(linearization_d(r, variant), cfg.format, out);
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config cfg;
    CLI::App app{"Generalized binomial coefficients: tables, linearizations and identity checks"};
    app.require_subcommand(1);
    const std::vector<std::string> formats{"json", "csv", "text"};

    auto* coeff = app.add_subcommand("coeff", "Print c_k for a composition r");
    coeff->add_option("--r", cfg.r, "Comma-separated composition, e.g. 2,1")->required();
    coeff->add_option("--k", cfg.k, "Single k instead of the full table");
    coeff->add_option("--method", cfg.method, "explicit|entiere|genfun|inclusion_exclusion|finite_diff|recurrence|hyp3f2");
    coeff->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

    auto* verify_cmd = app.add_subcommand("verify", "Verify an identity over a parameter sweep");
    verify_cmd->add_option("--id", cfg.id, "Identity name")->required();
    verify_cmd->add_option("--n-max", cfg.n_max, "Largest n (t-degree cap for waring)");
    verify_cmd->add_option("--m-max", cfg.m_max, "Largest number of species");
    verify_cmd->add_option("--r-max", cfg.r_max, "Largest entry of r (cap for waring)");
    verify_cmd->add_option("--n", cfg.n, "Pin n instead of sweeping");
    verify_cmd->add_option("--p", cfg.p, "Pin p for las0pp");
    verify_cmd->add_option("--format", cfg.format)->check(CLI::IsMember(std::vector<std::string>{"json", "text"}));

    auto* linearize = app.add_subcommand("linearize", "Print d_k, d~_k or c~_k for a composition r");
    linearize->add_option("--r", cfg.r, "Comma-separated composition")->required();
    linearize->add_option("--basis", cfg.basis, "falling|binom|rising_over_binom");
    linearize->add_option("--format", cfg.format)->check(CLI::IsMember(formats));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return exit_usage;
    }

    try {
        if (coeff->parsed())
            return cmd_coeff(cfg, out, err);
        if (verify_cmd->parsed())
            return cmd_verify(cfg, out, err);
        return cmd_linearize(cfg, out, err);
    } catch (const unsupported_error& e) {
        err << e.what() << '\n';
        return exit_unsupported;
    } catch (const budget_error& e) {
        err << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace gbinom::cli
