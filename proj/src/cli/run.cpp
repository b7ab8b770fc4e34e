#include "sumset/cli.hpp"

#include "commands.hpp"
#include "sumset/errors.hpp"

#include <ostream>

namespace sumset::cli {

namespace {

using report::Json;

int render_error(std::ostream& out, std::string_view kind, const std::string& message, int code) {
    out << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
    return code;
}

/// Every option of the chosen subcommand, as given or defaulted.
Json config_of(const CLI::App& sub) {
    Json cfg = Json::object();
    cfg["subcommand"] = sub.get_name();
    for (const CLI::Option* opt : sub.get_options()) {
        if (opt->get_lnames().empty() || opt->get_lnames().front() == "help") continue;
        const std::string key = opt->get_lnames().front();
        if (opt->get_expected_max() == 0) {
            cfg[key] = opt->count() > 0;
            continue;
        }
        cfg[key] = opt->count() > 0 ? opt->as<std::string>() : opt->get_default_str();
    }
    return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    CLI::App app{"sumset-lab: exact experiments on infinite sumset configurations", "sumset-lab"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    Common common;
    std::string format;
    auto commands = make_commands();
    std::vector<std::pair<CLI::App*, Command*>> subs;
    for (auto& cmd : commands) {
        CLI::App* sub = app.add_subcommand(cmd->name(), cmd->help());
        cmd->bind(*sub);
        sub->add_option("--seed", common.seed, "seed for generic elements and random instances")->envname("SUMSET_SEED");
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_flag("--assert", common.assert_mode, "treat tolerance checks as assertions");
        subs.emplace_back(sub, cmd.get());
    }

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        return render_error(out, to_string(ErrorKind::ConfigInvalid), e.what(), 2);
    }

    for (auto [sub, cmd] : subs) {
        if (!sub->parsed()) continue;
        if (format.empty()) format = cmd->default_format();
        common.format = format;
        report::Report rep;
        rep.config = config_of(*sub);
        rep.config["format"] = format;
        try {
            cmd->run(rep, common);
        } catch (const Error& e) {
            const bool config = e.kind() == ErrorKind::ConfigInvalid;
            return render_error(out, to_string(e.kind()), e.what(), config ? 2 : 3);
        } catch (const std::exception& e) {
            return render_error(out, "Internal", e.what(), 3);
        }
        if (format == "csv") out << rep.to_csv();
        else out << rep.to_json().dump(2) << '\n';
        return rep.failed() ? 1 : 0;
    }
    return render_error(out, to_string(ErrorKind::ConfigInvalid), "no subcommand", 2);
}

}  // namespace sumset::cli
