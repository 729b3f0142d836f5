#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "equichow/report.hpp"
#include "equichow/verify.hpp"

namespace equichow {

namespace cli_detail {

struct Options {
    std::string fan_path;
    int d = 0;
    int cap = -1;
    std::string format = "json";
    int jobs = 1;
};

inline void add_common(CLI::App* cmd, Options& opt, bool needs_input) {
    if (needs_input) {
        cmd->add_option("--fan", opt.fan_path, "fan description file (JSON)")->required();
        cmd->add_option("--d", opt.d, "length of the parametrised subschemes")
            ->required()
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--cap", opt.cap, "top cohomological degree (default 2d)")
            ->check(CLI::NonNegativeNumber);
    }
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--jobs", opt.jobs, "worker threads for per-subtorus work")
        ->check(CLI::PositiveNumber);
}

inline void emit(const Json& payload, const Options& opt, std::ostream& out) {
    if (opt.format == "text")
        out << text_of(payload);
    else
        out << payload.dump(2) << "\n";
}

}  // namespace cli_detail

// Command-line front end; returns the process exit code. 0 success,
// 1 verification/computation failure, 2 input error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using cli_detail::Options;
    CLI::App app{"equivariant Chow rings of punctual Hilbert schemes on toric surfaces"};
    app.require_subcommand(1);

    Options opt;
    struct Cmd {
        CLI::App* sub;
        std::string name;
    };
    std::vector<Cmd> cmds;
    for (const char* name : {"fixed-points", "subtori", "components", "relations",
                             "equivariant-basis", "betti", "chow"}) {
        CLI::App* sub = app.add_subcommand(name, "");
        cli_detail::add_common(sub, opt, true);
        cmds.push_back({sub, name});
    }
    CLI::App* verify = app.add_subcommand("verify-paper-example",
                                          "check the built-in worked example (plane, length 3)");
    cli_detail::add_common(verify, opt, false);

    std::vector<const char*> argv;
    std::string prog = "equichow";
    argv.push_back(prog.c_str());
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            VerifyReport rep = verify_paper_example(opt.jobs);
            Json j;
            j["command"] = "verify-paper-example";
            Json body = rep.to_json();
            for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = *it;
            cli_detail::emit(j, opt, out);
            if (!rep.pass) {
                err << "verification failed\n";
                for (const VerifyItem& item : rep.items)
                    if (!item.pass) err << "  FAIL " << item.name << (item.detail.empty() ? "" : ": " + item.detail) << "\n";
                return 1;
            }
            return 0;
        }

        std::string command;
        for (const auto& c : cmds)
            if (c.sub->parsed()) command = c.name;
        Fan fan = load_fan_file(opt.fan_path);
        EquivariantChow ring(fan, opt.d, opt.jobs);
        int cap = opt.cap >= 0 ? opt.cap : 2 * opt.d;

        Json j;
        j["fan"] = fan_json(fan);
        j["d"] = opt.d;
        if (command == "fixed-points") {
            j["fixed_points"] = fixed_points_json(ring);
        } else if (command == "subtori") {
            Json arr = Json::array();
            for (const Subtorus& s : ring.subtori())
                arr.push_back(Json{{"cocharacter", {s.w.w1, s.w.w2}}});
            j["subtori"] = arr;
        } else if (command == "components") {
            j["subtori"] = components_json(ring, false, false);
        } else if (command == "relations") {
            j["subtori"] = components_json(ring, true, true);
        } else if (command == "equivariant-basis") {
            j["basis"] = basis_json(ring, cap);
        } else if (command == "betti") {
            j["betti"] = ring.betti_bb();
        } else if (command == "chow") {
            j["chow"] = chow_json(ring, cap);
        }
        cli_detail::emit(j, opt, out);
        return 0;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const FanError& e) {
        err << "invalid fan: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace equichow
