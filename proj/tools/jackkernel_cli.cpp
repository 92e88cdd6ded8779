/*
   Copyright 2026 The jackkernel authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end.  Everything goes through the shared-library C
// API; this translation unit never touches the C++ core directly.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "jackkernel.h"

namespace {

struct SessionDeleter {
    void operator()(jk_session* s) const { jk_close(s); }
};
using SessionPtr = std::unique_ptr<jk_session, SessionDeleter>;

struct BufferDeleter {
    void operator()(char* p) const { jk_free(p); }
};
using BufferPtr = std::unique_ptr<char, BufferDeleter>;

// Exit codes: 0 success / all-pass, 1 verification or internal failure,
// 2 usage error (bad arguments, guard exceeded, ring error).
int exit_code_for(int status) {
    switch (status) {
    case JK_OK: return 0;
    case JK_E_VERIFY:
    case JK_E_INTERNAL: return 1;
    default: return 2;
    }
}

int emit(jk_session* session, int status, const char* payload, const std::string& out_path) {
    if (status != JK_OK && payload == nullptr) {
        std::cerr << "error: " << jk_last_error(session) << "\n";
        return exit_code_for(status);
    }
    if (out_path.empty()) {
        std::cout << payload;
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open '" << out_path << "' for writing\n";
            return 2;
        }
        file << payload;
    }
    return exit_code_for(status);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"jackkernel: exact Jack polynomials, characters, and identity checks"};
    app.require_subcommand(1);

    int max_weight = 0;
    std::string out_path;
    // Shared across subcommands; exactly one subcommand parses per run.
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--max-weight", max_weight, "override the partition weight guard");
        sub->add_option("--out", out_path, "write the JSON result to a file instead of stdout");
    };

    // jack <lambda>
    auto* cmd_jack = app.add_subcommand("jack", "Jack vector in the power-sum basis");
    std::string jack_lambda, jack_ring = "alpha", jack_alpha_value;
    cmd_jack->add_option("lambda", jack_lambda, "partition, e.g. 2,1 (empty string for the empty one)");
    cmd_jack->add_option("--ring", jack_ring, "coefficient ring: alpha | sqrt | rational")
        ->check(CLI::IsMember({"alpha", "sqrt", "rational"}));
    cmd_jack->add_option("--alpha", jack_alpha_value, "rational value of alpha (with --ring rational)");

    // character <mu> <lambda>
    auto* cmd_char = app.add_subcommand("character", "Jack character and its normalized form");
    std::string char_mu, char_lambda;
    cmd_char->add_option("mu", char_mu, "index partition");
    cmd_char->add_option("lambda", char_lambda, "evaluation partition");

    // stanley <mu> --rects k [--check]
    auto* cmd_stanley = app.add_subcommand("stanley", "character in multirectangular coordinates");
    std::string stanley_mu;
    int stanley_rects = 1;
    bool stanley_check = false;
    cmd_stanley->add_option("mu", stanley_mu, "index partition");
    cmd_stanley->add_option("--rects", stanley_rects, "number of rectangles")->required();
    cmd_stanley->add_flag("--check", stanley_check, "include the positivity/integrality audit");

    // moments <lambda> --lmax L [--boolean|--free]
    auto* cmd_moments = app.add_subcommand("moments", "transition-measure moments and cumulants");
    std::string moments_lambda;
    int moments_lmax = 4;
    bool moments_boolean = false, moments_free = false;
    cmd_moments->add_option("lambda", moments_lambda, "partition");
    cmd_moments->add_option("--lmax", moments_lmax, "highest order");
    cmd_moments->add_flag("--boolean", moments_boolean, "Boolean cumulants instead of moments");
    cmd_moments->add_flag("--free", moments_free, "free cumulants instead of moments");

    // expand <l1,l2,...> [--moment]
    auto* cmd_expand = app.add_subcommand("expand", "character expansion of a cumulant/moment product");
    std::string expand_lengths;
    bool expand_moment = false;
    cmd_expand->add_option("lengths", expand_lengths, "comma-separated site lengths, each >= 2")
        ->required();
    cmd_expand->add_flag("--moment", expand_moment, "moment product instead of Boolean cumulants");

    // verify <suite> [--max-size N] [--json]
    auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
    std::string verify_suite;
    int verify_max_size = 0;
    bool verify_json = false;
    cmd_verify->add_option("suite", verify_suite,
                           "jack | young | characters | vanishing | lassalle | symmetry | nazarov | "
                           "ribbon | integrality | commutation | kernel | all")
        ->required();
    cmd_verify->add_option("--max-size", verify_max_size, "size bound (0 = suite default)");
    cmd_verify->add_flag("--json", verify_json, "print the raw JSON report");

    for (CLI::App* sub : {cmd_jack, cmd_char, cmd_stanley, cmd_moments, cmd_expand, cmd_verify})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // help text, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage error
    }

    SessionPtr session(jk_open());
    if (max_weight > 0) jk_set_max_weight(session.get(), max_weight);

    char* raw = nullptr;
    int status = JK_OK;

    if (app.got_subcommand(cmd_jack)) {
        std::string ring = jack_ring;
        if (ring == "rational") {
            if (jack_alpha_value.empty()) {
                std::cerr << "error: --ring rational requires --alpha\n";
                return 2;
            }
            ring = jack_alpha_value;
        }
        status = jk_jack_json(session.get(), jack_lambda.c_str(), ring.c_str(), &raw);
    } else if (app.got_subcommand(cmd_char)) {
        status = jk_character_json(session.get(), char_mu.c_str(), char_lambda.c_str(), &raw);
    } else if (app.got_subcommand(cmd_stanley)) {
        status = jk_stanley_json(session.get(), stanley_mu.c_str(), stanley_rects,
                                 stanley_check ? 1 : 0, &raw);
    } else if (app.got_subcommand(cmd_moments)) {
        if (moments_boolean && moments_free) {
            std::cerr << "error: --boolean and --free are mutually exclusive\n";
            return 2;
        }
        const char* kind = moments_boolean ? "boolean" : (moments_free ? "free" : "moments");
        status = jk_moments_json(session.get(), moments_lambda.c_str(), moments_lmax, kind, &raw);
    } else if (app.got_subcommand(cmd_expand)) {
        status = jk_expand_json(session.get(), expand_lengths.c_str(), expand_moment ? 1 : 0, &raw);
    } else if (app.got_subcommand(cmd_verify)) {
        status = jk_verify_json(session.get(), verify_suite.c_str(), verify_max_size, &raw);
        BufferPtr buffer(raw);
        if (!raw) {
            std::cerr << "error: " << jk_last_error(session.get()) << "\n";
            return exit_code_for(status);
        }
        if (verify_json) return emit(session.get(), status, raw, out_path);
        // Human rendering: one line per check, counterexamples on failures.
        nlohmann::json rep = nlohmann::json::parse(raw);
        unsigned passed = 0;
        for (const auto& check : rep["checks"]) {
            bool ok = check["pass"].get<bool>();
            passed += ok ? 1 : 0;
            std::cout << (ok ? "PASS " : "FAIL ") << check["name"].get<std::string>();
            if (!ok && check.contains("detail"))
                std::cout << "  [" << check["detail"].get<std::string>() << "]";
            std::cout << "\n";
        }
        std::cout << "suite " << rep["suite"].get<std::string>() << ": " << passed << "/"
                  << rep["checks"].size() << " checks passed\n";
        return exit_code_for(status);
    }

    BufferPtr buffer(raw);
    return emit(session.get(), status, raw, out_path);
}
