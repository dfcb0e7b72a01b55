// SPDX-License-Identifier: Apache-2.0
//
// losmimo: geometry design and capacity analysis of dual-polarized
// rectangular antenna arrays for line-of-sight MIMO links
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "losmimo/experiments.hpp"

namespace
{

struct SubcommandSpec
{
    std::string name;
    std::string description;
    std::function<losmimo::SweepResult(const losmimo::ExperimentConfig&)> run;
};

struct SubcommandArgs
{
    std::string config_path;
    std::vector<std::string> overrides;
};

std::string default_output_name(std::string subcommand)
{
    for (char& c : subcommand)
        if (c == '-')
            c = '_';
    return subcommand + ".csv";
}

int run_subcommand(const SubcommandSpec& spec, const SubcommandArgs& args)
{
    losmimo::ConfigEntries entries = losmimo::read_config_file(args.config_path);
    for (const auto& assignment : args.overrides)
        losmimo::apply_override(entries, assignment);

    const losmimo::ExperimentConfig cfg = losmimo::ExperimentConfig::from_entries(entries);
    const losmimo::SweepResult result = spec.run(cfg);

    const std::string path =
        cfg.output_path.empty() ? default_output_name(spec.name) : cfg.output_path;
    losmimo::emit_csv(result, path);

    if (spec.name == "gram-check" && !result.rows.empty())
    {
        const auto& row = result.rows.front();
        std::printf("max_offdiag_abs = %.15g\nmax_offdiag_rel = %.15g\n", row[3], row[4]);
    }
    std::cout << path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"design and capacity analysis of dual-polarized rectangular arrays "
                 "for line-of-sight MIMO links"};
    app.require_subcommand(1);

    const std::vector<SubcommandSpec> specs = {
        {"spacing-sweep", "channel capacity across a grid of antenna spacings",
         losmimo::run_spacing_sweep},
        {"geometry-sweep", "aperture dimensions for every row/column factorization",
         losmimo::run_geometry_sweep},
        {"xpd-sweep", "capacity at optimal spacing across polarization leakage values",
         losmimo::run_xpd_sweep},
        {"capacity", "capacity of a single configuration", losmimo::run_capacity_point},
        {"optimize", "factorization minimizing array area or aperture length",
         losmimo::run_optimize},
        {"gram-check", "off-diagonal residual of the Gram matrix at optimal spacing",
         losmimo::run_gram_check},
    };

    std::vector<SubcommandArgs> args(specs.size());
    for (std::size_t i = 0; i < specs.size(); ++i)
    {
        CLI::App* sub = app.add_subcommand(specs[i].name, specs[i].description);
        sub->add_option("--config", args[i].config_path, "path to a key = value config file")
            ->required();
        sub->add_option("--set", args[i].overrides,
                        "override a config entry as key=value (repeatable)");
    }

    CLI11_PARSE(app, argc, argv);

    try
    {
        for (std::size_t i = 0; i < specs.size(); ++i)
            if (app.get_subcommand(specs[i].name)->parsed())
                return run_subcommand(specs[i], args[i]);
        std::cerr << "losmimo: no subcommand selected\n";
        return 1;
    }
    catch (const std::exception& e)
    {
        std::cerr << "losmimo: " << e.what() << '\n';
        return 1;
    }
}
