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

#ifndef LOSMIMO_EXPERIMENTS_H
#define LOSMIMO_EXPERIMENTS_H

#include <string>
#include <utility>
#include <vector>

#include "losmimo/design.hpp"
#include "losmimo/geometry.hpp"
#include "losmimo/spectrum.hpp"

namespace losmimo
{
    // Configuration problems (bad file, unknown key, inconsistent values)
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Ordered key/value pairs as read from a config file, before validation
    using ConfigEntries = std::vector<std::pair<std::string, std::string>>;

    // Reads a flat "key = value" file. '#' starts a comment, blank lines
    // are skipped, duplicate keys are rejected.
    ConfigEntries read_config_file(const std::string& path);

    // Applies a "key=value" override, replacing an existing entry or
    // appending a new one.
    void apply_override(ConfigEntries& entries, const std::string& assignment);

    enum class SweepVariable
    {
        Delta,  // joint horizontal/vertical spacing
        DeltaH, // horizontal spacing, vertical fixed
        DeltaV,
        Kappa
    };

    struct ExperimentConfig
    {
        // link
        double distance = 0.0;
        double wavelength = 0.0;
        double snr_db = 25.0;
        std::vector<double> kappas = {0.0};

        // geometry
        std::vector<int> m_values; // totals for geometry sweeps and optimize
        int m_h = 0;               // 0 = unset
        int m_v = 0;
        double width = 0.0;   // resolved; defaults to wavelength / 2
        double delta_h = 0.0; // 0 = use the optimal spacing
        double delta_v = 0.0;

        // model selection
        bool use_exact = true;
        bool use_approx = false;
        bool include_single_pol = false;

        // sweep specification
        SweepVariable sweep_variable = SweepVariable::Delta;
        bool sweep_variable_given = false;
        bool sweep_given = false;
        double sweep_start = 0.0;
        double sweep_stop = 0.0;
        double sweep_step = 0.0;
        int sweep_count = 0; // alternative to sweep_step

        // optimize objective: "area", "aperture_length" or "both"
        std::string objective = "both";

        std::string output_path;
        bool emit_timestamp = false;

        // validated entries in file order, echoed into CSV metadata
        ConfigEntries entries;

        static ExperimentConfig from_entries(const ConfigEntries& entries);
        static ExperimentConfig from_file(const std::string& path);

        LinkConfig link(double kappa) const;

        // requires an explicit factorization (m_h and m_v, or a square m)
        UraGeometry geometry_with(double dh, double dv) const;
        UraGeometry geometry_at_optimum() const;

        // single total antenna count for operations that need only M
        int single_total() const;

        // the sweep grid, falling back to the defaults for the variable
        // (spacing 0.02:0.0025:1.0, kappa 0:0.05:0.45)
        std::vector<double> sweep_grid(SweepVariable variable) const;
    };

    struct SweepResult
    {
        std::vector<std::string> columns;
        std::vector<std::vector<double>> rows;
        std::vector<std::string> metadata; // emitted as '#' comment lines
        // optional leading text column (e.g. the optimize objective)
        std::string label_column;
        std::vector<std::string> labels; // one per row when label_column set
    };

    SweepResult run_spacing_sweep(const ExperimentConfig& cfg);
    SweepResult run_geometry_sweep(const ExperimentConfig& cfg);
    SweepResult run_xpd_sweep(const ExperimentConfig& cfg);
    SweepResult run_capacity_point(const ExperimentConfig& cfg);
    SweepResult run_optimize(const ExperimentConfig& cfg);
    SweepResult run_gram_check(const ExperimentConfig& cfg);

    // UTF-8 CSV: '#' metadata lines, a header row, then one row per sweep
    // point with 15 significant digits per value.
    void emit_csv(const SweepResult& result, const std::string& path);

} // namespace losmimo

#endif
