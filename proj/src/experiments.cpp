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

#include "losmimo/experiments.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <exception>
#include <fstream>
#include <map>
#include <sstream>

#include "losmimo/jacobi.hpp"

namespace losmimo
{
namespace
{

constexpr double kSpeedOfLight = 299792458.0;

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value)
{
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(value.c_str(), &end);
    if (end == value.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
        throw ConfigError("config: key '" + key + "' needs a finite number, got '" + value + "'");
    return v;
}

int parse_int(const std::string& key, const std::string& value)
{
    const double v = parse_double(key, value);
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v)
        throw ConfigError("config: key '" + key + "' needs an integer, got '" + value + "'");
    return i;
}

bool parse_bool(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "1")
        return true;
    if (value == "false" || value == "0")
        return false;
    throw ConfigError("config: key '" + key + "' needs true/false, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value)
{
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ','))
        parts.push_back(trim(item));
    if (parts.empty())
        parts.push_back("");
    return parts;
}

std::string format_value(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string kind_name(ChannelModelKind kind)
{
    return kind == ChannelModelKind::Exact ? "exact" : "approx";
}

std::string kappa_suffix(double kappa)
{
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", kappa);
    return buf;
}

std::vector<ChannelModelKind> selected_kinds(const ExperimentConfig& cfg)
{
    std::vector<ChannelModelKind> kinds;
    if (cfg.use_exact)
        kinds.push_back(ChannelModelKind::Exact);
    if (cfg.use_approx)
        kinds.push_back(ChannelModelKind::Approx);
    return kinds;
}

std::vector<std::string> base_metadata(const ExperimentConfig& cfg, const std::string& op)
{
    std::vector<std::string> lines;
    lines.push_back("losmimo " + op);

    std::map<std::string, std::string> sorted(cfg.entries.begin(), cfg.entries.end());
    for (const auto& [key, value] : sorted)
        lines.push_back("config: " + key + " = " + value);
    lines.push_back("resolved: wavelength = " + format_value(cfg.wavelength));
    lines.push_back("resolved: width = " + format_value(cfg.width));

    if (cfg.emit_timestamp)
    {
        const std::time_t now = std::time(nullptr);
        char buf[64];
        std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
        lines.push_back(std::string("generated: ") + buf);
    }
    return lines;
}

void require_finite_rows(const SweepResult& result)
{
    for (const auto& row : result.rows)
        for (double v : row)
            if (!std::isfinite(v))
                throw NumericalError("sweep produced a non-finite value; refusing to emit");
}

// run f over 0..n-1 in parallel, preserving the first exception
template <typename F>
void parallel_points(int n, F&& f)
{
    std::exception_ptr error = nullptr;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
    {
        try
        {
            f(i);
        }
        catch (...)
        {
#pragma omp critical(losmimo_sweep_error)
            if (!error)
                error = std::current_exception();
        }
    }
    if (error)
        std::rethrow_exception(error);
}

} // namespace

ConfigEntries read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");

    ConfigEntries entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line))
    {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config: line " + std::to_string(line_no) +
                              " of '" + path + "' is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config: line " + std::to_string(line_no) + " has an empty key");
        for (const auto& [existing, _] : entries)
            if (existing == key)
                throw ConfigError("config: duplicate key '" + key + "'");
        entries.emplace_back(key, value);
    }
    return entries;
}

void apply_override(ConfigEntries& entries, const std::string& assignment)
{
    const auto eq = assignment.find('=');
    if (eq == std::string::npos)
        throw ConfigError("override '" + assignment + "' is not key=value");
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = trim(assignment.substr(eq + 1));
    if (key.empty())
        throw ConfigError("override '" + assignment + "' has an empty key");
    for (auto& [existing, existing_value] : entries)
    {
        if (existing == key)
        {
            existing_value = value;
            return;
        }
    }
    entries.emplace_back(key, value);
}

ExperimentConfig ExperimentConfig::from_entries(const ConfigEntries& entries)
{
    ExperimentConfig cfg;
    cfg.entries = entries;
    cfg.kappas.clear();

    double frequency = 0.0;
    double gamma = -1.0;
    bool have_wavelength = false, have_frequency = false, have_gamma = false,
         have_kappa = false, have_width = false, have_distance = false;
    bool have_start = false, have_stop = false, have_step = false, have_count = false;

    for (const auto& [key, value] : entries)
    {
        if (key == "distance")
        {
            cfg.distance = parse_double(key, value);
            have_distance = true;
        }
        else if (key == "wavelength")
        {
            cfg.wavelength = parse_double(key, value);
            have_wavelength = true;
        }
        else if (key == "frequency")
        {
            frequency = parse_double(key, value);
            have_frequency = true;
        }
        else if (key == "snr_db")
            cfg.snr_db = parse_double(key, value);
        else if (key == "gamma")
        {
            gamma = parse_double(key, value);
            have_gamma = true;
        }
        else if (key == "kappa")
        {
            for (const auto& item : split_list(value))
                cfg.kappas.push_back(parse_double(key, item));
            have_kappa = true;
        }
        else if (key == "m")
        {
            for (const auto& item : split_list(value))
                cfg.m_values.push_back(parse_int(key, item));
        }
        else if (key == "m_h")
            cfg.m_h = parse_int(key, value);
        else if (key == "m_v")
            cfg.m_v = parse_int(key, value);
        else if (key == "width")
        {
            cfg.width = parse_double(key, value);
            have_width = true;
        }
        else if (key == "delta_h")
            cfg.delta_h = parse_double(key, value);
        else if (key == "delta_v")
            cfg.delta_v = parse_double(key, value);
        else if (key == "model")
        {
            if (value == "exact")
            {
                cfg.use_exact = true;
                cfg.use_approx = false;
            }
            else if (value == "approx")
            {
                cfg.use_exact = false;
                cfg.use_approx = true;
            }
            else if (value == "both")
            {
                cfg.use_exact = true;
                cfg.use_approx = true;
            }
            else
                throw ConfigError("config: model must be exact, approx or both");
        }
        else if (key == "include_single_pol")
            cfg.include_single_pol = parse_bool(key, value);
        else if (key == "sweep_variable")
        {
            if (value == "delta")
                cfg.sweep_variable = SweepVariable::Delta;
            else if (value == "delta_h")
                cfg.sweep_variable = SweepVariable::DeltaH;
            else if (value == "delta_v")
                cfg.sweep_variable = SweepVariable::DeltaV;
            else if (value == "kappa")
                cfg.sweep_variable = SweepVariable::Kappa;
            else
                throw ConfigError("config: sweep_variable must be delta, delta_h, delta_v or kappa");
            cfg.sweep_variable_given = true;
        }
        else if (key == "sweep_start")
        {
            cfg.sweep_start = parse_double(key, value);
            have_start = true;
        }
        else if (key == "sweep_stop")
        {
            cfg.sweep_stop = parse_double(key, value);
            have_stop = true;
        }
        else if (key == "sweep_step")
        {
            cfg.sweep_step = parse_double(key, value);
            have_step = true;
        }
        else if (key == "sweep_count")
        {
            cfg.sweep_count = parse_int(key, value);
            have_count = true;
        }
        else if (key == "objective")
        {
            if (value != "area" && value != "aperture_length" && value != "both")
                throw ConfigError("config: objective must be area, aperture_length or both");
            cfg.objective = value;
        }
        else if (key == "output")
            cfg.output_path = value;
        else if (key == "timestamp")
            cfg.emit_timestamp = parse_bool(key, value);
        else
            throw ConfigError("config: unknown key '" + key + "'");
    }

    // link parameters
    if (!have_distance || cfg.distance <= 0.0)
        throw ConfigError("config: positive 'distance' is required");
    if (have_wavelength == have_frequency)
        throw ConfigError("config: exactly one of 'wavelength' or 'frequency' is required");
    if (have_frequency)
    {
        if (frequency <= 0.0)
            throw ConfigError("config: frequency must be positive");
        cfg.wavelength = kSpeedOfLight / frequency;
    }
    if (cfg.wavelength <= 0.0)
        throw ConfigError("config: wavelength must be positive");

    // polarization: gamma converts once; a simultaneous kappa must agree
    if (have_gamma)
    {
        const double derived = kappa_from_gamma(gamma);
        if (have_kappa)
        {
            if (cfg.kappas.size() != 1 || std::abs(cfg.kappas.front() - derived) > 1e-12)
                throw ConfigError("config: 'gamma' and 'kappa' are inconsistent");
        }
        cfg.kappas = {derived};
    }
    if (cfg.kappas.empty())
        cfg.kappas = {0.0};
    for (double k : cfg.kappas)
        if (k < 0.0 || k > 0.5)
            throw ConfigError("config: kappa must lie in [0, 1/2]");

    // geometry
    for (int m : cfg.m_values)
        if (m < 1)
            throw ConfigError("config: m must be at least 1");
    if ((cfg.m_h != 0 && cfg.m_h < 1) || (cfg.m_v != 0 && cfg.m_v < 1))
        throw ConfigError("config: m_h and m_v must be at least 1");
    if ((cfg.m_h != 0) != (cfg.m_v != 0))
        throw ConfigError("config: m_h and m_v must be given together");
    if (cfg.m_h != 0 && cfg.m_values.size() == 1 &&
        cfg.m_values.front() != cfg.m_h * cfg.m_v)
        throw ConfigError("config: m does not equal m_h * m_v");

    if (!have_width)
        cfg.width = cfg.wavelength / 2.0;
    if (cfg.width <= 0.0)
        throw ConfigError("config: width must be positive");
    if (cfg.delta_h < 0.0 || cfg.delta_v < 0.0)
        throw ConfigError("config: spacings must be nonnegative");

    // sweep range
    cfg.sweep_given = have_start || have_stop || have_step || have_count;
    if (cfg.sweep_given)
    {
        if (!have_start || !have_stop)
            throw ConfigError("config: sweep_start and sweep_stop are required for a sweep range");
        if (have_step == have_count)
            throw ConfigError("config: give exactly one of sweep_step or sweep_count");
        if (have_step && cfg.sweep_step <= 0.0)
            throw ConfigError("config: sweep_step must be positive");
        if (have_count && cfg.sweep_count < 1)
            throw ConfigError("config: sweep_count must be at least 1");
        if (cfg.sweep_stop < cfg.sweep_start)
            throw ConfigError("config: sweep_stop must not precede sweep_start");
    }

    return cfg;
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path)
{
    return from_entries(read_config_file(path));
}

LinkConfig ExperimentConfig::link(double kappa) const
{
    return LinkConfig::from_kappa(distance, wavelength, kappa, snr_db);
}

UraGeometry ExperimentConfig::geometry_with(double dh, double dv) const
{
    int mh = m_h, mv = m_v;
    if (mh == 0)
    {
        if (m_values.size() != 1)
            throw ConfigError("config: this operation needs m_h and m_v (or a square m)");
        const int m = m_values.front();
        const int root = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
        if (root * root != m)
            throw ConfigError("config: m = " + std::to_string(m) +
                              " is not a perfect square; give m_h and m_v explicitly");
        mh = mv = root;
    }
    return UraGeometry(mh, mv, dh, dv, width);
}

UraGeometry ExperimentConfig::geometry_at_optimum() const
{
    const LinkConfig l = link(kappas.front());
    UraGeometry probe = geometry_with(0.0, 0.0);
    return UraGeometry(probe.m_h, probe.m_v, optimal_spacing(l, probe.m_h),
                       optimal_spacing(l, probe.m_v), width);
}

int ExperimentConfig::single_total() const
{
    if (m_values.size() == 1)
        return m_values.front();
    if (m_values.empty() && m_h != 0)
        return m_h * m_v;
    throw ConfigError("config: this operation needs a single m (or m_h and m_v)");
}

std::vector<double> ExperimentConfig::sweep_grid(SweepVariable variable) const
{
    double start = sweep_start, stop = sweep_stop, step = sweep_step;
    int count = sweep_count;
    bool by_step = sweep_step > 0.0;
    if (!sweep_given)
    {
        if (variable == SweepVariable::Kappa)
        {
            start = 0.0;
            stop = 0.45;
            step = 0.05;
        }
        else
        {
            start = 0.02;
            stop = 1.0;
            step = 0.0025;
        }
        by_step = true;
    }

    std::vector<double> grid;
    if (by_step)
    {
        const int n = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
        grid.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            grid.push_back(start + i * step);
    }
    else if (count == 1)
    {
        grid.push_back(start);
    }
    else
    {
        grid.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            grid.push_back(start + i * (stop - start) / (count - 1));
    }
    if (grid.empty())
        throw ConfigError("config: sweep range is empty");
    return grid;
}

SweepResult run_spacing_sweep(const ExperimentConfig& cfg)
{
    const SweepVariable variable =
        cfg.sweep_variable_given ? cfg.sweep_variable : SweepVariable::Delta;
    if (variable == SweepVariable::Kappa)
        throw ConfigError("spacing-sweep: sweep_variable must be a spacing");

    const std::vector<ChannelModelKind> kinds = selected_kinds(cfg);
    const std::vector<double> grid = cfg.sweep_grid(variable);
    const UraGeometry shape = cfg.geometry_with(0.0, 0.0);

    // fixed spacing of the non-swept dimension for per-dimension sweeps
    const LinkConfig probe_link = cfg.link(cfg.kappas.front());
    const double fixed_h =
        cfg.delta_h > 0.0 ? cfg.delta_h : optimal_spacing(probe_link, shape.m_h);
    const double fixed_v =
        cfg.delta_v > 0.0 ? cfg.delta_v : optimal_spacing(probe_link, shape.m_v);

    SweepResult result;
    switch (variable)
    {
    case SweepVariable::Delta: result.columns.push_back("delta_m"); break;
    case SweepVariable::DeltaH: result.columns.push_back("delta_h_m"); break;
    default: result.columns.push_back("delta_v_m"); break;
    }
    const bool tag_kappa = cfg.kappas.size() > 1;
    for (ChannelModelKind kind : kinds)
        for (double kappa : cfg.kappas)
            result.columns.push_back("capacity_" + kind_name(kind) + "_bits" +
                                     (tag_kappa ? "_kappa" + kappa_suffix(kappa) : ""));
    if (cfg.include_single_pol)
        for (ChannelModelKind kind : kinds)
            result.columns.push_back("capacity_single_pol_" + kind_name(kind) + "_bits");

    result.rows.assign(grid.size(), {});
    parallel_points(static_cast<int>(grid.size()), [&](int i) {
        const double value = grid[static_cast<std::size_t>(i)];
        double dh = fixed_h, dv = fixed_v;
        switch (variable)
        {
        case SweepVariable::Delta: dh = dv = value; break;
        case SweepVariable::DeltaH: dh = value; break;
        default: dv = value; break;
        }
        const UraGeometry g(shape.m_h, shape.m_v, dh, dv, cfg.width);

        std::vector<double> row;
        row.reserve(result.columns.size());
        row.push_back(value);
        for (ChannelModelKind kind : kinds)
            for (double kappa : cfg.kappas)
                row.push_back(capacity_of_link(cfg.link(kappa), g, kind).capacity);
        if (cfg.include_single_pol)
            for (ChannelModelKind kind : kinds)
                row.push_back(
                    capacity_of_link_single_pol(cfg.link(cfg.kappas.front()), g, kind)
                        .capacity);
        result.rows[static_cast<std::size_t>(i)] = std::move(row);
    });

    result.metadata = base_metadata(cfg, "spacing-sweep");
    if (cfg.include_single_pol)
        result.metadata.push_back("single_pol_power_convention = same_total_power");
    require_finite_rows(result);
    return result;
}

SweepResult run_geometry_sweep(const ExperimentConfig& cfg)
{
    if (cfg.m_values.empty())
        throw ConfigError("geometry-sweep: 'm' is required (one or more totals)");

    SweepResult result;
    result.columns = {"m",     "m_h",   "m_v",     "delta_h_m",         "delta_v_m",
                      "l_h_m", "l_v_m", "area_m2", "aperture_length_m"};

    const LinkConfig l = cfg.link(cfg.kappas.front());
    for (int total : cfg.m_values)
    {
        for (int div = 1; div <= total; ++div)
        {
            if (total % div != 0)
                continue;
            const int mh = div;
            const int mv = total / div;
            const UraGeometry g(mh, mv, optimal_spacing(l, mh), optimal_spacing(l, mv),
                                cfg.width);
            const ApertureDims dims = aperture_dimensions(g);
            result.rows.push_back({static_cast<double>(total), static_cast<double>(mh),
                                   static_cast<double>(mv), g.delta_h, g.delta_v, dims.l_h,
                                   dims.l_v, dims.area, dims.aperture_length});
        }
    }

    result.metadata = base_metadata(cfg, "geometry-sweep");
    require_finite_rows(result);
    return result;
}

SweepResult run_xpd_sweep(const ExperimentConfig& cfg)
{
    if (cfg.sweep_variable_given && cfg.sweep_variable != SweepVariable::Kappa)
        throw ConfigError("xpd-sweep: sweep_variable must be kappa");

    const std::vector<double> grid = cfg.sweep_grid(SweepVariable::Kappa);
    for (double k : grid)
        if (k < 0.0 || k > 0.5)
            throw ConfigError("xpd-sweep: kappa range must stay within [0, 1/2]");

    const int total = cfg.single_total();
    const LinkConfig l = cfg.link(cfg.kappas.front());
    const double beta = l.reference_gain();
    const double power = std::pow(10.0, cfg.snr_db / 10.0) / beta;

    SweepResult result;
    result.columns = {"kappa", "capacity_bits"};
    result.rows.assign(grid.size(), {});
    parallel_points(static_cast<int>(grid.size()), [&](int i) {
        const double kappa = grid[static_cast<std::size_t>(i)];
        const double capacity =
            two_level_capacity(polarization_eigenvalues(kappa), beta, total, power, 1.0);
        result.rows[static_cast<std::size_t>(i)] = {kappa, capacity};
    });

    result.metadata = base_metadata(cfg, "xpd-sweep");
    require_finite_rows(result);
    return result;
}

SweepResult run_capacity_point(const ExperimentConfig& cfg)
{
    if (cfg.kappas.size() != 1)
        throw ConfigError("capacity: give a single kappa");

    const UraGeometry shape = cfg.geometry_with(0.0, 0.0);
    const LinkConfig l = cfg.link(cfg.kappas.front());
    const double dh = cfg.delta_h > 0.0 ? cfg.delta_h : optimal_spacing(l, shape.m_h);
    const double dv = cfg.delta_v > 0.0 ? cfg.delta_v : optimal_spacing(l, shape.m_v);
    const UraGeometry g(shape.m_h, shape.m_v, dh, dv, cfg.width);

    SweepResult result;
    result.columns = {"delta_h_m", "delta_v_m"};
    std::vector<double> row = {dh, dv};
    for (ChannelModelKind kind : selected_kinds(cfg))
    {
        const CapacityResult cap = capacity_of_link(l, g, kind);
        const std::string name = kind_name(kind);
        result.columns.push_back("capacity_" + name + "_bits");
        result.columns.push_back("water_level_" + name);
        result.columns.push_back("active_count_" + name);
        row.push_back(cap.capacity);
        row.push_back(cap.water_level);
        row.push_back(static_cast<double>(cap.active_count));
        if (cfg.include_single_pol)
        {
            result.columns.push_back("capacity_single_pol_" + name + "_bits");
            row.push_back(capacity_of_link_single_pol(l, g, kind).capacity);
        }
    }
    result.rows.push_back(std::move(row));

    result.metadata = base_metadata(cfg, "capacity");
    require_finite_rows(result);
    return result;
}

SweepResult run_optimize(const ExperimentConfig& cfg)
{
    const int total = cfg.single_total();
    const LinkConfig l = cfg.link(cfg.kappas.front());

    std::vector<std::pair<std::string, GeometryObjective>> objectives;
    if (cfg.objective == "area" || cfg.objective == "both")
        objectives.emplace_back("area", GeometryObjective::Area);
    if (cfg.objective == "aperture_length" || cfg.objective == "both")
        objectives.emplace_back("aperture_length", GeometryObjective::ApertureLength);

    SweepResult result;
    result.label_column = "objective";
    result.columns = {"m_h",     "m_v",
                      "delta_h_m", "delta_v_m",
                      "l_h_m",   "l_v_m",
                      "area_m2", "aperture_length_m",
                      "tie",     "continuous_optimum_attained"};
    for (const auto& [name, objective] : objectives)
    {
        const GeometryChoice choice = optimize_factorization(total, l, cfg.width, objective);
        result.labels.push_back(name);
        result.rows.push_back({static_cast<double>(choice.m_h),
                               static_cast<double>(choice.m_v), choice.delta_h,
                               choice.delta_v, choice.l_h, choice.l_v, choice.area,
                               choice.aperture_length, choice.tie ? 1.0 : 0.0,
                               choice.continuous_optimum_attained ? 1.0 : 0.0});
    }

    result.metadata = base_metadata(cfg, "optimize");
    require_finite_rows(result);
    return result;
}

SweepResult run_gram_check(const ExperimentConfig& cfg)
{
    const UraGeometry g = cfg.geometry_at_optimum();
    const LinkConfig l = cfg.link(cfg.kappas.front());
    const ComplexMatrix h = build_unpolarized(l, g, ChannelModelKind::Approx);
    const ComplexMatrix gr = gram(h);

    const double diag = l.reference_gain() * g.total();
    double max_offdiag = 0.0;
    for (int i = 0; i < gr.rows(); ++i)
        for (int j = 0; j < gr.cols(); ++j)
            if (i != j)
                max_offdiag = std::max(max_offdiag, std::abs(gr(i, j)));

    SweepResult result;
    result.columns = {"m_h", "m_v", "gram_diag", "max_offdiag_abs", "max_offdiag_rel"};
    result.rows.push_back({static_cast<double>(g.m_h), static_cast<double>(g.m_v), diag,
                           max_offdiag, max_offdiag / diag});
    result.metadata = base_metadata(cfg, "gram-check");
    result.metadata.push_back("model = approx (scaled-identity Gram check at optimal spacing)");
    require_finite_rows(result);
    return result;
}

void emit_csv(const SweepResult& result, const std::string& path)
{
    require_finite_rows(result);
    const bool labeled = !result.label_column.empty();
    if (labeled && result.labels.size() != result.rows.size())
        throw std::logic_error("emit_csv: label count does not match row count");

    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("emit_csv: cannot open '" + path +
                                 "' for writing: " + std::strerror(errno));

    for (const auto& line : result.metadata)
        out << "# " << line << '\n';

    for (std::size_t c = 0; c < result.columns.size(); ++c)
    {
        if (labeled && c == 0)
            out << result.label_column << ',';
        else if (c > 0)
            out << ',';
        out << result.columns[c];
    }
    if (result.columns.empty() && labeled)
        out << result.label_column;
    out << '\n';

    for (std::size_t r = 0; r < result.rows.size(); ++r)
    {
        const auto& row = result.rows[r];
        if (row.size() != result.columns.size())
            throw std::logic_error("emit_csv: row width does not match header");
        if (labeled)
            out << result.labels[r] << (row.empty() ? "" : ",");
        for (std::size_t c = 0; c < row.size(); ++c)
        {
            if (c > 0)
                out << ',';
            out << format_value(row[c]);
        }
        out << '\n';
    }

    out.flush();
    if (!out)
        throw std::runtime_error("emit_csv: write to '" + path +
                                 "' failed: " + std::strerror(errno));
}

} // namespace losmimo
