#include "ivsf/surface_data.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "ivsf/cross_section.hpp"
#include "ivsf/errors.hpp"
#include "ivsf/rng.hpp"

namespace ivsf {

std::size_t PanelSeries::total_quotes() const {
    std::size_t n = 0;
    for (const auto& p : panels) n += p.quotes.size();
    return n;
}

SurfacePanel filter_panel(const SurfacePanel& panel, double moneyness_lo, double moneyness_hi,
                          double maturity_lo, double maturity_hi) {
    SurfacePanel out;
    out.date = panel.date;
    out.quotes.reserve(panel.quotes.size());
    for (const auto& q : panel.quotes) {
        if (q.volume > 0 && q.moneyness >= moneyness_lo && q.moneyness <= moneyness_hi &&
            q.maturity >= maturity_lo && q.maturity <= maturity_hi) {
            out.quotes.push_back(q);
        }
    }
    return out;
}

PanelSeries filter_series(const PanelSeries& series, double moneyness_lo, double moneyness_hi,
                          double maturity_lo, double maturity_hi) {
    PanelSeries out;
    out.commodity_tag = series.commodity_tag;
    out.convenience_yield_slope = series.convenience_yield_slope;
    out.panels.reserve(series.panels.size());
    for (const auto& p : series.panels) {
        out.panels.push_back(filter_panel(p, moneyness_lo, moneyness_hi, maturity_lo, maturity_hi));
    }
    return out;
}

int maturity_group_index(const MaturityGroupRule& rule, double maturity_years) {
    const double months = maturity_years * 12.0;
    const int n = static_cast<int>(rule.group_edges.size());
    for (int g = 0; g < n; ++g) {
        const auto& [lo, hi] = rule.group_edges[static_cast<std::size_t>(g)];
        const bool last = g == n - 1;
        if (months >= lo && (months < hi || (last && months <= hi))) return g;
    }
    return -1;
}

PanelSeries apply_liquidity_rule(const PanelSeries& series, const MaturityGroupRule& rule) {
    const int n_groups = static_cast<int>(rule.group_edges.size());
    if (n_groups == 0 || rule.min_quotes_per_group <= 0) {
        throw InvalidConfigError("apply_liquidity_rule: bad rule");
    }
    for (int g = 0; g + 1 < n_groups; ++g) {
        const auto& a = rule.group_edges[static_cast<std::size_t>(g)];
        const auto& b = rule.group_edges[static_cast<std::size_t>(g + 1)];
        if (!(a.first < a.second) || !(b.first < b.second) || a.second > b.first) {
            throw InvalidConfigError("apply_liquidity_rule: edges must be ascending");
        }
    }

    std::vector<std::int64_t> counts(static_cast<std::size_t>(n_groups), 0);
    for (const auto& p : series.panels) {
        for (const auto& q : p.quotes) {
            const int g = maturity_group_index(rule, q.maturity);
            if (g >= 0) ++counts[static_cast<std::size_t>(g)];
        }
    }
    std::vector<bool> keep(static_cast<std::size_t>(n_groups));
    bool any = false;
    for (int g = 0; g < n_groups; ++g) {
        keep[static_cast<std::size_t>(g)] =
            counts[static_cast<std::size_t>(g)] >= rule.min_quotes_per_group;
        any = any || keep[static_cast<std::size_t>(g)];
    }
    if (!any) throw AllGroupsDroppedError("apply_liquidity_rule: no maturity group survives");

    PanelSeries out;
    out.commodity_tag = series.commodity_tag;
    out.convenience_yield_slope = series.convenience_yield_slope;
    out.panels.reserve(series.panels.size());
    for (const auto& p : series.panels) {
        SurfacePanel np;
        np.date = p.date;
        np.quotes.reserve(p.quotes.size());
        for (const auto& q : p.quotes) {
            const int g = maturity_group_index(rule, q.maturity);
            if (g < 0 || keep[static_cast<std::size_t>(g)]) np.quotes.push_back(q);
        }
        out.panels.push_back(std::move(np));
    }
    return out;
}

PanelSeries drop_thin_days(const PanelSeries& series, std::int64_t min_quotes_per_day) {
    PanelSeries out;
    out.commodity_tag = series.commodity_tag;
    out.convenience_yield_slope = series.convenience_yield_slope;
    for (const auto& p : series.panels) {
        if (static_cast<std::int64_t>(p.quotes.size()) >= min_quotes_per_day) {
            out.panels.push_back(p);
        }
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && std::isfinite(out);
}

bool parse_int64(const std::string& s, std::int64_t& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtoll(s.c_str(), &end, 10);
    return end == s.c_str() + s.size();
}

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace

IngestResult ingest_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream in(path);
    if (!in) throw UnreadableFileError("ingest_csv: cannot open " + path);

    std::string header;
    if (!std::getline(in, header)) throw SchemaMismatchError("ingest_csv: empty file " + path);
    const auto cols = split_csv_line(header);
    auto find_col = [&](const std::string& name) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (cols[i] == name) return static_cast<int>(i);
        }
        throw SchemaMismatchError("ingest_csv: missing column '" + name + "' in " + path);
    };
    const int c_date = find_col(schema.date);
    const int c_mon = find_col(schema.moneyness);
    const int c_mat = find_col(schema.maturity);
    const int c_iv = find_col(schema.iv);
    const int c_vol = find_col(schema.volume);
    const std::size_t need = static_cast<std::size_t>(
        std::max({c_date, c_mon, c_mat, c_iv, c_vol})) + 1;

    std::map<Date, std::vector<IVQuote>> by_date;
    std::size_t skipped = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        if (fields.size() < need) {
            ++skipped;
            continue;
        }
        IVQuote q;
        try {
            q.date = parse_date(fields[static_cast<std::size_t>(c_date)]);
        } catch (const SchemaMismatchError&) {
            ++skipped;
            continue;
        }
        if (!parse_double(fields[static_cast<std::size_t>(c_mon)], q.moneyness) ||
            !parse_double(fields[static_cast<std::size_t>(c_mat)], q.maturity) ||
            !parse_double(fields[static_cast<std::size_t>(c_iv)], q.iv) ||
            !parse_int64(fields[static_cast<std::size_t>(c_vol)], q.volume)) {
            ++skipped;
            continue;
        }
        // raw ingestion sanity bounds
        if (q.iv <= 0.0 || q.iv >= 5.0 || q.maturity <= 0.0 || q.volume < 0) {
            ++skipped;
            continue;
        }
        by_date[q.date].push_back(q);
    }
    if (by_date.empty()) throw EmptySeriesError("ingest_csv: no valid rows in " + path);

    IngestResult result;
    result.skipped_rows = skipped;
    result.series.panels.reserve(by_date.size());
    for (auto& [date, quotes] : by_date) {
        SurfacePanel p;
        p.date = date;
        p.quotes = std::move(quotes);
        result.series.panels.push_back(std::move(p));
    }
    return result;
}

void emit_csv(const PanelSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw UnreadableFileError("emit_csv: cannot open " + path);
    out << "date,moneyness,maturity,iv,volume\n";
    for (const auto& p : series.panels) {
        for (const auto& q : p.quotes) {
            out << format_date(q.date) << ',' << fmt_double(q.moneyness) << ','
                << fmt_double(q.maturity) << ',' << fmt_double(q.iv) << ',' << q.volume << '\n';
        }
    }
}

double evaluate_step(const std::vector<double>& coefs, double moneyness, double maturity) {
    double iv = coefs.at(0);
    if (moneyness >= 100.0) iv += coefs.at(1);
    if (maturity >= 0.5) iv += coefs.at(2);
    return iv;
}

SyntheticResult generate_synthetic(const SyntheticConfig& config, std::uint64_t seed) {
    const std::size_t k = config.kind == SurfaceKind::kGG ? 5u
                        : config.kind == SurfaceKind::kCT ? 7u
                                                          : 3u;
    if (config.n_days <= 0 || config.noise_sd < 0.0) {
        throw InvalidConfigError("generate_synthetic: n_days must be positive, noise >= 0");
    }
    if (config.coords == CoordMode::kRandom && config.quotes_per_day <= 0) {
        throw InvalidConfigError("generate_synthetic: quotes_per_day must be positive");
    }
    if (config.coords == CoordMode::kGrid &&
        (config.grid_moneyness < 2 || config.grid_maturity < 2)) {
        throw InvalidConfigError("generate_synthetic: grid sizes must be >= 2");
    }
    if (config.coef_mean.size() != k || config.coef_phi.size() != k ||
        config.coef_sd.size() != k) {
        throw InvalidConfigError("generate_synthetic: coefficient process size mismatch");
    }
    if (config.kind == SurfaceKind::kCT && config.lambda <= 0.0) {
        throw InvalidConfigError("generate_synthetic: lambda must be positive");
    }
    if (!(config.moneyness_lo < config.moneyness_hi) ||
        !(config.maturity_lo < config.maturity_hi) || config.maturity_lo <= 0.0) {
        throw InvalidConfigError("generate_synthetic: bad coordinate ranges");
    }

    auto coef_rng = make_rng(seed, 1);
    auto coord_rng = make_rng(seed, 2);
    auto noise_rng = make_rng(seed, 3);
    auto volume_rng = make_rng(seed, 4);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> u_mon(config.moneyness_lo, config.moneyness_hi);
    std::uniform_real_distribution<double> u_mat(config.maturity_lo, config.maturity_hi);
    std::uniform_int_distribution<std::int64_t> u_vol(1, 500);

    SyntheticResult result;
    result.lambda = config.kind == SurfaceKind::kCT ? config.lambda : 0.0;
    result.series.commodity_tag = config.commodity_tag;
    result.true_coefficients.reserve(static_cast<std::size_t>(config.n_days));

    // grid coordinates, shared by every day in grid mode
    std::vector<std::pair<double, double>> grid;
    if (config.coords == CoordMode::kGrid) {
        for (int i = 0; i < config.grid_moneyness; ++i) {
            const double m = config.moneyness_lo +
                             (config.moneyness_hi - config.moneyness_lo) * i /
                                 (config.grid_moneyness - 1);
            for (int j = 0; j < config.grid_maturity; ++j) {
                const double t = config.maturity_lo +
                                 (config.maturity_hi - config.maturity_lo) * j /
                                     (config.grid_maturity - 1);
                grid.emplace_back(m, t);
            }
        }
    }

    std::vector<double> coef = config.coef_mean;
    Date date = config.start_date != 0 ? config.start_date : make_date(2013, 1, 7);
    while (is_weekend(date)) date = next_business_day(date);

    const MoneynessTransform transform;
    for (int day = 0; day < config.n_days; ++day) {
        if (day > 0) {
            for (std::size_t j = 0; j < k; ++j) {
                coef[j] = config.coef_mean[j] +
                          config.coef_phi[j] * (coef[j] - config.coef_mean[j]) +
                          config.coef_sd[j] * gauss(coef_rng);
            }
            date = next_business_day(date);
        }
        result.true_coefficients.push_back(coef);

        SurfacePanel panel;
        panel.date = date;
        const std::size_t n_quotes = config.coords == CoordMode::kGrid
                                         ? grid.size()
                                         : static_cast<std::size_t>(config.quotes_per_day);
        panel.quotes.reserve(n_quotes);
        for (std::size_t i = 0; i < n_quotes; ++i) {
            IVQuote q;
            q.date = date;
            if (config.coords == CoordMode::kGrid) {
                q.moneyness = grid[i].first;
                q.maturity = grid[i].second;
            } else {
                q.moneyness = u_mon(coord_rng);
                q.maturity = u_mat(coord_rng);
            }
            double iv = 0.0;
            switch (config.kind) {
                case SurfaceKind::kGG:
                    iv = evaluate_gg_raw(coef.data(), q.moneyness, q.maturity, transform);
                    break;
                case SurfaceKind::kCT:
                    iv = evaluate_ct_raw(coef.data(), config.lambda, q.moneyness, q.maturity,
                                         transform);
                    break;
                case SurfaceKind::kStep:
                    iv = evaluate_step(coef, q.moneyness, q.maturity);
                    break;
            }
            if (config.noise_sd > 0.0) iv += config.noise_sd * gauss(noise_rng);
            q.iv = std::clamp(iv, 1e-4, 1.0);
            q.volume = u_vol(volume_rng);
            panel.quotes.push_back(q);
        }
        result.series.panels.push_back(std::move(panel));
    }
    return result;
}

}  // namespace ivsf
