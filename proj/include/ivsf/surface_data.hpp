#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ivsf/dates.hpp"

namespace ivsf {

// One implied-volatility observation. Moneyness is strike/underlying in
// percent (ATM = 100), maturity an ACT/365 year fraction, iv a decimal
// fraction (0.25 = 25%).
struct IVQuote {
    Date date = 0;
    double moneyness = 0.0;
    double maturity = 0.0;
    double iv = 0.0;
    std::int64_t volume = 0;
};

// One day's cross-section of quotes, all sharing the panel date.
struct SurfacePanel {
    Date date = 0;
    std::vector<IVQuote> quotes;
};

// Date-ordered panel collection for one underlying.
struct PanelSeries {
    std::vector<SurfacePanel> panels;
    std::string commodity_tag;
    // Descriptive annotation from the input metadata; carried, never computed.
    std::optional<double> convenience_yield_slope;

    std::size_t total_quotes() const;
};

struct MaturityGroupRule {
    // Month boundaries, half-open [lo, hi) except the last group which is
    // closed. Defaults follow the 1-6 / 6-12 / 12-18 / 18-24 month split.
    std::vector<std::pair<double, double>> group_edges = {{1, 6}, {6, 12}, {12, 18}, {18, 24}};
    std::int64_t min_quotes_per_group = 15000;
    std::int64_t min_quotes_per_day = 5;
};

// Keeps exactly the quotes with volume > 0, moneyness and maturity inside the
// inclusive ranges. Order preserved; empty output is legal.
SurfacePanel filter_panel(const SurfacePanel& panel, double moneyness_lo, double moneyness_hi,
                          double maturity_lo, double maturity_hi);
PanelSeries filter_series(const PanelSeries& series, double moneyness_lo, double moneyness_hi,
                          double maturity_lo, double maturity_hi);

// Drops every maturity group whose quote count across the whole series falls
// below rule.min_quotes_per_group. Throws AllGroupsDroppedError when nothing
// survives. Quote order inside panels is preserved.
PanelSeries apply_liquidity_rule(const PanelSeries& series, const MaturityGroupRule& rule);

// Index of the group containing `maturity_years`, or -1 when it falls outside
// every group.
int maturity_group_index(const MaturityGroupRule& rule, double maturity_years);

// Removes panels with fewer than min_quotes_per_day quotes.
PanelSeries drop_thin_days(const PanelSeries& series, std::int64_t min_quotes_per_day);

struct CsvSchema {
    std::string date = "date";
    std::string moneyness = "moneyness";
    std::string maturity = "maturity";
    std::string iv = "iv";
    std::string volume = "volume";
};

struct IngestResult {
    PanelSeries series;
    std::size_t skipped_rows = 0;
};

// Reads `date,moneyness,maturity,iv,volume` rows, grouping by date into
// ascending panels. Malformed rows are skipped and counted. Rows violating
// the raw sanity bounds (iv <= 0, iv >= 5, maturity <= 0, volume < 0) count
// as malformed.
IngestResult ingest_csv(const std::string& path, const CsvSchema& schema = {});

void emit_csv(const PanelSeries& series, const std::string& path);

enum class SurfaceKind { kGG, kCT, kStep };

enum class CoordMode { kRandom, kGrid };

struct SyntheticConfig {
    SurfaceKind kind = SurfaceKind::kCT;
    int n_days = 0;
    int quotes_per_day = 0;
    double noise_sd = 0.0;

    // AR(1) ground-truth coefficient process, one entry per coefficient:
    // c_t = mean + phi * (c_{t-1} - mean) + sd * eps. Sizes must match the
    // surface kind (5 for GG, 7 for CT, 3 for the step surface).
    std::vector<double> coef_mean;
    std::vector<double> coef_phi;
    std::vector<double> coef_sd;
    double lambda = 1.5;  // CT decay rate, fixed over the sample

    double moneyness_lo = 90.0;
    double moneyness_hi = 110.0;
    double maturity_lo = 1.0 / 12.0;
    double maturity_hi = 2.0;

    CoordMode coords = CoordMode::kRandom;
    int grid_moneyness = 7;  // grid mode: lattice sizes; quotes_per_day ignored
    int grid_maturity = 6;

    Date start_date = 0;  // 0 -> default start
    std::string commodity_tag = "synthetic";
};

struct SyntheticResult {
    PanelSeries series;
    // Ground-truth coefficient path, one row per day (k = 5, 7 or 3).
    std::vector<std::vector<double>> true_coefficients;
    double lambda = 0.0;
};

// Deterministic for a given seed. Quotes are the chosen surface evaluated at
// random (or gridded) coordinates plus iid Gaussian noise, clamped to (0,1].
SyntheticResult generate_synthetic(const SyntheticConfig& config, std::uint64_t seed);

// Step-surface evaluation used by the generator: c0 + c1*1{moneyness >= 100}
// + c2*1{maturity >= 0.5}.
double evaluate_step(const std::vector<double>& coefs, double moneyness, double maturity);

}  // namespace ivsf
