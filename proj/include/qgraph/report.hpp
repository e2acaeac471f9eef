#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qgraph/bracketing.hpp"
#include "qgraph/homology.hpp"
#include "qgraph/metric_spectra.hpp"
#include "qgraph/numerics.hpp"
#include "qgraph/periodic.hpp"

namespace qgraph {

using Json = nlohmann::ordered_json;

/// "p/q" if x is within 1e-10 of a fraction with denominator ≤ 360, "" otherwise.
std::string closed_form(double x);

/// Fixed 12 significant digits.
std::string format_value(double x);

Json to_json(const Spectrum& s);
Json to_json(const MetricSpectrum& s);
Json to_json(const BettiReport& b);
Json to_json(const KDTable& t);
Json to_json(const std::vector<Band>& bands);
Json to_json(const std::vector<MetricBand>& bands);
Json to_json(const GapReport& r);

std::string render_text(const Spectrum& s);
std::string render_text(const MetricSpectrum& s);
std::string render_text(const BettiReport& b, bool unoriented);
std::string render_text(const KDTable& t);
std::string render_text(const std::vector<Band>& bands);
std::string render_text(const std::vector<MetricBand>& bands);
std::string render_text(const GapReport& r);

/// Horizontal bars over the spectral range: one row per band, one per KD
/// interval, then the certified set with its gaps shaded. Same input gives
/// byte-identical output.
std::string render_svg(const GapReport& r);

}  // namespace qgraph
