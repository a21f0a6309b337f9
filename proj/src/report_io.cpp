#include "pixshuffle/report_io.hpp"

#include <sstream>

#include "json.hpp"

#include "pixshuffle/errors.hpp"

namespace pixshuffle {

namespace {

using nlohmann::json;

constexpr std::string_view kFormatTag = "pixshuffle-report";
constexpr int kFormatVersion = 1;
constexpr std::array<const char*, 3> kChannelNames{"R", "G", "B"};

json key_to_json(const KeyMaterial& key) {
  return {{"c", key.rows},
          {"p", key.cols},
          {"entropy", key.entropy.value()},
          {"mean", key.mean.value()},
          {"sk", key.iterations}};
}

json summary_to_json(const ImageSummary& s) {
  json out;
  out["key"] = key_to_json(s.key);
  out["sample_count"] = s.pooled.total;
  out["pooled_histogram"] = s.pooled.bins;
  out["histograms"] = json::object();
  out["series"] = {{"R", s.series.red}, {"G", s.series.green}, {"B", s.series.blue}};
  out["correlations"] = json::object();
  for (std::size_t c = 0; c < 3; ++c) out["histograms"][kChannelNames[c]] = s.channels[c];
  for (std::size_t d = 0; d < 3; ++d) {
    json row = json::object();
    for (std::size_t c = 0; c < 3; ++c) {
      const auto& value = s.correlations[d][c];
      row[kChannelNames[c]] = value ? json(*value) : json(nullptr);
    }
    out["correlations"][std::string(to_string(static_cast<Direction>(d)))] = row;
  }
  return out;
}

json verdicts_to_json(const PairVerdicts& v) {
  return {{"dimensions", v.dimensions}, {"histograms", v.histograms}, {"entropy", v.entropy},
          {"mean", v.mean},             {"key", v.key},               {"all_passed", v.all_passed()}};
}

const json& field(const json& parent, const char* name) {
  if (!parent.is_object() || !parent.contains(name)) {
    throw FormatError(FormatError::Kind::malformed_report, name, "missing");
  }
  return parent.at(name);
}

template <typename T>
T get(const json& parent, const char* name) {
  try {
    return field(parent, name).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(FormatError::Kind::malformed_report, name, e.what());
  }
}

KeyMaterial key_from_json(const json& j) {
  KeyMaterial key;
  key.rows = get<Index>(j, "c");
  key.cols = get<Index>(j, "p");
  key.entropy = Fixed4::from_double(get<double>(j, "entropy"));
  key.mean = Fixed4::from_double(get<double>(j, "mean"));
  key.iterations = get<std::uint64_t>(j, "sk");
  return key;
}

ImageSummary summary_from_json(const json& j) {
  ImageSummary s;
  s.key = key_from_json(field(j, "key"));
  s.pooled.total = get<std::uint64_t>(j, "sample_count");
  s.pooled.bins = get<Histogram>(j, "pooled_histogram");
  const json& hists = field(j, "histograms");
  const json& series = field(j, "series");
  for (std::size_t c = 0; c < 3; ++c) s.channels[c] = get<Histogram>(hists, kChannelNames[c]);
  s.series.red = get<std::vector<std::uint8_t>>(series, "R");
  s.series.green = get<std::vector<std::uint8_t>>(series, "G");
  s.series.blue = get<std::vector<std::uint8_t>>(series, "B");
  const json& corr = field(j, "correlations");
  for (std::size_t d = 0; d < 3; ++d) {
    const std::string name(to_string(static_cast<Direction>(d)));
    const json& row = field(corr, name.c_str());
    for (std::size_t c = 0; c < 3; ++c) {
      const json& value = field(row, kChannelNames[c]);
      if (value.is_null()) {
        s.correlations[d][c] = std::nullopt;
      } else {
        s.correlations[d][c] = get<double>(row, kChannelNames[c]);
      }
    }
  }
  return s;
}

std::string format_optional(const std::optional<double>& value) {
  if (!value) return "undefined";
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(4);
  out << *value;
  return out.str();
}

void write_summary_text(std::ostream& out, const char* title, const ImageSummary& s) {
  out << title << ": " << to_string(s.key) << "\n";
  out << "  samples: " << s.pooled.total << "  series length: " << s.series.size() << "\n";
  for (std::size_t d = 0; d < 3; ++d) {
    out << "  " << to_string(static_cast<Direction>(d)) << " correlation:";
    for (std::size_t c = 0; c < 3; ++c) {
      out << " " << kChannelNames[c] << "=" << format_optional(s.correlations[d][c]);
    }
    out << "\n";
  }
}

const char* verdict(bool ok) { return ok ? "pass" : "FAIL"; }

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "structured" || text == "json") return ReportFormat::structured;
  if (text == "csv") return ReportFormat::csv;
  if (text == "text") return ReportFormat::text;
  throw InvalidArgument("unknown report format '" + std::string(text) + "'");
}

std::string export_report(const AnalysisReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::structured: {
      json out;
      out["format"] = kFormatTag;
      out["version"] = kFormatVersion;
      out["series_length"] = report.series_length;
      out["plain"] = summary_to_json(report.plain);
      out["ciphered"] = report.ciphered ? summary_to_json(*report.ciphered) : json(nullptr);
      out["verdicts"] = report.verdicts ? verdicts_to_json(*report.verdicts) : json(nullptr);
      return out.dump(2) + "\n";
    }
    case ReportFormat::csv: {
      std::ostringstream out;
      out << "index,R,G,B\n";
      const RgbSeries& s = report.plain.series;
      for (std::size_t i = 0; i < s.size(); ++i) {
        out << i << ',' << int{s.red[i]} << ',' << int{s.green[i]} << ',' << int{s.blue[i]} << '\n';
      }
      return out.str();
    }
    case ReportFormat::text: {
      std::ostringstream out;
      write_summary_text(out, "plain", report.plain);
      if (report.ciphered) write_summary_text(out, "ciphered", *report.ciphered);
      if (report.verdicts) {
        const PairVerdicts& v = *report.verdicts;
        out << "verdicts: dimensions=" << verdict(v.dimensions)
            << " histograms=" << verdict(v.histograms) << " entropy=" << verdict(v.entropy)
            << " mean=" << verdict(v.mean) << " key=" << verdict(v.key) << "\n";
      }
      return out.str();
    }
  }
  throw InvalidArgument("bad report format");
}

AnalysisReport parse_structured_report(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(FormatError::Kind::malformed_report, "document", e.what());
  }
  if (get<std::string>(j, "format") != kFormatTag) {
    throw FormatError(FormatError::Kind::malformed_report, "format", "unexpected tag");
  }
  if (get<int>(j, "version") != kFormatVersion) {
    throw FormatError(FormatError::Kind::malformed_report, "version", "unsupported");
  }
  AnalysisReport report;
  report.series_length = get<std::size_t>(j, "series_length");
  report.plain = summary_from_json(field(j, "plain"));
  if (const json& c = field(j, "ciphered"); !c.is_null()) report.ciphered = summary_from_json(c);
  if (const json& v = field(j, "verdicts"); !v.is_null()) {
    PairVerdicts verdicts;
    verdicts.dimensions = get<bool>(v, "dimensions");
    verdicts.histograms = get<bool>(v, "histograms");
    verdicts.entropy = get<bool>(v, "entropy");
    verdicts.mean = get<bool>(v, "mean");
    verdicts.key = get<bool>(v, "key");
    report.verdicts = verdicts;
  }
  return report;
}

}  // namespace pixshuffle
