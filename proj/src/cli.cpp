#include "pixshuffle/cli.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <system_error>

#include "CLI11.hpp"
#include "pixshuffle/analysis.hpp"
#include "pixshuffle/cipher.hpp"
#include "pixshuffle/errors.hpp"
#include "pixshuffle/keying.hpp"
#include "pixshuffle/ppm.hpp"
#include "pixshuffle/report_io.hpp"

namespace pixshuffle::cli {

namespace {

struct CipherArgs {
  std::string input;
  std::string output;
  std::string mode = "rotate";
  std::optional<std::uint64_t> key;
};

struct AnalyzeArgs {
  std::string input;
  std::string against;
  std::size_t n = kDefaultSeriesLength;
  std::string format = "structured";
  std::string output;
};

void add_cipher_options(CLI::App& cmd, CipherArgs& args) {
  cmd.add_option("in", args.input, "input PPM")->required();
  cmd.add_option("out", args.output, "output PPM")->required();
  cmd.add_option("--mode", args.mode, "channel interchange")
      ->check(CLI::IsMember({"none", "rotate"}))
      ->capture_default_str();
  cmd.add_option("--key", args.key, "iteration count replacing the derived key")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX));
}

CipherConfig to_config(const CipherArgs& args) {
  return {parse_channel_mode(args.mode), args.key};
}

int run_encrypt(const CipherArgs& args, std::ostream& out) {
  const ImageMatrix plain = load_ppm(args.input);
  const auto [ciphered, key] = encrypt(plain, to_config(args));
  save_ppm(args.output, ciphered);
  out << to_string(key) << "\n";
  return kOk;
}

int run_decrypt(const CipherArgs& args, std::ostream& out) {
  const ImageMatrix ciphered = load_ppm(args.input);
  const CipherConfig cfg = to_config(args);
  const KeyMaterial key = resolve_key(ciphered, cfg);
  save_ppm(args.output, decrypt(ciphered, cfg));
  out << to_string(key) << "\n";
  return kOk;
}

int run_key(const std::string& input, std::ostream& out) {
  out << to_string(derive_key(load_ppm(input))) << "\n";
  return kOk;
}

int run_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  const ImageMatrix plain = load_ppm(args.input);
  AnalysisReport report;
  if (args.against.empty()) {
    report = build_report(plain, args.n);
  } else {
    const ImageMatrix other = load_ppm(args.against);
    try {
      report = build_report(plain, other, args.n);
    } catch (const DimensionMismatch& e) {
      err << "invariant violation: " << e.what() << "\n";
      return kInvariantViolation;
    }
  }
  const std::string text = export_report(report, parse_report_format(args.format));
  if (args.output.empty()) {
    out << text;
  } else {
    write_file(args.output, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  }
  if (report.verdicts && !report.verdicts->all_passed()) {
    err << "invariant violation: paired images differ in";
    const PairVerdicts& v = *report.verdicts;
    if (!v.histograms) err << " histogram";
    if (!v.entropy) err << " entropy";
    if (!v.mean) err << " mean";
    if (!v.key) err << " key";
    err << "\n";
    return kInvariantViolation;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pixel-shuffling image cipher with an image-derived key", "pixshuffle"};
  app.require_subcommand(1);

  CipherArgs enc_args;
  CipherArgs dec_args;
  std::string key_input;
  AnalyzeArgs analyze_args;

  auto* enc = app.add_subcommand("encrypt", "encrypt a PPM image");
  add_cipher_options(*enc, enc_args);
  auto* dec = app.add_subcommand("decrypt", "decrypt a PPM image");
  add_cipher_options(*dec, dec_args);
  auto* key = app.add_subcommand("key", "print the key material derived from an image");
  key->add_option("in", key_input, "input PPM")->required();
  auto* analyze = app.add_subcommand("analyze", "entropy, histograms, RGB series and correlations");
  analyze->add_option("in", analyze_args.input, "input PPM")->required();
  analyze->add_option("--against", analyze_args.against, "ciphered counterpart to check invariants");
  analyze->add_option("--n", analyze_args.n, "number of pixels in the RGB series")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  analyze->add_option("--format", analyze_args.format, "report format")
      ->check(CLI::IsMember({"structured", "json", "csv", "text"}))
      ->capture_default_str();
  analyze->add_option("--out", analyze_args.output, "write the report here instead of stdout");

  // CLI11 wants argv order reversed when given a vector
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*enc) return run_encrypt(enc_args, out);
    if (*dec) return run_decrypt(dec_args, out);
    if (*key) return run_key(key_input, out);
    if (*analyze) return run_analyze(analyze_args, out, err);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::system_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace pixshuffle::cli
