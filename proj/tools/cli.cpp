#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "oicmark/attack.hpp"
#include "oicmark/embed.hpp"
#include "oicmark/image_io.hpp"
#include "oicmark/key.hpp"
#include "oicmark/metrics.hpp"
#include "oicmark/report.hpp"
#include "oicmark/verify.hpp"

namespace oic::cli {
namespace {

namespace fs = std::filesystem;

// Raised for anything the user can fix: bad flags, unreadable files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path.string());
}

struct IdOptions {
  std::string id;
  std::string id_file;
};

void add_id_options(CLI::App* cmd, IdOptions& o) {
  auto* id = cmd->add_option("--id", o.id, "Capture-device identifier");
  auto* file = cmd->add_option("--id-file", o.id_file, "File whose first line is the device identifier");
  id->excludes(file);
}

std::string resolve_id(const IdOptions& o) {
  if (!o.id.empty()) return o.id;
  if (o.id_file.empty()) throw UsageError("one of --id or --id-file is required");
  std::string line;
  std::istringstream in(read_text(o.id_file));
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.empty()) throw UsageError("empty device identifier in " + o.id_file);
  return line;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text, const char* flag) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const std::size_t v = std::stoul(text);
      return {v, v};
    }
    return {std::stoul(text.substr(0, colon)), std::stoul(text.substr(colon + 1))};
  } catch (const std::logic_error&) {
    throw UsageError(std::string(flag) + " expects FIRST:LAST, got '" + text + "'");
  }
}

RgbImage load(const std::string& path) {
  try {
    return load_image(path);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

void save(const std::string& path, const RgbImage& image) {
  try {
    save_png(path, image);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
}

std::string manifest_path_for(const std::string& image_path) { return image_path + ".oic.json"; }

// ---------------------------------------------------------------- embed

struct EmbedOptions {
  std::string input, output, strategy = "mac", manifest, report;
  IdOptions id;
};

int run_embed(const EmbedOptions& o, std::ostream& out, std::ostream& err) {
  const Strategy strategy = parse_strategy(o.strategy);
  const WatermarkKey key = derive_key(resolve_id(o.id));
  const RgbImage input = load(o.input);
  const WatermarkedImage marked = embed(input, key, strategy);
  save(o.output, marked.image);

  const std::string manifest = o.manifest.empty() ? manifest_path_for(o.output) : o.manifest;
  write_text(manifest, manifest_to_json(make_manifest(marked)));

  const std::string quality = quality_report_json(compare(input, marked.image));
  if (o.report.empty()) {
    out << quality;
  } else {
    write_text(o.report, quality);
  }
  err << "embedded " << strategy_name(strategy) << " watermark into " << o.output << " ("
      << marked.image.height() << "x" << marked.image.width() << "), manifest " << manifest << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string input, strategy, manifest, model = "consistency", report;
  std::optional<double> tolerance;
  bool force = false;
  IdOptions id;
};

double resolve_tolerance(const VerifyOptions& o, Strategy strategy, DeviationModel model) {
  if (o.tolerance) return *o.tolerance;
  if (const char* env = std::getenv("OICMARK_TOLERANCE"); env && *env) {
    try {
      std::size_t used = 0;
      const double v = std::stod(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
      return v;
    } catch (const std::logic_error&) {
      throw UsageError(std::string("OICMARK_TOLERANCE is not a number: '") + env + "'");
    }
  }
  return default_tolerance(strategy, model);
}

int run_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  const WatermarkKey key = derive_key(resolve_id(o.id));
  const RgbImage image = load(o.input);
  const DeviationModel model = parse_model(o.model);

  std::optional<Manifest> manifest;
  const std::string manifest_file = o.manifest.empty() ? manifest_path_for(o.input) : o.manifest;
  if (fs::exists(manifest_file)) {
    manifest = manifest_from_json(read_text(manifest_file));
  } else if (!o.manifest.empty()) {
    throw UsageError("cannot read manifest " + o.manifest);
  }

  std::optional<Strategy> flag_strategy;
  if (!o.strategy.empty()) flag_strategy = parse_strategy(o.strategy);
  Strategy strategy = kDefaultStrategy;
  if (manifest && flag_strategy && *flag_strategy != manifest->strategy) {
    if (o.force) {
      err << "warning: --strategy " << strategy_name(*flag_strategy) << " overrides manifest strategy "
          << strategy_name(manifest->strategy) << "\n";
      strategy = *flag_strategy;
    } else {
      err << "warning: --strategy " << strategy_name(*flag_strategy) << " disagrees with manifest; using "
          << strategy_name(manifest->strategy) << " (pass --force to override)\n";
      strategy = manifest->strategy;
    }
  } else if (flag_strategy) {
    strategy = *flag_strategy;
  } else if (manifest) {
    strategy = manifest->strategy;
  }
  if (manifest) {
    if (manifest->digest_hex != key.digest_hex) {
      err << "warning: device identifier does not match the manifest digest\n";
    }
    if (manifest->width != image.width() || manifest->height != image.height()) {
      err << "warning: image is " << image.height() << "x" << image.width() << " but the manifest records "
          << manifest->height << "x" << manifest->width << "\n";
    }
  }

  const double tolerance = resolve_tolerance(o, strategy, model);
  if (!(tolerance > 0.0)) throw UsageError("tolerance must be > 0");
  const TamperMap map = verify(image, key, strategy, tolerance, model);
  const Verdict verdict = summarize(map);
  const std::string report = tamper_report_json(map, verdict);
  if (o.report.empty()) {
    out << report;
  } else {
    write_text(o.report, report);
  }
  err << "tampered: " << (verdict.tampered ? "true" : "false") << " (" << verdict.flagged_count << " of "
      << map.checks.size() << " blocks flagged, strategy " << strategy_name(strategy) << ", tolerance "
      << tolerance << "; covers red and blue only)\n";
  return verdict.tampered ? kExitTampered : kExitOk;
}

// ---------------------------------------------------------------- attack

struct AttackOptions {
  std::string input, output, preset, channel, rows, cols, copy_from, spec;
  std::optional<int> value;
  bool list = false;
  bool clip = false;
};

AttackSpec resolve_attack(const AttackOptions& o) {
  const int sources = !o.preset.empty() + !o.spec.empty() + !o.channel.empty();
  if (sources != 1) throw UsageError("give exactly one of --preset, --spec or --channel");
  if (!o.preset.empty()) return find_preset(o.preset).spec;
  if (!o.spec.empty()) return parse_attack_spec(read_text(o.spec));

  if (o.rows.empty() || o.cols.empty()) throw UsageError("--channel needs --rows and --cols");
  if (o.value.has_value() == !o.copy_from.empty()) {
    throw UsageError("--channel needs exactly one of --value and --copy-from");
  }
  AttackSpec spec;
  spec.target = parse_channel(o.channel);
  std::tie(spec.row_first, spec.row_last) = parse_range(o.rows, "--rows");
  std::tie(spec.col_first, spec.col_last) = parse_range(o.cols, "--cols");
  if (o.value) {
    if (*o.value < 0 || *o.value > 255) throw UsageError("--value must be in [0, 255]");
    spec.mode = ConstantFill{static_cast<std::uint8_t>(*o.value)};
  } else {
    spec.mode = CopyChannel{parse_channel(o.copy_from)};
  }
  return spec;
}

int run_attack(const AttackOptions& o, std::ostream& out, std::ostream& err) {
  if (o.list) {
    for (const auto& p : attack_presets()) out << p.name << "  " << p.description << "\n";
    return kExitOk;
  }
  if (o.input.empty() || o.output.empty()) throw UsageError("attack needs --input and --output");
  AttackSpec spec = resolve_attack(o);
  const RgbImage image = load(o.input);
  if (o.clip) {
    auto clipped = clip_to_bounds(spec, image.height(), image.width());
    if (!clipped) throw UsageError("attack region lies entirely outside the image");
    spec = *clipped;
  }
  try {
    validate(spec, image.height(), image.width());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  save(o.output, apply_attack(image, spec));
  err << "attack " << attack_spec_to_json(spec) << " written to " << o.output << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- metrics

struct MetricsOptions {
  std::string reference, test, input, report;
  bool sweep = false;
  IdOptions id;
};

int run_metrics(const MetricsOptions& o, std::ostream& out, std::ostream& err) {
  std::string report;
  if (o.sweep) {
    if (o.input.empty()) throw UsageError("--sweep needs --input");
    const auto rows = quality_sweep(load(o.input), derive_key(resolve_id(o.id)));
    out << render_sweep_table(rows);
    report = quality_sweep_json(rows);
  } else {
    if (o.reference.empty() || o.test.empty()) throw UsageError("metrics needs --reference and --test");
    report = quality_report_json(compare(load(o.reference), load(o.test)));
  }
  if (o.report.empty()) {
    out << report;
  } else {
    write_text(o.report, report);
    err << "report written to " << o.report << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- calibrate

struct CalibrateOptions {
  std::vector<std::string> inputs;
  std::string strategy, model = "consistency";
  IdOptions id;
};

int run_calibrate(const CalibrateOptions& o, std::ostream& out, std::ostream&) {
  const std::string id = resolve_id(o.id);
  const DeviationModel model = parse_model(o.model);
  std::vector<RgbImage> corpus;
  for (const auto& path : o.inputs) corpus.push_back(load(path));

  std::vector<Strategy> strategies(kAllStrategies.begin(), kAllStrategies.end());
  if (!o.strategy.empty()) strategies = {parse_strategy(o.strategy)};
  nlohmann::json j;
  j["model"] = std::string(model_name(model));
  j["images"] = corpus.size();
  for (Strategy s : strategies) {
    j["tolerance"][std::string(strategy_name(s))] = calibrate_tolerance(corpus, id, s, model);
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Embed and verify DCT originality watermarks in RGB medical images"};
  app.set_version_flag("--version", std::string(OICMARK_VERSION));
  app.require_subcommand(1);

  EmbedOptions embed_o;
  auto* embed_cmd = app.add_subcommand("embed", "Watermark an image and write a sidecar manifest");
  embed_cmd->add_option("-i,--input", embed_o.input, "Source image (PNG/BMP/JPEG)")->required();
  embed_cmd->add_option("-o,--output", embed_o.output, "Watermarked PNG")->required();
  add_id_options(embed_cmd, embed_o.id);
  embed_cmd->add_option("-s,--strategy", embed_o.strategy, "dc|fac|mac|lac")->capture_default_str();
  embed_cmd->add_option("--manifest", embed_o.manifest, "Manifest path (default <output>.oic.json)");
  embed_cmd->add_option("--report", embed_o.report, "Write the quality report here instead of stdout");

  VerifyOptions verify_o;
  auto* verify_cmd = app.add_subcommand("verify", "Check an image for tampering");
  verify_cmd->add_option("-i,--input", verify_o.input, "Image to check")->required();
  add_id_options(verify_cmd, verify_o.id);
  verify_cmd->add_option("-s,--strategy", verify_o.strategy, "dc|fac|mac|lac (default: manifest, else mac)");
  verify_cmd->add_option("--manifest", verify_o.manifest, "Manifest path (default <input>.oic.json)");
  verify_cmd->add_flag("--force", verify_o.force, "Let --strategy override the manifest");
  verify_cmd->add_option("-t,--tolerance", verify_o.tolerance,
                         "Deviation threshold (default: $OICMARK_TOLERANCE, else calibrated)");
  verify_cmd->add_option("--model", verify_o.model, "consistency|direct")->capture_default_str();
  verify_cmd->add_option("--report", verify_o.report, "Write the tamper report here instead of stdout");

  AttackOptions attack_o;
  auto* attack_cmd = app.add_subcommand("attack", "Overwrite a region of one channel");
  attack_cmd->add_option("-i,--input", attack_o.input, "Source image");
  attack_cmd->add_option("-o,--output", attack_o.output, "Attacked PNG");
  attack_cmd->add_option("--preset", attack_o.preset, "Named attack, see --list-presets");
  attack_cmd->add_option("--spec", attack_o.spec, "JSON attack spec file");
  attack_cmd->add_option("--channel", attack_o.channel, "Target channel red|green|blue");
  attack_cmd->add_option("--rows", attack_o.rows, "1-based inclusive rows FIRST:LAST");
  attack_cmd->add_option("--cols", attack_o.cols, "1-based inclusive columns FIRST:LAST");
  attack_cmd->add_option("--value", attack_o.value, "Fill value 0-255");
  attack_cmd->add_option("--copy-from", attack_o.copy_from, "Source channel to copy");
  attack_cmd->add_flag("--clip", attack_o.clip, "Clip the region to the image instead of failing");
  attack_cmd->add_flag("--list-presets", attack_o.list, "Print the preset catalog");

  MetricsOptions metrics_o;
  auto* metrics_cmd = app.add_subcommand("metrics", "Quality metrics for an image pair or a strategy sweep");
  metrics_cmd->add_option("--reference", metrics_o.reference, "Original image");
  metrics_cmd->add_option("--test", metrics_o.test, "Image to score");
  metrics_cmd->add_flag("--sweep", metrics_o.sweep, "Embed --input with every strategy and tabulate");
  metrics_cmd->add_option("-i,--input", metrics_o.input, "Source image for --sweep");
  add_id_options(metrics_cmd, metrics_o.id);
  metrics_cmd->add_option("--report", metrics_o.report, "Write the JSON report here instead of stdout");

  CalibrateOptions calibrate_o;
  auto* calibrate_cmd = app.add_subcommand("calibrate", "Derive tolerances from clean round trips");
  calibrate_cmd->add_option("inputs", calibrate_o.inputs, "Corpus images")->required();
  add_id_options(calibrate_cmd, calibrate_o.id);
  calibrate_cmd->add_option("-s,--strategy", calibrate_o.strategy, "Only this strategy (default: all)");
  calibrate_cmd->add_option("--model", calibrate_o.model, "consistency|direct")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*embed_cmd) return run_embed(embed_o, out, err);
    if (*verify_cmd) return run_verify(verify_o, out, err);
    if (*attack_cmd) return run_attack(attack_o, out, err);
    if (*metrics_cmd) return run_metrics(metrics_o, out, err);
    if (*calibrate_cmd) return run_calibrate(calibrate_o, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oic::cli
