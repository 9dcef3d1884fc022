// Command-line front end: every operation with JSON output on stdout.
// Output bytes are deterministic for identical invocations.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ge/enumerate.hpp"
#include "ge/json_io.hpp"
#include "ge/walk.hpp"

namespace {

using ge::Json;

ge::Permutation parse_images(const std::string &text) {
  std::istringstream in(text);
  std::vector<int> images;
  int value = 0;
  while (in >> value) images.push_back(value);
  if (!in.eof()) throw ge::ParseError("permutation must be a list of one-indexed images");
  return ge::Permutation(std::move(images));
}

std::vector<ge::Int> parse_int_list(const std::string &text) {
  std::istringstream in(text);
  std::vector<ge::Int> values;
  ge::Int value = 0;
  while (in >> value) values.push_back(value);
  if (!in.eof()) throw ge::ParseError("expected a whitespace-separated integer list");
  return values;
}

std::vector<int> parse_artin_letters(const std::string &text, int rank) {
  std::istringstream in(text);
  std::vector<int> letters;
  int value = 0;
  while (in >> value) {
    const int index = value > 0 ? value : -value;
    if (value == 0 || index > rank)
      throw ge::RangeError("Artin letter " + std::to_string(value) + " out of range for rank " +
                           std::to_string(rank));
    letters.push_back(value);
  }
  if (!in.eof()) throw ge::ParseError("Artin word must be a list of signed generator indices");
  return letters;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

std::uint64_t walk_state_budget() {
  if (const char *env = std::getenv("GE_WALK_STATE_BUDGET")) {
    const long long parsed = std::atoll(env);
    if (parsed > 0) return static_cast<std::uint64_t>(parsed);
  }
  return 4'000'000;
}

void emit(const Json &payload, bool pretty) {
  if (!pretty) {
    std::cout << payload.dump() << "\n";
    return;
  }
  // Aligned key/value text for humans; the JSON form stays the stable one.
  std::size_t width = 0;
  for (const auto &item : payload.items()) width = std::max(width, item.key().size());
  std::string out;
  for (const auto &item : payload.items()) {
    out += item.key();
    out.append(width - item.key().size() + 2, ' ');
    if (item.value().is_string())
      out += item.value().get<std::string>();
    else
      out += item.value().dump();
    out += "\n";
  }
  std::cout << out;
}

struct CliOptions {
  bool pretty = false;
};

int run(int argc, char **argv) {
  CLI::App app{"Gauss-Epple braid invariants toolkit"};
  app.require_subcommand(1);
  CliOptions opts;
  app.add_flag("--pretty", opts.pretty, "indented JSON plus cycle notation where applicable");

  // word
  std::string word_text;
  int word_n = 3;
  bool word_reduce = false;
  long long word_random = -1;
  unsigned long long word_seed = 0;
  auto *word_cmd = app.add_subcommand("word", "parse, normalize and classify a braid word");
  word_cmd->add_option("--n", word_n, "strand count")->required();
  word_cmd->add_option("--word", word_text, "braid word, e.g. \"1 2^2 -1\"");
  word_cmd->add_flag("--reduce", word_reduce, "freely reduce before reporting");
  word_cmd->add_option("--random", word_random, "generate a random word of this length instead");
  word_cmd->add_option("--seed", word_seed, "seed for --random");

  // eval
  std::string eval_word, eval_hom = "ge";
  int eval_n = 3;
  auto *eval_cmd = app.add_subcommand("eval", "image of a word under ge, symge or sge");
  eval_cmd->add_option("--n", eval_n, "strand count")->required();
  eval_cmd->add_option("--word", eval_word, "braid word")->required();
  eval_cmd->add_option("--hom", eval_hom, "ge | symge | sge");

  // kernel
  std::string kernel_word, kernel_hom = "ge";
  int kernel_n = 3;
  auto *kernel_cmd = app.add_subcommand("kernel", "kernel membership per homomorphism");
  kernel_cmd->add_option("--n", kernel_n, "strand count")->required();
  kernel_cmd->add_option("--word", kernel_word, "braid word")->required();
  kernel_cmd->add_option("--hom", kernel_hom, "ge | symge | sge");

  // construct
  std::string construct_pi, construct_ell;
  auto *construct_cmd =
      app.add_subcommand("construct", "word with a prescribed permutation and linking vector");
  construct_cmd->add_option("--pi", construct_pi, "one-indexed image list, e.g. \"2 1 3\"")
      ->required();
  construct_cmd->add_option("--ell", construct_ell, "linking vector, e.g. \"1 0 0\"")->required();

  // cocycle
  std::string cocycle_pi, cocycle_type, cocycle_word;
  auto *cocycle_cmd = app.add_subcommand("cocycle", "Fbar of a permutation or Coxeter word");
  cocycle_cmd->add_option("--pi", cocycle_pi, "one-indexed image list (symmetric-group case)");
  cocycle_cmd->add_option("--type", cocycle_type, "root system tag (Artin case)");
  cocycle_cmd->add_option("--coxeter-word", cocycle_word,
                          "signed generator indices naming a Coxeter element");

  // artin-verify
  std::string verify_type;
  auto *verify_cmd = app.add_subcommand("artin-verify", "braid-relation report for a root system");
  verify_cmd->add_option("--type", verify_type, "root system tag, e.g. A3, B3, D4, G2, I2(5)")
      ->required();

  // analogue
  std::string analogue_file;
  auto *analogue_cmd =
      app.add_subcommand("analogue", "linking-vector analogue space of a presentation");
  analogue_cmd->add_option("--presentation", analogue_file, "presentation JSON file")->required();

  // walk
  int walk_n = 3, walk_max = 8;
  unsigned long long walk_samples = 0, walk_seed = 1;
  bool walk_fit = false;
  auto *walk_cmd = app.add_subcommand("walk", "kernel-return statistics as CSV");
  walk_cmd->add_option("--n", walk_n, "strand count")->required();
  walk_cmd->add_option("--max-length", walk_max, "largest word length")->required();
  walk_cmd->add_option("--samples", walk_samples, "Monte Carlo samples per length (0: skip)");
  walk_cmd->add_option("--seed", walk_seed, "Monte Carlo seed");
  walk_cmd->add_flag("--fit", walk_fit, "append the fitted decay exponent as a comment row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    Json err;
    err["status"] = "error";
    err["code"] = "usage_error";
    err["message"] = e.what();
    std::cout << err.dump() << "\n";
    return 2;
  }

  if (word_cmd->parsed()) {
    ge::BraidWord w = word_random >= 0
                          ? ge::random_word(word_n, static_cast<std::size_t>(word_random),
                                            word_seed)
                          : ge::parse_word(word_text, word_n);
    if (word_reduce) w = ge::free_reduce(w);
    Json j = ge::word_to_json(w);
    j["writhe"] = ge::writhe(w);
    const ge::Permutation pi = ge::permutation(w);
    j["permutation"] = pi.images();
    if (opts.pretty) j["cycles"] = pi.cycle_string();
    emit(j, opts.pretty);
    return 0;
  }

  if (eval_cmd->parsed()) {
    const ge::BraidWord w = ge::parse_word(eval_word, eval_n);
    Json j;
    if (eval_hom == "ge")
      j = ge::ge_to_json(ge::ge_image(w));
    else if (eval_hom == "symge")
      j = ge::ge_to_json(ge::symge_image(w));
    else if (eval_hom == "sge")
      j = ge::sge_to_json(ge::sge_image(w));
    else
      throw ge::ValidationError("unknown homomorphism '" + eval_hom + "'");
    if (opts.pretty) j["cycles"] = ge::permutation(w).cycle_string();
    emit(j, opts.pretty);
    return 0;
  }

  if (kernel_cmd->parsed()) {
    const ge::BraidWord w = ge::parse_word(kernel_word, kernel_n);
    bool in_kernel = false;
    if (kernel_hom == "ge")
      in_kernel = ge::in_kernel_ge(w);
    else if (kernel_hom == "symge")
      in_kernel = ge::in_kernel_symge(w);
    else if (kernel_hom == "sge")
      in_kernel = ge::sge_image(w).is_identity();
    else
      throw ge::ValidationError("unknown homomorphism '" + kernel_hom + "'");
    Json j;
    j["in_kernel"] = in_kernel;
    emit(j, opts.pretty);
    return 0;
  }

  if (construct_cmd->parsed()) {
    const ge::Permutation pi = parse_images(construct_pi);
    const std::vector<ge::Int> ell = parse_int_list(construct_ell);
    const ge::BraidWord w = ge::construct_braid(pi, ell);
    Json j = ge::word_to_json(w);
    j["word"] = ge::format_word(w);
    emit(j, opts.pretty);
    return 0;
  }

  if (cocycle_cmd->parsed()) {
    if (!cocycle_type.empty()) {
      const ge::RootSystem rs = ge::RootSystem::make(cocycle_type);
      const std::vector<int> letters = parse_artin_letters(cocycle_word, rs.rank());
      const ge::ArtinElement image = ge::artin_sge_image(letters, rs);
      Json j;
      j["type"] = rs.name();
      j["c"] = image.c().map();
      j["f"] = ge::root_vector_to_json(ge::artin_cocycle_Fbar(image.c(), rs));
      Json legend = Json::array();
      for (int alpha = 0; alpha < rs.root_count(); ++alpha) legend.push_back(rs.legend(alpha));
      j["legend"] = std::move(legend);
      emit(j, opts.pretty);
      return 0;
    }
    if (cocycle_pi.empty())
      throw ge::ValidationError("cocycle needs --pi or --type with --coxeter-word");
    const ge::Permutation pi = parse_images(cocycle_pi);
    Json j;
    j["pi"] = pi.images();
    j["f"] = ge::matrix_to_json(ge::cocycle_Fbar(pi));
    if (opts.pretty) j["cycles"] = pi.cycle_string();
    emit(j, opts.pretty);
    return 0;
  }

  if (verify_cmd->parsed()) {
    const ge::RootSystem rs = ge::RootSystem::make(verify_type);
    emit(ge::relation_report_to_json(ge::verify_braid_relations(rs)), opts.pretty);
    return 0;
  }

  if (analogue_cmd->parsed()) {
    std::ifstream in(analogue_file);
    if (!in) throw ge::ParseError("cannot open presentation file '" + analogue_file + "'");
    Json doc = Json::parse(in, nullptr, true);
    ge::Presentation pres;
    ge::PermRep rep;
    ge::parse_presentation_json(doc, pres, rep);
    const ge::AnalogueResult result = ge::analogue_space(pres, rep);
    emit(ge::analogue_result_to_json(result, ge::generate_constraints(pres, rep)), opts.pretty);
    return 0;
  }

  if (walk_cmd->parsed()) {
    std::vector<std::uint64_t> exact;
    bool have_exact = true;
    try {
      exact = ge::exact_kernel_counts(walk_n, walk_max, walk_state_budget(), true);
    } catch (const ge::ResourceError &e) {
      have_exact = false;
      std::cerr << "exact counts skipped: " << e.what() << "\n";
    }
    const double letters = 2.0 * (walk_n - 1);
    std::string csv = "n,N,exact,estimate,ci_low,ci_high\n";
    std::vector<std::pair<int, double>> fit_points;
    for (int length = 0; length <= walk_max; ++length) {
      csv += std::to_string(walk_n) + "," + std::to_string(length) + ",";
      if (have_exact) {
        csv += std::to_string(exact[static_cast<std::size_t>(length)]);
        const double p = static_cast<double>(exact[static_cast<std::size_t>(length)]) *
                         std::exp(-length * std::log(letters));
        fit_points.emplace_back(length, p);
      } else {
        csv += "NA";
      }
      if (walk_samples > 0) {
        const ge::KernelEstimate est =
            ge::kernel_hit_probability(walk_n, length, walk_samples, walk_seed);
        csv += "," + format_double(est.estimate) + "," + format_double(est.ci_low) + "," +
               format_double(est.ci_high);
        if (!have_exact) fit_points.emplace_back(length, est.estimate);
      } else {
        csv += ",NA,NA,NA";
      }
      csv += "\n";
    }
    if (walk_fit) {
      try {
        csv += "# exponent," + format_double(ge::estimate_decay_exponent(fit_points)) + "\n";
      } catch (const ge::EstimationError &) {
        csv += "# exponent,NA\n";
      }
    }
    std::cout << csv;
    return 0;
  }

  return 0;
}

} // namespace

int main(int argc, char **argv) {
  try {
    return run(argc, argv);
  } catch (const ge::Error &e) {
    ge::Json err;
    err["status"] = "error";
    err["code"] = e.code();
    err["message"] = e.what();
    std::cout << err.dump() << "\n";
    return 1;
  } catch (const std::exception &e) {
    ge::Json err;
    err["status"] = "error";
    err["code"] = "internal_error";
    err["message"] = e.what();
    std::cout << err.dump() << "\n";
    return 3;
  }
}
