#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "hermrank/oracle.hpp"
#include "hermrank/simulate.hpp"

namespace hermrank::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out_path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw UsageError("cannot write " + out_path);
  file << text;
}

std::vector<unsigned> parse_ranks(const std::string& spec) {
  std::vector<unsigned> ranks;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto dash = item.find('-');
    try {
      if (dash == std::string::npos) {
        ranks.push_back(static_cast<unsigned>(std::stoul(item)));
      } else {
        const auto lo = std::stoul(item.substr(0, dash));
        const auto hi = std::stoul(item.substr(dash + 1));
        if (hi < lo) throw UsageError("bad rank range " + item);
        for (auto t = lo; t <= hi; ++t) ranks.push_back(static_cast<unsigned>(t));
      }
    } catch (const std::logic_error&) {
      throw UsageError("bad rank list \"" + spec + "\"");
    }
  }
  return ranks;
}

ErrorMode parse_mode(const std::string& mode) {
  if (mode == "arbitrary") return ErrorMode::Arbitrary;
  if (mode == "hermitian") return ErrorMode::Hermitian;
  throw UsageError("mode must be arbitrary or hermitian");
}

std::string format_felt(const Field& field, const Felt& x) {
  std::string s = "[";
  for (unsigned i = 0; i < field.degree(); ++i) {
    if (i) s += ' ';
    s += std::to_string(x.c[i]);
  }
  return s + "]";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Encoding, corruption and decoding for maximum Hermitian rank-metric codes"};
  app.require_subcommand(1);

  std::uint64_t q = 0;
  unsigned n = 0, d = 0;
  std::string out_path, params_path, message_path, codeword_path, received_path, dump_path;
  std::uint64_t seed = 0;
  unsigned rank = 0;
  std::string mode = "arbitrary";

  auto* params_cmd = app.add_subcommand("params", "Build code parameters");
  params_cmd->add_option("--q", q, "prime field size")->required();
  params_cmd->add_option("--n", n, "odd length")->required();
  params_cmd->add_option("--d", d, "odd minimum distance")->required();
  params_cmd->add_option("--out", out_path);

  auto* message_cmd = app.add_subcommand("message", "Draw a random message");
  message_cmd->add_option("--params", params_path)->required();
  message_cmd->add_option("--seed", seed)->required();
  message_cmd->add_option("--out", out_path);

  auto* encode_cmd = app.add_subcommand("encode", "Encode a message");
  encode_cmd->add_option("--params", params_path)->required();
  encode_cmd->add_option("--message", message_path)->required();
  encode_cmd->add_option("--out", out_path);

  auto* corrupt_cmd = app.add_subcommand("corrupt", "Add a random error of given rank");
  corrupt_cmd->add_option("--params", params_path)->required();
  corrupt_cmd->add_option("--codeword", codeword_path)->required();
  corrupt_cmd->add_option("--rank", rank)->required();
  corrupt_cmd->add_option("--seed", seed)->required();
  corrupt_cmd->add_option("--mode", mode, "arbitrary | hermitian");
  corrupt_cmd->add_option("--out", out_path);

  auto* decode_cmd = app.add_subcommand("decode", "Decode a received word");
  decode_cmd->add_option("--params", params_path)->required();
  decode_cmd->add_option("--received", received_path)->required();
  decode_cmd->add_option("--dump", dump_path, "write beta, error polynomial and Dickson matrix as JSON");
  decode_cmd->add_option("--out", out_path);

  std::uint64_t trials = 0;
  std::string ranks_spec;
  unsigned threads = 1;
  bool timing = false;
  auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo decoding simulation");
  sim_cmd->add_option("--q", q)->required();
  sim_cmd->add_option("--n", n)->required();
  sim_cmd->add_option("--d", d)->required();
  sim_cmd->add_option("--trials", trials)->required();
  sim_cmd->add_option("--ranks", ranks_spec, "e.g. 0,1,2 or 0-3 (default 0..radius)");
  sim_cmd->add_option("--seed", seed)->required();
  sim_cmd->add_option("--threads", threads);
  sim_cmd->add_option("--mode", mode, "arbitrary | hermitian");
  sim_cmd->add_flag("--timing", timing, "include decode latency statistics");
  sim_cmd->add_option("--out", out_path);

  std::uint64_t limit = kDefaultEnumerationLimit;
  auto* mindist_cmd = app.add_subcommand("mindist", "Brute-force minimum distance and code size");
  mindist_cmd->add_option("--params", params_path);
  mindist_cmd->add_option("--q", q);
  mindist_cmd->add_option("--n", n);
  mindist_cmd->add_option("--d", d);
  mindist_cmd->add_option("--limit", limit, "maximum number of codewords to enumerate");
  mindist_cmd->add_option("--out", out_path);

  bool as_json = false;
  auto* matrix_cmd = app.add_subcommand("matrix", "Show the Hermitian matrix of a codeword");
  matrix_cmd->add_option("--params", params_path)->required();
  matrix_cmd->add_option("--codeword", codeword_path)->required();
  matrix_cmd->add_flag("--json", as_json);

  std::vector<const char*> argv{"hermrank"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*params_cmd) {
      emit(params_to_json(build_params(q, n, d)), out_path, out);
      return kExitOk;
    }
    if (*message_cmd) {
      const CodeParams p = params_from_json(read_json(params_path));
      Rng rng(seed);
      emit(message_to_json(p, random_message(p, rng)), out_path, out);
      return kExitOk;
    }
    if (*encode_cmd) {
      const CodeParams p = params_from_json(read_json(params_path));
      const Message msg = message_from_json(p, read_json(message_path));
      emit(word_to_json(p, encode(p, msg)), out_path, out);
      return kExitOk;
    }
    if (*corrupt_cmd) {
      const CodeParams p = params_from_json(read_json(params_path));
      const auto c = word_from_json(p, read_json(codeword_path));
      const auto e = random_rank_error(p, ChannelSpec{rank, parse_mode(mode), seed});
      emit(word_to_json(p, corrupt(p.field, c, e)), out_path, out);
      return kExitOk;
    }
    if (*decode_cmd) {
      const CodeParams p = params_from_json(read_json(params_path));
      const auto r = word_from_json(p, read_json(received_path));
      const DecodeResult res = decode(p, r);
      emit(decode_result_to_json(p, res), out_path, out);
      if (!dump_path.empty()) {
        const BetaSplit split = beta_split(p, r);
        json dump{{"beta", vector_to_json(p.field, split.beta)},
                  {"known_start", split.known.start},
                  {"known", vector_to_json(p.field, split.known.values)}};
        if (res.success) dump["dickson"] = matrix_to_json(p.field, dickson(p.field, res.error_poly));
        emit(dump, dump_path, out);
      }
      return res.success ? kExitOk : kExitDecodeFailure;
    }
    if (*sim_cmd) {
      const CodeParams p = build_params(q, n, d);
      SimConfig cfg;
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.threads = threads;
      cfg.mode = parse_mode(mode);
      if (ranks_spec.empty()) {
        for (unsigned t = 0; t <= p.radius(); ++t) cfg.ranks.push_back(t);
      } else {
        cfg.ranks = parse_ranks(ranks_spec);
      }
      emit(report_to_json(simulate(p, cfg), timing), out_path, out);
      return kExitOk;
    }
    if (*mindist_cmd) {
      CodeParams p = params_path.empty() ? (q && n && d ? build_params(q, n, d)
                                                        : throw UsageError("mindist needs --params or --q/--n/--d"))
                                         : params_from_json(read_json(params_path));
      const auto start = std::chrono::steady_clock::now();
      const CodeTable table = enumerate_code(p, limit);
      const unsigned dist = brute_min_distance(p, table);
      const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
      emit(json{{"q", p.field.q()},
                {"n", p.n()},
                {"d", p.d},
                {"code_size", distinct_codewords(table)},
                {"min_distance", dist},
                {"elapsed_ms", static_cast<std::int64_t>(elapsed.count())}},
           out_path, out);
      return kExitOk;
    }
    if (*matrix_cmd) {
      const CodeParams p = params_from_json(read_json(params_path));
      const auto c = word_from_json(p, read_json(codeword_path));
      const HermitianMatrix a = codeword_to_matrix(p, c);
      const bool herm = a.is_hermitian(p.field);
      if (as_json) {
        emit(json{{"matrix", matrix_to_json(p.field, a.entries)},
                  {"hermitian", herm},
                  {"rank", matrix_rank(p.field, a.entries)}},
             "", out);
      } else {
        for (std::size_t i = 0; i < a.entries.rows(); ++i) {
          for (std::size_t j = 0; j < a.entries.cols(); ++j)
            out << (j ? " " : "") << format_felt(p.field, a.entries(i, j));
          out << "\n";
        }
        out << "hermitian=" << (herm ? "true" : "false") << "\n";
      }
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hermrank::cli
