// rgvss: contrast tables, corrigendum diff, share encoding/decoding and
// oracle verification for random-grid (k,n) visual secret sharing.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or I/O error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rgvss/analytic.hpp"
#include "rgvss/bitmap.hpp"
#include "rgvss/codec.hpp"
#include "rgvss/oracle.hpp"
#include "rgvss/pbm.hpp"
#include "rgvss/report.hpp"

namespace fs = std::filesystem;
using namespace rgvss;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kMaxTableShares = 12;

struct TableArgs {
  int k = 0;
  int n = 0;
  std::string format = "markdown";
  bool show_transmissions = false;
};

struct CorrigendumArgs {
  std::string format = "markdown";
};

struct EncodeArgs {
  std::string secret;
  int k = 0;
  int n = 0;
  std::string policy = "averaged";
  std::uint64_t seed = 0;
  std::string out;
  bool ascii = false;
};

struct DecodeArgs {
  std::string op;
  std::string out;
  std::vector<std::string> shares;
  std::string secret;
  bool ascii = false;
};

struct VerifyArgs {
  int k = 0;
  int n = 0;
  std::uint64_t trials = 100000;
  std::uint64_t seed = 1;
  std::string format = "markdown";
};

int run_contrast_table(const TableArgs& a) {
  if (a.n > kMaxTableShares) {
    throw ParameterError("contrast-table supports n <= " + std::to_string(kMaxTableShares));
  }
  const auto scheme = SchemeParams::make(a.k, a.n);
  std::cout << report::contrast_table(analytic::contrast_table(scheme),
                                      report::parse_format(a.format), a.show_transmissions);
  return kExitOk;
}

int run_corrigendum(const CorrigendumArgs& a) {
  std::cout << report::corrigendum(analytic::corrigendum_report(), report::parse_format(a.format));
  return kExitOk;
}

int run_encode(const EncodeArgs& a) {
  const auto scheme = SchemeParams::make(a.k, a.n);
  const auto policy = codec::EncodingPolicy::parse(scheme, a.policy);
  const Bitmap secret = pbm::read(fs::path(a.secret));
  const ShareSet set = encode_image(secret, policy, a.seed);

  const fs::path out_dir(a.out);
  fs::create_directories(out_dir);
  const std::string stem = fs::path(a.secret).stem().string();
  const auto format = a.ascii ? pbm::Format::kAscii : pbm::Format::kBinary;
  nlohmann::json files = nlohmann::json::array();
  for (std::size_t i = 0; i < set.shares.size(); ++i) {
    const std::string name = stem + ".share" + std::to_string(i + 1) + ".pbm";
    pbm::write(out_dir / name, set.shares[i], format);
    files.push_back(name);
  }
  const nlohmann::json manifest{{"scheme", {{"k", scheme.k}, {"n", scheme.n}}},
                                {"policy", policy.str()},
                                {"seed", a.seed},
                                {"width", secret.width()},
                                {"height", secret.height()},
                                {"shares", files}};
  const fs::path manifest_path = out_dir / (stem + ".manifest.json");
  std::ofstream mf(manifest_path);
  if (!mf) throw std::runtime_error("cannot write " + manifest_path.string());
  mf << manifest.dump(2) << '\n';
  std::cout << "wrote " << set.shares.size() << " shares and " << manifest_path.string() << '\n';
  return kExitOk;
}

int run_decode(const DecodeArgs& a) {
  const StackOp op = parse_stack_op(a.op);
  std::vector<Bitmap> shares;
  shares.reserve(a.shares.size());
  for (const auto& p : a.shares) shares.push_back(pbm::read(fs::path(p)));
  const Bitmap recon = reconstruct(shares, op);
  pbm::write(fs::path(a.out), recon, a.ascii ? pbm::Format::kAscii : pbm::Format::kBinary);
  std::cout << "stacked " << shares.size() << " shares with " << to_string(op) << " -> " << a.out
            << '\n';
  if (a.secret.empty()) return kExitOk;

  const Bitmap secret = pbm::read(fs::path(a.secret));
  double fraction[2] = {-1.0, -1.0};
  for (Pixel region : {Pixel::kWhite, Pixel::kBlack}) {
    const char* name = region == Pixel::kWhite ? "white" : "black";
    try {
      const auto m = measure_transmission(recon, secret, region);
      fraction[to_bit(region)] = m.value();
      std::cout << "region " << to_bit(region) << " (" << name << "): white fraction "
                << m.value() << " (" << m.white << "/" << m.total << ")\n";
    } catch (const ParameterError&) {
      std::cout << "region " << to_bit(region) << " (" << name << "): empty\n";
    }
  }
  if (fraction[0] >= 0.0 && fraction[1] >= 0.0) {
    std::cout << "measured contrast: " << (fraction[0] - fraction[1]) / (1.0 + fraction[1])
              << '\n';
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  const auto scheme = SchemeParams::make(a.k, a.n);
  if (a.trials == 0) throw ParameterError("--trials must be >= 1");
  const auto rep = oracle::verify_scheme(scheme, a.trials, a.seed);
  std::cout << report::verify(rep, report::parse_format(a.format));
  return rep.all_pass() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-grid (k,n) visual secret sharing: contrast analysis and share tools"};
  app.require_subcommand(1);

  TableArgs table;
  auto* table_cmd = app.add_subcommand("contrast-table", "Exact contrast for t = k..n");
  table_cmd->add_option("--k", table.k, "Threshold k")->required();
  table_cmd->add_option("--n", table.n, "Share count n")->required();
  table_cmd->add_option("--format", table.format, "markdown|csv|json");
  table_cmd->add_flag("--show-transmissions", table.show_transmissions,
                      "Also print T(s=0), T(s=1) per operation");

  CorrigendumArgs corr;
  auto* corr_cmd =
      app.add_subcommand("corrigendum", "Previously published vs recomputed contrast values");
  corr_cmd->add_option("--format", corr.format, "markdown|csv|json");

  EncodeArgs enc;
  auto* enc_cmd = app.add_subcommand("encode", "Split a PBM secret into n share images");
  enc_cmd->add_option("--secret", enc.secret, "Secret PBM image")->required();
  enc_cmd->add_option("--k", enc.k, "Threshold k")->required();
  enc_cmd->add_option("--n", enc.n, "Share count n")->required();
  enc_cmd->add_option("--policy", enc.policy, "averaged|fixed:<j>");
  enc_cmd->add_option("--seed", enc.seed, "Master seed");
  enc_cmd->add_option("--out", enc.out, "Output directory")->required();
  enc_cmd->add_flag("--ascii", enc.ascii, "Write P1 instead of P4");

  DecodeArgs dec;
  auto* dec_cmd = app.add_subcommand("decode", "Stack share images");
  dec_cmd->add_option("--op", dec.op, "or|xor")->required();
  dec_cmd->add_option("--out", dec.out, "Reconstructed PBM")->required();
  dec_cmd->add_option("--secret", dec.secret, "Secret PBM; prints per-region white fractions");
  dec_cmd->add_flag("--ascii", dec.ascii, "Write P1 instead of P4");
  dec_cmd->add_option("shares", dec.shares, "Share PBM files")->required();

  VerifyArgs ver;
  auto* ver_cmd = app.add_subcommand(
      "verify", "Check closed form against enumeration and Monte Carlo for every t, op, s");
  ver_cmd->add_option("--k", ver.k, "Threshold k")->required();
  ver_cmd->add_option("--n", ver.n, "Share count n")->required();
  ver_cmd->add_option("--trials", ver.trials, "Monte Carlo trials per quantity");
  ver_cmd->add_option("--seed", ver.seed, "Monte Carlo seed");
  ver_cmd->add_option("--format", ver.format, "markdown|csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table_cmd) return run_contrast_table(table);
    if (*corr_cmd) return run_corrigendum(corr);
    if (*enc_cmd) return run_encode(enc);
    if (*dec_cmd) return run_decode(dec);
    if (*ver_cmd) return run_verify(ver);
  } catch (const std::exception& e) {
    std::cerr << "rgvss: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
