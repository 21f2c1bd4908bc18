#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rskc/channel.hpp"
#include "rskc/keychain.hpp"
#include "rskc/stream_format.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;   // usage or format errors
constexpr int kExitDecode = 2;  // decode failure

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rskc::FormatError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw rskc::FormatError("cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw rskc::FormatError("short write to " + path.string());
}

std::string hex_key(const rskc::Key& key) {
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (const auto sym : key) out << std::setw(2) << static_cast<unsigned>(sym);
  return out.str();
}

int run_keygen(const std::optional<std::uint64_t>& seed, const std::filesystem::path& out) {
  rskc::save_key(out, rskc::random_key(seed));
  return kExitOk;
}

int run_encrypt(const std::filesystem::path& key_path, const std::filesystem::path& in,
                const std::filesystem::path& out) {
  const rskc::Key key = rskc::load_key(key_path);
  const std::string plaintext = read_text_file(in);
  const auto result = rskc::encrypt_stream(plaintext, key);
  rskc::save_stream(out, result.stream);
  return kExitOk;
}

int run_decrypt(const std::filesystem::path& key_path, const std::filesystem::path& in,
                const std::filesystem::path& out) {
  const rskc::Key key = rskc::load_key(key_path);
  const rskc::CipherStream stream = rskc::load_stream(in);
  const auto result = rskc::decrypt_stream(stream, key);
  if (!result.ok) {
    std::cerr << "decode failure at chunk " << result.failed_chunk
              << ": more than " << rskc::rs::kMaxErrors << " symbol errors\n";
    return kExitDecode;  // no partial output
  }
  write_text_file(out, result.plaintext);
  return kExitOk;
}

int run_corrupt(const std::filesystem::path& in, const std::filesystem::path& out,
                unsigned errors, std::uint64_t seed) {
  rskc::CipherStream stream = rskc::load_stream(in);
  for (std::size_t i = 0; i < stream.chunk_count(); ++i) {
    const rskc::ChannelSpec spec{rskc::ExactCount{errors}, rskc::derive_seed(seed, i)};
    stream.codewords[i] = rskc::inject_errors(stream.codewords[i], spec).word;
  }
  rskc::save_stream(out, stream);
  return kExitOk;
}

int run_inspect(const std::filesystem::path& key_path, const std::filesystem::path& in) {
  const rskc::Key key = rskc::load_key(key_path);
  const rskc::CipherStream stream = rskc::load_stream(in);

  std::cout << "chunks: " << stream.chunk_count() << "\n"
            << "original_len: " << stream.original_len << "\n";

  // Dry-run decode of every codeword; the key chain continues only while
  // codewords decode (later keys depend on earlier parities).
  rskc::KeyChain chain{key};
  bool chain_intact = true;
  bool any_failure = false;
  for (std::size_t i = 0; i < stream.chunk_count(); ++i) {
    const auto decoded = rskc::rs::decode(stream.codewords[i]);
    if (decoded.ok()) {
      std::cout << "chunk " << i << ": corrected " << decoded.report.corrected_count
                << " error(s)\n";
      if (chain_intact) chain.push_back(rskc::evolve_key(chain.back(), decoded.corrected));
    } else {
      std::cout << "chunk " << i << ": DECODE FAILURE (more than "
                << rskc::rs::kMaxErrors << " symbol errors)\n";
      any_failure = true;
      chain_intact = false;
    }
  }

  std::cout << "key chain (" << chain.size() << " key(s)";
  if (!chain_intact) std::cout << ", truncated at first decode failure";
  std::cout << "):\n";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    std::cout << "  key[" << i << "]: " << hex_key(chain[i]) << "\n";
  }

  const auto stats = rskc::key_chain_stats(chain);
  std::cout << "distinct keys: " << stats.distinct_keys << "\n"
            << "step distances:";
  for (const auto d : stats.step_distances) std::cout << ' ' << d;
  std::cout << "\n";
  return any_failure ? kExitDecode : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RS(127,63) keychain cipher: XOR encryption with parity-driven key refresh"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> keygen_seed;
  std::filesystem::path keygen_out;
  auto* keygen = app.add_subcommand("keygen", "Generate a random 63-symbol key file");
  keygen->add_option("--seed", keygen_seed, "Deterministic seed (default: OS entropy)");
  keygen->add_option("--out", keygen_out, "Output key file")->required();

  std::filesystem::path key_path, in_path, out_path;
  auto* encrypt = app.add_subcommand("encrypt", "Encrypt an ASCII file into a stream file");
  encrypt->add_option("--key", key_path, "Key file (63 bytes)")->required();
  encrypt->add_option("--in", in_path, "Plaintext input (bytes < 128)")->required();
  encrypt->add_option("--out", out_path, "Stream file output")->required();

  auto* decrypt = app.add_subcommand("decrypt", "Decrypt a stream file");
  decrypt->add_option("--key", key_path, "Key file (63 bytes)")->required();
  decrypt->add_option("--in", in_path, "Stream file input")->required();
  decrypt->add_option("--out", out_path, "Plaintext output")->required();

  unsigned corrupt_errors = 0;
  std::uint64_t corrupt_seed = 0;
  auto* corrupt = app.add_subcommand("corrupt", "Inject symbol errors into each codeword");
  corrupt->add_option("--in", in_path, "Stream file input")->required();
  corrupt->add_option("--out", out_path, "Corrupted stream file output")->required();
  corrupt->add_option("--errors", corrupt_errors, "Symbol errors per codeword (0-127)")
      ->required()
      ->check(CLI::Range(0u, 127u));
  corrupt->add_option("--seed", corrupt_seed, "Channel seed (default 0)");

  auto* inspect = app.add_subcommand("inspect", "Report chunk health, key chain and stats");
  inspect->add_option("--key", key_path, "Key file (63 bytes)")->required();
  inspect->add_option("--in", in_path, "Stream file input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (keygen->parsed()) return run_keygen(keygen_seed, keygen_out);
    if (encrypt->parsed()) return run_encrypt(key_path, in_path, out_path);
    if (decrypt->parsed()) return run_decrypt(key_path, in_path, out_path);
    if (corrupt->parsed()) return run_corrupt(in_path, out_path, corrupt_errors, corrupt_seed);
    if (inspect->parsed()) return run_inspect(key_path, in_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
