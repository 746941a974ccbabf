#include "iris/random.hpp"

#include <vector>

#include "iris/error.hpp"

namespace iris {

SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed);
  const std::uint64_t a = mix.next();
  SplitMix64 mix2(a ^ (index * 0xD1B54A32D192ED03ULL));
  return SplitMix64(mix2.next());
}

std::string to_string(const EntryKind& e) {
  switch (e.kind) {
    case EntryKind::Kind::binary: return "binary";
    case EntryKind::Kind::integer: return "integer:" + std::to_string(e.bound);
    case EntryKind::Kind::gaussian: return "gaussian:" + std::to_string(e.bound);
  }
  return "binary";
}

EntryKind parse_entry_kind(const std::string& text) {
  if (text == "binary") return {EntryKind::Kind::binary, 1};
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  long bound = 1;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      bound = std::stol(text.substr(colon + 1), &used);
      if (used != text.size() - colon - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail_input("bad entry bound in '" + text + "'");
    }
  }
  if (bound < 0 || bound > 1'000'000) fail_input("entry bound out of range in '" + text + "'");
  if (head == "integer") return {EntryKind::Kind::integer, bound};
  if (head == "gaussian") return {EntryKind::Kind::gaussian, bound};
  fail_input("unknown entry kind '" + text + "' (binary | integer:M | gaussian:M)");
}

ComplexIntMatrix random_matrix(std::size_t n, const EntryKind& entries, SplitMix64& rng) {
  std::vector<GaussianBigInt> e;
  e.reserve(n * n);
  const long m = entries.bound;
  for (std::size_t i = 0; i < n * n; ++i) {
    switch (entries.kind) {
      case EntryKind::Kind::binary:
        e.emplace_back(static_cast<long>(rng.below(2)));
        break;
      case EntryKind::Kind::integer:
        e.emplace_back(static_cast<long>(rng.between(-m, m)));
        break;
      case EntryKind::Kind::gaussian: {
        long re, im;
        do {
          re = static_cast<long>(rng.between(-m, m));
          im = static_cast<long>(rng.between(-m, m));
        } while (re * re + im * im > m * m);
        e.emplace_back(re, im);
        break;
      }
    }
  }
  return ComplexIntMatrix(n, std::move(e));
}

ComplexIntMatrix random_matrix(std::size_t n, const EntryKind& entries, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_matrix(n, entries, rng);
}

}  // namespace iris
