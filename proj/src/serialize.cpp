// Index container: "LCEX", u16 version, then sections [u16 id][u64 length]
// [payload]. Integers are little-endian and fixed-width.

#include <fstream>
#include <iterator>

#include "lce/lce_index.hpp"

namespace lce {

namespace {

constexpr std::uint8_t kMagic[4] = {'L', 'C', 'E', 'X'};
constexpr std::uint16_t kVersion = 1;

enum Section : std::uint16_t {
  kParams = 1,
  kTst = 2,
  kNav = 3,
  kBlockCode = 4,
  kStats = 5,
  kTradeoff = 6,
  kPacked = 7,
};

template <typename Fn>
void put_section(BinaryWriter& out, std::uint16_t id, Fn&& body) {
  BinaryWriter payload;
  body(payload);
  out.put<std::uint16_t>(id);
  out.put<std::uint64_t>(payload.size());
  out.put_raw(payload.bytes());
}

void put_stats(BinaryWriter& out, const SpaceStats& s) {
  for (auto v : {s.n, s.t, s.t_prime, s.tst_nodes, s.tst_leaves, s.tst_ref_len, s.nav_nodes, s.sampled_count,
                 s.code_len, s.cover_size, s.prefix_entries, s.estimated_words}) {
    out.put<std::uint64_t>(v);
  }
  out.put<std::uint8_t>(s.z.has_value());
  out.put<std::uint64_t>(s.z.value_or(0));
}

SpaceStats get_stats(BinaryReader& in) {
  SpaceStats s;
  for (auto* v : {&s.n, &s.t, &s.t_prime, &s.tst_nodes, &s.tst_leaves, &s.tst_ref_len, &s.nav_nodes,
                  &s.sampled_count, &s.code_len, &s.cover_size, &s.prefix_entries, &s.estimated_words}) {
    *v = in.get<std::uint64_t>();
  }
  const bool has_z = in.get<std::uint8_t>() != 0;
  const auto z = in.get<std::uint64_t>();
  if (has_z) s.z = z;
  return s;
}

bool same_counts(const SpaceStats& a, const SpaceStats& b) {
  return a.n == b.n && a.t == b.t && a.t_prime == b.t_prime && a.tst_nodes == b.tst_nodes &&
         a.tst_leaves == b.tst_leaves && a.tst_ref_len == b.tst_ref_len && a.nav_nodes == b.nav_nodes &&
         a.sampled_count == b.sampled_count && a.code_len == b.code_len && a.cover_size == b.cover_size &&
         a.prefix_entries == b.prefix_entries && a.estimated_words == b.estimated_words;
}

}  // namespace

std::vector<std::uint8_t> LceIndex::serialize() const {
  BinaryWriter out;
  out.put_raw(kMagic);
  out.put<std::uint16_t>(kVersion);
  put_section(out, kParams, [&](BinaryWriter& w) {
    w.put<std::uint32_t>(n_);
    w.put<std::uint32_t>(t_);
    w.put<std::uint32_t>(t_prime_);
    w.put<std::uint8_t>(static_cast<std::uint8_t>(nav_.la_kind()));
  });
  put_section(out, kTst, [&](BinaryWriter& w) { tst_.save(w); });
  put_section(out, kNav, [&](BinaryWriter& w) { nav_.save(w); });
  put_section(out, kBlockCode, [&](BinaryWriter& w) { bc_.save(w); });
  put_section(out, kStats, [&](BinaryWriter& w) { put_stats(w, stats_); });
  if (t_prime_ < t_) put_section(out, kTradeoff, [&](BinaryWriter& w) { prefix_.save(w); });
  if (packed_) put_section(out, kPacked, [&](BinaryWriter& w) { packed_->save(w); });
  return out.take();
}

LceIndex LceIndex::deserialize(std::span<const std::uint8_t> bytes) {
  BinaryReader in(bytes);
  const auto magic = in.get_raw(4);
  if (!std::equal(magic.begin(), magic.end(), std::begin(kMagic))) BinaryReader::fail("bad magic");
  if (in.get<std::uint16_t>() != kVersion) BinaryReader::fail("unsupported version");

  LceIndex ix;
  LevelAncestorKind la = LevelAncestorKind::binary_lifting;
  SpaceStats stored;
  unsigned seen = 0;
  std::uint16_t last = 0;
  while (!in.done()) {
    const auto id = in.get<std::uint16_t>();
    const auto len = in.get<std::uint64_t>();
    if (len > in.remaining()) BinaryReader::fail("section length exceeds data");
    if (id <= last || id > kPacked) BinaryReader::fail("unexpected section " + std::to_string(id));
    if (id != kParams && !(seen & (1u << kParams))) BinaryReader::fail("parameters must come first");
    last = id;
    seen |= 1u << id;
    BinaryReader sec(in.get_raw(static_cast<std::size_t>(len)));
    switch (id) {
      case kParams: {
        ix.n_ = sec.get<std::uint32_t>();
        ix.t_ = sec.get<std::uint32_t>();
        ix.t_prime_ = sec.get<std::uint32_t>();
        const auto kind = sec.get<std::uint8_t>();
        if (kind > static_cast<std::uint8_t>(LevelAncestorKind::ladder)) BinaryReader::fail("level ancestor kind");
        la = static_cast<LevelAncestorKind>(kind);
        if (ix.t_prime_ < 1 || ix.t_prime_ > ix.t_ || ix.t_ > ix.n_) BinaryReader::fail("parameters out of range");
        break;
      }
      case kTst: ix.tst_ = TruncatedSuffixTree::load(sec); break;
      case kNav: ix.nav_ = NavTree::load(sec, la); break;
      case kBlockCode: ix.bc_ = BlockCode::load(sec); break;
      case kStats: stored = get_stats(sec); break;
      case kTradeoff: ix.prefix_ = BlockPrefixTable::load(sec); break;
      case kPacked: ix.packed_ = PackedIndex::load(sec); break;
    }
    if (!sec.done()) BinaryReader::fail("trailing bytes in section " + std::to_string(id));
  }
  for (unsigned id : {kParams, kTst, kNav, kBlockCode, kStats}) {
    if (!(seen & (1u << id))) BinaryReader::fail("missing section " + std::to_string(id));
  }
  const bool tradeoff = ix.t_prime_ < ix.t_;
  if (tradeoff != static_cast<bool>(seen & (1u << kTradeoff))) BinaryReader::fail("trade-off section mismatch");

  // Cross-check the components against each other.
  const pos_t n = ix.n_, t = ix.t_, tp = ix.t_prime_;
  if (ix.tst_.q() != std::min<pos_t>(2 * tp, n)) BinaryReader::fail("tree depth does not match t'");
  if (ix.nav_.t() != tp || ix.nav_.n() != n || ix.nav_.node_count() != ix.tst_.leaf_count()) {
    BinaryReader::fail("navigation tree does not match the tree");
  }
  if (ix.bc_.t() != t || ix.bc_.cover().n() != n) BinaryReader::fail("block code does not match parameters");
  if (ix.bc_.cover().cover().members() != DifferenceCover::build(t).members()) {
    BinaryReader::fail("unexpected difference cover");
  }
  if (tradeoff) {
    if (ix.prefix_.tail_count() != t - 1) BinaryReader::fail("tail table length");
    const std::size_t ranks = ix.prefix_.rank_count();
    for (auto r : ix.bc_.code()) {
      if (r >= ix.bc_.separators() && r - ix.bc_.separators() + 1 > ranks) BinaryReader::fail("block rank beyond table");
    }
  }
  if (ix.packed_ && ix.packed_->n() != n) BinaryReader::fail("packed text length mismatch");

  ix.stats_.z = stored.z;
  ix.fill_stats();
  if (!same_counts(ix.stats_, stored)) BinaryReader::fail("stored statistics disagree with the components");
  return ix;
}

void LceIndex::save_file(const std::filesystem::path& path) const {
  const auto bytes = serialize();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw LceError(ErrorCode::io_error, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw LceError(ErrorCode::io_error, "write failed: " + path.string());
}

LceIndex LceIndex::load_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LceError(ErrorCode::io_error, "cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw LceError(ErrorCode::io_error, "read failed: " + path.string());
  return deserialize(bytes);
}

}  // namespace lce
