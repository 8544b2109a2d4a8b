#include "courtside/lm/model_io.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <ostream>

#include "courtside/corpus/csv.hpp"
#include "courtside/random.hpp"

namespace courtside::lm {
namespace {

constexpr char kMagic[4] = {'C', 'S', 'L', 'M'};

class Writer {
 public:
  void raw(const void* data, std::size_t size) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    bytes_.insert(bytes_.end(), p, p + size);
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

class Reader {
 public:
  explicit Reader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  void need(std::size_t n) const {
    if (bytes_.size() - pos_ < n) {
      throw ModelFormatError(ModelFormatError::Reason::truncated,
                             "model file truncated at byte " + std::to_string(pos_));
    }
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(bytes_[pos_++]) << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes_[pos_++]) << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::string str(std::size_t n) {
    need(n);
    std::string s(reinterpret_cast<const char*>(bytes_.data() + pos_), n);
    pos_ += n;
    return s;
  }
  std::size_t pos() const { return pos_; }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::uint8_t> serialize_model(const KneserNeyModel& model) {
  Writer w;
  w.raw(kMagic, sizeof kMagic);
  w.u32(kModelFormatVersion);
  w.u32(2);
  for (const auto& d : model.discounts()) {
    w.f64(d.d1);
    w.f64(d.d2);
    w.f64(d.d3plus);
  }
  const auto& words = model.vocab().words();
  w.u64(words.size());
  for (const auto& word : words) {
    w.u32(static_cast<std::uint32_t>(word.size()));
    w.raw(word.data(), word.size());
  }
  for (const double p : model.unigram_table()) w.f64(p);
  for (const double b : model.backoff_table()) w.f64(b);
  const auto bigrams = model.bigram_table();
  w.u64(bigrams.size());
  for (const auto& b : bigrams) {
    w.u32(b.context);
    w.u32(b.word);
    w.f64(b.prob);
  }
  const auto checksum = fnv1a(w.bytes().data(), w.bytes().size());
  w.u64(checksum);
  return w.take();
}

KneserNeyModel deserialize_model(const std::vector<std::uint8_t>& bytes) {
  using Reason = ModelFormatError::Reason;
  if (bytes.empty()) throw ModelFormatError(Reason::truncated, "model data is empty");
  Reader r(bytes);
  r.need(sizeof kMagic);
  if (std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0) {
    throw ModelFormatError(Reason::bad_magic, "not a courtside language model (bad magic)");
  }
  r.str(sizeof kMagic);
  const auto version = r.u32();
  if (version != kModelFormatVersion) {
    throw ModelFormatError(Reason::version_mismatch,
                           "model format version " + std::to_string(version) +
                               " is not supported (expected " +
                               std::to_string(kModelFormatVersion) + ")");
  }
  if (r.u32() != 2) throw ModelFormatError(Reason::corrupt, "model order must be 2");

  std::array<Discounts, 2> discounts;
  for (auto& d : discounts) {
    d.d1 = r.f64();
    d.d2 = r.f64();
    d.d3plus = r.f64();
  }
  const auto v = r.u64();
  if (v < 4 || v > r.remaining()) throw ModelFormatError(Reason::truncated, "vocabulary block truncated");
  std::vector<std::string> words;
  words.reserve(v);
  for (std::uint64_t i = 0; i < v; ++i) words.push_back(r.str(r.u32()));
  const Vocabulary vocab = Vocabulary::from_words(words);
  if (vocab.words() != words) throw ModelFormatError(Reason::corrupt, "vocabulary block is malformed");

  std::vector<double> unigram(v);
  std::vector<double> backoff(v);
  for (auto& p : unigram) p = r.f64();
  for (auto& b : backoff) b = r.f64();
  const auto count = r.u64();
  if (count > r.remaining() / 16) throw ModelFormatError(Reason::truncated, "bigram block truncated");
  std::vector<KneserNeyModel::BigramProb> bigrams;
  bigrams.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    KneserNeyModel::BigramProb b{};
    b.context = r.u32();
    b.word = r.u32();
    b.prob = r.f64();
    bigrams.push_back(b);
  }
  const auto expected = fnv1a(bytes.data(), r.pos());
  if (r.u64() != expected) throw ModelFormatError(Reason::corrupt, "model checksum mismatch");
  if (r.remaining() != 0) throw ModelFormatError(Reason::corrupt, "trailing bytes after model");

  try {
    return KneserNeyModel(vocab, discounts, std::move(unigram), std::move(backoff),
                          std::move(bigrams));
  } catch (const DataError& e) {
    throw ModelFormatError(Reason::corrupt, e.what());
  }
}

void save_model(const KneserNeyModel& model, const std::filesystem::path& path) {
  const auto bytes = serialize_model(model);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("failed writing " + path.string());
}

KneserNeyModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open model " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return deserialize_model(bytes);
}

void write_arpa(const KneserNeyModel& model, std::ostream& out) {
  const auto& vocab = model.vocab();
  const auto log10_text = [](double p) {
    return p > 0.0 ? corpus::format_double(std::log10(p)) : std::string("-99");
  };
  std::vector<WordId> order(vocab.size());
  for (WordId i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](WordId a, WordId b) { return vocab.word(a) < vocab.word(b); });
  auto bigrams = model.bigram_table();
  std::sort(bigrams.begin(), bigrams.end(), [&](const auto& a, const auto& b) {
    return std::pair{vocab.word(a.context), vocab.word(a.word)} <
           std::pair{vocab.word(b.context), vocab.word(b.word)};
  });

  out << "\\data\\\n";
  out << "ngram 1=" << vocab.size() << "\n";
  out << "ngram 2=" << bigrams.size() << "\n\n";
  out << "\\1-grams:\n";
  for (const WordId w : order) {
    out << log10_text(model.unigram(w)) << '\t' << vocab.word(w);
    if (w != Vocabulary::kEndId) out << '\t' << log10_text(model.backoff(w));
    out << '\n';
  }
  out << "\n\\2-grams:\n";
  for (const auto& b : bigrams) {
    out << log10_text(b.prob) << '\t' << vocab.word(b.context) << ' ' << vocab.word(b.word) << '\n';
  }
  out << "\n\\end\\\n";
}

}  // namespace courtside::lm
