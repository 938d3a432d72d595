#include "hychroma/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "hychroma/errors.hpp"
#include "parallel.hpp"

namespace hychroma::gf2 {

namespace {

void require_same_length(const BitVector& a, const BitVector& b, const char* op) {
    if (a.length() != b.length()) {
        std::ostringstream msg;
        msg << op << ": length mismatch (" << a.length() << " vs " << b.length() << ")";
        throw UsageError(msg.str());
    }
}

int parity(std::uint64_t x) { return std::popcount(x) & 1; }

}  // namespace

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(int length, std::uint64_t bits) : length_(length), bits_(bits) {
    if (length < 1 || length > kMaxLength)
        throw UsageError("BitVector length must be in 1..64, got " + std::to_string(length));
    if ((bits & ~low_mask(length)) != 0)
        throw UsageError("BitVector has bits set beyond its length " + std::to_string(length));
}

BitVector BitVector::from_string(std::string_view text) {
    const int n = static_cast<int>(text.size());
    if (n < 1 || n > kMaxLength) throw ParseError("binary word length must be in 1..64");
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
        const char ch = text[static_cast<std::size_t>(i)];
        if (ch == '1')
            bits |= std::uint64_t{1} << i;
        else if (ch != '0')
            throw ParseError(std::string("invalid binary digit '") + ch + "'");
    }
    return BitVector(n, bits);
}

BitVector BitVector::unit(int length, int i) {
    if (i < 0 || i >= length) throw UsageError("unit vector index out of range");
    return BitVector(length, std::uint64_t{1} << i);
}

int BitVector::weight() const { return std::popcount(bits_); }

std::string BitVector::to_string() const {
    std::string s(static_cast<std::size_t>(length_), '0');
    for (int i = 0; i < length_; ++i)
        if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

BitVector BitVector::operator^(const BitVector& other) const {
    require_same_length(*this, other, "xor");
    return BitVector(length_, bits_ ^ other.bits_);
}

BitVector& BitVector::operator^=(const BitVector& other) {
    require_same_length(*this, other, "xor");
    bits_ ^= other.bits_;
    return *this;
}

BitVector BitVector::operator&(const BitVector& other) const {
    require_same_length(*this, other, "and");
    return BitVector(length_, bits_ & other.bits_);
}

BitVector BitVector::concat(const BitVector& tail) const {
    if (length_ + tail.length_ > kMaxLength) throw UsageError("concatenation exceeds 64 coordinates");
    return BitVector(length_ + tail.length_, bits_ | (tail.bits_ << length_));
}

std::ostream& operator<<(std::ostream& os, const BitVector& v) { return os << v.to_string(); }

int hamming_weight(const BitVector& v) { return v.weight(); }

int hamming_distance(const BitVector& a, const BitVector& b) {
    require_same_length(a, b, "hamming_distance");
    return std::popcount(a.bits() ^ b.bits());
}

// ---------------------------------------------------------------------------
// BinaryMatrix

BinaryMatrix::BinaryMatrix(int col_count, std::vector<BitVector> rows)
    : col_count_(col_count), rows_(std::move(rows)) {
    for (const auto& r : rows_)
        if (r.length() != col_count_)
            throw UsageError("matrix row length " + std::to_string(r.length()) + " != column count " +
                             std::to_string(col_count_));
}

BinaryMatrix BinaryMatrix::from_columns(int row_count, std::span<const BitVector> columns) {
    const int n = static_cast<int>(columns.size());
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(row_count), 0);
    for (int j = 0; j < n; ++j) {
        const auto& col = columns[static_cast<std::size_t>(j)];
        if (col.length() != row_count) throw UsageError("column length mismatch");
        for (int i = 0; i < row_count; ++i)
            if (col[i]) rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
    }
    std::vector<BitVector> out;
    out.reserve(rows.size());
    for (auto r : rows) out.emplace_back(n, r);
    return BinaryMatrix(n, std::move(out));
}

BinaryMatrix BinaryMatrix::identity(int n) {
    std::vector<BitVector> rows;
    for (int i = 0; i < n; ++i) rows.push_back(BitVector::unit(n, i));
    return BinaryMatrix(n, std::move(rows));
}

BitVector BinaryMatrix::column(int j) const {
    std::uint64_t bits = 0;
    for (int i = 0; i < row_count(); ++i)
        if (rows_[static_cast<std::size_t>(i)][j]) bits |= std::uint64_t{1} << i;
    return BitVector(row_count(), bits);
}

BitVector BinaryMatrix::multiply(const BitVector& v) const {
    if (v.length() != col_count_) throw UsageError("matrix-vector length mismatch");
    std::uint64_t bits = 0;
    for (int i = 0; i < row_count(); ++i)
        if (parity(rows_[static_cast<std::size_t>(i)].bits() & v.bits())) bits |= std::uint64_t{1} << i;
    return BitVector(row_count(), bits);
}

RowReduction rref(const BinaryMatrix& m) {
    std::vector<std::uint64_t> rows;
    for (const auto& r : m.rows()) rows.push_back(r.bits());
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < m.col_count() && rank < rows.size(); ++col) {
        const std::uint64_t bit = std::uint64_t{1} << col;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                               [bit](std::uint64_t r) { return (r & bit) != 0; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
        pivots.push_back(col);
        ++rank;
    }
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < rank; ++i) out.emplace_back(m.col_count(), rows[i]);
    return RowReduction{BinaryMatrix(m.col_count(), std::move(out)), static_cast<int>(rank), std::move(pivots)};
}

// ---------------------------------------------------------------------------
// BinaryLinearCode

BinaryLinearCode::BinaryLinearCode(int length, std::vector<BitVector> generators)
    : length_(length), generator_(length) {
    if (length < 1 || length > kMaxLength) throw UsageError("code length must be in 1..64");
    auto reduced = rref(BinaryMatrix(length, std::move(generators)));
    generator_ = std::move(reduced.matrix);
    pivots_ = std::move(reduced.pivots);
}

BinaryLinearCode::BinaryLinearCode(const BinaryLinearCode& other)
    : length_(other.length_), generator_(other.generator_), pivots_(other.pivots_),
      min_weight_(other.min_weight_.load()) {}

BinaryLinearCode& BinaryLinearCode::operator=(const BinaryLinearCode& other) {
    length_ = other.length_;
    generator_ = other.generator_;
    pivots_ = other.pivots_;
    min_weight_.store(other.min_weight_.load());
    return *this;
}

BinaryLinearCode BinaryLinearCode::kernel_of(const BinaryMatrix& h) {
    const int n = h.col_count();
    const auto red = rref(h);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : red.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<BitVector> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::uint64_t v = std::uint64_t{1} << f;
        for (int i = 0; i < red.rank; ++i)
            if (red.matrix.row(i)[f]) v |= std::uint64_t{1} << red.pivots[static_cast<std::size_t>(i)];
        basis.emplace_back(n, v);
    }
    return BinaryLinearCode(n, std::move(basis));
}

bool BinaryLinearCode::contains(const BitVector& word) const {
    if (word.length() != length_) return false;
    std::uint64_t w = word.bits();
    for (int i = 0; i < dimension(); ++i)
        if ((w >> pivots_[static_cast<std::size_t>(i)]) & 1U) w ^= generator_.row(i).bits();
    return w == 0;
}

BitVector BinaryLinearCode::encode(std::uint64_t message) const {
    std::uint64_t w = 0;
    for (int i = 0; i < dimension(); ++i)
        if ((message >> i) & 1U) w ^= generator_.row(i).bits();
    return BitVector(length_, w);
}

std::vector<Vertex> BinaryLinearCode::codewords(bool force) const {
    const int k = dimension();
    if (k > kMinWeightDimensionLimit && !force)
        throw GuardError("codeword materialization needs k <= " + std::to_string(kMinWeightDimensionLimit) +
                         ", got k=" + std::to_string(k));
    std::vector<Vertex> out;
    out.reserve(std::size_t{1} << k);
    std::uint64_t w = 0;
    out.push_back(w);
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        w ^= generator_.row(std::countr_zero(i)).bits();
        out.push_back(w);
    }
    return out;
}

std::optional<int> BinaryLinearCode::cached_min_weight() const {
    const int w = min_weight_.load();
    if (w < 0) return std::nullopt;
    return w;
}

void BinaryLinearCode::store_min_weight(int w) const { min_weight_.store(w); }

// ---------------------------------------------------------------------------
// Exhaustive operations

namespace {

std::vector<std::uint64_t> generator_words(const BinaryLinearCode& c) {
    std::vector<std::uint64_t> rows;
    for (const auto& r : c.generator().rows()) rows.push_back(r.bits());
    return rows;
}

void require_enumerable(const BinaryLinearCode& c, bool force, const char* what) {
    if (c.dimension() > kMinWeightDimensionLimit && !force)
        throw GuardError(std::string(what) + " needs k <= " + std::to_string(kMinWeightDimensionLimit) +
                         ", got k=" + std::to_string(c.dimension()));
}

// Calls visit(chunk, word) for every nonzero codeword, in Gray-code order within
// each chunk: message index i has codeword sum of rows at set bits of i ^ (i >> 1).
// visit returns false to abandon the rest of its chunk.
template <typename Visit>
void walk_nonzero_codewords(const BinaryLinearCode& c, Visit&& visit) {
    const int k = c.dimension();
    const auto rows = generator_words(c);
    const std::uint64_t total = std::uint64_t{1} << k;
    detail::parallel_chunks(total - 1, [&](detail::ChunkRange r) {
        std::uint64_t i = r.begin + 1;
        const std::uint64_t gray = i ^ (i >> 1);
        std::uint64_t w = 0;
        for (int b = 0; b < k; ++b)
            if ((gray >> b) & 1U) w ^= rows[static_cast<std::size_t>(b)];
        for (;;) {
            if (!visit(r.index, w)) break;
            if (++i > r.end) break;
            w ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
        }
    });
}

}  // namespace

std::optional<MinWeightWitness> min_weight_codeword(const BinaryLinearCode& c, bool force) {
    if (c.dimension() == 0) return std::nullopt;
    require_enumerable(c, force, "min weight enumeration");

    struct Best {
        int weight = std::numeric_limits<int>::max();
        std::uint64_t word = 0;
    };
    std::vector<Best> best(detail::max_chunks());
    walk_nonzero_codewords(c, [&](std::size_t chunk, std::uint64_t w) {
        const int wt = std::popcount(w);
        if (wt < best[chunk].weight) best[chunk] = {wt, w};
        return true;
    });

    Best overall;
    for (const auto& b : best)
        if (b.weight < overall.weight) overall = b;
    c.store_min_weight(overall.weight);
    return MinWeightWitness{overall.weight, BitVector(c.length(), overall.word)};
}

std::vector<std::uint64_t> weight_distribution(const BinaryLinearCode& c, bool force) {
    std::vector<std::uint64_t> dist(static_cast<std::size_t>(c.length()) + 1, 0);
    dist[0] = 1;
    if (c.dimension() == 0) return dist;
    require_enumerable(c, force, "weight distribution");
    std::vector<std::vector<std::uint64_t>> partial(detail::max_chunks(), std::vector<std::uint64_t>(dist.size(), 0));
    walk_nonzero_codewords(c, [&](std::size_t chunk, std::uint64_t w) {
        ++partial[chunk][static_cast<std::size_t>(std::popcount(w))];
        return true;
    });
    for (const auto& p : partial)
        for (std::size_t i = 0; i < dist.size(); ++i) dist[i] += p[i];
    return dist;
}

std::optional<BitVector> find_codeword_of_weight(const BinaryLinearCode& c, int weight, bool force) {
    if (weight < 1 || weight > c.length() || c.dimension() == 0) return std::nullopt;
    require_enumerable(c, force, "weight search");
    std::vector<std::optional<std::uint64_t>> found(detail::max_chunks());
    walk_nonzero_codewords(c, [&](std::size_t chunk, std::uint64_t w) {
        if (std::popcount(w) != weight) return true;
        found[chunk] = w;
        return false;
    });
    for (const auto& f : found)
        if (f) return BitVector(c.length(), *f);
    return std::nullopt;
}

std::optional<int> min_hamming_weight(const BinaryLinearCode& c, bool force) {
    if (c.dimension() == 0) return std::nullopt;
    if (auto cached = c.cached_min_weight()) return cached;
    return min_weight_codeword(c, force)->weight;
}

std::vector<Block> enumerate_cosets(const BinaryLinearCode& c, bool force) {
    const int n = c.length();
    if (n > kCosetLengthLimit && !force)
        throw GuardError("coset materialization needs n <= " + std::to_string(kCosetLengthLimit) +
                         ", got n=" + std::to_string(n));
    const auto words = c.codewords(true);
    const std::uint64_t space = std::uint64_t{1} << n;
    std::vector<bool> seen(space, false);
    std::vector<Block> cosets;
    cosets.reserve(static_cast<std::size_t>(space / words.size()));
    for (Vertex v = 0; v < space; ++v) {
        if (seen[v]) continue;
        Block block;
        block.reserve(words.size());
        for (auto w : words) {
            seen[v ^ w] = true;
            block.push_back(v ^ w);
        }
        std::sort(block.begin(), block.end());
        cosets.push_back(std::move(block));
    }
    return cosets;
}

Block puncture_last(std::span<const Vertex> block, int n) {
    if (n < 2) throw UsageError("puncture_last needs length >= 2");
    const std::uint64_t keep = low_mask(n - 1);
    Block out;
    out.reserve(block.size());
    for (auto v : block) out.push_back(v & keep);
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end()) {
        const Vertex a = *dup;
        const Vertex b = a | (std::uint64_t{1} << (n - 1));
        throw IntegrityError("puncture collision: words " + BitVector(n, a).to_string() + " and " +
                             BitVector(n, b).to_string() + " agree off the last coordinate");
    }
    return out;
}

std::vector<BitVector> puncture_last(std::span<const BitVector> block) {
    if (block.empty()) return {};
    const int n = block.front().length();
    Block raw;
    for (const auto& v : block) {
        if (v.length() != n) throw UsageError("puncture_last: words of different lengths");
        raw.push_back(v.bits());
    }
    std::vector<BitVector> out;
    for (auto v : puncture_last(raw, n)) out.emplace_back(n - 1, v);
    return out;
}

// ---------------------------------------------------------------------------
// Named codes

BinaryLinearCode zero_code(int n) { return BinaryLinearCode(n, {}); }

BinaryLinearCode full_space(int n) { return BinaryLinearCode(n, BinaryMatrix::identity(n).rows()); }

BinaryLinearCode repetition_code(int n) { return BinaryLinearCode(n, {BitVector(n, low_mask(n))}); }

BinaryLinearCode even_weight_code(int n) {
    if (n < 2) throw UsageError("even weight code needs n >= 2");
    std::vector<BitVector> rows;
    for (int i = 0; i + 1 < n; ++i) rows.emplace_back(n, (std::uint64_t{1} << i) | (std::uint64_t{1} << (n - 1)));
    return BinaryLinearCode(n, std::move(rows));
}

BinaryLinearCode hamming_code(int r) {
    if (r < 2 || r > 6) throw UsageError("hamming_code supports r in 2..6");
    const int n = (1 << r) - 1;
    std::vector<BitVector> columns;
    for (int j = 1; j <= n; ++j) columns.emplace_back(r, static_cast<std::uint64_t>(j));
    return BinaryLinearCode::kernel_of(BinaryMatrix::from_columns(r, columns));
}

BinaryLinearCode golay_code() {
    // g(x) = 1 + x^2 + x^4 + x^5 + x^6 + x^10 + x^11
    constexpr std::uint64_t g = 0b110001110101;
    std::vector<BitVector> rows;
    for (int i = 0; i < 12; ++i) rows.emplace_back(23, g << i);
    return BinaryLinearCode(23, std::move(rows));
}

// ---------------------------------------------------------------------------
// Text format

void write_code(std::ostream& os, const BinaryLinearCode& c) {
    os << "code n=" << c.length() << " k=" << c.dimension() << '\n';
    for (const auto& r : c.generator().rows()) os << r.to_string() << '\n';
}

namespace {

int parse_field(const std::string& token, const std::string& key) {
    const std::string prefix = key + "=";
    if (token.rfind(prefix, 0) != 0) throw ParseError("expected '" + prefix + "...', got '" + token + "'");
    try {
        std::size_t used = 0;
        const int v = std::stoi(token.substr(prefix.size()), &used);
        if (used != token.size() - prefix.size()) throw ParseError("trailing characters in '" + token + "'");
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad integer in '" + token + "'");
    }
}

}  // namespace

BinaryLinearCode read_code(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw ParseError("missing code header");
    std::istringstream header(line);
    std::string tag, nf, kf, extra;
    header >> tag >> nf >> kf;
    if (tag != "code" || (header >> extra)) throw ParseError("bad code header: '" + line + "'");
    const int n = parse_field(nf, "n");
    const int k = parse_field(kf, "k");
    if (n < 1 || n > kMaxLength || k < 0 || k > n) throw ParseError("code header out of range: '" + line + "'");
    std::vector<BitVector> rows;
    for (int i = 0; i < k; ++i) {
        if (!std::getline(is, line)) throw ParseError("code truncated after " + std::to_string(i) + " rows");
        if (static_cast<int>(line.size()) != n) throw ParseError("code row " + std::to_string(i) + " has wrong length");
        rows.push_back(BitVector::from_string(line));
    }
    BinaryLinearCode code(n, std::move(rows));
    if (code.dimension() != k) throw ParseError("code rows are linearly dependent");
    return code;
}

}  // namespace hychroma::gf2
