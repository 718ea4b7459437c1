#ifndef FMSR_CODEC_HPP
#define FMSR_CODEC_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fmsr/gfmatrix.hpp"

namespace fmsr {

// Code parameters. Double-fault tolerance only: k = n-2, two chunks per node.
struct CodeParams {
    int n = 0;
    int k = 0;

    static CodeParams create(int n);
    static CodeParams create(int n, int k);

    int chunks_per_node() const { return n - k; }        // always 2
    int native_count() const { return k * (n - k); }     // 2k
    int parity_count() const { return n * (n - k); }     // 2n

    bool operator==(const CodeParams&) const = default;
};

inline constexpr int kMaxNodes = 12;

// Identity of a stored parity chunk: node 1..n, local index 1..2.
struct ChunkId {
    int node = 0;
    int index = 0;

    auto operator<=>(const ChunkId&) const = default;
};

// Row of the coefficient matrix that describes this chunk.
inline std::size_t row_index(const CodeParams& p, ChunkId id) {
    return static_cast<std::size_t>((id.node - 1) * p.chunks_per_node() + (id.index - 1));
}

struct Chunk {
    ChunkId id;
    std::vector<u8> payload;
};

struct FileMeta {
    std::uint64_t original_length = 0;
    std::uint64_t padded_length = 0;
    std::uint64_t chunk_size = 0;

    bool operator==(const FileMeta&) const = default;
};

// Sources used by one node's most recent repair: the round it happened in
// and the chunk index read from each node that was surviving at the time.
struct SelectionRecord {
    int round = 0;
    std::map<int, int> sources;  // node -> chunk index

    bool operator==(const SelectionRecord&) const = default;
};

// Full coefficient description of the stored code.
struct CodeState {
    CodeParams params;
    GfMatrix coeffs;                        // 2n x 2k, rows indexed by row_index()
    int round = 0;
    std::map<int, int> ermds_selection;     // node -> chunk index, recorded at store time
    std::map<int, SelectionRecord> history; // node -> its latest repair record

    std::optional<int> last_repaired_node() const;
    std::map<int, int> last_selection() const;  // empty before the first repair

    // True when `record`'s source entry for node `src` still names a chunk
    // that exists: src has not been repaired after the record's round.
    bool source_live(const SelectionRecord& record, int src) const;

    bool operator==(const CodeState&) const = default;
};

// Initial MDS layer: a 2n x 2k Cauchy matrix, so that every 2k-row square
// submatrix is nonsingular (chunk-level MDS).
GfMatrix generate_initial_coefficients(const CodeParams& params);

// Fresh state: Cauchy coefficients plus the store-time erMDS record (index 1
// for every node).
CodeState make_initial_state(const CodeParams& params);

// Pads, splits into 2k native chunks, and produces the 2n parity chunks.
std::pair<FileMeta, std::vector<Chunk>> encode(const CodeState& state,
                                               std::span<const u8> file);

// Splits an already padded buffer into the 2k equal native chunks.
std::vector<std::vector<u8>> split_natives(const CodeParams& params,
                                           std::span<const u8> file,
                                           const FileMeta& meta);

FileMeta make_file_meta(const CodeParams& params, std::uint64_t original_length);

// Reconstructs the original file from exactly 2k chunks whose coefficient
// rows are full rank.
std::vector<u8> decode(const CodeState& state, const FileMeta& meta,
                       std::span<const std::pair<ChunkId, std::vector<u8>>> chunks);

} // namespace fmsr

#endif
