#include "fmsr/codec.hpp"

#include <algorithm>
#include <cstring>

#include "fmsr/errors.hpp"

namespace fmsr {

CodeParams CodeParams::create(int n) { return create(n, n - 2); }

CodeParams CodeParams::create(int n, int k) {
    if (n < 4) throw BadParams("n must be at least 4");
    if (k != n - 2) throw BadParams("only k = n-2 is supported");
    if (n > kMaxNodes) throw ParamsTooLarge("n must be at most " + std::to_string(kMaxNodes));
    return CodeParams{n, k};
}

std::optional<int> CodeState::last_repaired_node() const {
    const SelectionRecord* best = nullptr;
    int best_node = 0;
    for (const auto& [node, rec] : history)
        if (!best || rec.round > best->round) {
            best = &rec;
            best_node = node;
        }
    if (!best) return std::nullopt;
    return best_node;
}

std::map<int, int> CodeState::last_selection() const {
    auto node = last_repaired_node();
    if (!node) return {};
    return history.at(*node).sources;
}

bool CodeState::source_live(const SelectionRecord& record, int src) const {
    auto it = history.find(src);
    if (it == history.end()) return true;       // src never repaired
    return it->second.round < record.round;     // untouched since the record
}

GfMatrix generate_initial_coefficients(const CodeParams& params) {
    const int rows = params.parity_count();
    const int cols = params.native_count();
    if (rows + cols > 256)
        throw ParamsTooLarge("Cauchy labels exhaust GF(2^8)");
    // Disjoint labels x_l = l, y_m = rows + m; entry = 1 / (x_l + y_m).
    GfMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                gf::inv(static_cast<u8>(r ^ (rows + c)));
    return m;
}

CodeState make_initial_state(const CodeParams& params) {
    CodeState state;
    state.params = params;
    state.coeffs = generate_initial_coefficients(params);
    state.round = 0;
    for (int node = 1; node <= params.n; ++node) state.ermds_selection[node] = 1;
    return state;
}

FileMeta make_file_meta(const CodeParams& params, std::uint64_t original_length) {
    const auto natives = static_cast<std::uint64_t>(params.native_count());
    FileMeta meta;
    meta.original_length = original_length;
    meta.padded_length = (original_length + natives - 1) / natives * natives;
    meta.chunk_size = meta.padded_length / natives;
    return meta;
}

std::vector<std::vector<u8>> split_natives(const CodeParams& params,
                                           std::span<const u8> file,
                                           const FileMeta& meta) {
    std::vector<std::vector<u8>> natives(static_cast<std::size_t>(params.native_count()),
                                         std::vector<u8>(meta.chunk_size, 0));
    for (std::size_t i = 0; i < natives.size(); ++i) {
        const std::uint64_t off = i * meta.chunk_size;
        if (off >= file.size()) break;
        const std::uint64_t take = std::min<std::uint64_t>(meta.chunk_size, file.size() - off);
        std::memcpy(natives[i].data(), file.data() + off, take);
    }
    return natives;
}

std::pair<FileMeta, std::vector<Chunk>> encode(const CodeState& state,
                                               std::span<const u8> file) {
    if (file.empty()) throw EmptyFile();
    const auto& p = state.params;
    const FileMeta meta = make_file_meta(p, file.size());
    const auto natives = split_natives(p, file, meta);
    auto payloads = apply(state.coeffs, natives);
    std::vector<Chunk> chunks;
    chunks.reserve(payloads.size());
    for (int node = 1; node <= p.n; ++node)
        for (int index = 1; index <= p.chunks_per_node(); ++index) {
            ChunkId id{node, index};
            chunks.push_back({id, std::move(payloads[row_index(p, id)])});
        }
    return {meta, std::move(chunks)};
}

std::vector<u8> decode(const CodeState& state, const FileMeta& meta,
                       std::span<const std::pair<ChunkId, std::vector<u8>>> chunks) {
    const auto& p = state.params;
    const auto need = static_cast<std::size_t>(p.native_count());
    if (chunks.size() != need)
        throw WrongCount("decode: expected " + std::to_string(need) + " chunks, got " +
                         std::to_string(chunks.size()));
    GfMatrix rows(need, need);
    std::vector<std::vector<u8>> payloads;
    payloads.reserve(need);
    for (std::size_t i = 0; i < need; ++i) {
        const auto& [id, payload] = chunks[i];
        if (payload.size() != meta.chunk_size)
            throw LengthMismatch("decode: chunk payload size != chunk_size");
        rows.set_row(i, state.coeffs.row_span(row_index(p, id)));
        payloads.push_back(payload);
    }
    if (rows.rank() != need) throw NotDecodable();
    const GfMatrix inv = rows.inverse();
    auto natives = apply(inv, payloads);
    std::vector<u8> out;
    out.reserve(meta.padded_length);
    for (const auto& nat : natives) out.insert(out.end(), nat.begin(), nat.end());
    out.resize(meta.original_length);
    return out;
}

} // namespace fmsr
