#include "hc2l/index_io.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <vector>

namespace hc2l {

namespace {

constexpr char MAGIC[4] = {'H', 'C', '2', 'L'};

constexpr uint16_t FLAG_TAIL_PRUNING = 1 << 0;
constexpr uint16_t FLAG_CONTRACTION = 1 << 1;
// bit 2 reserved: 64-bit label distances

enum SectionId : uint32_t
{
    SECTION_HIERARCHY = 1,
    SECTION_VERTEX_MAP = 2,
    SECTION_LABELS = 3,
    SECTION_CONTRACTION = 4,
    SECTION_GRAPH_BLOB = 5,
};

class Writer
{
public:
    void u8(uint8_t v) { bytes_.push_back(v); }
    void u16(uint16_t v) { raw(v); }
    void u32(uint32_t v) { raw(v); }
    void u64(uint64_t v) { raw(v); }
    size_t size() const { return bytes_.size(); }
    const std::vector<uint8_t> &bytes() const { return bytes_; }
    void patch_u64(size_t offset, uint64_t v)
    {
        for (int i = 0; i < 8; ++i)
            bytes_[offset + i] = static_cast<uint8_t>(v >> (8 * i));
    }

private:
    template <typename T> void raw(T v)
    {
        for (size_t i = 0; i < sizeof(T); ++i)
            bytes_.push_back(static_cast<uint8_t>(static_cast<uint64_t>(v) >> (8 * i)));
    }
    std::vector<uint8_t> bytes_;
};

class Reader
{
public:
    explicit Reader(std::istream &in)
    {
        bytes_.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    uint8_t u8() { return next(); }
    uint16_t u16() { return raw<uint16_t>(); }
    uint32_t u32() { return raw<uint32_t>(); }
    uint64_t u64() { return raw<uint64_t>(); }
    size_t position() const { return position_; }
    size_t size() const { return bytes_.size(); }
    void seek(size_t offset)
    {
        if (offset > bytes_.size())
            throw IndexCorruptionError("section offset beyond end of file");
        position_ = offset;
    }

private:
    uint8_t next()
    {
        if (position_ >= bytes_.size())
            throw IndexCorruptionError("truncated index file");
        return static_cast<uint8_t>(bytes_[position_++]);
    }
    template <typename T> T raw()
    {
        uint64_t v = 0;
        for (size_t i = 0; i < sizeof(T); ++i)
            v |= static_cast<uint64_t>(next()) << (8 * i);
        return static_cast<T>(v);
    }
    std::vector<char> bytes_;
    size_t position_ = 0;
};

void write_hierarchy_node(Writer &w, const Hierarchy &h, uint32_t index)
{
    const HierarchyNode &node = h.nodes[index];
    w.u64(node.id);
    w.u32(node.subtree_size);
    uint8_t flags = 0;
    if (node.left != NO_NODE)
        flags |= 1;
    if (node.right != NO_NODE)
        flags |= 2;
    w.u8(flags);
    w.u32(static_cast<uint32_t>(node.cut.size()));
    for (Vertex v : node.cut)
        w.u32(v);
    if (node.left != NO_NODE)
        write_hierarchy_node(w, h, node.left);
    if (node.right != NO_NODE)
        write_hierarchy_node(w, h, node.right);
}

uint32_t read_hierarchy_node(Reader &r, Hierarchy &h, uint32_t remaining_nodes)
{
    if (remaining_nodes == 0)
        throw IndexCorruptionError("hierarchy node count mismatch");
    uint32_t index = static_cast<uint32_t>(h.nodes.size());
    HierarchyNode node;
    node.id = r.u64();
    node.subtree_size = r.u32();
    uint8_t flags = r.u8();
    uint32_t cut_len = r.u32();
    node.cut.resize(cut_len);
    for (uint32_t i = 0; i < cut_len; ++i)
        node.cut[i] = r.u32();
    h.nodes.push_back(std::move(node));
    uint32_t consumed = 1;
    if (flags & 1)
    {
        h.nodes[index].left = static_cast<uint32_t>(h.nodes.size());
        consumed += read_hierarchy_node(r, h, remaining_nodes - consumed);
    }
    if (flags & 2)
    {
        h.nodes[index].right = static_cast<uint32_t>(h.nodes.size());
        consumed += read_hierarchy_node(r, h, remaining_nodes - consumed);
    }
    return consumed;
}

} // namespace

size_t save_index(const DistanceIndex &idx, std::ostream &out)
{
    Writer w;
    for (char c : MAGIC)
        w.u8(static_cast<uint8_t>(c));
    w.u16(INDEX_FORMAT_VERSION);
    uint16_t flags = 0;
    if (idx.tail_pruning)
        flags |= FLAG_TAIL_PRUNING;
    if (idx.contraction_enabled)
        flags |= FLAG_CONTRACTION;
    w.u16(flags);
    w.u32(idx.beta.num);
    w.u32(idx.beta.den);
    w.u64(idx.fingerprint);
    w.u32(idx.original_vertex_count);
    w.u32(idx.contraction.core.vertex_count());

    // contraction section body is omitted when nothing was peeled
    std::vector<uint32_t> sections{SECTION_HIERARCHY, SECTION_VERTEX_MAP, SECTION_LABELS, SECTION_GRAPH_BLOB};
    if (!idx.contraction.records.empty())
        sections.insert(sections.begin() + 3, SECTION_CONTRACTION);

    w.u32(static_cast<uint32_t>(sections.size()));
    std::vector<size_t> table_offsets;
    for (uint32_t id : sections)
    {
        w.u32(id);
        table_offsets.push_back(w.size());
        w.u64(0); // offset, patched below
        w.u64(0); // size, patched below
    }

    for (size_t si = 0; si < sections.size(); ++si)
    {
        size_t start = w.size();
        switch (sections[si])
        {
        case SECTION_HIERARCHY:
            w.u32(static_cast<uint32_t>(idx.hierarchy.nodes.size()));
            if (!idx.hierarchy.nodes.empty())
                write_hierarchy_node(w, idx.hierarchy, 0);
            break;
        case SECTION_VERTEX_MAP:
            for (Vertex v = 0; v < idx.contraction.core.vertex_count(); ++v)
            {
                w.u64(idx.hierarchy.vertex_node[v]);
                w.u32(idx.hierarchy.vertex_pos[v]);
            }
            break;
        case SECTION_LABELS:
            for (const auto &levels : idx.labels.arrays)
            {
                w.u32(static_cast<uint32_t>(levels.size()));
                for (const auto &values : levels)
                    w.u32(static_cast<uint32_t>(values.size()));
                for (const auto &values : levels)
                    for (uint32_t v : values)
                        w.u32(v);
            }
            break;
        case SECTION_CONTRACTION:
            w.u32(static_cast<uint32_t>(idx.contraction.records.size()));
            for (const ContractionRecord &r : idx.contraction.records)
            {
                w.u32(r.vertex);
                w.u32(r.root);
                w.u32(r.parent);
                w.u64(r.dist_to_parent);
                w.u64(r.dist_to_root);
                w.u32(r.depth);
            }
            break;
        case SECTION_GRAPH_BLOB: {
            const WeightedGraph &core = idx.contraction.core;
            w.u32(core.vertex_count());
            auto edges = core.edges();
            w.u64(edges.size());
            for (auto [u, v, weight] : edges)
            {
                w.u32(u);
                w.u32(v);
                w.u32(weight);
            }
            break;
        }
        }
        w.patch_u64(table_offsets[si], start);
        w.patch_u64(table_offsets[si] + 8, w.size() - start);
    }

    out.write(reinterpret_cast<const char *>(w.bytes().data()), static_cast<std::streamsize>(w.size()));
    return w.size();
}

size_t save_index_file(const DistanceIndex &idx, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open index file for writing: " + path);
    size_t n = save_index(idx, out);
    if (!out)
        throw std::runtime_error("write failed: " + path);
    return n;
}

DistanceIndex load_index(std::istream &in)
{
    Reader r(in);
    char magic[4];
    for (char &c : magic)
        c = static_cast<char>(r.u8());
    if (std::memcmp(magic, MAGIC, 4) != 0)
        throw IndexFormatError("not an HC2L index file");
    uint16_t version = r.u16();
    if (version != INDEX_FORMAT_VERSION)
        throw IndexFormatError("unsupported index format version " + std::to_string(version));

    DistanceIndex idx;
    uint16_t flags = r.u16();
    idx.tail_pruning = flags & FLAG_TAIL_PRUNING;
    idx.contraction_enabled = flags & FLAG_CONTRACTION;
    uint32_t beta_num = r.u32();
    uint32_t beta_den = r.u32();
    idx.beta = Beta(beta_num, beta_den);
    idx.hierarchy.beta = idx.beta;
    idx.fingerprint = r.u64();
    idx.original_vertex_count = r.u32();
    uint32_t core_n = r.u32();

    struct Section
    {
        uint64_t offset;
        uint64_t size;
    };
    uint32_t section_count = r.u32();
    std::vector<std::pair<uint32_t, Section>> table(section_count);
    for (auto &[id, sec] : table)
    {
        id = r.u32();
        sec.offset = r.u64();
        sec.size = r.u64();
        if (sec.offset + sec.size > r.size())
            throw IndexCorruptionError("section extends beyond end of file");
    }
    auto find_section = [&](uint32_t id) -> const Section * {
        for (const auto &[sid, sec] : table)
            if (sid == id)
                return &sec;
        return nullptr;
    };
    auto require_section = [&](uint32_t id) -> const Section & {
        const Section *sec = find_section(id);
        if (!sec)
            throw IndexCorruptionError("missing section " + std::to_string(id));
        return *sec;
    };

    {
        const Section &sec = require_section(SECTION_HIERARCHY);
        r.seek(sec.offset);
        uint32_t node_count = r.u32();
        idx.hierarchy.nodes.reserve(node_count);
        if (node_count > 0 && read_hierarchy_node(r, idx.hierarchy, node_count) != node_count)
            throw IndexCorruptionError("hierarchy node count mismatch");
    }
    {
        const Section &sec = require_section(SECTION_VERTEX_MAP);
        r.seek(sec.offset);
        idx.hierarchy.vertex_node.resize(core_n);
        idx.hierarchy.vertex_pos.resize(core_n);
        for (Vertex v = 0; v < core_n; ++v)
        {
            idx.hierarchy.vertex_node[v] = r.u64();
            idx.hierarchy.vertex_pos[v] = r.u32();
        }
    }
    {
        const Section &sec = require_section(SECTION_LABELS);
        r.seek(sec.offset);
        idx.labels.arrays.resize(core_n);
        for (Vertex v = 0; v < core_n; ++v)
        {
            uint32_t level_count = r.u32();
            auto &levels = idx.labels.arrays[v];
            levels.resize(level_count);
            for (auto &values : levels)
                values.resize(r.u32());
            for (auto &values : levels)
                for (uint32_t &value : values)
                    value = r.u32();
        }
    }
    if (const Section *sec = find_section(SECTION_CONTRACTION); sec && sec->size > 0)
    {
        r.seek(sec->offset);
        uint32_t record_count = r.u32();
        idx.contraction.records.resize(record_count);
        for (ContractionRecord &rec : idx.contraction.records)
        {
            rec.vertex = r.u32();
            rec.root = r.u32();
            rec.parent = r.u32();
            rec.dist_to_parent = r.u64();
            rec.dist_to_root = r.u64();
            rec.depth = r.u32();
            if (rec.vertex >= idx.original_vertex_count)
                throw IndexCorruptionError("contraction record vertex out of range");
        }
    }
    {
        const Section &sec = require_section(SECTION_GRAPH_BLOB);
        r.seek(sec.offset);
        uint32_t n = r.u32();
        uint64_t m = r.u64();
        std::vector<std::tuple<Vertex, Vertex, Weight>> edges;
        edges.reserve(m);
        for (uint64_t i = 0; i < m; ++i)
        {
            Vertex u = r.u32();
            Vertex v = r.u32();
            Weight weight = r.u32();
            edges.emplace_back(u, v, weight);
        }
        idx.contraction.core = WeightedGraph(n, std::move(edges));
        if (n != core_n)
            throw IndexCorruptionError("core graph size mismatch");
    }

    // id maps are derivable: survivors keep ascending original order
    Contraction &c = idx.contraction;
    c.core_id.assign(idx.original_vertex_count, NO_CORE_ID);
    c.record_index.assign(idx.original_vertex_count, NO_CORE_ID);
    for (uint32_t i = 0; i < c.records.size(); ++i)
        c.record_index[c.records[i].vertex] = i;
    c.core_to_original.clear();
    for (Vertex v = 0; v < idx.original_vertex_count; ++v)
        if (c.record_index[v] == NO_CORE_ID)
        {
            c.core_id[v] = static_cast<uint32_t>(c.core_to_original.size());
            c.core_to_original.push_back(v);
        }
    if (c.core_to_original.size() != core_n)
        throw IndexCorruptionError("contraction records inconsistent with core size");
    return idx;
}

DistanceIndex load_index_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open index file: " + path);
    return load_index(in);
}

} // namespace hc2l
