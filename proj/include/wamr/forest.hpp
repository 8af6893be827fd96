#ifndef WAMR_FOREST_HPP
#define WAMR_FOREST_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "wamr/core.hpp"
#include "wamr/wavelets.hpp"

namespace wamr {

/// Rectangular domain tiled by unit-cube trees; leaves are N_b^3 blocks.
struct DomainSpec {
    std::array<int, 3> tree_counts{1, 1, 1};
    std::array<bool, 3> periodic{true, true, true};
    int block_size = 16;  // N_b, even, >= 2*N_g
    int initial_level = 0;
};

enum class BlockStatus : uint8_t { Same, Coarser, Finer };

/// One leaf position: level plus global block coordinates at that level
/// (tree index folded in: g = tree * 2^L + in-tree coords).
struct BlockKey {
    int level = 0;
    std::array<int64_t, 3> g{0, 0, 0};

    bool operator==(const BlockKey& o) const { return level == o.level && g == o.g; }
    uint64_t packed() const {
        return static_cast<uint64_t>(level) | (static_cast<uint64_t>(g[0]) << 4) |
               (static_cast<uint64_t>(g[1]) << 24) | (static_cast<uint64_t>(g[2]) << 44);
    }
    BlockKey parent() const {
        return {level - 1, {floor_div(g[0], 2), floor_div(g[1], 2), floor_div(g[2], 2)}};
    }
    BlockKey child(int ox, int oy, int oz) const {
        return {level + 1, {2 * g[0] + ox, 2 * g[1] + oy, 2 * g[2] + oz}};
    }
    int octant() const {
        return static_cast<int>((g[0] & 1) | ((g[1] & 1) << 1) | ((g[2] & 1) << 2));
    }
    /// in-tree logical coordinates and tree index
    std::array<int64_t, 3> coords_in_tree() const {
        const int64_t n = int64_t(1) << level;
        return {mod_floor(g[0], n), mod_floor(g[1], n), mod_floor(g[2], n)};
    }
    std::array<int64_t, 3> tree_coords() const {
        const int64_t n = int64_t(1) << level;
        return {floor_div(g[0], n), floor_div(g[1], n), floor_div(g[2], n)};
    }
};

/// One uniform-resolution block: N_b^3 interior samples per field plus a halo
/// of width N_g on every side. Halo contents are undefined outside a
/// completed ghost phase.
class Block {
  public:
    Block(const BlockKey& key, int nb, int ng, int nfields)
        : key_(key), nb_(nb), ng_(ng), stride_(nb + 2 * ng) {
        data_.resize(nfields);
        const size_t n = static_cast<size_t>(stride_) * stride_ * stride_;
        for (auto& f : data_) f.assign(n, 0.0);
    }

    const BlockKey& key() const { return key_; }
    int nb() const { return nb_; }
    int ng() const { return ng_; }
    int stride() const { return stride_; }

    real* field(int f) { return data_[f].data(); }
    const real* field(int f) const { return data_[f].data(); }
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(k + ng_) * stride_ + (j + ng_)) * stride_ + (i + ng_);
    }
    real& at(int f, int i, int j, int k) { return data_[f][idx(i, j, k)]; }
    real at(int f, int i, int j, int k) const { return data_[f][idx(i, j, k)]; }

    int num_fields() const { return static_cast<int>(data_.size()); }
    void add_field() {
        data_.emplace_back(static_cast<size_t>(stride_) * stride_ * stride_, 0.0);
    }

    BlockStatus status = BlockStatus::Same;
    real detail_norm = 0.0;
    bool refined_this_cycle = false;

  private:
    BlockKey key_;
    int nb_, ng_, stride_;
    std::vector<std::vector<real>> data_;
};

struct NeighborEntry {
    BlockKey key;
    std::array<int, 3> dir;  // direction from the queried block, each in {-1,0,1}

    int adjacency() const {  // 1 = face, 2 = edge, 3 = corner
        return std::abs(dir[0]) + std::abs(dir[1]) + std::abs(dir[2]);
    }
};

struct NeighborSet {
    std::vector<NeighborEntry> same_level, coarser, finer;
    std::vector<std::array<int, 3>> domain_boundary;
};

/// Forest of octrees over the brick of unit trees. Topology mutations are
/// single-threaded; concurrent per-block reads/compute are safe between them.
class Forest {
  public:
    Forest(const DomainSpec& domain, FilterBank bank, int fd_halfwidth,
           std::vector<std::string> field_names);

    using InitFn = std::function<real(int field, real x, real y, real z)>;

    /// All leaves at initial_level, interiors sampled from init.
    static Forest create_uniform(const DomainSpec& domain, FilterBank bank, int fd_halfwidth,
                                 std::vector<std::string> field_names, const InitFn& init);

    const DomainSpec& domain() const { return domain_; }
    const FilterBank& bank() const { return bank_; }
    int nb() const { return nb_; }
    int ng() const { return ng_; }
    int fd_halfwidth() const { return fd_halfwidth_; }

    // --- fields -----------------------------------------------------------
    int field_index(const std::string& name) const;
    const std::vector<std::string>& field_names() const { return field_names_; }
    int num_fields() const { return static_cast<int>(field_names_.size()); }
    int add_field(const std::string& name);

    // --- topology ---------------------------------------------------------
    /// leaves in deterministic Morton (partition) order
    const std::vector<Block*>& blocks() const { return order_; }
    std::vector<BlockKey> partition_order() const;
    size_t num_blocks() const { return leaves_.size(); }

    Block* leaf(const BlockKey& key) const;
    bool is_leaf(const BlockKey& key) const { return leaf(key) != nullptr; }
    /// leaf at the given cell or the nearest ancestor leaf; nullptr if the
    /// cell is refined deeper or outside the domain
    Block* leaf_at_or_above(const BlockKey& key) const;
    /// finest leaf level inside the given cell (descends); -1 when empty
    int max_leaf_level_in(const BlockKey& key) const;

    /// wrap a block cell into the domain; false if outside a non-periodic axis
    bool wrap_cell(int level, std::array<int64_t, 3>& cell, std::array<int64_t, 3>* shift) const;

    NeighborSet neighbors(const BlockKey& key) const;
    bool is_balanced() const;
    /// refine until every adjacency has level difference <= 1; returns the
    /// keys of the blocks that were forcibly refined
    std::vector<BlockKey> enforce_two_to_one();

    // mutation primitives (bookkeeping only; call commit_topology after)
    void insert_block(std::unique_ptr<Block> b);
    std::unique_ptr<Block> extract_block(const BlockKey& key);
    void commit_topology();

    uint64_t topology_epoch() const { return topology_epoch_; }
    uint64_t ghost_epoch(int field) const { return ghost_epoch_[field]; }
    void mark_ghosts_fresh(int field) { ghost_epoch_[field] = topology_epoch_; }
    bool ghosts_fresh(int field) const { return ghost_epoch_[field] == topology_epoch_; }

    // --- geometry ---------------------------------------------------------
    real spacing(int level) const;  // 2^-L / N_b (unit tree edge)
    /// absolute coordinate of interior sample idx along an axis
    real coord(const BlockKey& key, int axis, int64_t idx) const;
    /// blocks per axis at a level (T_a * 2^L)
    std::array<int64_t, 3> cells_per_axis(int level) const;
    std::array<int64_t, 3> samples_per_axis(int level) const;
    int min_level() const;
    int max_level() const;

    /// Leaves exactly tile the domain: sum over leaves of 8^-L.
    real tiled_volume() const;

    // --- region resolution --------------------------------------------------
    /// Split a box on the level `lat` sample lattice into parts covered by
    /// single leaves. `shift` maps unwrapped sample coords into the owner's
    /// frame (owner_coord = coord - shift). Parts outside a non-periodic
    /// boundary get leaf == nullptr.
    struct RegionPart {
        Block* leaf = nullptr;
        int leaf_level = -1;
        Box3i box;
        std::array<int64_t, 3> shift{0, 0, 0};
    };
    void resolve_region(int lat, const Box3i& sample_box, std::vector<RegionPart>& out) const;

  private:
    void resolve_cell(int lat, const Box3i& sample_box, const BlockKey& cell,
                      const std::array<int64_t, 3>& shift, std::vector<RegionPart>& out) const;

    DomainSpec domain_;
    FilterBank bank_;
    int fd_halfwidth_;
    int nb_, ng_;
    std::vector<std::string> field_names_;

    std::unordered_map<uint64_t, std::unique_ptr<Block>> leaves_;
    std::vector<Block*> order_;
    uint64_t topology_epoch_ = 1;
    std::vector<uint64_t> ghost_epoch_;
};

/// depth-first octree ordering used for partitioning and dumps
bool morton_less(const BlockKey& a, const BlockKey& b, const std::array<int, 3>& tree_counts);

}  // namespace wamr

#endif
