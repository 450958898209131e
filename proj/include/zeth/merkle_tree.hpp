// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/common.hpp"

#include <nlohmann/json_fwd.hpp>

namespace zeth
{
inline constexpr unsigned max_tree_depth = 32;

/// Authentication path, ordered leaf to root. directions[i] is set when the
/// node at level i is a right child, i.e. bit i of leaf_address.
struct MerklePath
{
    std::uint64_t leaf_address = 0;
    std::vector<Digest256> siblings;
    std::vector<bool> directions;

    bool operator==(const MerklePath&) const = default;
};

/// Fixed-depth, append-only sha256 tree. Unfilled leaves are 0^32 and an
/// internal node is H(left || right). Only the filled prefix is stored;
/// missing subtrees use the precomputed empty-subtree digests, which gives the
/// same roots and paths as a fully materialised tree.
class MerkleTree
{
public:
    /// Throws DepthOutOfRange unless 1 <= depth <= 32.
    explicit MerkleTree(unsigned depth);

    /// Returns the leaf address. Throws TreeFull when 2^depth leaves exist.
    std::uint64_t append(const Digest256& cm);

    /// Throws AddressUnused for addresses not yet appended.
    MerklePath path(std::uint64_t leaf_address) const;

    Digest256 root() const;
    unsigned depth() const noexcept { return depth_; }
    std::uint64_t size() const noexcept { return levels_.front().size(); }
    std::uint64_t capacity() const noexcept { return std::uint64_t{1} << depth_; }
    bool full() const noexcept { return size() == capacity(); }
    const std::vector<Digest256>& leaves() const noexcept { return levels_.front(); }

    /// The tree as it was after its first `leaf_count` appends.
    MerkleTree prefix(std::uint64_t leaf_count) const;

    nlohmann::json to_json() const;
    static MerkleTree from_json(const nlohmann::json& j);

    bool operator==(const MerkleTree& other) const
    {
        return depth_ == other.depth_ && leaves() == other.leaves();
    }

private:
    unsigned depth_;
    // levels_[0] holds the leaves; levels_[k] the filled prefix of level k.
    std::vector<std::vector<Digest256>> levels_;

    const Digest256& node(unsigned level, std::uint64_t index) const;
};

/// Empty-subtree digests Z_0 .. Z_32 with Z_0 = 0^32, Z_{i+1} = H(Z_i || Z_i).
const Digest256& empty_subtree_root(unsigned height);

Digest256 hash_children(const Digest256& left, const Digest256& right);

/// Folds `leaf` up through the siblings. A path whose direction bits disagree
/// with its leaf address never verifies.
bool verify_path(const Digest256& leaf, const MerklePath& path, const Digest256& root);

nlohmann::json path_to_json(const MerklePath& path);
MerklePath path_from_json(const nlohmann::json& j);

}  // namespace zeth
