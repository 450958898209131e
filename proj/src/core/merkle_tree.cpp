// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/merkle_tree.hpp"
#include "zeth/crypto.hpp"

#include <nlohmann/json.hpp>

namespace zeth
{
Digest256 hash_children(const Digest256& left, const Digest256& right)
{
    return crypto::Hasher{}.update(left).update(right).finish();
}

const Digest256& empty_subtree_root(unsigned height)
{
    static const auto table = [] {
        std::array<Digest256, max_tree_depth + 1> t{};
        for (unsigned i = 1; i <= max_tree_depth; ++i)
            t[i] = hash_children(t[i - 1], t[i - 1]);
        return t;
    }();
    if (height > max_tree_depth)
        fail(ErrorCode::DepthOutOfRange, "empty subtree height out of range");
    return table[height];
}

MerkleTree::MerkleTree(unsigned depth) : depth_(depth)
{
    if (depth < 1 || depth > max_tree_depth)
        fail(ErrorCode::DepthOutOfRange,
            "tree depth must be in [1, 32], got " + std::to_string(depth));
    levels_.resize(depth + 1);
}

const Digest256& MerkleTree::node(unsigned level, std::uint64_t index) const
{
    const auto& row = levels_[level];
    if (index < row.size())
        return row[index];
    return empty_subtree_root(level);
}

std::uint64_t MerkleTree::append(const Digest256& cm)
{
    if (full())
        fail(ErrorCode::TreeFull, "merkle tree is full (" + std::to_string(capacity()) + " leaves)");
    const std::uint64_t address = size();
    levels_[0].push_back(cm);

    std::uint64_t index = address;
    for (unsigned level = 0; level < depth_; ++level)
    {
        const std::uint64_t parent = index >> 1;
        const auto left = node(level, parent << 1);
        const auto right = node(level, (parent << 1) | 1U);
        auto& up = levels_[level + 1];
        const auto digest = hash_children(left, right);
        if (parent < up.size())
            up[parent] = digest;
        else
            up.push_back(digest);
        index = parent;
    }
    return address;
}

Digest256 MerkleTree::root() const
{
    return node(depth_, 0);
}

MerklePath MerkleTree::path(std::uint64_t leaf_address) const
{
    if (leaf_address >= size())
        fail(ErrorCode::AddressUnused, "no leaf at address " + std::to_string(leaf_address));
    MerklePath p;
    p.leaf_address = leaf_address;
    p.siblings.reserve(depth_);
    p.directions.reserve(depth_);
    std::uint64_t index = leaf_address;
    for (unsigned level = 0; level < depth_; ++level)
    {
        p.siblings.push_back(node(level, index ^ 1U));
        p.directions.push_back((index & 1U) != 0);
        index >>= 1;
    }
    return p;
}

MerkleTree MerkleTree::prefix(std::uint64_t leaf_count) const
{
    if (leaf_count > size())
        fail(ErrorCode::InvalidArgument, "prefix longer than the tree");
    MerkleTree t{depth_};
    for (std::uint64_t i = 0; i < leaf_count; ++i)
        t.append(leaves()[i]);
    return t;
}

bool verify_path(const Digest256& leaf, const MerklePath& path, const Digest256& root)
{
    const auto depth = path.siblings.size();
    if (depth == 0 || depth > max_tree_depth || path.directions.size() != depth)
        return false;
    if (depth < 64 && (path.leaf_address >> depth) != 0)
        return false;
    Digest256 cur = leaf;
    for (std::size_t level = 0; level < depth; ++level)
    {
        const bool right = path.directions[level];
        if (right != (((path.leaf_address >> level) & 1U) != 0))
            return false;
        cur = right ? hash_children(path.siblings[level], cur)
                    : hash_children(cur, path.siblings[level]);
    }
    return cur == root;
}

nlohmann::json MerkleTree::to_json() const
{
    nlohmann::json leaves_json = nlohmann::json::array();
    for (const auto& leaf : leaves())
        leaves_json.push_back(to_hex(leaf));
    return {{"depth", depth_}, {"leaf_count", size()}, {"leaves", std::move(leaves_json)}};
}

MerkleTree MerkleTree::from_json(const nlohmann::json& j)
{
    MerkleTree t{j.at("depth").get<unsigned>()};
    const auto& leaves_json = j.at("leaves");
    if (j.at("leaf_count").get<std::uint64_t>() != leaves_json.size())
        fail(ErrorCode::Parse, "leaf_count does not match the number of leaves");
    for (const auto& leaf : leaves_json)
        t.append(digest_from_hex(leaf.get<std::string>()));
    return t;
}

nlohmann::json path_to_json(const MerklePath& path)
{
    nlohmann::json siblings = nlohmann::json::array();
    for (const auto& s : path.siblings)
        siblings.push_back(to_hex(s));
    std::string dirs;
    for (const bool b : path.directions)
        dirs.push_back(b ? '1' : '0');
    return {{"leaf_address", path.leaf_address}, {"siblings", std::move(siblings)}, {"directions", dirs}};
}

MerklePath path_from_json(const nlohmann::json& j)
{
    MerklePath p;
    p.leaf_address = j.at("leaf_address").get<std::uint64_t>();
    for (const auto& s : j.at("siblings"))
        p.siblings.push_back(digest_from_hex(s.get<std::string>()));
    for (const char c : j.at("directions").get<std::string>())
    {
        if (c != '0' && c != '1')
            fail(ErrorCode::Parse, "direction bits must be '0' or '1'");
        p.directions.push_back(c == '1');
    }
    return p;
}

}  // namespace zeth
