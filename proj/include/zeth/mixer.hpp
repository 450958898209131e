// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/ledger.hpp"
#include "zeth/merkle_tree.hpp"
#include "zeth/proof_system.hpp"

#include <set>

namespace zeth::mixer
{
/// Event kinds emitted by Mix, with their JSON fields.
namespace event
{
inline constexpr std::string_view ciphertext = "CiphertextBroadcast";  // {index, hex}
inline constexpr std::string_view commitment = "CommitmentAppended";   // {leaf_address, hex}
inline constexpr std::string_view root = "MerkleRoot";                 // {hex}
}  // namespace event

/// Arguments of one Mix call.
struct MixTransaction
{
    Digest256 root;
    std::vector<Digest256> serials;
    std::vector<Digest256> commitments;
    proof::Proof proof;
    std::uint64_t v_in = 0;
    std::uint64_t v_out = 0;
    std::vector<Bytes> ciphertexts;

    bool operator==(const MixTransaction& other) const
    {
        return root == other.root && serials == other.serials && commitments == other.commitments
            && proof == other.proof && v_in == other.v_in && v_out == other.v_out
            && ciphertexts == other.ciphertexts;
    }

    Instance instance() const;
    /// Concatenation of u32-length-prefixed ciphertexts; what the proof binds.
    Bytes aux_binding() const;

    /// Call payload: magic "ZMIX" then length-prefixed fields.
    Bytes encode() const;
    /// Throws MalformedTransaction.
    static MixTransaction decode(ByteView bytes);

    nlohmann::json to_json() const;
    static MixTransaction from_json(const nlohmann::json& j);
};

struct RootEntry
{
    Digest256 root;
    std::uint64_t leaf_count = 0;

    bool operator==(const RootEntry&) const = default;
};

/// The mixer contract. Mix follows the reference pseudocode step by step:
/// root check, serial insertion, proof verification, value check, leaf
/// insertion, payout, root update, broadcasts. Any failure aborts the whole
/// call and the ledger rolls every step back.
class Mixer final : public ledger::Contract
{
public:
    static constexpr std::string_view kind_name = "zeth.mixer";

    Mixer(proof::VerificationKey vk, std::uint64_t instance_elements = gas::default_instance_elements);

    std::string_view kind() const noexcept override { return kind_name; }
    std::unique_ptr<ledger::Contract> clone() const override { return std::make_unique<Mixer>(*this); }
    void call(ledger::CallContext& ctx) override;
    nlohmann::json storage() const override;
    static std::unique_ptr<Mixer> from_storage(const nlohmann::json& j);

    const CircuitConfig& config() const noexcept { return vk_.config; }
    const proof::VerificationKey& verification_key() const noexcept { return vk_; }
    std::uint64_t instance_elements() const noexcept { return instance_elements_; }
    const MerkleTree& tree() const noexcept { return tree_; }
    Digest256 current_root() const { return roots_.back().root; }
    const std::vector<RootEntry>& roots() const noexcept { return roots_; }
    /// Leaf count at the time `root` was current; nullopt for unknown roots.
    std::optional<std::uint64_t> root_leaf_count(const Digest256& root) const;
    bool knows_root(const Digest256& root) const { return root_index_.contains(root); }
    bool is_spent(const Digest256& sn) const { return spent_.contains(sn); }
    std::size_t spent_count() const noexcept { return spent_.size(); }
    /// Accepted transactions whose root was not the current one.
    std::uint64_t stale_root_uses() const noexcept { return stale_root_uses_; }
    std::uint64_t accepted_mixes() const noexcept { return accepted_mixes_; }

private:
    proof::VerificationKey vk_;
    std::uint64_t instance_elements_;
    MerkleTree tree_;
    std::vector<RootEntry> roots_;
    std::map<Digest256, std::uint64_t> root_index_;
    std::set<Digest256> spent_;
    std::uint64_t stale_root_uses_ = 0;
    std::uint64_t accepted_mixes_ = 0;

    void mix(ledger::CallContext& ctx, const MixTransaction& tx);
};

/// Optional on-chain address registry: a plain list of (a_pk, k_pk).
class AddressRegistry final : public ledger::Contract
{
public:
    static constexpr std::string_view kind_name = "zeth.registry";

    std::string_view kind() const noexcept override { return kind_name; }
    std::unique_ptr<ledger::Contract> clone() const override
    {
        return std::make_unique<AddressRegistry>(*this);
    }
    /// Payload: a_pk(32) || k_pk(32). Duplicate a_pk aborts with AlreadyExists.
    void call(ledger::CallContext& ctx) override;
    nlohmann::json storage() const override;
    static std::unique_ptr<AddressRegistry> from_storage(const nlohmann::json& j);

    const std::vector<AddressPublic>& entries() const noexcept { return entries_; }
    std::optional<AddressPublic> lookup(const Digest256& a_pk) const;

    static Bytes encode_registration(const AddressPublic& pub);

private:
    std::vector<AddressPublic> entries_;
};

/// Contract factory for ledger::Ledger::from_json.
std::unique_ptr<ledger::Contract> make_contract(std::string_view kind, const nlohmann::json& storage);

}  // namespace zeth::mixer
