// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/mixer.hpp"

#include <algorithm>

namespace zeth::mixer
{
namespace
{
constexpr std::array<std::uint8_t, 4> mix_magic{'Z', 'M', 'I', 'X'};

class Writer
{
public:
    void raw(ByteView b) { out_.insert(out_.end(), b.begin(), b.end()); }
    void u32(std::size_t v)
    {
        const auto enc = be64(v);
        raw(ByteView{enc}.subspan(4));
    }
    void u64(std::uint64_t v) { raw(be64(v)); }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

class Reader
{
public:
    explicit Reader(ByteView in) : in_(in) {}

    ByteView raw(std::size_t n)
    {
        if (n > in_.size())
            fail(ErrorCode::MalformedTransaction, "mix payload truncated");
        const auto out = in_.first(n);
        in_ = in_.subspan(n);
        return out;
    }
    std::uint64_t u64() { return read_be64(raw(8)); }
    std::size_t u32()
    {
        const auto b = raw(4);
        return (std::size_t{b[0]} << 24) | (std::size_t{b[1]} << 16) | (std::size_t{b[2]} << 8) | b[3];
    }
    Digest256 digest()
    {
        Digest256 d;
        std::ranges::copy(raw(32), d.bytes.begin());
        return d;
    }
    bool done() const noexcept { return in_.empty(); }

private:
    ByteView in_;
};

nlohmann::json digests_to_json(const std::vector<Digest256>& ds)
{
    auto j = nlohmann::json::array();
    for (const auto& d : ds)
        j.push_back(to_hex(d));
    return j;
}

std::vector<Digest256> digests_from_json(const nlohmann::json& j)
{
    std::vector<Digest256> out;
    for (const auto& d : j)
        out.push_back(digest_from_hex(d.get<std::string>()));
    return out;
}
}  // namespace

Instance MixTransaction::instance() const
{
    return Instance{root, serials, commitments, v_in, v_out};
}

Bytes MixTransaction::aux_binding() const
{
    Writer w;
    w.u32(ciphertexts.size());
    for (const auto& c : ciphertexts)
    {
        w.u32(c.size());
        w.raw(c);
    }
    return w.take();
}

Bytes MixTransaction::encode() const
{
    Writer w;
    w.raw(mix_magic);
    w.raw(root.view());
    w.u32(serials.size());
    for (const auto& sn : serials)
        w.raw(sn.view());
    w.u32(commitments.size());
    for (const auto& cm : commitments)
        w.raw(cm.view());
    const auto p = proof.serialize();
    w.raw(p);
    w.u64(v_in);
    w.u64(v_out);
    w.raw(aux_binding());
    return w.take();
}

MixTransaction MixTransaction::decode(ByteView bytes)
{
    Reader r{bytes};
    if (!std::ranges::equal(r.raw(4), mix_magic))
        fail(ErrorCode::MalformedTransaction, "not a mix payload");
    MixTransaction tx;
    tx.root = r.digest();
    const auto n = r.u32();
    if (n > bytes.size() / 32)
        fail(ErrorCode::MalformedTransaction, "serial count too large");
    for (std::size_t i = 0; i < n; ++i)
        tx.serials.push_back(r.digest());
    const auto m = r.u32();
    if (m > bytes.size() / 32)
        fail(ErrorCode::MalformedTransaction, "commitment count too large");
    for (std::size_t i = 0; i < m; ++i)
        tx.commitments.push_back(r.digest());
    try
    {
        tx.proof = proof::Proof::parse(r.raw(proof::proof_size));
    }
    catch (const Error&)
    {
        fail(ErrorCode::MalformedTransaction, "bad proof encoding");
    }
    tx.v_in = r.u64();
    tx.v_out = r.u64();
    const auto c = r.u32();
    if (c > bytes.size())
        fail(ErrorCode::MalformedTransaction, "ciphertext count too large");
    for (std::size_t i = 0; i < c; ++i)
    {
        const auto len = r.u32();
        const auto body = r.raw(len);
        tx.ciphertexts.emplace_back(body.begin(), body.end());
    }
    if (!r.done())
        fail(ErrorCode::MalformedTransaction, "trailing bytes in mix payload");
    return tx;
}

nlohmann::json MixTransaction::to_json() const
{
    auto cts = nlohmann::json::array();
    for (const auto& c : ciphertexts)
        cts.push_back(to_hex(c));
    const auto p = proof.serialize();
    return {{"root", to_hex(root)}, {"serials", digests_to_json(serials)},
        {"commitments", digests_to_json(commitments)}, {"proof", to_hex(ByteView{p})}, {"v_in", v_in},
        {"v_out", v_out}, {"ciphertexts", cts}};
}

MixTransaction MixTransaction::from_json(const nlohmann::json& j)
{
    MixTransaction tx;
    tx.root = digest_from_hex(j.at("root").get<std::string>());
    tx.serials = digests_from_json(j.at("serials"));
    tx.commitments = digests_from_json(j.at("commitments"));
    tx.proof = proof::Proof::parse(from_hex(j.at("proof").get<std::string>()));
    tx.v_in = j.at("v_in").get<std::uint64_t>();
    tx.v_out = j.at("v_out").get<std::uint64_t>();
    for (const auto& c : j.at("ciphertexts"))
        tx.ciphertexts.push_back(from_hex(c.get<std::string>()));
    return tx;
}

Mixer::Mixer(proof::VerificationKey vk, std::uint64_t instance_elements)
  : vk_(std::move(vk)), instance_elements_(instance_elements), tree_(vk_.config.depth)
{
    roots_.push_back(RootEntry{tree_.root(), 0});
    root_index_.emplace(tree_.root(), 0);
}

std::optional<std::uint64_t> Mixer::root_leaf_count(const Digest256& root) const
{
    const auto it = root_index_.find(root);
    if (it == root_index_.end())
        return std::nullopt;
    return roots_[it->second].leaf_count;
}

void Mixer::call(ledger::CallContext& ctx)
{
    const auto tx = MixTransaction::decode(ctx.payload());
    if (tx.serials.size() != config().n_inputs || tx.commitments.size() != config().n_outputs
        || tx.ciphertexts.size() != config().n_outputs)
        fail(ErrorCode::MalformedTransaction, "mix transaction shape does not match the mixer");
    mix(ctx, tx);
}

void Mixer::mix(ledger::CallContext& ctx, const MixTransaction& tx)
{
    const auto& sched = ctx.schedule();

    // 1. root must be one this mixer produced
    if (!knows_root(tx.root))
        fail(ErrorCode::UnknownRoot, "root " + to_hex(tx.root) + " is not in the root history");
    const bool stale = tx.root != current_root();

    // 2. serial numbers: reject reuse, record the rest
    for (const auto& sn : tx.serials)
    {
        if (spent_.contains(sn))
            fail(ErrorCode::DoubleSpend, "serial number " + to_hex(sn) + " already spent");
        ctx.charge(sched.storage_write);
        spent_.insert(sn);
    }

    // 3. proof over the statement and the ciphertexts
    ctx.charge(gas::verifier_gas(instance_elements_, sched).total);
    if (!proof::verify(vk_, tx.instance(), tx.aux_binding(), tx.proof))
        fail(ErrorCode::InvalidProof, "proof rejected");

    // 4. public input must match the attached value
    if (ctx.value() != tx.v_in)
        fail(ErrorCode::ValueMismatch, "v_in does not equal the value attached to the transaction");

    // 5. append the new commitments
    std::vector<std::uint64_t> leaf_addresses;
    for (const auto& cm : tx.commitments)
    {
        ctx.charge(sched.storage_write);
        leaf_addresses.push_back(tree_.append(cm));
    }

    // 6. public output goes back to the caller
    if (tx.v_out > 0)
        ctx.send_value(ctx.sender(), BigInt{tx.v_out});

    // 7. new root
    ctx.charge(sched.storage_write);
    const auto new_root = tree_.root();
    if (!root_index_.contains(new_root))
    {
        root_index_.emplace(new_root, roots_.size());
        roots_.push_back(RootEntry{new_root, tree_.size()});
    }
    if (stale)
        ++stale_root_uses_;
    ++accepted_mixes_;

    // 8. broadcasts
    for (std::size_t i = 0; i < tx.ciphertexts.size(); ++i)
        ctx.emit(std::string{event::ciphertext}, {{"index", i}, {"hex", to_hex(tx.ciphertexts[i])}});
    for (std::size_t i = 0; i < tx.commitments.size(); ++i)
        ctx.emit(std::string{event::commitment},
            {{"leaf_address", leaf_addresses[i]}, {"hex", to_hex(tx.commitments[i])}});
    ctx.emit(std::string{event::root}, {{"hex", to_hex(new_root)}});
}

nlohmann::json Mixer::storage() const
{
    auto roots = nlohmann::json::array();
    for (const auto& r : roots_)
        roots.push_back({{"root", to_hex(r.root)}, {"leaf_count", r.leaf_count}});
    auto spent = nlohmann::json::array();
    for (const auto& sn : spent_)
        spent.push_back(to_hex(sn));
    return {{"verification_key", proof::to_json(vk_)}, {"instance_elements", instance_elements_},
        {"tree", tree_.to_json()}, {"roots", roots}, {"spent_serials", spent},
        {"stale_root_uses", stale_root_uses_}, {"accepted_mixes", accepted_mixes_}};
}

std::unique_ptr<Mixer> Mixer::from_storage(const nlohmann::json& j)
{
    auto m = std::make_unique<Mixer>(proof::verification_key_from_json(j.at("verification_key")),
        j.at("instance_elements").get<std::uint64_t>());
    m->tree_ = MerkleTree::from_json(j.at("tree"));
    if (m->tree_.depth() != m->config().depth)
        fail(ErrorCode::Parse, "mixer tree depth disagrees with its verification key");
    m->roots_.clear();
    m->root_index_.clear();
    for (const auto& r : j.at("roots"))
    {
        const auto root = digest_from_hex(r.at("root").get<std::string>());
        m->root_index_.emplace(root, m->roots_.size());
        m->roots_.push_back(RootEntry{root, r.at("leaf_count").get<std::uint64_t>()});
    }
    if (m->roots_.empty() || m->roots_.back().root != m->tree_.root())
        fail(ErrorCode::Parse, "mixer root history does not end at the tree root");
    for (const auto& sn : j.at("spent_serials"))
        m->spent_.insert(digest_from_hex(sn.get<std::string>()));
    m->stale_root_uses_ = j.at("stale_root_uses").get<std::uint64_t>();
    m->accepted_mixes_ = j.at("accepted_mixes").get<std::uint64_t>();
    return m;
}

Bytes AddressRegistry::encode_registration(const AddressPublic& pub)
{
    Bytes out(pub.a_pk.bytes.begin(), pub.a_pk.bytes.end());
    out.insert(out.end(), pub.k_pk.begin(), pub.k_pk.end());
    return out;
}

void AddressRegistry::call(ledger::CallContext& ctx)
{
    const auto payload = ctx.payload();
    if (payload.size() != 64)
        fail(ErrorCode::MalformedTransaction, "registration payload must be a_pk || k_pk");
    AddressPublic pub;
    std::copy_n(payload.begin(), 32, pub.a_pk.bytes.begin());
    std::copy_n(payload.begin() + 32, 32, pub.k_pk.begin());
    if (lookup(pub.a_pk))
        fail(ErrorCode::AlreadyExists, "address already registered");
    ctx.charge(ctx.schedule().storage_write);
    entries_.push_back(pub);
    ctx.emit("AddressRegistered", {{"hex", to_hex(ByteView{payload})}});
}

std::optional<AddressPublic> AddressRegistry::lookup(const Digest256& a_pk) const
{
    const auto it = std::ranges::find_if(entries_, [&](const AddressPublic& e) { return e.a_pk == a_pk; });
    if (it == entries_.end())
        return std::nullopt;
    return *it;
}

nlohmann::json AddressRegistry::storage() const
{
    auto j = nlohmann::json::array();
    for (const auto& e : entries_)
        j.push_back(zeth::to_json(e));
    return {{"entries", j}};
}

std::unique_ptr<AddressRegistry> AddressRegistry::from_storage(const nlohmann::json& j)
{
    auto r = std::make_unique<AddressRegistry>();
    for (const auto& e : j.at("entries"))
        r->entries_.push_back(address_public_from_json(e));
    return r;
}

std::unique_ptr<ledger::Contract> make_contract(std::string_view kind, const nlohmann::json& storage)
{
    if (kind == Mixer::kind_name)
        return Mixer::from_storage(storage);
    if (kind == AddressRegistry::kind_name)
        return AddressRegistry::from_storage(storage);
    return nullptr;
}

}  // namespace zeth::mixer
