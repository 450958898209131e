// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/wallet.hpp"

#include <algorithm>
#include <numeric>

namespace zeth::wallet
{
namespace
{
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        fail(ErrorCode::UnbalancedRequest, "values overflow 64 bits");
    return out;
}

NoteStatus status_from_name(std::string_view s)
{
    if (s == "unspent")
        return NoteStatus::Unspent;
    if (s == "pending")
        return NoteStatus::Pending;
    if (s == "spent")
        return NoteStatus::Spent;
    fail(ErrorCode::Parse, "unknown note status " + std::string{s});
}
}  // namespace

std::string_view status_name(NoteStatus s) noexcept
{
    switch (s)
    {
    case NoteStatus::Unspent: return "unspent";
    case NoteStatus::Pending: return "pending";
    case NoteStatus::Spent: return "spent";
    }
    return "unknown";
}

nlohmann::json ReceiveReport::to_json() const
{
    auto notes = nlohmann::json::array();
    std::uint64_t total = 0;
    for (const auto& n : accepted)
    {
        notes.push_back({{"commitment", to_hex(commitment(n))}, {"value", n.value}});
        total += n.value;
    }
    return {{"accepted", notes}, {"accepted_value", total}, {"rejected_not_appended", rejected_not_appended},
        {"rejected_serial", rejected_serial}, {"duplicates", duplicates}, {"malformed", malformed},
        {"events_scanned", events_scanned}};
}

mixer::MixTransaction assemble(const proof::ProvingKey& pk, const std::vector<SpendInput>& inputs,
    const std::vector<ZethNote>& outputs, std::uint64_t v_in, std::uint64_t v_out, const Digest256& root,
    std::vector<Bytes> ciphertexts)
{
    auto [x, w] = build_instance(pk.config, inputs, outputs, v_in, v_out, root);
    mixer::MixTransaction tx;
    tx.root = x.root;
    tx.serials = x.serials;
    tx.commitments = x.commitments;
    tx.v_in = v_in;
    tx.v_out = v_out;
    tx.ciphertexts = std::move(ciphertexts);
    tx.proof = proof::prove(pk, x, tx.aux_binding(), w);
    return tx;
}

SpendInput dummy_input(const ZethAddress& owner, unsigned depth, Rng& rng)
{
    SpendInput in;
    in.note = make_note(owner.pub.a_pk, 0, rng);
    in.a_sk = owner.sec.a_sk;
    in.address = 0;
    in.path.leaf_address = 0;
    for (unsigned i = 0; i < depth; ++i)
    {
        Digest256 sibling;
        sibling.bytes = rng.bytes32();
        in.path.siblings.push_back(sibling);
        in.path.directions.push_back(false);
    }
    return in;
}

Wallet::Wallet(std::string label, ZethAddress address) : label_(std::move(label))
{
    if (!address_consistent(address))
        fail(ErrorCode::InvalidKey, "address secrets do not match its public half");
    addresses_.push_back(address);
}

Wallet Wallet::create(std::string label, Rng& rng)
{
    return Wallet{std::move(label), gen_address(rng.bytes32())};
}

std::size_t Wallet::add_address(const ZethAddress& address)
{
    if (!address_consistent(address))
        fail(ErrorCode::InvalidKey, "address secrets do not match its public half");
    addresses_.push_back(address);
    return addresses_.size() - 1;
}

BigInt Wallet::balance() const
{
    BigInt sum = 0;
    for (const auto& n : notes_)
        if (n.status == NoteStatus::Unspent)
            sum += n.note.value;
    return sum;
}

std::size_t Wallet::unspent_count() const
{
    return static_cast<std::size_t>(
        std::ranges::count_if(notes_, [](const OwnedNote& n) { return n.status == NoteStatus::Unspent; }));
}

std::vector<std::size_t> Wallet::select(
    std::uint64_t target, std::size_t max_inputs, std::uint64_t leaf_limit) const
{
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < notes_.size(); ++i)
    {
        const auto& n = notes_[i];
        if (n.status == NoteStatus::Unspent && n.note.value > 0 && n.leaf_address < leaf_limit)
            candidates.push_back(i);
    }
    std::ranges::sort(candidates, [&](std::size_t a, std::size_t b) {
        const auto& na = notes_[a];
        const auto& nb = notes_[b];
        if (na.note.value != nb.note.value)
            return na.note.value > nb.note.value;
        return na.commitment < nb.commitment;
    });

    std::vector<std::size_t> chosen;
    BigInt sum = 0;
    for (const auto i : candidates)
    {
        if (sum >= target || chosen.size() == max_inputs)
            break;
        chosen.push_back(i);
        sum += notes_[i].note.value;
    }
    if (sum < target)
        fail(ErrorCode::InsufficientNotes,
            "unspent notes usable in one transaction cover " + sum.str() + " of " + std::to_string(target));
    return chosen;
}

Payment Wallet::make_payment(const proof::ProvingKey& pk, const mixer::Mixer& mixer, const PaymentRequest& req,
    Rng& rng, const crypto::NoteCipher& cipher)
{
    const auto& config = mixer.config();
    if (pk.config != config)
        fail(ErrorCode::FingerprintMismatch, "proving key is for a different circuit than the mixer");
    if (req.recipients.size() > config.n_outputs)
        fail(ErrorCode::TooManyRecipients, std::to_string(req.recipients.size()) + " recipients but only "
                                               + std::to_string(config.n_outputs) + " outputs");

    const auto root = req.root.value_or(mixer.current_root());
    const auto leaf_count = mixer.root_leaf_count(root);
    if (!leaf_count)
        fail(ErrorCode::UnknownRoot, "root " + to_hex(root) + " is not in the mixer's history");

    std::uint64_t out_total = req.v_out;
    for (const auto& r : req.recipients)
        out_total = checked_add(out_total, r.value);

    std::vector<std::size_t> chosen;
    if (req.selection)
    {
        chosen = *req.selection;
        auto sorted = chosen;
        std::ranges::sort(sorted);
        if (std::ranges::adjacent_find(sorted) != sorted.end())
            fail(ErrorCode::InvalidArgument, "note selected twice");
        if (chosen.size() > config.n_inputs)
            fail(ErrorCode::InvalidArgument, "more notes selected than the circuit has inputs");
        for (const auto i : chosen)
        {
            if (i >= notes_.size() || notes_[i].status != NoteStatus::Unspent)
                fail(ErrorCode::InvalidArgument, "selected note " + std::to_string(i) + " is not spendable");
            if (notes_[i].leaf_address >= *leaf_count)
                fail(ErrorCode::InvalidArgument, "selected note is not under the chosen root");
        }
    }
    else if (out_total > req.v_in)
    {
        chosen = select(out_total - req.v_in, config.n_inputs, *leaf_count);
    }

    std::uint64_t in_total = req.v_in;
    for (const auto i : chosen)
        in_total = checked_add(in_total, notes_[i].note.value);
    if (in_total < out_total)
        fail(ErrorCode::InsufficientNotes, "selected notes do not cover the payment");
    const auto change = in_total - out_total;
    if (change > 0 && req.recipients.size() == config.n_outputs)
        fail(ErrorCode::UnbalancedRequest, "inputs exceed outputs and no output is free for change");

    const auto& self = address();
    Payment pay;
    for (const auto& r : req.recipients)
    {
        pay.outputs.push_back(make_note(r.to.a_pk, r.value, rng));
        pay.output_owners.push_back(r.to);
    }
    if (change > 0)
    {
        pay.outputs.push_back(make_note(self.pub.a_pk, change, rng));
        pay.output_owners.push_back(self.pub);
    }
    while (pay.outputs.size() < config.n_outputs)
    {
        pay.outputs.push_back(make_note(self.pub.a_pk, 0, rng));
        pay.output_owners.push_back(self.pub);
    }
    for (std::size_t i = pay.outputs.size(); i > 1; --i)
    {
        const auto j = static_cast<std::size_t>(rng.uniform(i));
        std::swap(pay.outputs[i - 1], pay.outputs[j]);
        std::swap(pay.output_owners[i - 1], pay.output_owners[j]);
    }
    pay.change = change;

    std::vector<SpendInput> inputs;
    if (!chosen.empty())
    {
        const auto& full = mixer.tree();
        const auto tree = *leaf_count == full.size() ? full : full.prefix(*leaf_count);
        for (const auto i : chosen)
        {
            const auto& n = notes_[i];
            inputs.push_back(SpendInput{n.note, addresses_.at(n.key_index).sec.a_sk, n.leaf_address,
                tree.path(n.leaf_address)});
        }
    }
    while (inputs.size() < config.n_inputs)
        inputs.push_back(dummy_input(self, config.depth, rng));

    std::vector<Bytes> cts;
    for (std::size_t j = 0; j < pay.outputs.size(); ++j)
        cts.push_back(cipher.seal(pay.output_owners[j].k_pk, serialize_note(pay.outputs[j]), rng.bytes32()));

    pay.tx = assemble(pk, inputs, pay.outputs, req.v_in, req.v_out, root, std::move(cts));
    pay.spent_notes = chosen;
    for (const auto i : chosen)
        notes_[i].status = NoteStatus::Pending;
    return pay;
}

Payment Wallet::self_split(const proof::ProvingKey& pk, const mixer::Mixer& mixer,
    const std::vector<std::uint64_t>& parts, Rng& rng, const crypto::NoteCipher& cipher)
{
    PaymentRequest req;
    for (const auto v : parts)
        req.recipients.push_back(Recipient{address().pub, v});
    return make_payment(pk, mixer, req, rng, cipher);
}

void Wallet::settle(const Payment& payment, bool accepted)
{
    for (const auto i : payment.spent_notes)
    {
        auto& n = notes_.at(i);
        if (n.status == NoteStatus::Pending)
            n.status = accepted ? NoteStatus::Spent : NoteStatus::Unspent;
    }
}

ledger::Receipt Wallet::submit(
    ledger::Ledger& ledger, const ledger::Address& mixer_address, const Payment& payment, std::uint64_t gas_limit)
{
    ledger::TxEnvelope env;
    env.sender = account();
    env.to = mixer_address;
    env.value = payment.tx.v_in;
    env.gas_limit = gas_limit;
    env.payload = payment.tx.encode();
    try
    {
        auto receipt = ledger.submit(env);
        settle(payment, receipt.ok());
        return receipt;
    }
    catch (const Error&)
    {
        settle(payment, false);
        throw;
    }
}

ReceiveReport Wallet::receive(
    const ledger::Ledger& ledger, const ledger::Address& mixer_address, const crypto::NoteCipher& cipher)
{
    const auto& mixer = ledger.contract_as<mixer::Mixer>(mixer_address);
    const auto events = ledger.read_events(cursor_);

    ReceiveReport report;
    report.events_scanned = events.size();

    std::size_t begin = 0;
    while (begin < events.size())
    {
        const auto tx = events[begin].tx_index;
        std::size_t end = begin;
        while (end < events.size() && events[end].tx_index == tx)
            ++end;

        std::map<Digest256, std::uint64_t> appended;
        for (std::size_t i = begin; i < end; ++i)
        {
            const auto& e = events[i];
            if (e.contract == mixer_address && e.kind == mixer::event::commitment)
                appended.emplace(digest_from_hex(e.data.at("hex").get<std::string>()),
                    e.data.at("leaf_address").get<std::uint64_t>());
        }

        for (std::size_t i = begin; i < end; ++i)
        {
            const auto& e = events[i];
            if (e.contract != mixer_address || e.kind != mixer::event::ciphertext)
                continue;
            const auto ct = e.payload();
            for (std::size_t k = 0; k < addresses_.size(); ++k)
            {
                const auto plain = cipher.open(addresses_[k].sec.k_sk, ct);
                if (!plain)
                    continue;
                ZethNote note;
                try
                {
                    note = deserialize_note(*plain);
                }
                catch (const Error&)
                {
                    ++report.malformed;
                    break;
                }
                const auto cm = commitment(note);
                const auto leaf = appended.find(cm);
                if (leaf == appended.end())
                {
                    ++report.rejected_not_appended;
                    break;
                }
                if (note.a_pk != addresses_[k].pub.a_pk)
                {
                    ++report.rejected_serial;
                    break;
                }
                const auto sn = serial_number(note, addresses_[k].sec.a_sk);
                if (mixer.is_spent(sn))
                {
                    ++report.rejected_serial;
                    break;
                }
                if (std::ranges::any_of(notes_, [&](const OwnedNote& n) { return n.commitment == cm; }))
                {
                    ++report.duplicates;
                    break;
                }
                notes_.push_back(OwnedNote{note, leaf->second, cm, sn, NoteStatus::Unspent, k});
                report.accepted.push_back(note);
                break;
            }
        }
        begin = end;
    }

    for (auto& n : notes_)
        if (n.status != NoteStatus::Spent && mixer.is_spent(n.serial))
            n.status = NoteStatus::Spent;

    cursor_ = ledger.event_count();
    last_received_ = report.accepted;
    return report;
}

bool Wallet::expect_payment(std::uint64_t value) const
{
    BigInt sum = 0;
    for (const auto& n : last_received_)
        sum += n.value;
    return sum == value;
}

nlohmann::json Wallet::to_json() const
{
    auto addrs = nlohmann::json::array();
    for (const auto& a : addresses_)
        addrs.push_back(zeth::to_json(a));
    auto notes = nlohmann::json::array();
    for (const auto& n : notes_)
        notes.push_back({{"note", zeth::to_json(n.note)}, {"leaf_address", n.leaf_address},
            {"commitment", to_hex(n.commitment)}, {"serial", to_hex(n.serial)},
            {"status", status_name(n.status)}, {"key_index", n.key_index}});
    return {{"label", label_}, {"addresses", addrs}, {"notes", notes}, {"cursor", cursor_}};
}

nlohmann::json Wallet::public_json() const
{
    auto addrs = nlohmann::json::array();
    for (const auto& a : addresses_)
        addrs.push_back(zeth::to_json(a.pub));
    auto notes = nlohmann::json::array();
    for (const auto& n : notes_)
        notes.push_back({{"commitment", to_hex(n.commitment)}, {"value", n.note.value},
            {"leaf_address", n.leaf_address}, {"status", status_name(n.status)}});
    return {{"label", label_}, {"account", account().hex()}, {"addresses", addrs}, {"notes", notes},
        {"balance", balance().str()}, {"cursor", cursor_}};
}

Wallet Wallet::from_json(const nlohmann::json& j)
{
    const auto& addrs = j.at("addresses");
    if (addrs.empty())
        fail(ErrorCode::Parse, "wallet has no address");
    Wallet w{j.at("label").get<std::string>(), address_from_json(addrs.at(0))};
    for (std::size_t i = 1; i < addrs.size(); ++i)
        w.add_address(address_from_json(addrs.at(i)));
    for (const auto& n : j.at("notes"))
    {
        OwnedNote o;
        o.note = note_from_json(n.at("note"));
        o.leaf_address = n.at("leaf_address").get<std::uint64_t>();
        o.commitment = digest_from_hex(n.at("commitment").get<std::string>());
        o.serial = digest_from_hex(n.at("serial").get<std::string>());
        o.status = status_from_name(n.at("status").get<std::string>());
        o.key_index = n.at("key_index").get<std::size_t>();
        if (o.key_index >= w.addresses_.size() || commitment(o.note) != o.commitment)
            fail(ErrorCode::Parse, "inconsistent note record in wallet file");
        w.notes_.push_back(o);
    }
    w.cursor_ = j.at("cursor").get<std::uint64_t>();
    return w;
}

}  // namespace zeth::wallet
