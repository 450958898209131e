// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/crypto.hpp"
#include "zeth/mixer.hpp"

namespace zeth::wallet
{
enum class NoteStatus
{
    Unspent,
    /// Input of a built payment whose submission has not been settled yet.
    Pending,
    Spent,
};

std::string_view status_name(NoteStatus s) noexcept;

struct OwnedNote
{
    ZethNote note;
    std::uint64_t leaf_address = 0;
    Digest256 commitment;
    Digest256 serial;
    NoteStatus status = NoteStatus::Unspent;
    /// Which of the wallet's addresses owns the note.
    std::size_t key_index = 0;

    bool operator==(const OwnedNote&) const = default;
};

struct Recipient
{
    AddressPublic to;
    std::uint64_t value = 0;
};

struct PaymentRequest
{
    std::vector<Recipient> recipients;
    std::uint64_t v_in = 0;
    std::uint64_t v_out = 0;
    /// Root to prove against; the mixer's current root when absent.
    std::optional<Digest256> root;
    /// Indices into Wallet::notes() overriding automatic selection.
    std::optional<std::vector<std::size_t>> selection;
};

struct Payment
{
    mixer::MixTransaction tx;
    /// New notes in transaction order, with the address each was sent to.
    std::vector<ZethNote> outputs;
    std::vector<AddressPublic> output_owners;
    /// Indices into Wallet::notes() consumed by the payment.
    std::vector<std::size_t> spent_notes;
    std::uint64_t change = 0;
};

struct ReceiveReport
{
    std::vector<ZethNote> accepted;
    /// Decrypted, but the commitment was not appended by the same transaction.
    std::size_t rejected_not_appended = 0;
    /// Decrypted, but the serial is already spent or not computable.
    std::size_t rejected_serial = 0;
    /// Decrypted, but already held.
    std::size_t duplicates = 0;
    /// Decrypted, but not a well-formed note.
    std::size_t malformed = 0;
    std::uint64_t events_scanned = 0;

    nlohmann::json to_json() const;
};

/// Proves and packages one transaction from explicit parts. The ciphertexts
/// are taken as given, so callers can attach anything they like; wallets use
/// Wallet::make_payment instead.
mixer::MixTransaction assemble(const proof::ProvingKey& pk, const std::vector<SpendInput>& inputs,
    const std::vector<ZethNote>& outputs, std::uint64_t v_in, std::uint64_t v_out, const Digest256& root,
    std::vector<Bytes> ciphertexts);

/// A zero-valued input that needs no tree membership: the note belongs to
/// `owner`, sits at address 0 and carries a random path.
SpendInput dummy_input(const ZethAddress& owner, unsigned depth, Rng& rng);

/// User-side state: keys, owned notes and the event-scan cursor.
class Wallet
{
public:
    Wallet(std::string label, ZethAddress address);
    static Wallet create(std::string label, Rng& rng);

    const std::string& label() const noexcept { return label_; }
    /// Externally owned account used to pay gas and v_in.
    ledger::Address account() const { return ledger::account_address(label_); }

    const ZethAddress& address() const noexcept { return addresses_.front(); }
    const std::vector<ZethAddress>& addresses() const noexcept { return addresses_; }
    std::size_t add_address(const ZethAddress& address);

    const std::vector<OwnedNote>& notes() const noexcept { return notes_; }
    std::uint64_t cursor() const noexcept { return cursor_; }

    /// Sum of unspent note values.
    BigInt balance() const;
    std::size_t unspent_count() const;

    /// Selects inputs (largest value first, ties by commitment hex), pads to
    /// the circuit shape with dummies and zero-valued self notes, returns
    /// change to self, shuffles the outputs, encrypts each to its owner,
    /// proves. Marks the inputs Pending.
    /// Throws TooManyRecipients, UnbalancedRequest, InsufficientNotes,
    /// UnknownRoot.
    Payment make_payment(const proof::ProvingKey& pk, const mixer::Mixer& mixer, const PaymentRequest& req,
        Rng& rng, const crypto::NoteCipher& cipher = crypto::default_cipher());

    /// Self-addressed payment splitting holdings into `parts` (zeros allowed).
    Payment self_split(const proof::ProvingKey& pk, const mixer::Mixer& mixer,
        const std::vector<std::uint64_t>& parts, Rng& rng,
        const crypto::NoteCipher& cipher = crypto::default_cipher());

    /// Pending inputs become Spent when accepted, Unspent otherwise.
    void settle(const Payment& payment, bool accepted);

    /// Submits from account() with value v_in and settles.
    ledger::Receipt submit(ledger::Ledger& ledger, const ledger::Address& mixer_address, const Payment& payment,
        std::uint64_t gas_limit);

    /// Scans new mixer events, trial-decrypts every broadcast and keeps the
    /// notes that pass both recipient checks: the commitment was appended by
    /// the same transaction, and the serial is computable and unspent. Also
    /// marks owned notes whose serial has appeared on chain as Spent.
    ReceiveReport receive(const ledger::Ledger& ledger, const ledger::Address& mixer_address,
        const crypto::NoteCipher& cipher = crypto::default_cipher());

    /// True iff the notes accepted by the last receive pass sum to `value`.
    bool expect_payment(std::uint64_t value) const;
    const std::vector<ZethNote>& last_received() const noexcept { return last_received_; }

    /// Full wallet file, secrets included.
    nlohmann::json to_json() const;
    /// Public view: label, account, public addresses, note summary.
    nlohmann::json public_json() const;
    static Wallet from_json(const nlohmann::json& j);

private:
    std::string label_;
    std::vector<ZethAddress> addresses_;
    std::vector<OwnedNote> notes_;
    std::uint64_t cursor_ = 0;
    std::vector<ZethNote> last_received_;

    std::vector<std::size_t> select(std::uint64_t target, std::size_t max_inputs, std::uint64_t leaf_limit) const;
};

}  // namespace zeth::wallet
