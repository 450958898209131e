// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/wallet.hpp"

/// Executable security games: ledger indistinguishability, transaction
/// non-malleability, balance, and the two encryption games (IND-CCA2, IK-CCA).
/// Each returns empirical numbers; sabotaged primitives are provided so a
/// test can show the games do detect breakage.
namespace zeth::harness
{
/// |2 Pr[win] - 1| with a 3-sigma band under the null hypothesis Pr[win] = 1/2.
struct AdvantageEstimate
{
    std::string game;
    std::string adversary;
    std::string cipher;
    std::uint64_t trials = 0;
    std::uint64_t wins = 0;

    double advantage() const noexcept;
    /// 3 / sqrt(trials).
    double band() const noexcept;
    bool within_band() const noexcept { return advantage() <= band(); }
    nlohmann::json to_json() const;
};

// ---- sabotaged encryption (test controls) ----------------------------------

/// Prefixes the recipient's k_pk to an honest ciphertext: breaks key privacy.
class KeyPrefixCipher final : public crypto::NoteCipher
{
public:
    Bytes seal(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness) const override;
    std::optional<Bytes> open(const Bytes32& k_sk, ByteView ciphertext) const override;
    std::string_view name() const noexcept override { return "sabotaged-key-prefix"; }
};

/// Appends the plaintext to an honest ciphertext: breaks confidentiality.
class PlaintextLeakCipher final : public crypto::NoteCipher
{
public:
    Bytes seal(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness) const override;
    std::optional<Bytes> open(const Bytes32& k_sk, ByteView ciphertext) const override;
    std::string_view name() const noexcept override { return "sabotaged-plaintext-leak"; }
};

const crypto::NoteCipher& cipher_by_name(std::string_view name);

// ---- encryption games ------------------------------------------------------

/// Decryption oracle for key `index`; answers nullopt (bottom) on the
/// challenge ciphertext once it exists.
using DecOracle = std::function<std::optional<Bytes>(std::size_t index, ByteView ciphertext)>;

class EncAdversary
{
public:
    virtual ~EncAdversary() = default;
    virtual std::string_view name() const noexcept = 0;

    /// IND-CCA2 phase 1: two equal-length messages.
    virtual std::pair<Bytes, Bytes> choose_messages(const Bytes32& pk, const DecOracle& dec, Rng& rng) = 0;
    /// IND-CCA2 phase 2: guess which message was encrypted.
    virtual bool guess_message(const Bytes32& pk, const std::pair<Bytes, Bytes>& msgs, ByteView challenge,
        const DecOracle& dec, Rng& rng) = 0;

    /// IK-CCA phase 1: one message.
    virtual Bytes choose_message(const Bytes32& pk0, const Bytes32& pk1, const DecOracle& dec, Rng& rng) = 0;
    /// IK-CCA phase 2: guess which key was used.
    virtual bool guess_key(const Bytes32& pk0, const Bytes32& pk1, ByteView message, ByteView challenge,
        const DecOracle& dec, Rng& rng) = 0;
};

/// Coin flips.
std::unique_ptr<EncAdversary> random_enc_adversary();
/// Looks for the messages or keys inside the challenge, mauls the challenge
/// and queries the oracle with the result, and falls back to a byte
/// statistic of the challenge.
std::unique_ptr<EncAdversary> inspecting_enc_adversary();

AdvantageEstimate run_indcca2(
    const crypto::NoteCipher& cipher, EncAdversary& adversary, std::uint64_t trials, Rng& rng);
AdvantageEstimate run_ikcca(const crypto::NoteCipher& cipher, EncAdversary& adversary, std::uint64_t trials, Rng& rng);

// ---- shared world ------------------------------------------------------------

/// Gas limit used for every game submission.
inline constexpr std::uint64_t game_gas_limit = 5'000'000;

/// One ledger with a deployed mixer and a funded relay account that submits
/// the challenger's transactions.
struct World
{
    ledger::Ledger ledger;
    ledger::Address mixer;
    ledger::Address relay;

    World(const proof::Crs& crs, const gas::GasSchedule& schedule = {});
    const mixer::Mixer& mixer_contract() const { return ledger.contract_as<mixer::Mixer>(mixer); }
    ledger::Receipt submit(const ledger::Address& sender, const mixer::MixTransaction& tx);
};

// ---- ledger indistinguishability -------------------------------------------

struct MixQuery
{
    std::size_t sender = 0;
    /// (ADDR index, value) pairs.
    std::vector<std::pair<std::size_t, std::uint64_t>> recipients;
    std::uint64_t v_in = 0;
    std::uint64_t v_out = 0;
};

/// What the adversary sees of one executed Mix.
struct MixResponse
{
    mixer::MixTransaction tx;
    ledger::TxStatus status = ledger::TxStatus::Success;
    std::vector<ledger::EventRecord> events;
};

/// Challenger state for the paired-query game: the shared ADDR set, the
/// NOTE set, two independent mixers and the hidden bit b. Query pair
/// (Q0, Q1) runs Q0 on world 0 and Q1 on world 1; the adversary receives
/// the responses as (a_b, a_{1-b}).
class GameContext
{
public:
    GameContext(const proof::Crs& crs, bool b, const crypto::NoteCipher& cipher, Rng rng);

    /// Same key pair in both worlds. Returns the public half.
    AddressPublic create_address();

    /// Throws InconsistentPair when the two queries differ in public data
    /// (v_in, v_out) or only one of them can be executed.
    std::pair<MixResponse, MixResponse> mix(const MixQuery& q0, const MixQuery& q1);

    /// Runs receive for ADDR[i0] in world 0 and ADDR[i1] in world 1 and
    /// returns the commitments obtained in event order. Throws
    /// InconsistentPair when the counts differ.
    std::pair<std::vector<Digest256>, std::vector<Digest256>> receive(std::size_t i0, std::size_t i1);

    /// Submits adversary-built transactions, then runs receive for every
    /// ADDR member in both worlds.
    std::pair<ledger::Receipt, ledger::Receipt> insert(const mixer::MixTransaction& t0, const mixer::MixTransaction& t1);

    const std::vector<AddressPublic>& addr() const noexcept { return addr_; }
    std::size_t note_count() const noexcept { return notes_.size(); }
    const World& world(int i) const { return *worlds_.at(static_cast<std::size_t>(i)); }
    const proof::Crs& crs() const noexcept { return crs_; }

private:
    const proof::Crs& crs_;
    bool b_;
    const crypto::NoteCipher& cipher_;
    Rng rng_;
    std::vector<AddressPublic> addr_;
    std::array<std::unique_ptr<World>, 2> worlds_;
    std::array<std::vector<wallet::Wallet>, 2> wallets_;
    std::vector<ZethNote> notes_;

    template<typename T>
    std::pair<T, T> order(T a0, T a1) const
    {
        if (b_)
            return {std::move(a1), std::move(a0)};
        return {std::move(a0), std::move(a1)};
    }
};

class MixerAdversary
{
public:
    virtual ~MixerAdversary() = default;
    virtual std::string_view name() const noexcept = 0;
    /// Plays one game and returns its guess for b.
    virtual bool play(GameContext& game, Rng& rng) = 0;
};

std::unique_ptr<MixerAdversary> random_mixer_adversary();
/// Pays two different parties in the paired queries and looks for either
/// recipient's key inside the left ciphertexts.
std::unique_ptr<MixerAdversary> inspecting_mixer_adversary();

AdvantageEstimate run_indistinguishability(const proof::Crs& crs, const crypto::NoteCipher& cipher,
    MixerAdversary& adversary, std::uint64_t trials, Rng& rng);

// ---- transaction non-malleability ------------------------------------------

enum class Maul
{
    CiphertextSwap,
    CiphertextReplace,
    VOutRedirect,
    CommitmentReplace,
    HonestResubmit,
};

std::string_view maul_name(Maul m) noexcept;

struct TrnmOutcome
{
    Maul maul = Maul::HonestResubmit;
    bool same_serials = false;
    bool distinct = false;
    bool accepted = false;
    ErrorCode rejection = ErrorCode::Ok;

    /// (tx.sn = tx*.sn) and (tx != tx*) and Mix(tx*) accepted.
    bool won() const noexcept { return same_serials && distinct && accepted; }
};

struct TrnmReport
{
    std::uint64_t attempts = 0;
    std::uint64_t wins = 0;
    std::uint64_t accepted_resubmissions = 0;
    std::map<std::string, std::uint64_t> rejections;
    nlohmann::json to_json() const;
};

/// An honest wallet builds a transfer tx; the adversary sees it and submits
/// a mauled tx* to a copy of the pre-state ledger.
TrnmOutcome run_trnm(const proof::Crs& crs, Maul maul, Rng& rng);
TrnmReport run_trnm_suite(const proof::Crs& crs, std::uint64_t attempts, Rng& rng);

// ---- balance -----------------------------------------------------------------

struct BalanceTally
{
    BigInt v_unspent = 0;
    BigInt v_public_in = 0;
    BigInt v_public_out = 0;
    BigInt v_inc = 0;
    BigInt v_exp = 0;

    /// v_unspent + v_publicOut + v_exp > v_publicIn + v_inc
    bool adversary_wins() const { return v_unspent + v_public_out + v_exp > v_public_in + v_inc; }
    nlohmann::json to_json() const;
};

/// Challenger for the balance game: honest parties, one adversary wallet,
/// and the five tallies maintained from the queries that pass through it.
class BalanceGame
{
public:
    BalanceGame(const proof::Crs& crs, std::size_t honest_parties, Rng rng);

    wallet::Wallet& adversary() noexcept { return adversary_; }
    const AddressPublic& honest_address(std::size_t i) const { return honest_.at(i).address().pub; }
    const World& world() const noexcept { return world_; }
    const proof::Crs& crs() const noexcept { return crs_; }
    Rng& rng() noexcept { return rng_; }

    /// Adversary payment through its wallet; submitted from its account.
    std::pair<wallet::Payment, ledger::Receipt> adversary_pay(const wallet::PaymentRequest& req);
    /// Raw adversary transaction.
    ledger::Receipt adversary_insert(const mixer::MixTransaction& tx);
    /// Honest party i deposits `value` and pays it to the adversary.
    ledger::Receipt honest_pays_adversary(std::size_t i, std::uint64_t value);
    /// Every honest party and the adversary scan the ledger.
    void receive_all();

    /// Final tallies; v_unspent is computed from the adversary's notes that
    /// are in the tree under a distinct, unspent serial.
    BalanceTally tally() const;

private:
    const proof::Crs& crs_;
    Rng rng_;
    World world_;
    std::vector<wallet::Wallet> honest_;
    wallet::Wallet adversary_;
    BalanceTally tally_;
    /// Commitments created by accepted adversary transactions.
    std::set<Digest256> adversary_commitments_;

    void account_tx(const mixer::MixTransaction& tx, const ledger::Receipt& receipt);
};

struct BalanceScenario
{
    std::string name;
    std::function<void(BalanceGame&)> script;
};

/// Honest round trip, receiving adversary, paying adversary, forged proof,
/// inflated commitment, double spend.
std::vector<BalanceScenario> balance_scenarios();

struct BalanceOutcome
{
    std::string scenario;
    BalanceTally tally;
    bool adversary_wins = false;
    nlohmann::json to_json() const;
};

BalanceOutcome run_balance(const proof::Crs& crs, const BalanceScenario& scenario, Rng& rng);

// ---- diagnostics -------------------------------------------------------------

struct AnonymityReport
{
    std::uint64_t leaves = 0;
    std::uint64_t capacity = 0;
    double fill = 0.0;
    std::uint64_t distinct_callers = 0;
    std::uint64_t accepted_mixes = 0;
    std::uint64_t stale_root_uses = 0;
    std::uint64_t root_history = 0;
    std::uint64_t spent_serials = 0;
    std::optional<std::uint64_t> registry_size;
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
};

/// Fewer leaves than this triggers the almost-empty-tree warning.
inline constexpr std::uint64_t small_anonymity_set = 32;
/// Fewer distinct successful callers than this triggers a warning.
inline constexpr std::uint64_t few_callers = 5;

AnonymityReport anonymity_diagnostics(const ledger::Ledger& ledger, const ledger::Address& mixer,
    const std::optional<ledger::Address>& registry = std::nullopt);

}  // namespace zeth::harness
