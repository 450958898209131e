// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/security_harness.hpp"

#include <algorithm>
#include <cmath>

namespace zeth::harness
{
namespace
{
bool contains(ByteView haystack, ByteView needle)
{
    if (needle.empty() || needle.size() > haystack.size())
        return false;
    return std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end()) != haystack.end();
}

std::size_t popcount(ByteView bytes)
{
    std::size_t n = 0;
    for (const auto b : bytes)
        n += static_cast<std::size_t>(std::popcount(b));
    return n;
}

const BigInt& genesis_funds()
{
    static const BigInt funds{"1000000000000000000"};
    return funds;
}

ledger::Receipt submit_from(
    ledger::Ledger& ledger, const ledger::Address& sender, const ledger::Address& mixer, const mixer::MixTransaction& tx)
{
    ledger::TxEnvelope env;
    env.sender = sender;
    env.to = mixer;
    env.value = tx.v_in;
    env.gas_limit = game_gas_limit;
    env.payload = tx.encode();
    return ledger.submit(env);
}

wallet::PaymentRequest request_for(const MixQuery& q, const std::vector<AddressPublic>& addr)
{
    wallet::PaymentRequest req;
    for (const auto& [index, value] : q.recipients)
        req.recipients.push_back(wallet::Recipient{addr.at(index), value});
    req.v_in = q.v_in;
    req.v_out = q.v_out;
    return req;
}
}  // namespace

double AdvantageEstimate::advantage() const noexcept
{
    if (trials == 0)
        return 0.0;
    return std::abs(2.0 * static_cast<double>(wins) / static_cast<double>(trials) - 1.0);
}

double AdvantageEstimate::band() const noexcept
{
    if (trials == 0)
        return 1.0;
    return 3.0 / std::sqrt(static_cast<double>(trials));
}

nlohmann::json AdvantageEstimate::to_json() const
{
    return {{"game", game}, {"adversary", adversary}, {"cipher", cipher}, {"trials", trials}, {"wins", wins},
        {"advantage", advantage()}, {"band_3sigma", band()}, {"within_band", within_band()}};
}

// ---- sabotaged ciphers -------------------------------------------------------

Bytes KeyPrefixCipher::seal(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness) const
{
    Bytes out(k_pk.begin(), k_pk.end());
    const auto honest = crypto::HybridCipher{}.seal(k_pk, plaintext, randomness);
    out.insert(out.end(), honest.begin(), honest.end());
    return out;
}

std::optional<Bytes> KeyPrefixCipher::open(const Bytes32& k_sk, ByteView ciphertext) const
{
    if (ciphertext.size() < 32)
        return std::nullopt;
    return crypto::HybridCipher{}.open(k_sk, ciphertext.subspan(32));
}

Bytes PlaintextLeakCipher::seal(const Bytes32& k_pk, ByteView plaintext, const Bytes32& randomness) const
{
    auto out = crypto::HybridCipher{}.seal(k_pk, plaintext, randomness);
    out.insert(out.end(), plaintext.begin(), plaintext.end());
    return out;
}

std::optional<Bytes> PlaintextLeakCipher::open(const Bytes32& k_sk, ByteView ciphertext) const
{
    if (ciphertext.size() < crypto::ciphertext_overhead || (ciphertext.size() - crypto::ciphertext_overhead) % 2 != 0)
        return std::nullopt;
    const auto body = (ciphertext.size() - crypto::ciphertext_overhead) / 2;
    return crypto::HybridCipher{}.open(k_sk, ciphertext.first(crypto::ciphertext_overhead + body));
}

const crypto::NoteCipher& cipher_by_name(std::string_view name)
{
    static const KeyPrefixCipher key_prefix;
    static const PlaintextLeakCipher plaintext_leak;
    if (name == "hybrid" || name == crypto::default_cipher().name())
        return crypto::default_cipher();
    if (name == "key-prefix" || name == key_prefix.name())
        return key_prefix;
    if (name == "plaintext-leak" || name == plaintext_leak.name())
        return plaintext_leak;
    fail(ErrorCode::InvalidArgument, "unknown cipher " + std::string{name});
}

// ---- encryption games --------------------------------------------------------

namespace
{
class RandomEncAdversary final : public EncAdversary
{
public:
    std::string_view name() const noexcept override { return "random-guess"; }

    std::pair<Bytes, Bytes> choose_messages(const Bytes32&, const DecOracle&, Rng&) override
    {
        return {Bytes(serialized_note_size, 0x00), Bytes(serialized_note_size, 0xff)};
    }
    bool guess_message(const Bytes32&, const std::pair<Bytes, Bytes>&, ByteView, const DecOracle&, Rng& rng) override
    {
        return rng.coin();
    }
    Bytes choose_message(const Bytes32&, const Bytes32&, const DecOracle&, Rng&) override
    {
        return Bytes(serialized_note_size, 0x00);
    }
    bool guess_key(const Bytes32&, const Bytes32&, ByteView, ByteView, const DecOracle&, Rng& rng) override
    {
        return rng.coin();
    }
};

class InspectingEncAdversary final : public EncAdversary
{
public:
    std::string_view name() const noexcept override { return "byte-inspection"; }

    std::pair<Bytes, Bytes> choose_messages(const Bytes32&, const DecOracle&, Rng&) override
    {
        return {Bytes(serialized_note_size, 0x00), Bytes(serialized_note_size, 0xff)};
    }

    bool guess_message(const Bytes32&, const std::pair<Bytes, Bytes>& msgs, ByteView challenge,
        const DecOracle& dec, Rng&) override
    {
        if (contains(challenge, msgs.second))
            return true;
        if (contains(challenge, msgs.first))
            return false;
        // mauled challenge through the decryption oracle
        Bytes mauled(challenge.begin(), challenge.end());
        mauled.back() ^= 0x01;
        if (const auto p = dec(0, mauled))
            return *p == msgs.second;
        // byte statistic: the all-ones message might bias the body
        return popcount(challenge) * 2 > challenge.size() * 8;
    }

    Bytes choose_message(const Bytes32&, const Bytes32&, const DecOracle&, Rng& rng) override
    {
        Bytes m(serialized_note_size);
        rng.fill(m);
        return m;
    }

    bool guess_key(const Bytes32& pk0, const Bytes32& pk1, ByteView, ByteView challenge, const DecOracle& dec,
        Rng&) override
    {
        if (contains(challenge, pk1))
            return true;
        if (contains(challenge, pk0))
            return false;
        Bytes mauled(challenge.begin(), challenge.end());
        mauled.back() ^= 0x01;
        if (dec(1, mauled))
            return true;
        if (dec(0, mauled))
            return false;
        return (challenge.front() & 1U) != 0;
    }
};
}  // namespace

std::unique_ptr<EncAdversary> random_enc_adversary()
{
    return std::make_unique<RandomEncAdversary>();
}

std::unique_ptr<EncAdversary> inspecting_enc_adversary()
{
    return std::make_unique<InspectingEncAdversary>();
}

AdvantageEstimate run_indcca2(const crypto::NoteCipher& cipher, EncAdversary& adversary, std::uint64_t trials, Rng& rng)
{
    AdvantageEstimate est{"ind-cca2", std::string{adversary.name()}, std::string{cipher.name()}, trials, 0};
    auto adv_rng = rng.fork();
    for (std::uint64_t t = 0; t < trials; ++t)
    {
        const auto kp = crypto::enc_keygen(rng.bytes32());
        const bool b = rng.coin();
        std::optional<Bytes> challenge;
        const DecOracle dec = [&](std::size_t index, ByteView ct) -> std::optional<Bytes> {
            if (index != 0)
                return std::nullopt;
            if (challenge && std::ranges::equal(ct, *challenge))
                return std::nullopt;
            return cipher.open(kp.k_sk, ct);
        };
        const auto msgs = adversary.choose_messages(kp.k_pk, dec, adv_rng);
        if (msgs.first.size() != msgs.second.size())
            fail(ErrorCode::InvalidArgument, "challenge messages must have equal length");
        challenge = cipher.seal(kp.k_pk, b ? msgs.second : msgs.first, rng.bytes32());
        if (adversary.guess_message(kp.k_pk, msgs, *challenge, dec, adv_rng) == b)
            ++est.wins;
    }
    return est;
}

AdvantageEstimate run_ikcca(const crypto::NoteCipher& cipher, EncAdversary& adversary, std::uint64_t trials, Rng& rng)
{
    AdvantageEstimate est{"ik-cca", std::string{adversary.name()}, std::string{cipher.name()}, trials, 0};
    auto adv_rng = rng.fork();
    for (std::uint64_t t = 0; t < trials; ++t)
    {
        const std::array<crypto::EncKeyPair, 2> kps{crypto::enc_keygen(rng.bytes32()), crypto::enc_keygen(rng.bytes32())};
        const bool b = rng.coin();
        std::optional<Bytes> challenge;
        const DecOracle dec = [&](std::size_t index, ByteView ct) -> std::optional<Bytes> {
            if (index > 1)
                return std::nullopt;
            if (challenge && std::ranges::equal(ct, *challenge))
                return std::nullopt;
            return cipher.open(kps[index].k_sk, ct);
        };
        const auto m = adversary.choose_message(kps[0].k_pk, kps[1].k_pk, dec, adv_rng);
        challenge = cipher.seal(kps[b ? 1 : 0].k_pk, m, rng.bytes32());
        if (adversary.guess_key(kps[0].k_pk, kps[1].k_pk, m, *challenge, dec, adv_rng) == b)
            ++est.wins;
    }
    return est;
}

// ---- world -------------------------------------------------------------------

World::World(const proof::Crs& crs, const gas::GasSchedule& schedule)
  : ledger(schedule),
    mixer(ledger.deploy(std::make_unique<mixer::Mixer>(crs.verification_key))),
    relay(ledger::account_address("relay"))
{
    ledger.mint(relay, genesis_funds());
}

ledger::Receipt World::submit(const ledger::Address& sender, const mixer::MixTransaction& tx)
{
    return submit_from(ledger, sender, mixer, tx);
}

// ---- ledger indistinguishability -------------------------------------------

GameContext::GameContext(const proof::Crs& crs, bool b, const crypto::NoteCipher& cipher, Rng rng)
  : crs_(crs), b_(b), cipher_(cipher), rng_(rng)
{
    for (auto& w : worlds_)
    {
        w = std::make_unique<World>(crs);
        w->ledger.mint(ledger::account_address("adversary"), genesis_funds());
    }
}

AddressPublic GameContext::create_address()
{
    const auto addr = gen_address(rng_.bytes32());
    const auto label = "addr-" + std::to_string(addr_.size());
    for (auto& ws : wallets_)
        ws.emplace_back(label, addr);
    addr_.push_back(addr.pub);
    return addr.pub;
}

std::pair<MixResponse, MixResponse> GameContext::mix(const MixQuery& q0, const MixQuery& q1)
{
    if (q0.v_in != q1.v_in || q0.v_out != q1.v_out)
        fail(ErrorCode::InconsistentPair, "paired Mix queries must share v_in and v_out");
    const std::array<const MixQuery*, 2> qs{&q0, &q1};
    for (const auto* q : qs)
        if (q->sender >= addr_.size())
            fail(ErrorCode::InvalidArgument, "unknown sender index");

    std::array<std::optional<wallet::Payment>, 2> payments;
    try
    {
        for (std::size_t i = 0; i < 2; ++i)
        {
            auto& w = wallets_[i][qs[i]->sender];
            payments[i] = w.make_payment(
                crs_.proving_key, worlds_[i]->mixer_contract(), request_for(*qs[i], addr_), rng_, cipher_);
        }
    }
    catch (const Error& e)
    {
        for (std::size_t i = 0; i < 2; ++i)
            if (payments[i])
                wallets_[i][qs[i]->sender].settle(*payments[i], false);
        fail(ErrorCode::InconsistentPair, std::string{"query pair not executable in both worlds: "} + e.what());
    }

    std::array<MixResponse, 2> responses;
    for (std::size_t i = 0; i < 2; ++i)
    {
        auto& w = wallets_[i][qs[i]->sender];
        const auto receipt = worlds_[i]->submit(worlds_[i]->relay, payments[i]->tx);
        w.settle(*payments[i], receipt.ok());
        responses[i] = MixResponse{payments[i]->tx, receipt.status, receipt.events};
        if (receipt.ok())
            notes_.insert(notes_.end(), payments[i]->outputs.begin(), payments[i]->outputs.end());
    }
    return order(std::move(responses[0]), std::move(responses[1]));
}

std::pair<std::vector<Digest256>, std::vector<Digest256>> GameContext::receive(std::size_t i0, std::size_t i1)
{
    if (i0 >= addr_.size() || i1 >= addr_.size())
        fail(ErrorCode::InvalidArgument, "unknown address index");
    const std::array<std::size_t, 2> idx{i0, i1};
    std::array<wallet::Wallet, 2> scanned{wallets_[0][i0], wallets_[1][i1]};
    std::array<std::vector<Digest256>, 2> out;
    for (std::size_t i = 0; i < 2; ++i)
    {
        const auto rep = scanned[i].receive(worlds_[i]->ledger, worlds_[i]->mixer, cipher_);
        for (const auto& n : rep.accepted)
            out[i].push_back(commitment(n));
    }
    if (out[0].size() != out[1].size())
        fail(ErrorCode::InconsistentPair, "paired Receive queries would return different numbers of notes");
    for (std::size_t i = 0; i < 2; ++i)
        wallets_[i][idx[i]] = std::move(scanned[i]);
    return order(std::move(out[0]), std::move(out[1]));
}

std::pair<ledger::Receipt, ledger::Receipt> GameContext::insert(
    const mixer::MixTransaction& t0, const mixer::MixTransaction& t1)
{
    if (t0.v_in != t1.v_in || t0.v_out != t1.v_out || t0.serials.size() != t1.serials.size()
        || t0.commitments.size() != t1.commitments.size())
        fail(ErrorCode::InconsistentPair, "paired Insert queries must share public values and shape");
    const std::array<const mixer::MixTransaction*, 2> ts{&t0, &t1};
    std::array<ledger::Receipt, 2> receipts;
    for (std::size_t i = 0; i < 2; ++i)
    {
        receipts[i] = worlds_[i]->submit(ledger::account_address("adversary"), *ts[i]);
        for (auto& w : wallets_[i])
        {
            const auto rep = w.receive(worlds_[i]->ledger, worlds_[i]->mixer, cipher_);
            notes_.insert(notes_.end(), rep.accepted.begin(), rep.accepted.end());
        }
    }
    return order(std::move(receipts[0]), std::move(receipts[1]));
}

namespace
{
class RandomMixerAdversary final : public MixerAdversary
{
public:
    std::string_view name() const noexcept override { return "random-guess"; }
    bool play(GameContext&, Rng& rng) override { return rng.coin(); }
};

class InspectingMixerAdversary final : public MixerAdversary
{
public:
    std::string_view name() const noexcept override { return "byte-inspection"; }

    bool play(GameContext& game, Rng&) override
    {
        game.create_address();
        const auto a = game.create_address();
        const auto b = game.create_address();
        const auto [left, right] = game.mix(MixQuery{0, {{1, 5}}, 5, 0}, MixQuery{0, {{2, 5}}, 5, 0});
        // the sender's own pad note is received in both worlds
        const auto [got_left, got_right] = game.receive(0, 0);
        for (const auto& ct : left.tx.ciphertexts)
        {
            if (contains(ct, a.k_pk))
                return false;
            if (contains(ct, b.k_pk))
                return true;
        }
        std::size_t ones = 0;
        std::size_t bits = 0;
        for (const auto& ct : left.tx.ciphertexts)
        {
            ones += popcount(ct);
            bits += ct.size() * 8;
        }
        return ones * 2 > bits;
    }
};
}  // namespace

std::unique_ptr<MixerAdversary> random_mixer_adversary()
{
    return std::make_unique<RandomMixerAdversary>();
}

std::unique_ptr<MixerAdversary> inspecting_mixer_adversary()
{
    return std::make_unique<InspectingMixerAdversary>();
}

AdvantageEstimate run_indistinguishability(const proof::Crs& crs, const crypto::NoteCipher& cipher,
    MixerAdversary& adversary, std::uint64_t trials, Rng& rng)
{
    AdvantageEstimate est{"mixer-indistinguishability", std::string{adversary.name()}, std::string{cipher.name()},
        trials, 0};
    auto adv_rng = rng.fork();
    for (std::uint64_t t = 0; t < trials; ++t)
    {
        const bool b = rng.coin();
        GameContext game{crs, b, cipher, rng.fork()};
        if (adversary.play(game, adv_rng) == b)
            ++est.wins;
    }
    return est;
}

// ---- transaction non-malleability ------------------------------------------

std::string_view maul_name(Maul m) noexcept
{
    switch (m)
    {
    case Maul::CiphertextSwap: return "ciphertext-swap";
    case Maul::CiphertextReplace: return "ciphertext-replace";
    case Maul::VOutRedirect: return "v_out-redirect";
    case Maul::CommitmentReplace: return "commitment-replace";
    case Maul::HonestResubmit: return "honest-resubmit";
    }
    return "unknown";
}

nlohmann::json TrnmReport::to_json() const
{
    return {{"game", "tr-nm"}, {"attempts", attempts}, {"wins", wins},
        {"accepted_resubmissions", accepted_resubmissions}, {"rejections", rejections}};
}

TrnmOutcome run_trnm(const proof::Crs& crs, Maul maul, Rng& rng)
{
    World world{crs};
    const auto adversary_account = ledger::account_address("adversary");
    world.ledger.mint(adversary_account, genesis_funds());

    auto alice = wallet::Wallet::create("alice", rng);
    auto bob = wallet::Wallet::create("bob", rng);
    world.ledger.mint(alice.account(), genesis_funds());

    const auto v = 2 + rng.uniform(1000);
    auto deposit = alice.make_payment(crs.proving_key, world.mixer_contract(),
        wallet::PaymentRequest{{wallet::Recipient{alice.address().pub, v}}, v, 0, {}, {}}, rng);
    alice.submit(world.ledger, world.mixer, deposit, game_gas_limit);
    alice.receive(world.ledger, world.mixer);

    const auto pay = 1 + rng.uniform(v - 1);
    const auto observed = alice.make_payment(crs.proving_key, world.mixer_contract(),
        wallet::PaymentRequest{{wallet::Recipient{bob.address().pub, pay}}, 0, 0, {}, {}}, rng);
    const auto& tx = observed.tx;

    // the adversary's view: the observed transaction, public keys, the ledger
    auto forged = tx;
    switch (maul)
    {
    case Maul::CiphertextSwap:
        std::swap(forged.ciphertexts.front(), forged.ciphertexts.back());
        break;
    case Maul::CiphertextReplace:
    {
        const auto mine = wallet::Wallet::create("mallory", rng);
        const auto j = rng.uniform(forged.ciphertexts.size());
        const auto note = make_note(mine.address().pub.a_pk, pay, rng);
        forged.ciphertexts[j] = crypto::default_cipher().seal(mine.address().pub.k_pk, serialize_note(note), rng.bytes32());
        break;
    }
    case Maul::VOutRedirect:
        forged.v_out = 1 + rng.uniform(v);
        break;
    case Maul::CommitmentReplace:
    {
        const auto mine = wallet::Wallet::create("mallory", rng);
        const auto j = rng.uniform(forged.commitments.size());
        const auto note = make_note(mine.address().pub.a_pk, pay, rng);
        forged.commitments[j] = commitment(note);
        forged.ciphertexts[j] = crypto::default_cipher().seal(mine.address().pub.k_pk, serialize_note(note), rng.bytes32());
        break;
    }
    case Maul::HonestResubmit:
        break;
    }

    // pre-state M': the observed tx has not been included yet
    auto pre_state = world.ledger;
    const auto receipt = submit_from(pre_state, adversary_account, world.mixer, forged);

    TrnmOutcome out;
    out.maul = maul;
    out.same_serials = forged.serials == tx.serials;
    out.distinct = !(forged == tx);
    out.accepted = receipt.ok();
    out.rejection = receipt.error;
    return out;
}

TrnmReport run_trnm_suite(const proof::Crs& crs, std::uint64_t attempts, Rng& rng)
{
    constexpr std::array mauls{Maul::CiphertextSwap, Maul::CiphertextReplace, Maul::VOutRedirect,
        Maul::CommitmentReplace, Maul::HonestResubmit};
    TrnmReport report;
    for (std::uint64_t i = 0; i < attempts; ++i)
    {
        const auto maul = mauls[i % mauls.size()];
        const auto out = run_trnm(crs, maul, rng);
        ++report.attempts;
        if (out.won())
            ++report.wins;
        if (out.accepted && !out.distinct)
            ++report.accepted_resubmissions;
        if (!out.accepted)
            ++report.rejections[std::string{error_name(out.rejection)}];
    }
    return report;
}

// ---- balance -----------------------------------------------------------------

nlohmann::json BalanceTally::to_json() const
{
    return {{"v_unspent", v_unspent.str()}, {"v_publicIn", v_public_in.str()}, {"v_publicOut", v_public_out.str()},
        {"v_inc", v_inc.str()}, {"v_exp", v_exp.str()}, {"adversary_wins", adversary_wins()}};
}

nlohmann::json BalanceOutcome::to_json() const
{
    return {{"scenario", scenario}, {"tally", tally.to_json()}, {"adversary_wins", adversary_wins}};
}

BalanceGame::BalanceGame(const proof::Crs& crs, std::size_t honest_parties, Rng rng)
  : crs_(crs), rng_(rng), world_(crs), adversary_(wallet::Wallet::create("adversary", rng_))
{
    for (std::size_t i = 0; i < honest_parties; ++i)
    {
        honest_.push_back(wallet::Wallet::create("honest-" + std::to_string(i), rng_));
        world_.ledger.mint(honest_.back().account(), genesis_funds());
    }
    world_.ledger.mint(adversary_.account(), genesis_funds());
}

void BalanceGame::account_tx(const mixer::MixTransaction& tx, const ledger::Receipt& receipt)
{
    if (!receipt.ok())
        return;
    tally_.v_public_in += tx.v_in;
    tally_.v_public_out += tx.v_out;
    adversary_commitments_.insert(tx.commitments.begin(), tx.commitments.end());
}

std::pair<wallet::Payment, ledger::Receipt> BalanceGame::adversary_pay(const wallet::PaymentRequest& req)
{
    auto payment = adversary_.make_payment(crs_.proving_key, world_.mixer_contract(), req, rng_);
    auto receipt = adversary_.submit(world_.ledger, world_.mixer, payment, game_gas_limit);
    account_tx(payment.tx, receipt);
    return {std::move(payment), std::move(receipt)};
}

ledger::Receipt BalanceGame::adversary_insert(const mixer::MixTransaction& tx)
{
    const auto receipt = submit_from(world_.ledger, adversary_.account(), world_.mixer, tx);
    account_tx(tx, receipt);
    return receipt;
}

ledger::Receipt BalanceGame::honest_pays_adversary(std::size_t i, std::uint64_t value)
{
    auto& w = honest_.at(i);
    const auto payment = w.make_payment(crs_.proving_key, world_.mixer_contract(),
        wallet::PaymentRequest{{wallet::Recipient{adversary_.address().pub, value}}, value, 0, {}, {}}, rng_);
    const auto receipt = w.submit(world_.ledger, world_.mixer, payment, game_gas_limit);
    if (receipt.ok())
        tally_.v_inc += value;
    return receipt;
}

void BalanceGame::receive_all()
{
    for (auto& w : honest_)
    {
        const auto rep = w.receive(world_.ledger, world_.mixer);
        for (const auto& n : rep.accepted)
            if (adversary_commitments_.contains(commitment(n)))
                tally_.v_exp += n.value;
    }
    adversary_.receive(world_.ledger, world_.mixer);
}

BalanceTally BalanceGame::tally() const
{
    auto t = tally_;
    const auto& mixer = world_.mixer_contract();
    const auto& leaves = mixer.tree().leaves();
    std::set<Digest256> serials;
    for (const auto& owned : adversary_.notes())
    {
        const auto cm = commitment(owned.note);
        if (owned.leaf_address >= leaves.size() || leaves[owned.leaf_address] != cm)
            continue;
        const auto& key = adversary_.addresses().at(owned.key_index);
        if (owned.note.a_pk != key.pub.a_pk)
            continue;
        const auto sn = serial_number(owned.note, key.sec.a_sk);
        if (mixer.is_spent(sn) || !serials.insert(sn).second)
            continue;
        t.v_unspent += owned.note.value;
    }
    return t;
}

namespace
{
wallet::PaymentRequest deposit_to(const AddressPublic& to, std::uint64_t v)
{
    return wallet::PaymentRequest{{wallet::Recipient{to, v}}, v, 0, {}, {}};
}

wallet::PaymentRequest withdraw(std::uint64_t v)
{
    return wallet::PaymentRequest{{}, 0, v, {}, {}};
}

/// Tries to prove an unbalanced statement; prove must refuse it.
void try_unbalanced(BalanceGame& g, std::uint64_t v_in, std::uint64_t minted_value, std::uint64_t v_out)
{
    const auto& self = g.adversary().address();
    const auto cfg = g.crs().proving_key.config;
    std::vector<SpendInput> inputs;
    for (std::size_t i = 0; i < cfg.n_inputs; ++i)
        inputs.push_back(wallet::dummy_input(self, cfg.depth, g.rng()));
    std::vector<ZethNote> outputs{make_note(self.pub.a_pk, minted_value, g.rng())};
    while (outputs.size() < cfg.n_outputs)
        outputs.push_back(make_note(self.pub.a_pk, 0, g.rng()));
    std::vector<Bytes> cts;
    for (const auto& n : outputs)
        cts.push_back(crypto::default_cipher().seal(self.pub.k_pk, serialize_note(n), g.rng().bytes32()));
    try
    {
        g.adversary_insert(wallet::assemble(g.crs().proving_key, inputs, outputs, v_in, v_out,
            g.world().mixer_contract().current_root(), std::move(cts)));
    }
    catch (const Error& e)
    {
        if (e.code() != ErrorCode::InvalidWitness)
            throw;
    }
}
}  // namespace

std::vector<BalanceScenario> balance_scenarios()
{
    std::vector<BalanceScenario> out;

    out.push_back({"honest-round-trip", [](BalanceGame& g) {
                       g.adversary_pay(deposit_to(g.adversary().address().pub, 10));
                       g.receive_all();
                       g.adversary_pay(withdraw(10));
                   }});

    out.push_back({"receiving-adversary", [](BalanceGame& g) {
                       g.honest_pays_adversary(0, 4);
                       g.receive_all();
                       g.adversary_pay(withdraw(4));
                   }});

    out.push_back({"paying-adversary", [](BalanceGame& g) {
                       g.adversary_pay(deposit_to(g.adversary().address().pub, 7));
                       g.receive_all();
                       wallet::PaymentRequest req;
                       req.recipients.push_back({g.honest_address(0), 3});
                       g.adversary_pay(req);
                   }});

    out.push_back({"forged-proof", [](BalanceGame& g) {
                       // no witness exists for v_out = 100 out of nothing
                       try_unbalanced(g, 0, 0, 100);
                       // a transaction with an arbitrary proof tag
                       auto tx = wallet::assemble(g.crs().proving_key,
                           {wallet::dummy_input(g.adversary().address(), g.crs().proving_key.config.depth, g.rng()),
                               wallet::dummy_input(
                                   g.adversary().address(), g.crs().proving_key.config.depth, g.rng())},
                           {make_note(g.adversary().address().pub.a_pk, 0, g.rng()),
                               make_note(g.adversary().address().pub.a_pk, 0, g.rng())},
                           0, 0, g.world().mixer_contract().current_root(), {Bytes(80, 1), Bytes(80, 2)});
                       tx.v_out = 100;
                       tx.proof.binding_tag.bytes = g.rng().bytes32();
                       g.adversary_insert(tx);
                   }});

    out.push_back({"inflated-commitment", [](BalanceGame& g) {
                       // deposit 1 but commit to 100
                       try_unbalanced(g, 1, 100, 0);
                       // prove an honest deposit, then swap in a richer commitment
                       const auto& self = g.adversary().address();
                       const auto cfg = g.crs().proving_key.config;
                       const auto honest_note = make_note(self.pub.a_pk, 1, g.rng());
                       const auto pad = make_note(self.pub.a_pk, 0, g.rng());
                       const auto rich = make_note(self.pub.a_pk, 100, g.rng());
                       auto tx = wallet::assemble(g.crs().proving_key,
                           {wallet::dummy_input(self, cfg.depth, g.rng()), wallet::dummy_input(self, cfg.depth, g.rng())},
                           {honest_note, pad}, 1, 0, g.world().mixer_contract().current_root(),
                           {crypto::default_cipher().seal(self.pub.k_pk, serialize_note(honest_note), g.rng().bytes32()),
                               crypto::default_cipher().seal(self.pub.k_pk, serialize_note(pad), g.rng().bytes32())});
                       tx.commitments[0] = commitment(rich);
                       tx.ciphertexts[0] =
                           crypto::default_cipher().seal(self.pub.k_pk, serialize_note(rich), g.rng().bytes32());
                       g.adversary_insert(tx);
                   }});

    out.push_back({"double-spend", [](BalanceGame& g) {
                       g.adversary_pay(deposit_to(g.adversary().address().pub, 5));
                       g.receive_all();
                       const auto spendable = g.adversary().notes();
                       const auto [payment, first] = g.adversary_pay(withdraw(5));
                       if (first.ok())
                           g.adversary_insert(payment.tx);  // replay
                       // fresh proof spending the same note again
                       const auto& self = g.adversary().address();
                       const auto cfg = g.crs().proving_key.config;
                       for (const auto& owned : spendable)
                       {
                           if (owned.note.value == 0)
                               continue;
                           const auto& m = g.world().mixer_contract();
                           const SpendInput in{owned.note, self.sec.a_sk, owned.leaf_address,
                               m.tree().path(owned.leaf_address)};
                           const auto pad1 = make_note(self.pub.a_pk, 0, g.rng());
                           const auto pad2 = make_note(self.pub.a_pk, 0, g.rng());
                           g.adversary_insert(wallet::assemble(g.crs().proving_key,
                               {in, wallet::dummy_input(self, cfg.depth, g.rng())}, {pad1, pad2}, 0, owned.note.value,
                               m.current_root(), {Bytes(80, 3), Bytes(80, 4)}));
                       }
                   }});

    return out;
}

BalanceOutcome run_balance(const proof::Crs& crs, const BalanceScenario& scenario, Rng& rng)
{
    BalanceGame game{crs, 2, rng.fork()};
    scenario.script(game);
    game.receive_all();
    BalanceOutcome out;
    out.scenario = scenario.name;
    out.tally = game.tally();
    out.adversary_wins = out.tally.adversary_wins();
    return out;
}

// ---- diagnostics -------------------------------------------------------------

nlohmann::json AnonymityReport::to_json() const
{
    nlohmann::json j = {{"tree_leaves", leaves}, {"tree_capacity", capacity}, {"tree_fill", fill},
        {"distinct_callers", distinct_callers}, {"accepted_mixes", accepted_mixes},
        {"stale_root_uses", stale_root_uses}, {"root_history", root_history}, {"spent_serials", spent_serials},
        {"warnings", warnings}};
    j["registry_size"] = registry_size ? nlohmann::json(*registry_size) : nlohmann::json(nullptr);
    return j;
}

AnonymityReport anonymity_diagnostics(
    const ledger::Ledger& ledger, const ledger::Address& mixer_address, const std::optional<ledger::Address>& registry)
{
    const auto& m = ledger.contract_as<mixer::Mixer>(mixer_address);
    AnonymityReport r;
    r.leaves = m.tree().size();
    r.capacity = m.tree().capacity();
    r.fill = static_cast<double>(r.leaves) / static_cast<double>(r.capacity);
    std::set<ledger::Address> callers;
    for (const auto& h : ledger.history())
        if (h.to == mixer_address && h.status == ledger::TxStatus::Success)
            callers.insert(h.sender);
    r.distinct_callers = callers.size();
    r.accepted_mixes = m.accepted_mixes();
    r.stale_root_uses = m.stale_root_uses();
    r.root_history = m.roots().size();
    r.spent_serials = m.spent_count();
    if (registry)
        r.registry_size = ledger.contract_as<mixer::AddressRegistry>(*registry).entries().size();

    if (r.leaves < small_anonymity_set)
        r.warnings.push_back("tree holds only " + std::to_string(r.leaves)
                             + " commitments; a spent note hides among at most that many");
    if (r.distinct_callers < few_callers)
        r.warnings.push_back("only " + std::to_string(r.distinct_callers)
                             + " distinct accounts have called the mixer; callers are public");
    if (r.stale_root_uses > 0)
        r.warnings.push_back(std::to_string(r.stale_root_uses)
                             + " transactions used an older root; their anonymity set is the tree at that root");
    return r;
}

}  // namespace zeth::harness
