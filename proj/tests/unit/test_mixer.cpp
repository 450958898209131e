// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fixture.hpp"

using namespace zeth;
using zeth::test::Env;
using zeth::test::filled;

namespace
{
/// A transaction for arbitrary public data, made acceptable to the verifier
/// with the trapdoor.
mixer::MixTransaction simulated_tx(Env& env, std::uint64_t v_in, std::uint64_t v_out)
{
    mixer::MixTransaction tx;
    tx.root = env.mixer().current_root();
    tx.serials = {Digest256{env.rng.bytes32()}, Digest256{env.rng.bytes32()}};
    tx.commitments = {Digest256{env.rng.bytes32()}, Digest256{env.rng.bytes32()}};
    tx.v_in = v_in;
    tx.v_out = v_out;
    tx.ciphertexts = {Bytes(80, 1), Bytes(80, 2)};
    tx.proof = proof::simulate(env.crs.verification_key, env.crs.trapdoor, tx.instance(), tx.aux_binding());
    return tx;
}

ledger::Receipt submit(Env& env, const ledger::Address& from, const mixer::MixTransaction& tx, std::uint64_t value)
{
    return env.ledger.submit(ledger::TxEnvelope{from, env.mixer_address, value, 5'000'000, 1, tx.encode()});
}
}  // namespace

TEST_SUITE("mixer_contract")
{
TEST_CASE("a fresh mixer")
{
    Env env;
    CHECK(env.mixer().roots().size() == 1);
    CHECK(env.mixer().current_root() == MerkleTree{4}.root());
    CHECK(env.mixer().tree().size() == 0);
    CHECK(env.mixer().instance_elements() == 9);
}

TEST_CASE("deposit")
{
    Env env;
    auto alice = env.make_wallet("alice");
    const auto r = env.deposit(alice, 7);
    REQUIRE(r.ok());
    CHECK(env.ledger.balance(env.mixer_address) == 7);
    CHECK(env.mixer().tree().size() == 2);
    CHECK(env.mixer().roots().size() == 2);
    CHECK(env.mixer().spent_count() == 2);
    CHECK(r.gas_used == 1'948'200);
    std::size_t cts = 0;
    std::size_t cms = 0;
    std::size_t roots = 0;
    for (const auto& e : r.events)
    {
        cts += e.kind == mixer::event::ciphertext;
        cms += e.kind == mixer::event::commitment;
        roots += e.kind == mixer::event::root;
    }
    CHECK(cts == 2);
    CHECK(cms == 2);
    CHECK(roots == 1);
    CHECK(alice.balance() == 7);
    CHECK(env.ledger.total_balance() == env.ledger.minted());
}

TEST_CASE("replays are double spends")
{
    Env env;
    auto alice = env.make_wallet("alice");
    wallet::PaymentRequest req;
    req.recipients.push_back({alice.address().pub, 4});
    req.v_in = 4;
    auto p = alice.make_payment(env.crs.proving_key, env.mixer(), req, env.rng);
    REQUIRE(alice.submit(env.ledger, env.mixer_address, p, 5'000'000).ok());
    const auto r = submit(env, alice.account(), p.tx, 4);
    CHECK(r.status == ledger::TxStatus::Reverted);
    CHECK(r.error == ErrorCode::DoubleSpend);
    CHECK(env.ledger.balance(env.mixer_address) == 4);
}

TEST_CASE("a serial repeated inside one transaction is a double spend")
{
    Env env;
    auto tx = simulated_tx(env, 0, 0);
    tx.serials[1] = tx.serials[0];
    tx.proof = proof::simulate(env.crs.verification_key, env.crs.trapdoor, tx.instance(), tx.aux_binding());
    env.ledger.mint(ledger::account_address("x"), zeth::test::wei_funds());
    CHECK(submit(env, ledger::account_address("x"), tx, 0).error == ErrorCode::DoubleSpend);
}

TEST_CASE("unknown roots are rejected")
{
    Env env;
    env.ledger.mint(ledger::account_address("x"), zeth::test::wei_funds());
    auto tx = simulated_tx(env, 0, 0);
    tx.root.bytes[0] ^= 1;
    tx.proof = proof::simulate(env.crs.verification_key, env.crs.trapdoor, tx.instance(), tx.aux_binding());
    CHECK(submit(env, ledger::account_address("x"), tx, 0).error == ErrorCode::UnknownRoot);
}

TEST_CASE("root history grows by one per accepted mix and old roots stay valid")
{
    Env env;
    auto alice = env.make_wallet("alice");
    const auto first = env.mixer().current_root();
    for (int k = 1; k <= 3; ++k)
    {
        REQUIRE(env.deposit(alice, 1).ok());
        CHECK(env.mixer().roots().size() == static_cast<std::size_t>(k + 1));
    }
    CHECK(env.mixer().root_leaf_count(first) == 0u);
    wallet::PaymentRequest req;
    req.recipients.push_back({alice.address().pub, 2});
    req.root = env.mixer().roots()[2].root;
    const auto r = env.pay(alice, req);
    CHECK(r.ok());
    CHECK(env.mixer().stale_root_uses() == 1);
}

TEST_CASE("wrong value, bad proof, missing funds")
{
    Env env;
    const auto x = ledger::account_address("x");
    env.ledger.mint(x, zeth::test::wei_funds());

    auto tx = simulated_tx(env, 5, 0);
    CHECK(submit(env, x, tx, 4).error == ErrorCode::ValueMismatch);

    tx.proof.binding_tag.bytes[0] ^= 1;
    CHECK(submit(env, x, tx, 5).error == ErrorCode::InvalidProof);

    const auto withdraw = simulated_tx(env, 0, 1);
    CHECK(submit(env, x, withdraw, 0).error == ErrorCode::InsufficientContractBalance);
    CHECK(env.mixer().tree().size() == 0);
    CHECK(env.mixer().spent_count() == 0);
}

TEST_CASE("full trees reject further mixes")
{
    Env env{1};
    const auto x = ledger::account_address("x");
    env.ledger.mint(x, zeth::test::wei_funds());
    CHECK(submit(env, x, simulated_tx(env, 0, 0), 0).ok());
    CHECK(env.mixer().tree().full());
    CHECK(submit(env, x, simulated_tx(env, 0, 0), 0).error == ErrorCode::TreeFull);
}

TEST_CASE("transaction codec")
{
    Env env;
    const auto tx = simulated_tx(env, 3, 4);
    CHECK(mixer::MixTransaction::decode(tx.encode()) == tx);
    CHECK(mixer::MixTransaction::from_json(tx.to_json()) == tx);
    const auto wire = tx.encode();
    CHECK_ZETH_ERROR(mixer::MixTransaction::decode(ByteView{wire}.subspan(0, wire.size() - 1)),
        ErrorCode::MalformedTransaction);
    auto bad_magic = wire;
    bad_magic[0] = 'X';
    CHECK_ZETH_ERROR(mixer::MixTransaction::decode(bad_magic), ErrorCode::MalformedTransaction);
    auto trailing = wire;
    trailing.push_back(0);
    CHECK_ZETH_ERROR(mixer::MixTransaction::decode(trailing), ErrorCode::MalformedTransaction);

    const auto x = ledger::account_address("x");
    env.ledger.mint(x, zeth::test::wei_funds());
    auto short_tx = tx;
    short_tx.ciphertexts.pop_back();
    CHECK(submit(env, x, short_tx, 3).error == ErrorCode::MalformedTransaction);
}

TEST_CASE("storage round trip")
{
    Env env;
    auto alice = env.make_wallet("alice");
    env.deposit(alice, 2);
    const auto storage = env.mixer().storage();
    const auto back = mixer::Mixer::from_storage(storage);
    CHECK(back->storage() == storage);
    CHECK(back->current_root() == env.mixer().current_root());
    const auto ledger_back = ledger::Ledger::from_json(env.ledger.to_json(), mixer::make_contract);
    CHECK(ledger_back.to_json() == env.ledger.to_json());
}

TEST_CASE("address registry")
{
    Env env;
    const auto reg = env.ledger.deploy(std::make_unique<mixer::AddressRegistry>());
    const auto x = ledger::account_address("x");
    env.ledger.mint(x, zeth::test::wei_funds());
    const auto a = gen_address(filled(1)).pub;
    const ledger::TxEnvelope t{x, reg, 0, 200'000, 1, mixer::AddressRegistry::encode_registration(a)};
    CHECK(env.ledger.submit(t).ok());
    CHECK(env.ledger.submit(t).error == ErrorCode::AlreadyExists);
    const auto& r = env.ledger.contract_as<mixer::AddressRegistry>(reg);
    CHECK(r.entries().size() == 1);
    CHECK(r.lookup(a.a_pk) == a);
    CHECK_FALSE(r.lookup(Digest256{}).has_value());
    const ledger::TxEnvelope bad{x, reg, 0, 200'000, 1, Bytes(63, 0)};
    CHECK_FALSE(env.ledger.submit(bad).ok());
}
}
