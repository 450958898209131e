// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/security_harness.hpp"
#include "zeth/wallet.hpp"

#include <doctest.h>

namespace zeth::test
{
/// Expects `expr` to throw zeth::Error with the given code.
#define CHECK_ZETH_ERROR(expr, expected_code)                          \
    do                                                                 \
    {                                                                  \
        bool thrown_ = false;                                          \
        try                                                            \
        {                                                              \
            (void)(expr);                                              \
        }                                                              \
        catch (const ::zeth::Error& e_)                                \
        {                                                              \
            thrown_ = true;                                            \
            CHECK_EQ(::zeth::error_name(e_.code()), ::zeth::error_name(expected_code)); \
        }                                                              \
        CHECK_MESSAGE(thrown_, "expected " << ::zeth::error_name(expected_code)); \
    } while (false)

inline Bytes32 filled(std::uint8_t b)
{
    Bytes32 out;
    out.fill(b);
    return out;
}

inline proof::Crs make_crs(unsigned depth = 4, std::size_t n = 2, std::size_t m = 2, std::uint8_t seed = 7)
{
    return proof::setup(CircuitConfig{n, m, depth}, filled(seed));
}

inline const BigInt& wei_funds()
{
    static const BigInt v = BigInt{1'000'000'000'000'000'000ULL};
    return v;
}

/// A ledger with one deployed mixer and helpers to fund wallets.
struct Env
{
    proof::Crs crs;
    ledger::Ledger ledger;
    ledger::Address mixer_address;
    Rng rng;

    explicit Env(unsigned depth = 4, std::uint64_t seed = 1, std::size_t n = 2, std::size_t m = 2)
      : crs(make_crs(depth, n, m)),
        mixer_address(ledger.deploy(std::make_unique<mixer::Mixer>(crs.verification_key))),
        rng(seed)
    {}

    const mixer::Mixer& mixer() const { return ledger.contract_as<mixer::Mixer>(mixer_address); }

    wallet::Wallet make_wallet(const std::string& label)
    {
        auto w = wallet::Wallet::create(label, rng);
        ledger.mint(w.account(), wei_funds());
        return w;
    }

    ledger::Receipt pay(wallet::Wallet& w, const wallet::PaymentRequest& req)
    {
        auto p = w.make_payment(crs.proving_key, mixer(), req, rng);
        return w.submit(ledger, mixer_address, p, 5'000'000);
    }

    ledger::Receipt deposit(wallet::Wallet& w, std::uint64_t value)
    {
        wallet::PaymentRequest req;
        req.recipients.push_back({w.address().pub, value});
        req.v_in = value;
        auto r = pay(w, req);
        w.receive(ledger, mixer_address);
        return r;
    }
};

}  // namespace zeth::test
