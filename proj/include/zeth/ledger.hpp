// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/common.hpp"
#include "zeth/gas_model.hpp"

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <memory>

/// Minimal account-model ledger: balances, gas, atomic contract calls and an
/// append-only event log. Single-threaded; every submission is serialised.
namespace zeth::ledger
{
struct Address
{
    std::array<std::uint8_t, 20> bytes{};

    constexpr auto operator<=>(const Address&) const = default;
    std::string hex() const;
    static Address from_hex(std::string_view hex);
};

/// Deterministic externally-owned account address for a human label.
Address account_address(std::string_view label);

/// Fee sink for all consumed gas.
const Address& miner_address();

struct EventRecord
{
    std::uint64_t seq = 0;
    std::uint64_t block = 0;
    std::uint64_t tx_index = 0;
    Address contract;
    std::string kind;
    /// Kind-specific fields, e.g. {"index": 0, "hex": "..."}.
    nlohmann::json data;

    /// One JSON-lines record: seq, block, tx, contract, kind, then the data
    /// fields flattened in.
    nlohmann::json to_json() const;
    static EventRecord from_json(const nlohmann::json& j);
    /// data["hex"] decoded; empty when absent.
    Bytes payload() const;
};

class Ledger;

/// What a contract sees while executing one call. Throwing zeth::Error from
/// inside a call aborts it; the ledger then rolls back every state change.
class CallContext
{
public:
    const Address& sender() const noexcept { return sender_; }
    const Address& self() const noexcept { return self_; }
    const BigInt& value() const noexcept { return value_; }
    ByteView payload() const noexcept { return payload_; }
    const gas::GasSchedule& schedule() const noexcept;

    /// Throws Error(OutOfGas) past the gas limit.
    void charge(std::uint64_t gas);
    std::uint64_t gas_used() const noexcept { return gas_used_; }

    void emit(std::string kind, nlohmann::json data);

    BigInt self_balance() const;
    /// Moves Wei out of the executing contract. Throws
    /// InsufficientContractBalance when the contract cannot cover it.
    void send_value(const Address& to, const BigInt& amount);

private:
    friend class Ledger;
    CallContext(Ledger& ledger, Address sender, Address self, BigInt value, ByteView payload,
        std::uint64_t gas_limit, std::uint64_t gas_used)
      : ledger_(ledger), sender_(sender), self_(self), value_(std::move(value)), payload_(payload),
        gas_limit_(gas_limit), gas_used_(gas_used)
    {}

    Ledger& ledger_;
    Address sender_;
    Address self_;
    BigInt value_;
    ByteView payload_;
    std::uint64_t gas_limit_;
    std::uint64_t gas_used_;
    std::vector<std::pair<std::string, nlohmann::json>> events_;
};

class Contract
{
public:
    virtual ~Contract() = default;
    virtual std::string_view kind() const noexcept = 0;
    virtual std::unique_ptr<Contract> clone() const = 0;
    virtual void call(CallContext& ctx) = 0;
    /// Full storage snapshot; two contracts with equal storage() are in the
    /// same state.
    virtual nlohmann::json storage() const = 0;
};

/// Rebuilds a contract of the given kind from its storage() dump.
using ContractFactory =
    std::function<std::unique_ptr<Contract>(std::string_view kind, const nlohmann::json& storage)>;

struct TxEnvelope
{
    Address sender;
    Address to;
    BigInt value = 0;
    std::uint64_t gas_limit = 0;
    BigInt gas_price = 1;
    Bytes payload;
};

enum class TxStatus
{
    Success,
    Reverted,
    OutOfGas,
};

std::string_view status_name(TxStatus s) noexcept;

struct Receipt
{
    std::uint64_t tx_index = 0;
    Address sender;
    Address to;
    TxStatus status = TxStatus::Success;
    ErrorCode error = ErrorCode::Ok;
    std::string message;
    std::uint64_t gas_used = 0;
    std::vector<EventRecord> events;

    bool ok() const noexcept { return status == TxStatus::Success; }
    nlohmann::json to_json() const;
};

/// Public record of every executed transaction: the caller is always
/// observable, whatever the payload hides.
struct TxRecord
{
    std::uint64_t tx_index = 0;
    Address sender;
    Address to;
    TxStatus status = TxStatus::Success;
    std::uint64_t gas_used = 0;

    bool operator==(const TxRecord&) const = default;
};

class Ledger
{
public:
    explicit Ledger(gas::GasSchedule schedule = {});
    Ledger(const Ledger& other);
    Ledger& operator=(const Ledger& other);
    Ledger(Ledger&&) noexcept = default;
    Ledger& operator=(Ledger&&) noexcept = default;
    ~Ledger();

    /// Genesis issuance; the only way Wei enters the system.
    void mint(const Address& to, const BigInt& amount);

    /// Registers a contract with isolated storage and zero balance.
    Address deploy(std::unique_ptr<Contract> contract);

    /// Reserves gas_limit * gas_price, executes atomically, settles fees.
    /// Throws before touching state for IntrinsicGasTooLow, InsufficientFunds
    /// and UnknownContract (payload sent to a non-contract). Contract aborts
    /// and out-of-gas are reported in the receipt.
    Receipt submit(const TxEnvelope& tx);

    std::vector<EventRecord> read_events(std::uint64_t from_seq = 0) const;
    std::uint64_t event_count() const noexcept { return events_.size(); }
    const std::vector<TxRecord>& history() const noexcept { return history_; }

    BigInt balance(const Address& a) const;
    std::uint64_t nonce(const Address& a) const;
    bool is_contract(const Address& a) const;
    const Contract* contract(const Address& a) const;

    template<typename T>
    const T& contract_as(const Address& a) const
    {
        const auto* c = dynamic_cast<const T*>(contract(a));
        if (c == nullptr)
            fail(ErrorCode::UnknownContract, "no contract of the requested kind at " + a.hex());
        return *c;
    }

    /// Sum of every balance including contracts and the miner.
    BigInt total_balance() const;
    const BigInt& minted() const noexcept { return minted_; }
    const gas::GasSchedule& schedule() const noexcept { return schedule_; }

    nlohmann::json to_json() const;
    static Ledger from_json(const nlohmann::json& j, const ContractFactory& factory);

private:
    friend class CallContext;

    struct AccountState
    {
        BigInt balance = 0;
        std::uint64_t nonce = 0;
    };

    gas::GasSchedule schedule_;
    std::map<Address, AccountState> accounts_;
    std::map<Address, std::unique_ptr<Contract>> contracts_;
    std::vector<EventRecord> events_;
    std::vector<TxRecord> history_;
    BigInt minted_ = 0;
    std::uint64_t deploy_counter_ = 0;

    AccountState& account(const Address& a) { return accounts_[a]; }
};

}  // namespace zeth::ledger
