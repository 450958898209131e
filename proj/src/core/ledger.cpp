// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/ledger.hpp"
#include "zeth/crypto.hpp"

#include <algorithm>

namespace zeth::ledger
{
std::string Address::hex() const
{
    return to_hex(ByteView{bytes});
}

Address Address::from_hex(std::string_view hex)
{
    const auto raw = zeth::from_hex(hex);
    if (raw.size() != 20)
        fail(ErrorCode::Parse, "account address must be 20 bytes");
    Address a;
    std::ranges::copy(raw, a.bytes.begin());
    return a;
}

namespace
{
Address address_from_digest(const Digest256& d)
{
    Address a;
    std::copy(d.bytes.end() - 20, d.bytes.end(), a.bytes.begin());
    return a;
}

BigInt parse_bigint(const nlohmann::json& j)
{
    return BigInt{j.get<std::string>()};
}
}  // namespace

Address account_address(std::string_view label)
{
    return address_from_digest(
        crypto::Hasher{}.update(crypto::hash(std::string_view{"zeth.account"})).update(crypto::hash(label)).finish());
}

const Address& miner_address()
{
    static const Address miner = account_address("miner");
    return miner;
}

nlohmann::json EventRecord::to_json() const
{
    nlohmann::json j = {{"seq", seq}, {"block", block}, {"tx", tx_index}, {"contract", contract.hex()},
        {"kind", kind}};
    for (const auto& [key, value] : data.items())
        j[key] = value;
    return j;
}

EventRecord EventRecord::from_json(const nlohmann::json& j)
{
    EventRecord e;
    e.seq = j.at("seq").get<std::uint64_t>();
    e.block = j.at("block").get<std::uint64_t>();
    e.tx_index = j.at("tx").get<std::uint64_t>();
    e.contract = Address::from_hex(j.at("contract").get<std::string>());
    e.kind = j.at("kind").get<std::string>();
    e.data = nlohmann::json::object();
    for (const auto& [key, value] : j.items())
        if (key != "seq" && key != "block" && key != "tx" && key != "contract" && key != "kind")
            e.data[key] = value;
    return e;
}

Bytes EventRecord::payload() const
{
    const auto it = data.find("hex");
    if (it == data.end())
        return {};
    return zeth::from_hex(it->get<std::string>());
}

std::string_view status_name(TxStatus s) noexcept
{
    switch (s)
    {
    case TxStatus::Success: return "success";
    case TxStatus::Reverted: return "reverted";
    case TxStatus::OutOfGas: return "out_of_gas";
    }
    return "unknown";
}

nlohmann::json Receipt::to_json() const
{
    nlohmann::json evs = nlohmann::json::array();
    for (const auto& e : events)
        evs.push_back(e.to_json());
    nlohmann::json j = {{"tx_index", tx_index}, {"sender", sender.hex()}, {"to", to.hex()},
        {"status", status_name(status)}, {"gas_used", gas_used}, {"events", evs}};
    if (error != ErrorCode::Ok)
    {
        j["error"] = error_name(error);
        j["message"] = message;
    }
    return j;
}

const gas::GasSchedule& CallContext::schedule() const noexcept
{
    return ledger_.schedule_;
}

void CallContext::charge(std::uint64_t gas)
{
    if (gas > gas_limit_ - gas_used_)
    {
        gas_used_ = gas_limit_;
        fail(ErrorCode::OutOfGas, "out of gas");
    }
    gas_used_ += gas;
}

void CallContext::emit(std::string kind, nlohmann::json data)
{
    events_.emplace_back(std::move(kind), std::move(data));
}

BigInt CallContext::self_balance() const
{
    return ledger_.balance(self_);
}

void CallContext::send_value(const Address& to, const BigInt& amount)
{
    auto& from = ledger_.account(self_);
    if (from.balance < amount)
        fail(ErrorCode::InsufficientContractBalance, "contract balance cannot cover payout");
    from.balance -= amount;
    ledger_.account(to).balance += amount;
}

Ledger::Ledger(gas::GasSchedule schedule) : schedule_(schedule) {}

Ledger::Ledger(const Ledger& other)
  : schedule_(other.schedule_), accounts_(other.accounts_), events_(other.events_),
    history_(other.history_), minted_(other.minted_), deploy_counter_(other.deploy_counter_)
{
    for (const auto& [addr, c] : other.contracts_)
        contracts_.emplace(addr, c->clone());
}

Ledger& Ledger::operator=(const Ledger& other)
{
    if (this != &other)
    {
        Ledger copy{other};
        *this = std::move(copy);
    }
    return *this;
}

Ledger::~Ledger() = default;

void Ledger::mint(const Address& to, const BigInt& amount)
{
    if (amount < 0)
        fail(ErrorCode::InvalidArgument, "cannot mint a negative amount");
    account(to).balance += amount;
    minted_ += amount;
}

Address Ledger::deploy(std::unique_ptr<Contract> contract)
{
    if (!contract)
        fail(ErrorCode::InvalidArgument, "null contract");
    const auto counter = be64(deploy_counter_++);
    const auto addr = address_from_digest(crypto::Hasher{}
                                              .update(crypto::hash(std::string_view{"zeth.contract"}))
                                              .update(ByteView{counter})
                                              .finish());
    contracts_[addr] = std::move(contract);
    account(addr);
    return addr;
}

Receipt Ledger::submit(const TxEnvelope& tx)
{
    if (tx.gas_limit < schedule_.intrinsic_tx)
        fail(ErrorCode::IntrinsicGasTooLow,
            "gas limit " + std::to_string(tx.gas_limit) + " below intrinsic cost "
                + std::to_string(schedule_.intrinsic_tx));
    if (tx.value < 0 || tx.gas_price < 0)
        fail(ErrorCode::InvalidArgument, "value and gas price must be non-negative");
    const auto contract_it = contracts_.find(tx.to);
    const bool is_call = contract_it != contracts_.end();
    if (!is_call && !tx.payload.empty())
        fail(ErrorCode::UnknownContract, "no contract at " + tx.to.hex());

    const BigInt max_fee = BigInt{tx.gas_limit} * tx.gas_price;
    {
        auto it = accounts_.find(tx.sender);
        const BigInt available = it == accounts_.end() ? BigInt{0} : it->second.balance;
        if (available < tx.value + max_fee)
            fail(ErrorCode::InsufficientFunds, "sender cannot cover value plus maximum fee");
    }

    auto& sender = account(tx.sender);
    sender.balance -= max_fee;
    sender.nonce += 1;

    Receipt receipt;
    receipt.tx_index = history_.size();
    receipt.sender = tx.sender;
    receipt.to = tx.to;

    const auto accounts_snapshot = accounts_;
    std::uint64_t gas_used = schedule_.intrinsic_tx;

    if (!is_call)
    {
        account(tx.sender).balance -= tx.value;
        account(tx.to).balance += tx.value;
    }
    else
    {
        auto contract_snapshot = contract_it->second->clone();
        CallContext ctx{*this, tx.sender, tx.to, tx.value, tx.payload, tx.gas_limit, gas_used};
        try
        {
            ctx.charge(schedule_.contract_call);
            account(tx.sender).balance -= tx.value;
            account(tx.to).balance += tx.value;
            contract_it->second->call(ctx);
            gas_used = ctx.gas_used();
            for (auto& [kind, data] : ctx.events_)
            {
                EventRecord e;
                e.seq = events_.size();
                e.block = receipt.tx_index;
                e.tx_index = receipt.tx_index;
                e.contract = tx.to;
                e.kind = std::move(kind);
                e.data = std::move(data);
                events_.push_back(e);
                receipt.events.push_back(std::move(e));
            }
        }
        catch (const Error& err)
        {
            accounts_ = accounts_snapshot;
            contract_it->second = std::move(contract_snapshot);
            receipt.error = err.code();
            receipt.message = err.what();
            if (err.code() == ErrorCode::OutOfGas)
            {
                receipt.status = TxStatus::OutOfGas;
                gas_used = tx.gas_limit;
            }
            else
            {
                receipt.status = TxStatus::Reverted;
                gas_used = ctx.gas_used();
            }
        }
    }

    const BigInt fee = BigInt{gas_used} * tx.gas_price;
    account(miner_address()).balance += fee;
    account(tx.sender).balance += max_fee - fee;
    receipt.gas_used = gas_used;
    history_.push_back(TxRecord{receipt.tx_index, tx.sender, tx.to, receipt.status, gas_used});
    return receipt;
}

std::vector<EventRecord> Ledger::read_events(std::uint64_t from_seq) const
{
    if (from_seq >= events_.size())
        return {};
    return {events_.begin() + static_cast<std::ptrdiff_t>(from_seq), events_.end()};
}

BigInt Ledger::balance(const Address& a) const
{
    const auto it = accounts_.find(a);
    return it == accounts_.end() ? BigInt{0} : it->second.balance;
}

std::uint64_t Ledger::nonce(const Address& a) const
{
    const auto it = accounts_.find(a);
    return it == accounts_.end() ? 0 : it->second.nonce;
}

bool Ledger::is_contract(const Address& a) const
{
    return contracts_.contains(a);
}

const Contract* Ledger::contract(const Address& a) const
{
    const auto it = contracts_.find(a);
    return it == contracts_.end() ? nullptr : it->second.get();
}

BigInt Ledger::total_balance() const
{
    BigInt sum = 0;
    for (const auto& [_, acc] : accounts_)
        sum += acc.balance;
    return sum;
}

nlohmann::json Ledger::to_json() const
{
    nlohmann::json accounts = nlohmann::json::array();
    for (const auto& [addr, acc] : accounts_)
        accounts.push_back({{"address", addr.hex()}, {"balance", acc.balance.str()}, {"nonce", acc.nonce}});
    nlohmann::json contracts = nlohmann::json::array();
    for (const auto& [addr, c] : contracts_)
        contracts.push_back({{"address", addr.hex()}, {"kind", c->kind()}, {"storage", c->storage()}});
    nlohmann::json events = nlohmann::json::array();
    for (const auto& e : events_)
        events.push_back(e.to_json());
    nlohmann::json history = nlohmann::json::array();
    for (const auto& h : history_)
        history.push_back({{"tx", h.tx_index}, {"sender", h.sender.hex()}, {"to", h.to.hex()},
            {"status", status_name(h.status)}, {"gas_used", h.gas_used}});
    return {{"schedule", gas::to_json(schedule_)}, {"minted", minted_.str()},
        {"deploy_counter", deploy_counter_}, {"accounts", accounts}, {"contracts", contracts},
        {"events", events}, {"history", history}};
}

Ledger Ledger::from_json(const nlohmann::json& j, const ContractFactory& factory)
{
    Ledger l{gas::schedule_from_json(j.at("schedule"))};
    l.minted_ = parse_bigint(j.at("minted"));
    l.deploy_counter_ = j.at("deploy_counter").get<std::uint64_t>();
    for (const auto& a : j.at("accounts"))
        l.accounts_[Address::from_hex(a.at("address").get<std::string>())] =
            AccountState{parse_bigint(a.at("balance")), a.at("nonce").get<std::uint64_t>()};
    for (const auto& c : j.at("contracts"))
    {
        auto contract = factory(c.at("kind").get<std::string>(), c.at("storage"));
        if (!contract)
            fail(ErrorCode::Parse, "unknown contract kind " + c.at("kind").get<std::string>());
        l.contracts_[Address::from_hex(c.at("address").get<std::string>())] = std::move(contract);
    }
    for (const auto& e : j.at("events"))
        l.events_.push_back(EventRecord::from_json(e));
    for (const auto& h : j.at("history"))
    {
        TxRecord r;
        r.tx_index = h.at("tx").get<std::uint64_t>();
        r.sender = Address::from_hex(h.at("sender").get<std::string>());
        r.to = Address::from_hex(h.at("to").get<std::string>());
        const auto s = h.at("status").get<std::string>();
        r.status = s == "success" ? TxStatus::Success : s == "reverted" ? TxStatus::Reverted : TxStatus::OutOfGas;
        r.gas_used = h.at("gas_used").get<std::uint64_t>();
        l.history_.push_back(r);
    }
    return l;
}

}  // namespace zeth::ledger
