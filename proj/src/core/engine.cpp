// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/engine.hpp"
#include "zeth/security_harness.hpp"

#include <fstream>

namespace zeth::engine
{
namespace fs = std::filesystem;

namespace
{
constexpr std::string_view default_funding = "1000000000000000000";

nlohmann::json read_json(const fs::path& p)
{
    std::ifstream in{p};
    if (!in)
        fail(ErrorCode::NotFound, "missing state file " + p.string());
    try
    {
        return nlohmann::json::parse(in);
    }
    catch (const nlohmann::json::exception& e)
    {
        fail(ErrorCode::Parse, p.string() + ": " + e.what());
    }
}

void write_text(const fs::path& p, const std::string& text)
{
    auto tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out{tmp, std::ios::binary | std::ios::trunc};
        out << text;
        if (!out)
            fail(ErrorCode::Io, "cannot write " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, p, ec);
    if (ec)
        fail(ErrorCode::Io, "cannot replace " + p.string() + ": " + ec.message());
}

void write_json(const fs::path& p, const nlohmann::json& j)
{
    write_text(p, j.dump(2) + "\n");
}

void check_name(const std::string& name)
{
    const bool ok = !name.empty() && name.size() <= 64 && std::ranges::all_of(name, [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    });
    if (!ok)
        fail(ErrorCode::InvalidArgument, "wallet names use letters, digits, '-' and '_' (at most 64)");
}

template<typename T>
T arg(const nlohmann::json& args, const char* key, T fallback)
{
    const auto it = args.find(key);
    if (it == args.end() || it->is_null())
        return fallback;
    try
    {
        return it->get<T>();
    }
    catch (const nlohmann::json::exception&)
    {
        fail(ErrorCode::InvalidArgument, std::string{"argument '"} + key + "' has the wrong type");
    }
}

template<typename T>
T required(const nlohmann::json& args, const char* key)
{
    if (!args.contains(key) || args.at(key).is_null())
        fail(ErrorCode::InvalidArgument, std::string{"missing argument '"} + key + "'");
    return arg<T>(args, key, T{});
}

BigInt parse_amount(const nlohmann::json& j)
{
    try
    {
        if (j.is_number_unsigned())
            return BigInt{j.get<std::uint64_t>()};
        const auto s = j.get<std::string>();
        if (s.empty() || !std::ranges::all_of(s, [](char c) { return c >= '0' && c <= '9'; }))
            fail(ErrorCode::InvalidArgument, "amount must be a non-negative decimal integer");
        return BigInt{s};
    }
    catch (const nlohmann::json::exception&)
    {
        fail(ErrorCode::InvalidArgument, "amount must be a non-negative integer");
    }
}

gas::GasSchedule schedule_from_arg(const nlohmann::json& j)
{
    if (j.is_null())
        return gas::GasSchedule::byzantium();
    if (j.is_object())
        return gas::schedule_from_json(j);
    const auto name = j.get<std::string>();
    if (name == "byzantium")
        return gas::GasSchedule::byzantium();
    if (name == "istanbul")
        return gas::GasSchedule::istanbul();
    fs::path p{name};
    if (fs::exists(p))
        return gas::schedule_from_json(read_json(p));
    fail(ErrorCode::InvalidArgument, "unknown gas schedule " + name + " (byzantium, istanbul, or a JSON file)");
}

struct Config
{
    CircuitConfig circuit;
    std::uint64_t instance_elements = gas::default_instance_elements;
    gas::GasSchedule schedule;

    nlohmann::json to_json() const
    {
        return {{"circuit", zeth::to_json(circuit)}, {"instance_elements", instance_elements},
            {"schedule", gas::to_json(schedule)}};
    }
    static Config from_json(const nlohmann::json& j)
    {
        Config c;
        c.circuit = circuit_config_from_json(j.at("circuit"));
        c.instance_elements = j.at("instance_elements").get<std::uint64_t>();
        c.schedule = gas::schedule_from_json(j.at("schedule"));
        return c;
    }
};

class State
{
public:
    explicit State(fs::path dir) : dir_(std::move(dir)) {}

    bool initialized() const { return fs::exists(dir_ / "config.json"); }

    void load()
    {
        if (!initialized())
            fail(ErrorCode::NotFound, "no state in " + dir_.string() + "; run setup first");
        config_ = Config::from_json(read_json(dir_ / "config.json"));
        crs_ = proof::crs_from_json(read_json(dir_ / "crs.json"));
        ledger_ = ledger::Ledger::from_json(read_json(dir_ / "ledger.json"), mixer::make_contract);
        if (fs::exists(dir_ / "deployment.json"))
        {
            const auto d = read_json(dir_ / "deployment.json");
            mixer_ = ledger::Address::from_hex(d.at("mixer").get<std::string>());
            if (d.contains("registry") && !d.at("registry").is_null())
                registry_ = ledger::Address::from_hex(d.at("registry").get<std::string>());
        }
        if (fs::exists(dir_ / "wallets"))
        {
            std::vector<fs::path> files;
            for (const auto& entry : fs::directory_iterator(dir_ / "wallets"))
                if (entry.path().extension() == ".json")
                    files.push_back(entry.path());
            std::ranges::sort(files);
            for (const auto& f : files)
            {
                auto w = wallet::Wallet::from_json(read_json(f));
                const auto name = w.label();
                wallets_.emplace(name, std::move(w));
            }
        }
    }

    void create(const Config& config, const proof::Crs& crs)
    {
        config_ = config;
        crs_ = crs;
        ledger_ = ledger::Ledger{config.schedule};
        mixer_.reset();
        registry_.reset();
        wallets_.clear();
        std::error_code ec;
        fs::remove_all(dir_ / "wallets", ec);
        fs::remove(dir_ / "deployment.json", ec);
    }

    void save() const
    {
        fs::create_directories(dir_ / "wallets");
        write_json(dir_ / "config.json", config_.to_json());
        write_json(dir_ / "crs.json", proof::to_json(crs_));
        write_json(dir_ / "ledger.json", ledger_.to_json());
        if (mixer_)
            write_json(dir_ / "deployment.json",
                {{"mixer", mixer_->hex()}, {"registry", registry_ ? nlohmann::json(registry_->hex()) : nlohmann::json()}});
        std::string log;
        for (const auto& e : ledger_.read_events())
            log += e.to_json().dump() + "\n";
        write_text(dir_ / "events.jsonl", log);
        for (const auto& [name, w] : wallets_)
            write_json(dir_ / "wallets" / (name + ".json"), w.to_json());
    }

    /// Digest of everything a command can read; feeds the seeded Rng.
    Digest256 fingerprint() const
    {
        crypto::Hasher h;
        h.update(crypto::hash(std::string_view{ledger_.to_json().dump()}));
        for (const auto& [name, w] : wallets_)
            h.update(crypto::hash(std::string_view{w.to_json().dump()}));
        return h.finish();
    }

    const Config& config() const noexcept { return config_; }
    const proof::Crs& crs() const noexcept { return crs_; }
    ledger::Ledger& ledger() noexcept { return ledger_; }

    bool deployed() const noexcept { return mixer_.has_value(); }
    const ledger::Address& mixer_address() const
    {
        if (!mixer_)
            fail(ErrorCode::NotFound, "no mixer deployed; run deploy first");
        return *mixer_;
    }
    const mixer::Mixer& mixer() const { return ledger_.contract_as<mixer::Mixer>(mixer_address()); }
    const std::optional<ledger::Address>& registry() const noexcept { return registry_; }

    void set_deployment(const ledger::Address& mixer, std::optional<ledger::Address> registry)
    {
        mixer_ = mixer;
        registry_ = registry;
    }

    bool has_wallet(const std::string& name) const { return wallets_.contains(name); }
    wallet::Wallet& wallet(const std::string& name)
    {
        const auto it = wallets_.find(name);
        if (it == wallets_.end())
            fail(ErrorCode::NotFound, "no wallet named " + name);
        return it->second;
    }
    void add_wallet(wallet::Wallet w)
    {
        const auto name = w.label();
        wallets_.emplace(name, std::move(w));
    }

private:
    fs::path dir_;
    Config config_;
    proof::Crs crs_;
    ledger::Ledger ledger_;
    std::optional<ledger::Address> mixer_;
    std::optional<ledger::Address> registry_;
    std::map<std::string, wallet::Wallet> wallets_;
};

std::string seed_text(const nlohmann::json& args)
{
    const auto& s = args.at("seed");
    return s.is_string() ? s.get<std::string>() : s.dump();
}

bool seeded(const nlohmann::json& args)
{
    return args.contains("seed") && !args.at("seed").is_null();
}

Rng command_rng(const nlohmann::json& args, std::string_view command, const Digest256& state)
{
    if (!seeded(args))
        return Rng::from_os();
    auto rest = args;
    rest.erase("seed");
    rest.erase("reveal_secrets");
    return Rng{crypto::Hasher{}
                   .update(crypto::hash(std::string_view{"zeth.cli.rng"}))
                   .update(crypto::hash(std::string_view{seed_text(args)}))
                   .update(crypto::hash(command))
                   .update(crypto::hash(std::string_view{rest.dump()}))
                   .update(state.view())
                   .finish()
                   .bytes};
}

bool reveal(const nlohmann::json& args)
{
    return arg<bool>(args, "reveal_secrets", false);
}

nlohmann::json wallet_view(const wallet::Wallet& w, bool with_secrets)
{
    auto j = w.public_json();
    if (with_secrets)
        j["secrets"] = w.to_json();
    return j;
}

/// Public transaction summary: everything a chain observer sees.
nlohmann::json tx_view(const mixer::MixTransaction& tx)
{
    return tx.to_json();
}

void require_ok(const ledger::Receipt& receipt)
{
    if (!receipt.ok())
        fail(receipt.error, "transaction " + std::string{ledger::status_name(receipt.status)} + ": " + receipt.message);
}

AddressPublic resolve_recipient(State& st, const std::string& to)
{
    if (st.has_wallet(to))
        return st.wallet(to).address().pub;
    if (const auto colon = to.find(':'); colon != std::string::npos)
        return AddressPublic{digest_from_hex(to.substr(0, colon)), bytes32_from_hex(to.substr(colon + 1))};
    if (to.size() != 64)
        fail(ErrorCode::NotFound, "recipient " + to + " is neither a wallet name nor an a_pk");
    const auto a_pk = digest_from_hex(to);
    if (!st.registry())
        fail(ErrorCode::NotFound, "recipient " + to + " unknown and no registry deployed");
    const auto found = st.ledger().contract_as<mixer::AddressRegistry>(*st.registry()).lookup(a_pk);
    if (!found)
        fail(ErrorCode::NotFound, "recipient " + to + " is not a wallet here and not registered");
    return *found;
}

std::vector<std::uint64_t> u64_list(const nlohmann::json& args, const char* key)
{
    const auto it = args.find(key);
    if (it == args.end() || it->is_null())
        return {};
    try
    {
        if (it->is_array())
            return it->get<std::vector<std::uint64_t>>();
        return {it->get<std::uint64_t>()};
    }
    catch (const nlohmann::json::exception&)
    {
        fail(ErrorCode::InvalidArgument, std::string{"argument '"} + key + "' must be unsigned integers");
    }
}

std::vector<std::string> string_list(const nlohmann::json& args, const char* key)
{
    const auto it = args.find(key);
    if (it == args.end() || it->is_null())
        return {};
    try
    {
        if (it->is_array())
            return it->get<std::vector<std::string>>();
        return {it->get<std::string>()};
    }
    catch (const nlohmann::json::exception&)
    {
        fail(ErrorCode::InvalidArgument, std::string{"argument '"} + key + "' must be strings");
    }
}

nlohmann::json pay(State& st, const std::string& name, wallet::PaymentRequest req, const nlohmann::json& args, Rng& rng)
{
    auto& w = st.wallet(name);
    if (args.contains("root_index") && !args.at("root_index").is_null())
    {
        const auto& roots = st.mixer().roots();
        const auto i = arg<std::uint64_t>(args, "root_index", 0);
        if (i >= roots.size())
            fail(ErrorCode::InvalidArgument, "root_index beyond the root history");
        req.root = roots[i].root;
    }
    const auto gas_limit = arg<std::uint64_t>(args, "gas_limit", default_gas_limit);
    const auto payment = w.make_payment(st.crs().proving_key, st.mixer(), req, rng);
    const auto receipt = w.submit(st.ledger(), st.mixer_address(), payment, gas_limit);
    if (!receipt.ok())
    {
        st.save();
        require_ok(receipt);
    }
    const auto scan = w.receive(st.ledger(), st.mixer_address());
    st.save();
    return {{"receipt", receipt.to_json()}, {"tx", tx_view(payment.tx)}, {"received", scan.to_json()},
        {"balance", w.balance().str()}, {"account_balance", st.ledger().balance(w.account()).str()}};
}

// ---- commands ----------------------------------------------------------------

nlohmann::json cmd_setup(const fs::path& dir, const nlohmann::json& args)
{
    State st{dir};
    if (st.initialized() && !arg<bool>(args, "force", false))
        fail(ErrorCode::AlreadyExists, "state already exists in " + dir.string() + " (pass force to overwrite)");
    Config config;
    config.circuit.n_inputs = arg<std::size_t>(args, "inputs", 2);
    config.circuit.n_outputs = arg<std::size_t>(args, "outputs", 2);
    config.circuit.depth = arg<unsigned>(args, "depth", 16);
    config.circuit.validate();
    const auto packing = args.find("instance_elements");
    if (packing != args.end() && packing->is_string() && packing->get<std::string>() == "packed")
        config.instance_elements = gas::packed_instance_elements(config.circuit);
    else
        config.instance_elements = arg<std::uint64_t>(args, "instance_elements", gas::default_instance_elements);
    config.schedule = schedule_from_arg(args.value("schedule", nlohmann::json()));

    auto rng = command_rng(args, "setup", Digest256{});
    const auto crs = proof::setup(config.circuit, rng.bytes32());
    fs::create_directories(dir);
    st.create(config, crs);
    st.save();
    nlohmann::json out = {{"state_dir", dir.string()}, {"config", config.to_json()},
        {"fingerprint", to_hex(crs.verification_key.fingerprint)}};
    if (reveal(args))
        out["crs"] = proof::to_json(crs);
    return out;
}

nlohmann::json cmd_deploy(State& st, const nlohmann::json& args)
{
    if (st.deployed())
        fail(ErrorCode::AlreadyExists, "a mixer is already deployed at " + st.mixer_address().hex());
    const auto mixer_addr = st.ledger().deploy(
        std::make_unique<mixer::Mixer>(st.crs().verification_key, st.config().instance_elements));
    std::optional<ledger::Address> registry;
    if (arg<bool>(args, "registry", true))
        registry = st.ledger().deploy(std::make_unique<mixer::AddressRegistry>());
    st.set_deployment(mixer_addr, registry);
    st.save();
    return {{"mixer", mixer_addr.hex()}, {"registry", registry ? nlohmann::json(registry->hex()) : nlohmann::json()},
        {"root", to_hex(st.mixer().current_root())}};
}

nlohmann::json cmd_keygen(State& st, const nlohmann::json& args, Rng& rng)
{
    const auto name = required<std::string>(args, "name");
    check_name(name);
    if (st.has_wallet(name))
        fail(ErrorCode::AlreadyExists, "wallet " + name + " exists");
    auto w = wallet::Wallet::create(name, rng);
    const auto fund = parse_amount(args.value("fund", nlohmann::json(std::string{default_funding})));
    if (fund > 0)
        st.ledger().mint(w.account(), fund);
    const auto view = wallet_view(w, reveal(args));
    st.add_wallet(std::move(w));
    st.save();
    return view;
}

nlohmann::json cmd_register(State& st, const nlohmann::json& args)
{
    auto& w = st.wallet(required<std::string>(args, "name"));
    if (!st.registry())
        fail(ErrorCode::NotFound, "no registry deployed");
    ledger::TxEnvelope env;
    env.sender = w.account();
    env.to = *st.registry();
    env.gas_limit = arg<std::uint64_t>(args, "gas_limit", 100'000);
    env.payload = mixer::AddressRegistry::encode_registration(w.address().pub);
    const auto receipt = st.ledger().submit(env);
    st.save();
    require_ok(receipt);
    return {{"receipt", receipt.to_json()}, {"address", zeth::to_json(w.address().pub)}};
}

nlohmann::json cmd_deposit(State& st, const nlohmann::json& args, Rng& rng)
{
    const auto name = required<std::string>(args, "name");
    const auto value = required<std::uint64_t>(args, "value");
    const auto to = arg<std::string>(args, "to", "");
    const auto recipient = to.empty() ? st.wallet(name).address().pub : resolve_recipient(st, to);
    return pay(st, name, wallet::PaymentRequest{{wallet::Recipient{recipient, value}}, value, 0, {}, {}}, args, rng);
}

nlohmann::json cmd_transfer(State& st, const nlohmann::json& args, Rng& rng)
{
    const auto name = required<std::string>(args, "name");
    const auto to = string_list(args, "to");
    const auto values = u64_list(args, "value");
    if (to.empty() || to.size() != values.size())
        fail(ErrorCode::InvalidArgument, "give one value per recipient");
    wallet::PaymentRequest req;
    for (std::size_t i = 0; i < to.size(); ++i)
        req.recipients.push_back(wallet::Recipient{resolve_recipient(st, to[i]), values[i]});
    req.v_in = arg<std::uint64_t>(args, "v_in", 0);
    req.v_out = arg<std::uint64_t>(args, "v_out", 0);
    return pay(st, name, req, args, rng);
}

nlohmann::json cmd_withdraw(State& st, const nlohmann::json& args, Rng& rng)
{
    const auto name = required<std::string>(args, "name");
    const auto value = required<std::uint64_t>(args, "value");
    return pay(st, name, wallet::PaymentRequest{{}, 0, value, {}, {}}, args, rng);
}

nlohmann::json cmd_split(State& st, const nlohmann::json& args, Rng& rng)
{
    const auto name = required<std::string>(args, "name");
    const auto parts = u64_list(args, "parts");
    if (parts.empty())
        fail(ErrorCode::InvalidArgument, "give at least one part");
    wallet::PaymentRequest req;
    for (const auto v : parts)
        req.recipients.push_back(wallet::Recipient{st.wallet(name).address().pub, v});
    return pay(st, name, req, args, rng);
}

nlohmann::json cmd_receive(State& st, const nlohmann::json& args)
{
    auto& w = st.wallet(required<std::string>(args, "name"));
    const auto report = w.receive(st.ledger(), st.mixer_address());
    st.save();
    auto out = report.to_json();
    out["balance"] = w.balance().str();
    if (args.contains("expect") && !args.at("expect").is_null())
        out["expect_payment"] = w.expect_payment(arg<std::uint64_t>(args, "expect", 0)) ? "accepted" : "rejected";
    return out;
}

nlohmann::json cmd_balance(State& st, const nlohmann::json& args)
{
    const auto& w = st.wallet(required<std::string>(args, "name"));
    auto out = wallet_view(w, reveal(args));
    out["account_balance"] = st.ledger().balance(w.account()).str();
    return out;
}

nlohmann::json cmd_gas(const nlohmann::json& args)
{
    CircuitConfig c;
    c.n_inputs = arg<std::size_t>(args, "inputs", 2);
    c.n_outputs = arg<std::size_t>(args, "outputs", 2);
    c.validate();
    const auto sched = schedule_from_arg(args.value("schedule", nlohmann::json()));
    const auto packing = args.find("instance_elements");
    std::uint64_t n = gas::default_instance_elements;
    if (packing != args.end() && packing->is_string() && packing->get<std::string>() == "packed")
        n = gas::packed_instance_elements(c);
    else
        n = arg<std::uint64_t>(args, "instance_elements", n);
    const auto verify = gas::verifier_gas(n, sched);
    const auto mix = gas::mix_call_gas(c, sched, n);
    std::uint64_t largest = 0;
    while (gas::verifier_gas(largest + 1, sched).total < 2'000'000)
        ++largest;
    return {{"inputs", c.n_inputs}, {"outputs", c.n_outputs}, {"instance_elements", n},
        {"schedule", gas::to_json(sched)}, {"verification", gas::to_json(verify)}, {"mix_call", gas::to_json(mix)},
        {"verification_below_2m", verify.total < 2'000'000}, {"largest_n_below_2m", largest}};
}

nlohmann::json cmd_harness(const nlohmann::json& args, Rng& rng)
{
    const auto game = arg<std::string>(args, "game", "all");
    const auto trials = arg<std::uint64_t>(args, "trials", 1000);
    const auto rounds = arg<std::uint64_t>(args, "rounds", 10);
    const auto& cipher = harness::cipher_by_name(arg<std::string>(args, "cipher", "hybrid"));
    CircuitConfig c;
    c.depth = arg<unsigned>(args, "depth", c.depth);
    c.validate();
    const auto crs = proof::setup(c, rng.bytes32());

    const std::vector<std::string> known{"ind", "indcca2", "ikcca", "trnm", "bal", "all"};
    if (std::ranges::find(known, game) == known.end())
        fail(ErrorCode::InvalidArgument, "unknown game " + game + " (ind, indcca2, ikcca, trnm, bal, all)");
    const bool all = game == "all";

    nlohmann::json out = {{"trials", trials}, {"cipher", cipher.name()}, {"results", nlohmann::json::array()}};
    auto& results = out["results"];
    const auto adversaries = [] {
        std::vector<std::unique_ptr<harness::EncAdversary>> v;
        v.push_back(harness::random_enc_adversary());
        v.push_back(harness::inspecting_enc_adversary());
        return v;
    };
    if (all || game == "indcca2")
        for (auto& a : adversaries())
            results.push_back(harness::run_indcca2(cipher, *a, trials, rng).to_json());
    if (all || game == "ikcca")
        for (auto& a : adversaries())
            results.push_back(harness::run_ikcca(cipher, *a, trials, rng).to_json());
    if (all || game == "ind")
    {
        auto r = harness::random_mixer_adversary();
        auto i = harness::inspecting_mixer_adversary();
        results.push_back(harness::run_indistinguishability(crs, cipher, *r, trials, rng).to_json());
        results.push_back(harness::run_indistinguishability(crs, cipher, *i, trials, rng).to_json());
    }
    if (all || game == "trnm")
        results.push_back(harness::run_trnm_suite(crs, trials, rng).to_json());
    if (all || game == "bal")
    {
        nlohmann::json bal = {{"game", "bal"}, {"rounds", rounds}, {"wins", 0}, {"scenarios", nlohmann::json::array()}};
        std::uint64_t wins = 0;
        for (const auto& s : harness::balance_scenarios())
        {
            nlohmann::json last;
            for (std::uint64_t k = 0; k < rounds; ++k)
            {
                const auto o = harness::run_balance(crs, s, rng);
                wins += o.adversary_wins ? 1 : 0;
                last = o.to_json();
            }
            bal["scenarios"].push_back(last);
        }
        bal["wins"] = wins;
        results.push_back(bal);
    }
    return out;
}

nlohmann::json cmd_diagnostics(State& st)
{
    return harness::anonymity_diagnostics(st.ledger(), st.mixer_address(), st.registry()).to_json();
}

}  // namespace

const std::vector<std::string>& commands()
{
    static const std::vector<std::string> names{"setup", "deploy", "keygen", "register", "deposit", "transfer",
        "withdraw", "receive", "balance", "split", "gas", "harness", "diagnostics"};
    return names;
}

nlohmann::json run(const fs::path& state_dir, std::string_view command, const nlohmann::json& args_in)
{
    ensure_sodium();
    const auto args = args_in.is_null() ? nlohmann::json::object() : args_in;
    if (!args.is_object())
        fail(ErrorCode::InvalidArgument, "arguments must be a JSON object");

    if (command == "setup")
        return cmd_setup(state_dir, args);
    if (command == "gas")
        return cmd_gas(args);
    if (command == "harness")
    {
        auto rng = command_rng(args, command, Digest256{});
        return cmd_harness(args, rng);
    }

    if (std::ranges::find(commands(), command) == commands().end())
        fail(ErrorCode::InvalidArgument, "unknown command " + std::string{command});

    State st{state_dir};
    st.load();
    auto rng = command_rng(args, command, st.fingerprint());
    if (command == "deploy")
        return cmd_deploy(st, args);
    if (command == "keygen")
        return cmd_keygen(st, args, rng);
    if (command == "register")
        return cmd_register(st, args);
    if (command == "deposit")
        return cmd_deposit(st, args, rng);
    if (command == "transfer")
        return cmd_transfer(st, args, rng);
    if (command == "withdraw")
        return cmd_withdraw(st, args, rng);
    if (command == "split")
        return cmd_split(st, args, rng);
    if (command == "receive")
        return cmd_receive(st, args);
    if (command == "balance")
        return cmd_balance(st, args);
    return cmd_diagnostics(st);
}

}  // namespace zeth::engine
