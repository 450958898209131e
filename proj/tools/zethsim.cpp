// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include <zeth/zeth.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>

namespace
{
constexpr int exit_domain_error = 1;
constexpr int exit_usage_error = 2;

struct ContextDeleter
{
    void operator()(zeth_context* ctx) const noexcept { zeth_close(ctx); }
};

struct StringDeleter
{
    void operator()(char* s) const noexcept { zeth_string_free(s); }
};

/// Sets args[key] only when the option was given on the command line.
template<typename T>
void put(nlohmann::json& args, const char* key, const CLI::Option* opt, const T& value)
{
    if (opt->count() > 0)
        args[key] = value;
}

int call(const std::string& state, const std::string& command, const nlohmann::json& args)
{
    zeth_context* raw = nullptr;
    if (const int rc = zeth_open(state.c_str(), &raw); rc != ZETH_OK)
    {
        std::cout << nlohmann::json{{"error", zeth_status_name(rc)}, {"code", rc}, {"message", "cannot open state"}}.dump(2)
                  << "\n";
        return exit_domain_error;
    }
    std::unique_ptr<zeth_context, ContextDeleter> ctx{raw};

    char* out = nullptr;
    const int rc = zeth_call(ctx.get(), command.c_str(), args.dump().c_str(), &out);
    std::unique_ptr<char, StringDeleter> result{out};
    if (result)
        std::cout << nlohmann::json::parse(result.get()).dump(2) << "\n";
    return rc == ZETH_OK ? 0 : exit_domain_error;
}
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zethsim: shielded payments over a simulated account ledger"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string{zeth_version()});

    std::string state = "zeth-state";
    if (const char* env = std::getenv("ZETHSIM_STATE"))
        state = env;
    std::string seed;
    bool reveal = false;
    app.add_option("--state", state, "State directory (default: $ZETHSIM_STATE or ./zeth-state)");
    auto* seed_opt = app.add_option("--seed", seed, "Derive all randomness from this seed");
    app.add_flag("--reveal-secrets", reveal, "Include secret keys in the output");

    nlohmann::json args = nlohmann::json::object();
    std::string command;

    // setup
    auto* setup = app.add_subcommand("setup", "Create a state directory and run the proof-system setup");
    std::size_t inputs = 2;
    std::size_t outputs = 2;
    unsigned depth = 16;
    std::string instance_elements;
    std::string schedule;
    bool force = false;
    auto* setup_in = setup->add_option("--inputs", inputs, "Joinsplit inputs N")->check(CLI::PositiveNumber);
    auto* setup_out = setup->add_option("--outputs", outputs, "Joinsplit outputs M")->check(CLI::PositiveNumber);
    auto* setup_depth = setup->add_option("--depth", depth, "Merkle tree depth")->check(CLI::Range(1, 32));
    auto* setup_n = setup->add_option("--instance-elements", instance_elements, "Public input count n, or 'packed'");
    auto* setup_sched = setup->add_option("--schedule", schedule, "byzantium, istanbul, or a JSON file");
    setup->add_flag("--force", force, "Overwrite existing state");

    // deploy
    auto* deploy = app.add_subcommand("deploy", "Deploy the mixer and the address registry");
    bool no_registry = false;
    deploy->add_flag("--no-registry", no_registry, "Skip the address registry");

    // keygen
    auto* keygen = app.add_subcommand("keygen", "Create a wallet and fund its account");
    std::string name;
    std::string fund;
    keygen->add_option("name", name, "Wallet name")->required();
    auto* keygen_fund = keygen->add_option("--fund", fund, "Wei minted to the new account");

    // wallet commands
    std::uint64_t value = 0;
    std::uint64_t gas_limit = 0;
    std::string to;
    std::vector<std::string> tos;
    std::vector<std::uint64_t> values;
    std::vector<std::uint64_t> parts;
    std::uint64_t v_in = 0;
    std::uint64_t v_out = 0;
    std::uint64_t root_index = 0;
    std::uint64_t expect = 0;

    auto* reg = app.add_subcommand("register", "Publish a wallet's address in the registry");
    reg->add_option("-w,--wallet", name, "Wallet name")->required();

    auto* deposit = app.add_subcommand("deposit", "Move Wei from the account into a new note");
    deposit->add_option("-w,--wallet", name, "Wallet name")->required();
    deposit->add_option("--value", value, "Amount")->required();
    auto* deposit_to = deposit->add_option("--to", to, "Recipient (default: self)");
    auto* deposit_gas = deposit->add_option("--gas-limit", gas_limit, "Gas limit");

    auto* transfer = app.add_subcommand("transfer", "Pay one or more recipients from private notes");
    transfer->add_option("-w,--wallet", name, "Wallet name")->required();
    transfer->add_option("--to", tos, "Recipient: wallet name, a_pk (registered), or a_pk:k_pk")->required();
    transfer->add_option("--value", values, "Amount per recipient, in --to order")->required();
    auto* transfer_vin = transfer->add_option("--v-in", v_in, "Public input");
    auto* transfer_vout = transfer->add_option("--v-out", v_out, "Public output");
    auto* transfer_root = transfer->add_option("--root-index", root_index, "Prove against this root of the history");
    auto* transfer_gas = transfer->add_option("--gas-limit", gas_limit, "Gas limit");

    auto* withdraw = app.add_subcommand("withdraw", "Turn private notes back into Wei");
    withdraw->add_option("-w,--wallet", name, "Wallet name")->required();
    withdraw->add_option("--value", value, "Amount")->required();
    auto* withdraw_gas = withdraw->add_option("--gas-limit", gas_limit, "Gas limit");

    auto* receive = app.add_subcommand("receive", "Scan the mixer's broadcasts for incoming notes");
    receive->add_option("-w,--wallet", name, "Wallet name")->required();
    auto* receive_expect = receive->add_option("--expect", expect, "Expected payment total");

    auto* balance = app.add_subcommand("balance", "Show a wallet's notes and balances");
    balance->add_option("-w,--wallet", name, "Wallet name")->required();

    auto* split = app.add_subcommand("split", "Pay yourself, splitting holdings into parts");
    split->add_option("-w,--wallet", name, "Wallet name")->required();
    split->add_option("--parts", parts, "Values of the new notes (zeros allowed)")->required();
    auto* split_gas = split->add_option("--gas-limit", gas_limit, "Gas limit");

    auto* gas = app.add_subcommand("gas", "Estimate proof verification and Mix call gas");
    auto* gas_in = gas->add_option("--inputs", inputs, "Joinsplit inputs N")->check(CLI::PositiveNumber);
    auto* gas_out = gas->add_option("--outputs", outputs, "Joinsplit outputs M")->check(CLI::PositiveNumber);
    auto* gas_n = gas->add_option("--instance-elements", instance_elements, "Public input count n, or 'packed'");
    auto* gas_sched = gas->add_option("--schedule", schedule, "byzantium, istanbul, or a JSON file");

    auto* harness = app.add_subcommand("harness", "Run the security games");
    std::string game = "all";
    std::uint64_t trials = 1000;
    std::uint64_t rounds = 10;
    std::string cipher = "hybrid";
    harness->add_option("--game", game, "ind, indcca2, ikcca, trnm, bal, or all")
        ->check(CLI::IsMember({"ind", "indcca2", "ikcca", "trnm", "bal", "all"}));
    harness->add_option("--trials", trials, "Trials per game")->check(CLI::PositiveNumber);
    harness->add_option("--rounds", rounds, "Repetitions of each balance scenario")->check(CLI::PositiveNumber);
    harness->add_option("--cipher", cipher, "hybrid, key-prefix, or plaintext-leak")
        ->check(CLI::IsMember({"hybrid", "key-prefix", "plaintext-leak"}));
    auto* harness_depth = harness->add_option("--depth", depth, "Merkle tree depth")->check(CLI::Range(1, 32));

    app.add_subcommand("diagnostics", "Report anonymity-set indicators");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForVersion& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_usage_error;
    }

    const auto* sub = app.get_subcommands().front();
    command = sub->get_name();
    if (seed_opt->count() > 0)
        args["seed"] = seed;
    if (reveal)
        args["reveal_secrets"] = true;

    const auto instance_arg = [&](const CLI::Option* opt) {
        if (opt->count() == 0)
            return;
        if (instance_elements == "packed")
            args["instance_elements"] = "packed";
        else
        {
            try
            {
                args["instance_elements"] = std::stoull(instance_elements);
            }
            catch (const std::exception&)
            {
                throw CLI::ValidationError{"--instance-elements", "expects a number or 'packed'"};
            }
        }
    };

    try
    {
        if (command == "setup")
        {
            put(args, "inputs", setup_in, inputs);
            put(args, "outputs", setup_out, outputs);
            put(args, "depth", setup_depth, depth);
            instance_arg(setup_n);
            put(args, "schedule", setup_sched, schedule);
            if (force)
                args["force"] = true;
        }
        else if (command == "deploy")
            args["registry"] = !no_registry;
        else if (command == "keygen")
        {
            args["name"] = name;
            put(args, "fund", keygen_fund, fund);
        }
        else if (command == "register" || command == "receive" || command == "balance")
        {
            args["name"] = name;
            put(args, "expect", receive_expect, expect);
        }
        else if (command == "deposit")
        {
            args["name"] = name;
            args["value"] = value;
            put(args, "to", deposit_to, to);
            put(args, "gas_limit", deposit_gas, gas_limit);
        }
        else if (command == "transfer")
        {
            if (tos.size() != values.size())
                throw CLI::ValidationError{"--value", "give one --value per --to"};
            args["name"] = name;
            args["to"] = tos;
            args["value"] = values;
            put(args, "v_in", transfer_vin, v_in);
            put(args, "v_out", transfer_vout, v_out);
            put(args, "root_index", transfer_root, root_index);
            put(args, "gas_limit", transfer_gas, gas_limit);
        }
        else if (command == "withdraw")
        {
            args["name"] = name;
            args["value"] = value;
            put(args, "gas_limit", withdraw_gas, gas_limit);
        }
        else if (command == "split")
        {
            args["name"] = name;
            args["parts"] = parts;
            put(args, "gas_limit", split_gas, gas_limit);
        }
        else if (command == "gas")
        {
            put(args, "inputs", gas_in, inputs);
            put(args, "outputs", gas_out, outputs);
            instance_arg(gas_n);
            put(args, "schedule", gas_sched, schedule);
        }
        else if (command == "harness")
        {
            args["game"] = game;
            args["trials"] = trials;
            args["rounds"] = rounds;
            args["cipher"] = cipher;
            put(args, "depth", harness_depth, depth);
        }
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return exit_usage_error;
    }

    return call(state, command, args);
}
