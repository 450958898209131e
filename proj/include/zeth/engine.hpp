// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "zeth/common.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>

/// Command layer over a state directory. Every command loads the state
/// files, performs one operation, persists, and returns a JSON result.
///
/// State directory layout:
///   config.json       circuit shape, instance packing, gas schedule
///   crs.json          proving key, verification key, trapdoor
///   ledger.json       accounts, contracts, events, history
///   deployment.json   mixer and registry addresses
///   events.jsonl      the ledger event log, one JSON record per line
///   wallets/NAME.json one file per wallet
namespace zeth::engine
{
/// Commands: setup, deploy, keygen, register, deposit, transfer, withdraw,
/// receive, balance, split, gas, harness, diagnostics.
///
/// Common arguments: "seed" (string; makes every random choice a function
/// of the seed, the command, its arguments and the current state) and
/// "reveal_secrets" (bool). Throws zeth::Error on domain failures.
nlohmann::json run(const std::filesystem::path& state_dir, std::string_view command, const nlohmann::json& args);

/// Names accepted by run().
const std::vector<std::string>& commands();

/// Default gas limit for mixer transactions submitted by commands.
inline constexpr std::uint64_t default_gas_limit = 3'000'000;

}  // namespace zeth::engine
