// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "fixture.hpp"

#include "zeth/engine.hpp"

#include <filesystem>

using namespace zeth;
namespace fs = std::filesystem;

namespace
{
struct TempDir
{
    fs::path path;

    explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("zethsim-test-" + name))
    {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

nlohmann::json run(const fs::path& dir, std::string_view cmd, nlohmann::json args)
{
    args["seed"] = "unit";
    return engine::run(dir, cmd, args);
}

/// A short scripted session; returns every command's output.
nlohmann::json session(const fs::path& dir)
{
    auto out = nlohmann::json::array();
    out.push_back(run(dir, "setup", {{"depth", 4}}));
    out.push_back(run(dir, "deploy", nlohmann::json::object()));
    out.push_back(run(dir, "keygen", {{"name", "alice"}}));
    out.push_back(run(dir, "keygen", {{"name", "bob"}}));
    out.push_back(run(dir, "register", {{"name", "bob"}}));
    out.push_back(run(dir, "deposit", {{"name", "alice"}, {"value", 10}}));
    out.push_back(run(dir, "transfer", {{"name", "alice"}, {"to", {"bob"}}, {"value", {4}}}));
    out.push_back(run(dir, "receive", {{"name", "bob"}, {"expect", 4}}));
    out.push_back(run(dir, "withdraw", {{"name", "bob"}, {"value", 1}}));
    out.push_back(run(dir, "balance", {{"name", "bob"}}));
    out.push_back(run(dir, "diagnostics", nlohmann::json::object()));
    return out;
}
}  // namespace

TEST_SUITE("engine")
{
TEST_CASE("seeded sessions replay exactly")
{
    TempDir a{"replay"};
    const auto first = session(a.path);
    fs::remove_all(a.path);
    const auto second = session(a.path);
    CHECK(first == second);
    CHECK(first[9].at("balance") == "3");
}

TEST_CASE("command errors")
{
    TempDir d{"errors"};
    CHECK_ZETH_ERROR(run(d.path, "deposit", {{"name", "alice"}, {"value", 1}}), ErrorCode::NotFound);
    run(d.path, "setup", {{"depth", 4}});
    CHECK_ZETH_ERROR(run(d.path, "setup", {{"depth", 4}}), ErrorCode::AlreadyExists);
    CHECK_ZETH_ERROR(run(d.path, "nonsense", nlohmann::json::object()), ErrorCode::InvalidArgument);
    run(d.path, "deploy", nlohmann::json::object());
    run(d.path, "keygen", {{"name", "alice"}});
    CHECK_ZETH_ERROR(run(d.path, "keygen", {{"name", "alice"}}), ErrorCode::AlreadyExists);
    CHECK_ZETH_ERROR(run(d.path, "withdraw", {{"name", "alice"}, {"value", 1}}), ErrorCode::InsufficientNotes);
    CHECK_ZETH_ERROR(run(d.path, "transfer", {{"name", "alice"}, {"to", {"nobody"}}, {"value", {1}}}),
        ErrorCode::NotFound);
}

TEST_CASE("gas command")
{
    TempDir d{"gas"};
    const auto g = run(d.path, "gas", nlohmann::json::object());
    CHECK(g.at("verification").at("total") == 1826500);
    CHECK(g.at("mix_call").at("total_estimate") == 1967500);
    CHECK(g.at("largest_n_below_2m") == 13);
    CHECK(g.at("verification_below_2m") == true);
}

TEST_CASE("secrets stay out of default output")
{
    TempDir d{"secrets"};
    run(d.path, "setup", {{"depth", 4}});
    const auto k = run(d.path, "keygen", {{"name", "alice"}});
    CHECK(k.dump().find("a_sk") == std::string::npos);
    auto args = nlohmann::json{{"name", "alice"}, {"reveal_secrets", true}};
    const auto revealed = run(d.path, "balance", args);
    CHECK(revealed.dump().find("a_sk") != std::string::npos);
}
}
