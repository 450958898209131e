// zethsim: desk-scale shielded payments over a simulated account ledger
// Copyright 2026 The zethsim Authors.
// SPDX-License-Identifier: Apache-2.0

#include "zeth/zeth.h"

#include "zeth/crypto.hpp"
#include "zeth/engine.hpp"
#include "zeth/gas_model.hpp"

#include <cstring>
#include <new>

struct zeth_context
{
    std::filesystem::path state_dir;
    std::string last_error;
};

namespace
{
char* dup_string(const std::string& s) noexcept
{
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr)
        std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::string error_json(int code, std::string_view name, std::string_view message)
{
    return nlohmann::json{{"error", name}, {"code", code}, {"message", message}}.dump();
}
}  // namespace

extern "C" {

const char* zeth_version(void)
{
    return "0.1.0";
}

const char* zeth_status_name(int status)
{
    if (status == ZETH_INTERNAL)
        return "Internal";
    if (status < 0 || status > ZETH_ALREADY_EXISTS)
        return "Unknown";
    return zeth::error_name(static_cast<zeth::ErrorCode>(status)).data();
}

int zeth_open(const char* state_dir, zeth_context** out)
{
    if (out == nullptr)
        return ZETH_INVALID_ARGUMENT;
    *out = nullptr;
    if (state_dir == nullptr || *state_dir == '\0')
        return ZETH_INVALID_ARGUMENT;
    auto* ctx = new (std::nothrow) zeth_context{};
    if (ctx == nullptr)
        return ZETH_INTERNAL;
    try
    {
        ctx->state_dir = state_dir;
    }
    catch (...)
    {
        delete ctx;
        return ZETH_INTERNAL;
    }
    *out = ctx;
    return ZETH_OK;
}

void zeth_close(zeth_context* ctx)
{
    delete ctx;
}

int zeth_call(zeth_context* ctx, const char* command, const char* args_json, char** result_json)
{
    if (result_json != nullptr)
        *result_json = nullptr;
    if (ctx == nullptr || command == nullptr || result_json == nullptr)
        return ZETH_INVALID_ARGUMENT;

    int code = ZETH_OK;
    std::string out;
    try
    {
        nlohmann::json args = nlohmann::json::object();
        if (args_json != nullptr && *args_json != '\0')
        {
            try
            {
                args = nlohmann::json::parse(args_json);
            }
            catch (const nlohmann::json::exception& e)
            {
                zeth::fail(zeth::ErrorCode::Parse, std::string{"arguments: "} + e.what());
            }
        }
        out = zeth::engine::run(ctx->state_dir, command, args).dump();
        ctx->last_error.clear();
    }
    catch (const zeth::Error& e)
    {
        code = static_cast<int>(e.code());
        ctx->last_error = e.what();
        out = error_json(code, zeth::error_name(e.code()), e.what());
    }
    catch (const std::exception& e)
    {
        code = ZETH_INTERNAL;
        ctx->last_error = e.what();
        out = error_json(code, "Internal", e.what());
    }
    catch (...)
    {
        code = ZETH_INTERNAL;
        ctx->last_error = "unknown failure";
        out = error_json(code, "Internal", ctx->last_error);
    }
    *result_json = dup_string(out);
    return *result_json == nullptr ? ZETH_INTERNAL : code;
}

const char* zeth_last_error(const zeth_context* ctx)
{
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

void zeth_string_free(char* s)
{
    std::free(s);
}

int zeth_sha256(const uint8_t* data, size_t len, uint8_t out[32])
{
    if ((data == nullptr && len != 0) || out == nullptr)
        return ZETH_INVALID_ARGUMENT;
    try
    {
        const auto d = zeth::crypto::hash(zeth::ByteView{data, len});
        std::memcpy(out, d.bytes.data(), d.bytes.size());
        return ZETH_OK;
    }
    catch (const zeth::Error& e)
    {
        return static_cast<int>(e.code());
    }
    catch (...)
    {
        return ZETH_INTERNAL;
    }
}

int zeth_verifier_gas(uint64_t instance_elements, const char* schedule, uint64_t* total)
{
    if (total == nullptr)
        return ZETH_INVALID_ARGUMENT;
    const std::string_view name = schedule == nullptr ? "byzantium" : schedule;
    zeth::gas::GasSchedule s;
    if (name == "byzantium")
        s = zeth::gas::GasSchedule::byzantium();
    else if (name == "istanbul")
        s = zeth::gas::GasSchedule::istanbul();
    else
        return ZETH_INVALID_ARGUMENT;
    *total = zeth::gas::verifier_gas(instance_elements, s).total;
    return ZETH_OK;
}

}  // extern "C"
