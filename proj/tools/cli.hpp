#pragma once

#include <dcoh/json_io.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace dcoh::cli {

enum class Format { Json, Markdown };

struct Manifest {
    std::string command;
    std::optional<std::string> space;
    std::optional<std::filesystem::path> complex;
    std::optional<std::filesystem::path> form;
    std::optional<std::filesystem::path> cocycle;
    std::optional<std::filesystem::path> tower;
    std::optional<std::string> group;
    std::optional<int> p;
    std::optional<int> q;
    std::optional<int> s;
    std::optional<int> max_degree;
    std::string action = "all";
    std::uint64_t seed = 1;
    Format format = Format::Json;
    std::optional<std::filesystem::path> out;
};

/// Results plus verdicts. Each verdict names the invariant it certifies and,
/// when useful, a witness.
class Report {
public:
    explicit Report(const Manifest& m);

    Json& results() { return doc_["results"]; }
    void verdict(std::string name, bool holds, std::string certifies, Json witness = nullptr);

    bool all_hold() const;
    int exit_code() const { return all_hold() ? 0 : 2; }
    const Json& document() const { return doc_; }

    std::string render(Format f) const;

private:
    Json doc_;
};

/// Sign conventions and coefficient substitutions, attached to every report.
Json convention_block();

/// Dispatches one command. Throws InputError / ResourceError on bad input.
Report run(const Manifest& m);

/// Full acceptance suite (criteria 1 to 11), deterministic in the seed.
Report corpus_run(std::uint64_t seed);

}  // namespace dcoh::cli
