#pragma once

// Session execution and report rendering (JSON schema "conormal-lab/1" and a
// text rendering derived from the same document).

#include "conormal/criteria.hpp"
#include "conormal/session.hpp"

#include <json.hpp>

namespace conormal {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kSchemaVersion = "conormal-lab/1";

using Json = nlohmann::ordered_json;

struct RunOptions {
    std::optional<int> max_degree;
    std::optional<unsigned> seed;
    std::optional<long> step_limit;
    bool timing = false;
};

/// Computation error annotated with the failing command.
class CommandError : public Error {
public:
    CommandError(const std::string& msg, int index, std::string command, SourceLoc where)
        : Error("command " + std::to_string(index + 1) + " (" + command + ") at line " + std::to_string(where.line) +
                ": " + msg),
          index(index),
          command(std::move(command)),
          loc(where) {}
    int index;
    std::string command;
    SourceLoc loc;
};

class CommandLimitExceeded : public CommandError {
public:
    using CommandError::CommandError;
};

struct ReportDocument {
    Json json;
    bool criterion_failed = false;
};

/// Hex SHA-256 digest.
std::string sha256_hex(const std::string& data);

/// Runs every command of a session in order. `source` is the session text
/// used for the input fingerprint.
ReportDocument run_session(const SessionFile& s, const std::string& source, const RunOptions& opt = {});

enum class ReportFormat { json, text };

/// JSON rendering (pretty, stable key order) or a readable text rendering
/// of the same document.
std::string emit_report(const ReportDocument& doc, ReportFormat format);

/// Report for a document with no session: only the version header.
ReportDocument empty_report();

}  // namespace conormal
