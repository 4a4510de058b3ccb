#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace workspan {

enum class Errc {
    empty_graph,
    duplicate_node,
    invalid_node_id,
    nonpositive_weight,
    unknown_endpoint,
    self_edge,
    duplicate_edge,
    cycle_detected,
    unknown_node,
    nonpositive_time,
    graph_too_large,
    invalid_sigma,
    syntax_error,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::empty_graph: return "empty_graph";
    case Errc::duplicate_node: return "duplicate_node";
    case Errc::invalid_node_id: return "invalid_node_id";
    case Errc::nonpositive_weight: return "nonpositive_weight";
    case Errc::unknown_endpoint: return "unknown_endpoint";
    case Errc::self_edge: return "self_edge";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::cycle_detected: return "cycle_detected";
    case Errc::unknown_node: return "unknown_node";
    case Errc::nonpositive_time: return "nonpositive_time";
    case Errc::graph_too_large: return "graph_too_large";
    case Errc::invalid_sigma: return "invalid_sigma";
    case Errc::syntax_error: return "syntax_error";
    }
    return "error";
}

/// Validation failure. `line()` is 1-based when the error came from parsing
/// a document, 0 otherwise. For cycle_detected, `cycle()` holds one witness
/// cycle (first node repeated at the end is implied, not stored).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, int line = 0,
          std::vector<std::string> cycle = {})
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          code_(code), line_(line), cycle_(std::move(cycle)) {}

    Errc code() const { return code_; }
    int line() const { return line_; }
    const std::vector<std::string>& cycle() const { return cycle_; }

    Error at_line(int line) const {
        return Error(code_, raw_message(), line, cycle_);
    }

    std::string raw_message() const {
        const std::string w = what();
        if (line_ > 0) {
            const std::string prefix = "line " + std::to_string(line_) + ": ";
            return w.substr(prefix.size());
        }
        return w;
    }

private:
    Errc code_;
    int line_;
    std::vector<std::string> cycle_;
};

} // namespace workspan
