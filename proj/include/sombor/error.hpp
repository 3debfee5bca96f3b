#pragma once

#include <stdexcept>
#include <string>

namespace sombor {

// Error categories; the CLI prints the category name so failures stay grepable.
enum class errc {
    vertex_out_of_range,
    self_loop,
    duplicate_edge,
    no_edges,
    empty_profile,
    isolated_vertex,
    empty_graph,
    non_edge,
    bad_permutation,
    bad_link_spec,
    identification_cycle,
    bad_parameter,
    precondition,
    asymmetric_weight,
    non_finite_weight,
    parse_error,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::vertex_out_of_range: return "vertex-out-of-range";
        case errc::self_loop:            return "self-loop";
        case errc::duplicate_edge:       return "duplicate-edge";
        case errc::no_edges:             return "no-edges";
        case errc::empty_profile:        return "empty-profile";
        case errc::isolated_vertex:      return "isolated-vertex";
        case errc::empty_graph:          return "empty-graph";
        case errc::non_edge:             return "non-edge";
        case errc::bad_permutation:      return "bad-permutation";
        case errc::bad_link_spec:        return "bad-link-spec";
        case errc::identification_cycle: return "identification-cycle";
        case errc::bad_parameter:        return "bad-parameter";
        case errc::precondition:         return "precondition";
        case errc::asymmetric_weight:    return "asymmetric-weight";
        case errc::non_finite_weight:    return "non-finite-weight";
        case errc::parse_error:          return "parse-error";
        case errc::io_error:             return "io-error";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace sombor
