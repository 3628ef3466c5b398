#pragma once

#include "qsw/expr.hpp"
#include "qsw/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qsw {

struct Identity {
    std::string id;
    bool conjecture = false; // status: theorem or conjecture
    Ring ring = Ring::Integer;
    std::string lhs, rhs; // expression text, parsed on demand
    long default_order = 150;
};

struct Mismatch {
    long degree = -1;
    std::string lhs, rhs;
};

struct CheckReport {
    std::string id;
    bool conjecture = false;
    long order = 0;
    bool pass = false;
    std::optional<Mismatch> first_mismatch;
    long long ms = 0;
};

// the full identity catalog, in fixed order
const std::vector<Identity>& registry();
const Identity& registry_entry(const std::string& id); // throws UnknownIdError

CheckReport run_check(const std::string& id, long order = -1);
std::vector<CheckReport> run_all(long order = -1);

// true when every theorem-status report passes (conjectures never gate)
bool theorems_pass(const std::vector<CheckReport>& reports);

} // namespace qsw
