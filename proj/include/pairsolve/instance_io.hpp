#pragma once

#include <iosfwd>
#include <string>

#include "pairsolve/demand_graph.hpp"
#include "pairsolve/route_ledger.hpp"

namespace pairsolve {

// Instance text: optional '#' comment lines, a header "n m", then m lines
// "u v" with 0 <= u,v < n and u != v. Duplicate lines encode parallel edges;
// input order defines origin ids 0..m-1. Parse errors carry a line number.
DemandGraph parse_instance(std::istream& in);
DemandGraph parse_instance_text(const std::string& text);

// Canonical form: header, then edges in origin order with endpoints
// normalized ascending. print(parse(t)) is idempotent.
void print_instance(const DemandGraph& g, std::ostream& out);
std::string instance_to_text(const DemandGraph& g);

// Solution text: m lines, line i = space-separated vertex path for origin i.
Resolution parse_solution(std::istream& in, int expected_paths);
void print_solution(const Resolution& res, std::ostream& out);

// Instance immediately followed by its solution in one stream.
struct CombinedDoc {
    DemandGraph instance;
    Resolution solution;
};
CombinedDoc parse_combined(std::istream& in);

// DOT rendering of the demand graph, with solution paths colored per origin
// when given.
void write_dot(const DemandGraph& g, const Resolution* res, std::ostream& out);

} // namespace pairsolve
