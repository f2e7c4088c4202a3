#pragma once

// Command front end: invariant reports, script execution, theorem
// verification, and self-tests. Kept as a library so the thin binary in
// tools/ and the test suite share one implementation.
//
// Exit codes: 0 success, 1 usage/parse error, 2 move precondition failure,
// 3 verification failure.

#include <iosfwd>
#include <string>
#include <vector>

#include "pzero/catalog.hpp"

namespace pzero {

struct ReportLine {
    std::string name;
    std::string expected;
    std::string computed;
    std::string source;  // claim id or derived-oracle id
    bool pass = true;
};

struct Report {
    std::string object_id;
    std::vector<ReportLine> lines;
    std::vector<std::string> notes;

    bool all_pass() const;
    std::string to_json() const;
    static Report from_json(const std::string& text);
    void print(std::ostream& os) const;
};

struct CliOptions {
    bool json = false;
    bool trace = false;
    unsigned long long seed = 1;
    int cases = 1000;
    std::string data_dir = "data";
};

int cmd_invariants(const std::string& kind, const std::string& target,
                   const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_run_script(const std::string& diagram_path, const std::string& script_path,
                   const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify_theorem1(int m, int n, const CliOptions& opt, std::ostream& out,
                        std::ostream& err);
int cmd_verify_theorem2(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_selftest(const CliOptions& opt, std::ostream& out, std::ostream& err);
int cmd_search(const std::string& constraints_path, const CliOptions& opt,
               std::ostream& out, std::ostream& err);
int cmd_validate(const CliOptions& opt, std::ostream& out, std::ostream& err);

// resolves file paths and catalog references (catalog:A, catalog:W(1,2),
// catalog:A.kirby, catalog:B.reduced, ...)
PalfDescription resolve_palf_target(const std::string& target, const CliOptions& opt);
KirbyDiagram resolve_kirby_target(const std::string& target, const CliOptions& opt);

// expectations: the single source of truth for stated values
std::vector<Expectation> builtin_expectations();
std::string expectations_text();

}  // namespace pzero
