// Outcome records for identity/congruence/conjecture checks, and the
// catalog entries that bind check ids to their references and ranges.
#ifndef DSV_CHECK_HPP
#define DSV_CHECK_HPP

#include <map>
#include <string>
#include <vector>

namespace dsv {

enum class Status { pass, fail, skip, evidence, inconclusive };

std::string status_name(Status s);

using Params = std::map<std::string, std::string>;

struct CheckResult {
    std::string suite;
    std::string id;
    Params params;
    Status status = Status::pass;
    std::string witness;
    double elapsed_ms = 0.0;

    // "k1=v1;k2=v2" with keys in map order.
    std::string params_str() const;
};

// Ordering used for deterministic reports: (suite, id, params), with
// parameter values compared numerically when both sides parse as integers.
bool result_order(const CheckResult& a, const CheckResult& b);

struct CatalogEntry {
    std::string id;
    std::string ref;          // statement reference, e.g. "Theorem 1.1(i)"
    std::string summary;      // what the evaluator checks
    std::string default_range;
    std::vector<std::string> aliases;  // alternate ids resolving to this entry
};

struct UnknownIdError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct MissingParamError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

long require_param(const Params& p, const std::string& key);
long param_or(const Params& p, const std::string& key, long fallback);

}  // namespace dsv

#endif
