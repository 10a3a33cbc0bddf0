#include "dsv/check.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dsv {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skip: return "skip";
        case Status::evidence: return "evidence";
        case Status::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string CheckResult::params_str() const {
    std::string s;
    for (const auto& [k, v] : params) {
        if (!s.empty()) s += ";";
        s += k + "=" + v;
    }
    return s;
}

namespace {

bool parse_long(const std::string& s, long& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    long v = std::strtol(s.c_str(), &end, 10);
    if (end == nullptr || *end != '\0') return false;
    out = v;
    return true;
}

// Numeric-aware comparison of single values; falls back to lexicographic.
int cmp_value(const std::string& a, const std::string& b) {
    long la, lb;
    if (parse_long(a, la) && parse_long(b, lb)) return la < lb ? -1 : (la > lb ? 1 : 0);
    return a < b ? -1 : (a > b ? 1 : 0);
}

int cmp_params(const Params& a, const Params& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        int c = cmp_value(ia->second, ib->second);
        if (c != 0) return c;
    }
    if (ia == a.end() && ib == b.end()) return 0;
    return ia == a.end() ? -1 : 1;
}

}  // namespace

bool result_order(const CheckResult& a, const CheckResult& b) {
    if (a.suite != b.suite) return a.suite < b.suite;
    if (a.id != b.id) return a.id < b.id;
    return cmp_params(a.params, b.params) < 0;
}

long require_param(const Params& p, const std::string& key) {
    auto it = p.find(key);
    if (it == p.end()) throw MissingParamError("missing parameter '" + key + "'");
    long v;
    char* end = nullptr;
    v = std::strtol(it->second.c_str(), &end, 10);
    if (end == nullptr || *end != '\0')
        throw MissingParamError("parameter '" + key + "' is not an integer: " + it->second);
    return v;
}

long param_or(const Params& p, const std::string& key, long fallback) {
    return p.count(key) ? require_param(p, key) : fallback;
}

}  // namespace dsv
