#include "nfrac/report_io.hpp"

#include <cinttypes>
#include <cstdio>

namespace nfrac {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

nlohmann::ordered_json approx_to_json(const ApproxResult& r) {
    nlohmann::ordered_json j;
    j["denominators"] = nlohmann::ordered_json::array();
    for (const BigInt& d : r.denominators) j["denominators"].push_back(d.str());
    j["numerators"] = nlohmann::ordered_json::array();
    for (const BigInt& a : r.numerators) j["numerators"].push_back(a.str());
    j["error"] = r.error.str();
    j["target_bound"] = r.target_bound.str();
    j["L"] = r.L.str();
    j["met_target"] = r.met_target;
    j["branch"] = branch_name(r.branch);
    return j;
}

nlohmann::ordered_json expsum_to_json(const ExpSumParams& p, const ExpSumReport& rep) {
    nlohmann::ordered_json j;
    j["lhs"] = fmt_double(rep.lhs);
    j["rhs_bound"] = fmt_double(rep.rhs_bound);
    j["ratio"] = fmt_double(rep.ratio);
    j["condition_ok"] = rep.condition_ok;
    j["term_count"] = rep.term_count;
    nlohmann::ordered_json params;
    params["a"] = p.a.str();
    params["q"] = p.q;
    params["n"] = p.n;
    params["k"] = p.k;
    params["L"] = p.L;
    params["N"] = p.N;
    if (p.pattern) params["pattern"] = *p.pattern;
    j["params"] = params;
    return j;
}

std::string scan_csv_header() {
    return "alpha,q,N,n,phi,epsilon,error_num,error_den,met_target,branch,wall_ms";
}

std::string scan_csv_row(const Rational& alpha, const BigInt& q, std::int64_t N, int n,
                         const Rational& phi, const Rational& epsilon, const ApproxResult& r,
                         const std::string& wall_ms) {
    std::string row;
    row += alpha.str();
    row += ',' + q.str();
    row += ',' + std::to_string(N);
    row += ',' + std::to_string(n);
    row += ',' + phi.str();
    row += ',' + epsilon.str();
    row += ',' + r.error.num().str();
    row += ',' + r.error.den().str();
    row += ',' + std::string(r.met_target ? "1" : "0");
    row += ',' + std::string(branch_name(r.branch));
    row += ',' + wall_ms;
    return row;
}

}  // namespace nfrac
