#pragma once

#include <json.hpp>

#include <string>

#include "nfrac/expsum.hpp"
#include "nfrac/search.hpp"

namespace nfrac {

// Shortest round-trip formatting; all floats in reports go through here so
// identical runs serialize identically.
std::string fmt_double(double v);

nlohmann::ordered_json approx_to_json(const ApproxResult& r);
nlohmann::ordered_json expsum_to_json(const ExpSumParams& p, const ExpSumReport& rep);

// One CSV line in the pinned scan schema:
// alpha,q,N,n,phi,epsilon,error_num,error_den,met_target,branch,wall_ms
std::string scan_csv_header();
std::string scan_csv_row(const Rational& alpha, const BigInt& q, std::int64_t N, int n,
                         const Rational& phi, const Rational& epsilon, const ApproxResult& r,
                         const std::string& wall_ms);

}  // namespace nfrac
